#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <regex>

#include "sphaera/avc_engine.hpp"
#include "sphaera/comb_tiling.hpp"
#include "sphaera/errors.hpp"
#include "sphaera/export.hpp"
#include "sphaera/io.hpp"
#include "sphaera/reproduce.hpp"
#include "sphaera/verify.hpp"

using namespace sphaera;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kUsage = 2, kLayout = 3 };

// exact multiple of pi: "4/5pi", "0.8pi", "3/4", "pi"
Rational parse_rational_pi(std::string s) {
    s = std::regex_replace(s, std::regex(R"(\s+|\*)"), "");
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") s = s.substr(0, s.size() - 2);
    if (s.empty()) return Rational(1);
    std::smatch m;
    if (std::regex_match(s, m, std::regex(R"(([+-]?\d+)/(\d+))"))) return Rational(std::stoll(m[1]), std::stoll(m[2]));
    if (std::regex_match(s, m, std::regex(R"(([+-]?)(\d*)\.?(\d*))")) && (m[2].length() + m[3].length()) > 0) {
        long long den = 1, num = m[2].length() ? std::stoll(m[2]) : 0;
        for (char c : m[3].str()) num = num * 10 + (c - '0'), den *= 10;
        return Rational(m[1] == "-" ? -num : num, den);
    }
    throw ParameterError("bad rational angle: " + s);
}

double tolerance(double given) {
    if (given > 0) return given;
    if (const char* env = std::getenv("SPHAERA_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw ParameterError(std::string("bad SPHAERA_TOL: ") + env);
        }
    }
    return 1e-6;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
}

AngleSystem system_from(const std::string& name, int f, const std::string& alpha, const std::string& beta,
                        const std::string& gamma) {
    if (name == "table3") return table3_system(f);
    if (name == "f16") return f16_system();
    if (name == "f16-mirrored") return make_system(16, Rational(1, 2), Rational(1, 2), Rational(3, 4));
    if (name == "symmetric") return symmetric_system(f);
    if (name == "custom") {
        if (alpha.empty() || beta.empty() || gamma.empty())
            throw ParameterError("custom system needs --alpha, --beta and --gamma");
        return make_system(f, parse_rational_pi(alpha), parse_rational_pi(beta), parse_rational_pi(gamma));
    }
    throw ParameterError("unknown system: " + name);
}

std::vector<VertexType> vertex_list(const std::string& s) {
    std::vector<VertexType> out;
    for (const auto& [v, n] : parse_census(s)) out.push_back(v);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sphere tilings by congruent a4b pentagons"};
    app.require_subcommand(1);

    std::string family, param, param_alpha, param_t, out;
    int f = 0;
    auto* pent = app.add_subcommand("pentagon", "Pentagon of a family as JSON");
    pent->add_option("--family", family, "tetra-sub | octa-sub | icosa-sub | earthmap | symmetric-earthmap | f16-special")
        ->required();
    pent->add_option("--f", f, "number of tiles");
    pent->add_option("--param", param, "family parameter (t or alpha), e.g. 0.5pi");
    pent->add_option("--param-alpha", param_alpha, "alpha for earthmap, e.g. 0.5pi");
    pent->add_option("--param-t", param_t, "t for subdivisions, e.g. 0.1pi");
    pent->add_option("-o,--out", out, "output file");

    std::string generator;
    int m = 5, gluing = 0, which = 1;
    bool census_only = false;
    auto* til = app.add_subcommand("tiling", "Generated tiling as JSON");
    til->add_option("--generator", generator,
                    "earthmap | symmetric-earthmap | flip | symmetric-flip | f16-flip | tetra | octa | icosa")
        ->required();
    til->add_option("--m", m, "time zones");
    til->add_option("--gluing", gluing, "standard flip gluing (0 or 1)");
    til->add_option("--which", which, "symmetric flip (1 or 2)");
    til->add_flag("--census", census_only, "print the census only");
    til->add_option("-o,--out", out, "output file");

    std::string tiling_in, pentagon_in;
    double tol = 0;
    int root = 0;
    bool report_json = false;
    auto* ver = app.add_subcommand("verify", "Lay out a tiling with a pentagon and verify closure");
    ver->add_option("--tiling", tiling_in, "tiling JSON")->required();
    ver->add_option("--pentagon", pentagon_in, "pentagon JSON")->required();
    ver->add_option("--tol", tol, "tolerance (default SPHAERA_TOL or 1e-6)");
    ver->add_option("--root", root, "layout root tile");
    ver->add_flag("--json", report_json, "print the report as JSON");

    std::string sys_name = "custom", alpha, beta, gamma;
    int max_degree = 0;
    auto* avc = app.add_subcommand("avc", "Enumerate admissible vertex types");
    avc->add_option("--system", sys_name, "custom | table3 | f16 | f16-mirrored | symmetric");
    avc->add_option("--f", f, "number of tiles")->required();
    avc->add_option("--alpha", alpha, "alpha as a multiple of pi, e.g. 4/5pi");
    avc->add_option("--beta", beta, "beta as a multiple of pi");
    avc->add_option("--gamma", gamma, "gamma as a multiple of pi");
    avc->add_option("--max-degree", max_degree, "largest vertex degree");

    std::string allowed, out_dir;
    bool no_mirror = false;
    long long node_limit = 200000000;
    auto* sea = app.add_subcommand("search", "Exhaustive tiling search");
    sea->add_option("--system", sys_name, "custom | table3 | f16 | f16-mirrored | symmetric");
    sea->add_option("--f", f, "number of tiles")->required();
    sea->add_option("--alpha", alpha, "alpha as a multiple of pi");
    sea->add_option("--beta", beta, "beta as a multiple of pi");
    sea->add_option("--gamma", gamma, "gamma as a multiple of pi");
    sea->add_option("--allowed", allowed, "vertex types, e.g. ade,bde,acc,b^4")->required();
    sea->add_flag("--no-mirror", no_mirror, "count mirror images separately");
    sea->add_option("--node-limit", node_limit, "search node cap");
    sea->add_option("--out-dir", out_dir, "write each tiling as JSON here");

    int k = 2, row = 0;
    auto* cnt = app.add_subcommand("count", "Table 3 tiling counts");
    cnt->add_option("--k", k, "f = 8k+4")->required();
    cnt->add_option("--row", row, "AVC row 1..8 (default all)");

    std::string format = "json";
    bool mark_ufos = false;
    auto* exp = app.add_subcommand("export", "Export a laid-out tiling");
    exp->add_option("--in", tiling_in, "tiling JSON")->required();
    exp->add_option("--pentagon", pentagon_in, "pentagon JSON")->required();
    exp->add_option("--format", format, "obj | svg | json")->check(CLI::IsMember({"obj", "svg", "json"}));
    exp->add_option("-o,--out", out, "output file");
    exp->add_flag("--mark-ufos", mark_ufos, "outline UFO patches (svg)");

    int theorem = 0, table = 0, max_m = 10;
    auto* rep = app.add_subcommand("reproduce", "Check Theorem 1, Theorem 2 or Table 3");
    auto* th = rep->add_option("--theorem", theorem, "1 or 2")->check(CLI::IsMember({1, 2}));
    auto* tb = rep->add_option("--table", table, "3")->check(CLI::IsMember({3}));
    th->excludes(tb);
    rep->add_option("--k", k, "Table 3 parameter");
    rep->add_option("--max-m", max_m, "largest earth map");
    rep->add_option("--tol", tol, "tolerance (default SPHAERA_TOL or 1e-6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*pent) {
            FamilyParam fp;
            fp.family = family_from_name(family);
            fp.f = f;
            std::string p = !param_alpha.empty() ? param_alpha : !param_t.empty() ? param_t : param;
            if (fp.family == Family::earthmap || fp.family == Family::tetra_sub || fp.family == Family::octa_sub ||
                fp.family == Family::icosa_sub) {
                if (p.empty()) throw ParameterError("family needs a parameter");
                fp.parameter = parse_angle(p);
            }
            if ((fp.family == Family::earthmap || fp.family == Family::symmetric_earthmap) && f <= 0)
                throw ParameterError("family needs --f");
            emit(pentagon_to_json(make_pentagon(fp)), out);
            return kOk;
        }
        if (*til) {
            CombTiling t;
            if (generator == "earthmap") t = build_earthmap(m);
            else if (generator == "symmetric-earthmap") t = build_symmetric_earthmap(m);
            else if (generator == "flip") t = flip_standard(m, gluing);
            else if (generator == "symmetric-flip") t = flip_symmetric(m, which);
            else if (generator == "f16-flip") t = build_f16_flip();
            else if (generator == "tetra") t = build_subdivision(Solid::tetra);
            else if (generator == "octa") t = build_subdivision(Solid::octa);
            else if (generator == "icosa") t = build_subdivision(Solid::icosa);
            else throw ParameterError("unknown generator: " + generator);
            emit(census_only ? census_string(census(t)) + "\n" : tiling_to_json(t), out);
            return kOk;
        }
        if (*ver) {
            auto t = tiling_from_json(read_file(tiling_in));
            auto p = pentagon_from_json(read_file(pentagon_in));
            double tl = tolerance(tol);
            LayoutOptions lo;
            lo.root = root;
            PlacedTiling pt;
            try {
                pt = layout(t, p, lo);
            } catch (const ClosureError& e) {
                std::cerr << "layout error: " << e.what() << "\n";
                return kLayout;
            }
            auto r = verify_geometric(pt, tl);
            if (pt.relabeled) std::cerr << "note: laid out with the mirror relabeling of the pentagon\n";
            std::cout << (report_json ? report_to_json(r) : summary(r));
            return r.pass ? kOk : kVerifyFail;
        }
        if (*avc) {
            auto sys = system_from(sys_name, f, alpha, beta, gamma);
            for (const auto& v : enumerate_vertices(sys, max_degree)) std::cout << vertex_name(v) << "\n";
            return kOk;
        }
        if (*sea) {
            auto sys = system_from(sys_name, f, alpha, beta, gamma);
            SearchOptions so;
            so.identify_mirror = !no_mirror;
            so.node_limit = node_limit;
            SearchStats st;
            auto found = search_tilings(sys, f, vertex_list(allowed), so, &st);
            std::cout << found.size() << " tilings (" << st.nodes << " nodes)\n";
            for (size_t i = 0; i < found.size(); ++i) {
                std::cout << i << " " << census_string(census(found[i])) << " UFOs " << detect_ufos(found[i]).size()
                          << "\n";
                if (!out_dir.empty())
                    write_file(out_dir + "/tiling_" + std::to_string(i) + ".json", tiling_to_json(found[i]));
            }
            return kOk;
        }
        if (*cnt) {
            for (int r = 1; r <= 8; ++r)
                if (row == 0 || row == r)
                    std::cout << "row " << r << " " << census_string(table3_census(k, r)) << " " << count_table3(k, r)
                              << "\n";
            return kOk;
        }
        if (*exp) {
            auto t = tiling_from_json(read_file(tiling_in));
            auto p = pentagon_from_json(read_file(pentagon_in));
            PlacedTiling pt;
            try {
                pt = layout(t, p);
            } catch (const ClosureError& e) {
                std::cerr << "layout error: " << e.what() << "\n";
                return kLayout;
            }
            SvgOptions so;
            so.mark_ufos = mark_ufos;
            emit(format == "obj" ? to_obj(pt) : format == "svg" ? to_svg(pt, so) : placed_to_json(pt), out);
            return kOk;
        }
        if (*rep) {
            std::vector<Claim> cs;
            if (theorem == 1) cs = reproduce_theorem1(tolerance(tol), max_m);
            else if (theorem == 2) cs = reproduce_theorem2(tolerance(tol), max_m);
            else if (table == 3) cs = reproduce_table3(k);
            else throw ParameterError("reproduce needs --theorem or --table");
            std::cout << format_claims(cs);
            for (const auto& c : cs)
                if (!c.pass) return kVerifyFail;
            return kOk;
        }
    } catch (const ClosureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kLayout;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFail;
    }
    return kOk;
}
