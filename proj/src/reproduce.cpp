#include "sphaera/reproduce.hpp"

#include <algorithm>
#include <sstream>

#include "sphaera/verify.hpp"

namespace sphaera {

namespace {

std::string pw(const std::string& v, int n) { return n == 1 ? v : v + "^" + std::to_string(n); }
std::string num(int n) { return std::to_string(n); }

}  // namespace

Claim check_tiling(const std::string& name, const CombTiling& t, const Census& expected,
                   const std::vector<FamilyParam>& params, double tol) {
    Claim c{name, true, ""};
    std::ostringstream os;
    Census got = census(t);
    if (got != expected) {
        c.pass = false;
        os << "census " << census_string(got) << " expected " << census_string(expected) << "; ";
    } else {
        os << census_string(got);
    }
    double worst = 0;
    for (const auto& fp : params) {
        try {
            auto pt = layout(t, make_pentagon(fp));
            auto r = verify_geometric(pt, tol);
            worst = std::max({worst, r.vertex_closure, r.edge_defect, r.shape_defect, r.angle_sum_defect});
            if (!r.pass) {
                c.pass = false;
                os << "; verify failed at parameter " << fp.parameter / kPi << "pi";
            }
        } catch (const std::exception& e) {
            c.pass = false;
            os << "; parameter " << fp.parameter / kPi << "pi: " << e.what();
        }
    }
    os.precision(2);
    os << std::scientific << "; " << params.size() << " layouts, max defect " << worst;
    c.detail = os.str();
    return c;
}

std::vector<FamilyParam> sample_params(Family fam, int f, int n) {
    std::vector<FamilyParam> out;
    double lo = 0, hi = 0;
    switch (fam) {
        case Family::tetra_sub:
        case Family::octa_sub:
        case Family::icosa_sub: {
            auto r = table1_range(fam);
            lo = r.t_lo, hi = r.t_hi;
            f = fam == Family::tetra_sub ? 12 : fam == Family::octa_sub ? 24 : 60;
            break;
        }
        case Family::earthmap:
            lo = table2_lower_bound(f), hi = 1.5 * kPi;
            break;
        default:
            return {FamilyParam{fam, f, 0}};
    }
    for (int i = 0; i < n; ++i) out.push_back({fam, f, lo + (hi - lo) * (i + 0.5) / n});
    return out;
}

std::vector<Claim> reproduce_theorem1(double tol, int max_m) {
    std::vector<Claim> out;
    out.push_back(check_tiling("tetrahedron subdivision", build_subdivision(Solid::tetra),
                               parse_census("12ade,4b^3,4c^3"), sample_params(Family::tetra_sub, 12, 5), tol));
    for (int m = 4; m <= max_m; ++m) {
        auto ps = sample_params(Family::symmetric_earthmap, 4 * m, 1);
        out.push_back(check_tiling("symmetric earth map m=" + num(m), build_symmetric_earthmap(m),
                                   parse_census(num(2 * m) + "abc," + num(2 * m) + "bde," + num(2 * m) + "cde,2" +
                                                pw("a", m)),
                                   ps, tol));
        if (m % 2 == 0) continue;
        int k = m / 2;
        out.push_back(check_tiling("symmetric flip 1 m=" + num(m), flip_symmetric(m, 1),
                                   parse_census(num(4 * k) + "abc," + num(4 * k + 2) + "bde," + num(4 * k + 2) +
                                                "cde,2" + pw("a", k + 1) + "b,2" + pw("a", k + 1) + "c"),
                                   ps, tol));
        out.push_back(check_tiling("symmetric flip 2 m=" + num(m), flip_symmetric(m, 2),
                                   parse_census(num(4 * k + 2) + "abc," + num(4 * k + 1) + "bde," + num(4 * k + 1) +
                                                "cde," + pw("a", k + 1) + "b," + pw("a", k + 1) + "c,2" + pw("a", k) +
                                                "de"),
                                   ps, tol));
    }
    return out;
}

std::vector<Claim> reproduce_theorem2(double tol, int max_m) {
    std::vector<Claim> out;
    out.push_back(check_tiling("octahedron subdivision", build_subdivision(Solid::octa),
                               parse_census("24ade,8c^3,6b^4"), sample_params(Family::octa_sub, 24, 5), tol));
    out.push_back(check_tiling("icosahedron subdivision", build_subdivision(Solid::icosa),
                               parse_census("60ade,20c^3,12b^5"), sample_params(Family::icosa_sub, 60, 5), tol));
    for (int m = 4; m <= max_m; ++m) {
        auto ps = sample_params(Family::earthmap, 4 * m, 5);
        out.push_back(check_tiling("earth map m=" + num(m), build_earthmap(m),
                                   parse_census(num(4 * m) + "ade," + num(2 * m) + "b^2c,2" + pw("c", m)), ps, tol));
        if (m % 2 == 0) continue;
        int k = m / 2;
        out.push_back(check_tiling("standard flip m=" + num(m), flip_standard(m),
                                   parse_census(num(8 * k + 4) + "ade," + num(4 * k) + "b^2c,4b" + pw("c", k + 1)), ps,
                                   tol));
    }
    out.push_back(check_tiling("f=16 flip", build_f16_flip(), parse_census("8ade,8bde,8acc,2b^4"),
                               sample_params(Family::f16_special, 16, 1), tol));
    Claim g{"standard flip gluings agree", true, ""};
    for (int m = 5; m <= max_m; m += 2)
        if (!is_isomorphic(flip_standard(m, 0), flip_standard(m, 1))) g.pass = false;
    g.detail = g.pass ? "both gluings isomorphic for every odd m" : "gluings differ";
    out.push_back(g);
    return out;
}

std::vector<Claim> reproduce_table3(int k) {
    std::vector<Claim> out;
    auto rows = search_table3(k);
    for (int row = 1; row <= 8; ++row) {
        const auto& ts = rows[row - 1];
        long long want = count_table3(k, row);
        Claim c{"Table 3 row " + num(row), static_cast<long long>(ts.size()) == want, ""};
        std::ostringstream os;
        os << "f=" << 8 * k + 4 << " " << census_string(table3_census(k, row)) << ": " << ts.size()
           << " tilings (formula " << want << "), UFOs";
        for (const auto& t : ts) os << " " << detect_ufos(t).size();
        c.detail = os.str();
        out.push_back(c);
    }
    return out;
}

std::string format_claims(const std::vector<Claim>& cs) {
    std::ostringstream os;
    for (const auto& c : cs) os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    return os.str();
}

}  // namespace sphaera
