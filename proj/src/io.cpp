#include "sphaera/io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "sphaera/errors.hpp"

namespace sphaera {

using nlohmann::ordered_json;

namespace {

const std::array<const char*, 5> kAngleName = {"alpha", "beta", "gamma", "delta", "epsilon"};

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw ParameterError(std::string("malformed JSON: ") + e.what());
    }
}

std::string chirality_name(Chirality c) { return c == Chirality::plain ? "plain" : "mirrored"; }

Chirality chirality_from(const std::string& s) {
    if (s == "plain") return Chirality::plain;
    if (s == "mirrored") return Chirality::mirrored;
    throw ParameterError("unknown chirality: " + s);
}

int label_from(const std::string& s) {
    for (int i = 0; i < 5; ++i)
        if (s == kAngleName[i]) return i;
    throw ParameterError("unknown angle label: " + s);
}

}  // namespace

double parse_angle(const std::string& s) {
    static const std::regex pi_form(R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*)");
    static const std::regex plain_form(R"(\s*[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?\s*)");
    std::smatch m;
    if (std::regex_match(s, m, pi_form)) {
        std::string c = m[1].str();
        double coef = c.empty() || c == "+" ? 1.0 : c == "-" ? -1.0 : std::stod(c);
        double den = m[2].matched ? std::stod(m[2].str()) : 1.0;
        if (den == 0) throw ParameterError("bad angle: " + s);
        return coef * kPi / den;
    }
    if (std::regex_match(s, plain_form)) return std::stod(s);
    throw ParameterError("bad angle: " + s);
}

std::string pentagon_to_json(const Pentagon& p) {
    ordered_json j;
    j["family"] = family_name(p.family);
    j["f"] = p.f;
    j["parameter"] = p.parameter ? ordered_json(*p.parameter) : ordered_json(nullptr);
    j["chirality"] = chirality_name(p.chirality);
    for (int i = 0; i < 5; ++i) j[kAngleName[i]] = p.angle[i];
    j["a"] = p.a;
    j["b"] = p.b;
    return j.dump(2) + "\n";
}

Pentagon pentagon_from_json(const std::string& text) {
    auto j = parse(text);
    Pentagon p;
    try {
        p.family = family_from_name(j.value("family", std::string("custom")));
        p.f = j.value("f", 0);
        if (j.contains("parameter") && !j["parameter"].is_null()) p.parameter = j["parameter"].get<double>();
        p.chirality = chirality_from(j.value("chirality", std::string("plain")));
        for (int i = 0; i < 5; ++i) p.angle[i] = j.at(kAngleName[i]).get<double>();
        p.a = j.at("a").get<double>();
        p.b = j.at("b").get<double>();
    } catch (const ordered_json::exception& e) {
        throw ParameterError(std::string("pentagon JSON: ") + e.what());
    }
    return p;
}

std::string tiling_to_json(const CombTiling& t) {
    ordered_json j;
    j["f"] = t.size();
    ordered_json tiles = ordered_json::array();
    for (int i = 0; i < t.size(); ++i) {
        ordered_json corners = ordered_json::array();
        for (int s = 0; s < 5; ++s) corners.push_back(kAngleName[kCornerLabel[s]]);
        tiles.push_back({{"chirality", chirality_name(t.chirality[i])}, {"corners", corners}});
    }
    j["tiles"] = tiles;
    ordered_json twins = ordered_json::array();
    for (int h = 0; h < 5 * t.size(); ++h)
        if (t.twin[h] > h) twins.push_back({h / 5, h % 5, t.twin[h] / 5, t.twin[h] % 5});
    j["twins"] = twins;
    j["canonical"] = to_hex(canonical_code(t));
    return j.dump(2) + "\n";
}

CombTiling tiling_from_json(const std::string& text) {
    auto j = parse(text);
    CombTiling t;
    try {
        int f = j.at("f").get<int>();
        const auto& tiles = j.at("tiles");
        if (static_cast<int>(tiles.size()) != f) throw ParameterError("tile count differs from f");
        for (const auto& tile : tiles) {
            t.add_tile(chirality_from(tile.at("chirality").get<std::string>()));
            const auto& corners = tile.at("corners");
            if (corners.size() != 5) throw ParameterError("a tile needs five corners");
            for (int s = 0; s < 5; ++s)
                if (label_from(corners[s].get<std::string>()) != kCornerLabel[s])
                    throw ParameterError("corner labels must follow alpha, beta, delta, epsilon, gamma");
        }
        for (const auto& e : j.at("twins")) {
            int t1 = e.at(0), s1 = e.at(1), t2 = e.at(2), s2 = e.at(3);
            if (t1 < 0 || t1 >= f || t2 < 0 || t2 >= f || s1 < 0 || s1 > 4 || s2 < 0 || s2 > 4)
                throw ParameterError("twin entry out of range");
            if (t.twin[5 * t1 + s1] >= 0 || t.twin[5 * t2 + s2] >= 0) throw ParameterError("half-edge glued twice");
            t.glue(t1, s1, t2, s2);
        }
    } catch (const ordered_json::exception& e) {
        throw ParameterError(std::string("tiling JSON: ") + e.what());
    }
    validate(t);
    if (j.contains("canonical") && j["canonical"].get<std::string>() != to_hex(canonical_code(t)))
        throw InvariantError("canonical code does not match the tiling");
    return t;
}

std::string report_to_json(const VerifyReport& r) {
    ordered_json j;
    j["vertex_closure"] = r.vertex_closure;
    j["edge_defect"] = r.edge_defect;
    j["shape_defect"] = r.shape_defect;
    j["area_defect"] = r.area_defect;
    j["angle_sum_defect"] = r.angle_sum_defect;
    j["vertex_angle_defects"] = r.vertex_angle_defects;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    return j.dump(2) + "\n";
}

std::string placed_to_json(const PlacedTiling& pt) {
    ordered_json j;
    j["tiling"] = ordered_json::parse(tiling_to_json(pt.tiling));
    j["pentagon"] = ordered_json::parse(pentagon_to_json(pt.pentagon));
    j["relabeled"] = pt.relabeled;
    ordered_json pts = ordered_json::array();
    for (const auto& tile : pt.points) {
        ordered_json corners = ordered_json::array();
        for (const auto& v : tile) corners.push_back({v.x(), v.y(), v.z()});
        pts.push_back(corners);
    }
    j["points"] = pts;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path);
    out << text;
}

}  // namespace sphaera
