#include "sphaera/export.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sphaera {

namespace {

std::string fmt(double x, int digits = 6) {
    if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) x = 0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

Vec3 centroid(const std::array<Vec3, 5>& pts) {
    Vec3 c = Vec3::Zero();
    for (const auto& p : pts) c += p;
    return normalized(c);
}

std::vector<Vec3> ccw(const PlacedTiling& pt, int tile) {
    std::vector<Vec3> out(5);
    bool plain = pt.tiling.chirality[tile] == Chirality::plain;
    for (int j = 0; j < 5; ++j) out[j] = pt.points[tile][plain ? j : (5 - j) % 5];
    return out;
}

std::vector<Vec3> great_arc(const Vec3& p, const Vec3& q, int n) {
    std::vector<Vec3> out;
    double th = arc(p, q);
    for (int i = 0; i <= n; ++i) {
        double u = static_cast<double>(i) / n;
        if (th < 1e-12) {
            out.push_back(p);
            continue;
        }
        out.push_back(normalized((std::sin((1 - u) * th) * p + std::sin(u * th) * q) / std::sin(th)));
    }
    return out;
}

}  // namespace

std::string to_obj(const PlacedTiling& pt) {
    const CombTiling& t = pt.tiling;
    auto vs = vertices(t);
    std::vector<int> vid(5 * t.size());
    std::ostringstream os;
    os << "# sphaera tiling, " << t.size() << " tiles, " << vs.size() << " vertices\n";
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
        const auto& c = vs[i].corners[0];
        const Vec3& p = pt.points[c.tile][c.slot];
        os << "v " << fmt(p.x()) << " " << fmt(p.y()) << " " << fmt(p.z()) << "\n";
        for (const auto& k : vs[i].corners) vid[5 * k.tile + k.slot] = i + 1;
    }
    int base = static_cast<int>(vs.size());
    for (int tile = 0; tile < t.size(); ++tile) {
        Vec3 c = centroid(pt.points[tile]);
        os << "v " << fmt(c.x()) << " " << fmt(c.y()) << " " << fmt(c.z()) << "\n";
    }
    os << "g tiles\n";
    for (int tile = 0; tile < t.size(); ++tile) {
        bool plain = t.chirality[tile] == Chirality::plain;
        for (int j = 0; j < 5; ++j) {
            int s1 = plain ? j : (5 - j) % 5;
            int s2 = plain ? (j + 1) % 5 : (5 - j - 1) % 5;
            os << "f " << base + tile + 1 << " " << vid[5 * tile + s1] << " " << vid[5 * tile + s2] << "\n";
        }
    }
    os << "g b_edges\n";
    for (int tile = 0; tile < t.size(); ++tile) {
        int tw = t.twin[5 * tile + kBEdgeSlot];
        if (tw / 5 < tile) continue;
        os << "l " << vid[5 * tile + kBEdgeSlot] << " " << vid[5 * tile + kBEdgeSlot + 1] << "\n";
    }
    return os.str();
}

std::string to_svg(const PlacedTiling& pt, const SvgOptions& opt) {
    const CombTiling& t = pt.tiling;
    auto vs = vertices(t);
    // rotate the densest vertex to the north pole
    size_t dense = 0;
    for (size_t i = 0; i < vs.size(); ++i)
        if (vs[i].corners.size() > vs[dense].corners.size()) dense = i;
    Vec3 north = pt.points[vs[dense].corners[0].tile][vs[dense].corners[0].slot];
    Vec3 south = -north;
    // projection point must avoid vertices; move it toward a tile centroid if needed
    for (const auto& v : vs) {
        const auto& c = v.corners[0];
        if (arc(pt.points[c.tile][c.slot], south) < 1e-3) {
            south = centroid(pt.points[c.tile]);
            break;
        }
    }
    Vec3 z = -south;
    Vec3 x = std::abs(z.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
    x = normalized(x - x.dot(z) * z);
    Vec3 y = z.cross(x);
    const double clip = 4.0;
    auto project = [&](const Vec3& p, bool& inside) {
        double pz = p.dot(z);
        double d = 1 + pz;
        double u = d > 1e-9 ? p.dot(x) / d : clip * 10, w = d > 1e-9 ? p.dot(y) / d : clip * 10;
        double r = std::hypot(u, w);
        inside = r <= clip;
        if (r > clip) u *= clip / r, w *= clip / r;
        return std::pair<double, double>(u, w);
    };
    double half = opt.size / 2, scale = half / clip * 0.98;
    auto px = [&](std::pair<double, double> uv) {
        return fmt(half + scale * uv.first, 2) + "," + fmt(half - scale * uv.second, 2);
    };
    const int n = 16;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(opt.size, 0) << "\" height=\"" << fmt(opt.size, 0)
       << "\" viewBox=\"0 0 " << fmt(opt.size, 0) << " " << fmt(opt.size, 0) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<g id=\"tiles\" stroke=\"none\">\n";
    for (int tile = 0; tile < t.size(); ++tile) {
        auto ring = ccw(pt, tile);
        std::string path;
        bool all_inside = true;
        for (int j = 0; j < 5; ++j) {
            auto seg = great_arc(ring[j], ring[(j + 1) % 5], n);
            for (int i = 0; i < n; ++i) {
                bool in;
                auto uv = project(seg[i], in);
                all_inside = all_inside && in;
                path += (path.empty() ? "M" : " L") + px(uv);
            }
        }
        if (!all_inside) continue;
        os << "<path d=\"" << path << " Z\" fill=\"" << (t.chirality[tile] == Chirality::plain ? "#f4f4f4" : "#c8c8c8")
           << "\"/>\n";
    }
    os << "</g>\n";
    auto edge_path = [&](const Vec3& p, const Vec3& q) {
        std::string path;
        for (const auto& s : great_arc(p, q, n)) {
            bool in;
            path += (path.empty() ? "M" : " L") + px(project(s, in));
        }
        return path;
    };
    os << "<g id=\"edges\" fill=\"none\" stroke=\"black\" stroke-linecap=\"round\">\n";
    for (int tile = 0; tile < t.size(); ++tile)
        for (int s = 0; s < 5; ++s) {
            int tw = t.twin[5 * tile + s];
            if (tw < 5 * tile + s) continue;
            os << "<path d=\"" << edge_path(pt.points[tile][s], pt.points[tile][(s + 1) % 5]) << "\" stroke-width=\""
               << (is_b_slot(s) ? "4" : "1.2") << "\"/>\n";
        }
    os << "</g>\n";
    if (opt.mark_ufos) {
        os << "<g id=\"ufos\" fill=\"none\" stroke=\"#1f5fd0\" stroke-width=\"3\" stroke-dasharray=\"8,4\">\n";
        for (const auto& u : detect_ufos(t)) {
            std::string path;
            for (const auto& h : u.boundary) {
                std::string seg = edge_path(pt.points[h.tile][h.slot], pt.points[h.tile][(h.slot + 1) % 5]);
                path += (path.empty() ? "" : " ") + seg;
            }
            os << "<path d=\"" << path << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace sphaera
