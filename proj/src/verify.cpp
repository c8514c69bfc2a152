#include "sphaera/verify.hpp"

#include <cmath>
#include <deque>
#include <sstream>

#include "sphaera/errors.hpp"

namespace sphaera {

namespace {

std::vector<Vec3> ccw_points(const std::array<Vec3, 5>& slot_pts, Chirality c) {
    std::vector<Vec3> out(5);
    for (int j = 0; j < 5; ++j) out[j] = slot_pts[c == Chirality::plain ? j : (5 - j) % 5];
    return out;
}

// slot index of the j-th counterclockwise corner
int ccw_slot(Chirality c, int j) { return c == Chirality::plain ? j : (5 - j) % 5; }

PlacedTiling place(const CombTiling& t, const Pentagon& p, const LayoutOptions& opt) {
    Pentagon base = p;
    base.chirality = Chirality::plain;
    auto proto = realize(base);
    std::array<Vec3, 5> plain;
    for (int i = 0; i < 5; ++i) plain[i] = proto[i];
    PlacedTiling pt;
    pt.tiling = t;
    pt.pentagon = p;
    pt.points.assign(t.size(), {});
    std::vector<char> placed(t.size(), 0);
    auto put = [&](int tile, const Isometry& iso) {
        for (int i = 0; i < 5; ++i) pt.points[tile][i] = iso.apply(plain[i]);
        placed[tile] = 1;
    };
    Isometry root;
    if (t.chirality[opt.root] == Chirality::mirrored) root.m(1, 1) = -1, root.det = -1;
    put(opt.root, root);
    std::deque<int> queue{opt.root};
    while (!queue.empty()) {
        int tile = queue.front();
        queue.pop_front();
        for (int s = 0; s < 5; ++s) {
            int tw = t.twin[5 * tile + s];
            int other = tw / 5;
            if (placed[other]) continue;
            int c1 = twin_corner(t, tile, s, s);
            int c2 = twin_corner(t, tile, s, (s + 1) % 5);
            Isometry iso;
            try {
                iso = isometry_from_edge(plain[c1], plain[c2], pt.points[tile][s], pt.points[tile][(s + 1) % 5],
                                         t.chirality[other] == Chirality::mirrored, 1e-6);
            } catch (const Error& e) {
                throw ClosureError("tile " + std::to_string(other) + " cannot be attached to tile " + std::to_string(tile) +
                                   ": " + e.what());
            }
            put(other, iso);
            queue.push_back(other);
        }
    }
    for (int tile = 0; tile < t.size(); ++tile)
        for (int s = 0; s < 5; ++s) {
            int tw = t.twin[5 * tile + s];
            int other = tw / 5;
            for (int c : {s, (s + 1) % 5}) {
                double d = arc(pt.points[tile][c], pt.points[other][twin_corner(t, tile, s, c)]);
                if (d > opt.tol) {
                    std::ostringstream os;
                    os << "edge (tile " << tile << ", slot " << s << ") does not close: vertex defect " << d;
                    throw ClosureError(os.str());
                }
            }
        }
    return pt;
}

}  // namespace

PlacedTiling layout(const CombTiling& t, const Pentagon& p, const LayoutOptions& opt) {
    validate(t);
    if (p.f != 0 && p.f != t.size())
        throw ParameterError("pentagon is for f=" + std::to_string(p.f) + " but the tiling has " + std::to_string(t.size()) +
                             " tiles");
    if (opt.root < 0 || opt.root >= t.size()) throw ParameterError("layout root out of range");
    if (max_residual(p) > 1e-9) throw ClosureError("pentagon fails the Coolsaet equations");
    try {
        return place(t, p, opt);
    } catch (const ClosureError& first) {
        try {
            PlacedTiling pt = place(t, mirror_relabel(p), opt);
            pt.relabeled = true;
            return pt;
        } catch (const ClosureError&) {
            throw first;
        }
    }
}

VerifyReport verify_geometric(const PlacedTiling& pt, double tol) {
    const CombTiling& t = pt.tiling;
    VerifyReport r;
    r.tol = tol;
    Pentagon base = pt.pentagon;
    base.chirality = Chirality::plain;
    auto proto = realize(base);
    std::array<double, 5> proto_edges{};
    for (int s = 0; s < 5; ++s) proto_edges[s] = arc(proto[s], proto[(s + 1) % 5]);
    std::array<double, 5> proto_angles{};
    for (int s = 0; s < 5; ++s) proto_angles[s] = pt.pentagon.angle[kCornerLabel[s]];

    std::vector<std::array<double, 5>> measured(t.size());
    double area = 0;
    for (int tile = 0; tile < t.size(); ++tile) {
        Chirality c = t.chirality[tile];
        auto ring = ccw_points(pt.points[tile], c);
        auto ang = interior_angles(ring);
        double excess = -3 * kPi;
        for (int j = 0; j < 5; ++j) {
            int s = ccw_slot(c, j);
            measured[tile][s] = ang[j];
            excess += ang[j];
            r.shape_defect = std::max(r.shape_defect, std::abs(ang[j] - proto_angles[s]));
            double e = arc(pt.points[tile][s], pt.points[tile][(s + 1) % 5]);
            r.shape_defect = std::max(r.shape_defect, std::abs(e - proto_edges[s]));
        }
        area += excess;
    }
    r.area_defect = area - 4 * kPi;

    for (int tile = 0; tile < t.size(); ++tile)
        for (int s = 0; s < 5; ++s) {
            int other = t.twin[5 * tile + s] / 5;
            for (int c : {s, (s + 1) % 5})
                r.edge_defect = std::max(
                    r.edge_defect, arc(pt.points[tile][c], pt.points[other][twin_corner(t, tile, s, c)]));
        }

    for (const auto& v : vertices(t)) {
        const Vec3& first = pt.points[v.corners[0].tile][v.corners[0].slot];
        double sum = 0;
        for (const auto& c : v.corners) {
            r.vertex_closure = std::max(r.vertex_closure, arc(first, pt.points[c.tile][c.slot]));
            sum += measured[c.tile][c.slot];
        }
        r.vertex_angle_defects.push_back(sum - 2 * kPi);
        r.angle_sum_defect = std::max(r.angle_sum_defect, std::abs(sum - 2 * kPi));
    }
    r.pass = r.vertex_closure < tol && r.edge_defect < tol && r.shape_defect < tol && r.angle_sum_defect < tol &&
             std::abs(r.area_defect) < tol * t.size();
    return r;
}

std::string summary(const VerifyReport& r) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific;
    os << "vertex closure   " << r.vertex_closure << "\n"
       << "edge defect      " << r.edge_defect << "\n"
       << "shape defect     " << r.shape_defect << "\n"
       << "angle sum defect " << r.angle_sum_defect << "\n"
       << "area - 4pi       " << r.area_defect << "\n"
       << "tolerance        " << r.tol << "\n"
       << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace sphaera
