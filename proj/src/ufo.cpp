#include <algorithm>
#include <map>

#include "sphaera/comb_tiling.hpp"
#include "sphaera/errors.hpp"

namespace sphaera {

namespace {

const VertexType kBde = {0, 1, 0, 1, 1};
// the two interior vertices are joined by the beta-delta edge of both middle tiles
constexpr int kUfoAxisSlot = 1;

std::vector<int> corner_vertex(const CombTiling& t, std::vector<VertexOrbit>& vs) {
    vs = vertices(t);
    std::vector<int> cv(5 * t.size(), -1);
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
        for (const auto& c : vs[i].corners) cv[5 * c.tile + c.slot] = i;
    return cv;
}

int third_tile(const VertexOrbit& v, int x, int y) {
    for (const auto& c : v.corners)
        if (c.tile != x && c.tile != y) return c.tile;
    return -1;
}

bool centrally_symmetric(const CombTiling& t, const std::array<int, 4>& tiles) {
    std::map<int, int> sigma{{tiles[0], tiles[3]}, {tiles[3], tiles[0]}, {tiles[1], tiles[2]}, {tiles[2], tiles[1]}};
    if (t.chirality[tiles[0]] != t.chirality[tiles[3]] || t.chirality[tiles[1]] != t.chirality[tiles[2]]) return false;
    for (int x : tiles)
        for (int s = 0; s < 5; ++s) {
            int tw = t.twin[5 * x + s];
            auto it = sigma.find(tw / 5);
            if (it == sigma.end()) continue;
            if (t.twin[5 * sigma[x] + s] != 5 * it->second + tw % 5) return false;
        }
    return true;
}

std::vector<HalfEdge> boundary_loop(const CombTiling& t, const std::array<int, 4>& tiles) {
    auto in = [&](int x) { return std::find(tiles.begin(), tiles.end(), x) != tiles.end(); };
    std::vector<HalfEdge> free;
    for (int x : tiles)
        for (int s = 0; s < 5; ++s)
            if (!in(t.twin[5 * x + s] / 5)) free.push_back({x, s});
    // order by walking: the next boundary half-edge shares the far corner, found by rotating inside the patch
    std::vector<HalfEdge> loop;
    if (free.empty()) return loop;
    std::vector<char> used(free.size(), 0);
    HalfEdge cur = free[0];
    used[0] = 1;
    loop.push_back(cur);
    while (loop.size() < free.size()) {
        bool plain = t.chirality[cur.tile] == Chirality::plain;
        int tile = cur.tile, corner = plain ? (cur.slot + 1) % 5 : cur.slot;
        int exit = corner == cur.slot ? (corner + 4) % 5 : corner;
        while (in(t.twin[5 * tile + exit] / 5)) {
            int k2 = twin_corner(t, tile, exit, corner);
            int tw = t.twin[5 * tile + exit];
            tile = tw / 5;
            int s2 = tw % 5;
            corner = k2;
            exit = s2 == k2 ? (k2 + 4) % 5 : k2;
        }
        HalfEdge nx{tile, exit};
        auto it = std::find(free.begin(), free.end(), nx);
        if (it == free.end() || used[it - free.begin()]) break;
        used[it - free.begin()] = 1;
        loop.push_back(nx);
        cur = nx;
    }
    return loop;
}

}  // namespace

std::vector<UfoPatch> detect_ufos(const CombTiling& t) {
    std::vector<VertexOrbit> vs;
    auto cv = corner_vertex(t, vs);
    std::vector<UfoPatch> out;
    for (int x = 0; x < t.size(); ++x) {
        int tw = t.twin[5 * x + kUfoAxisSlot];
        int y = tw / 5;
        if (y < x || tw % 5 != kUfoAxisSlot) continue;
        const auto& v1 = vs[cv[5 * x + kUfoAxisSlot]];
        const auto& v2 = vs[cv[5 * x + kUfoAxisSlot + 1]];
        if (v1.type != kBde || v2.type != kBde || v1.corners.size() != 3 || v2.corners.size() != 3) continue;
        int t1 = third_tile(v1, x, y), t4 = third_tile(v2, x, y);
        if (t1 < 0 || t4 < 0 || t1 == t4) continue;
        std::array<int, 4> tiles{t1, x, y, t4};
        if (!centrally_symmetric(t, tiles)) {
            std::swap(tiles[1], tiles[2]);
            if (!centrally_symmetric(t, tiles)) continue;
        }
        UfoPatch p;
        p.tiles = tiles;
        p.boundary = boundary_loop(t, tiles);
        out.push_back(p);
    }
    return out;
}

CombTiling flip_ufo(const CombTiling& t, const UfoPatch& patch, const AngleSystem& sys) {
    bool found = false;
    for (const auto& p : detect_ufos(t))
        if (std::is_permutation(p.tiles.begin(), p.tiles.end(), patch.tiles.begin())) found = true;
    if (!found) throw InvariantError("patch is not a UFO of this tiling");
    std::set<int> half(patch.tiles.begin(), patch.tiles.end());
    for (auto& r : reflect_reglue_all(t, half)) {
        bool ok = true;
        for (const auto& [v, n] : census(r))
            if (!is_vertex(sys, v)) ok = false;
        if (ok) return r;
    }
    throw InvariantError("UFO cannot be flipped within the angle system");
}

}  // namespace sphaera
