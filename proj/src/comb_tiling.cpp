#include "sphaera/comb_tiling.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "sphaera/errors.hpp"

namespace sphaera {

int CombTiling::add_tile(Chirality c) {
    chirality.push_back(c);
    for (int i = 0; i < 5; ++i) twin.push_back(-1);
    return size() - 1;
}

void CombTiling::glue(int t1, int s1, int t2, int s2) {
    twin[5 * t1 + s1] = 5 * t2 + s2;
    twin[5 * t2 + s2] = 5 * t1 + s1;
}

int twin_corner(const CombTiling& t, int tile, int slot, int corner) {
    int tw = t.twin[5 * tile + slot];
    if (tw < 0) throw InvariantError("twin_corner on a free half-edge");
    int other = tw / 5, s2 = tw % 5;
    bool same = t.chirality[tile] == t.chirality[other];
    if (corner == slot) return same ? (s2 + 1) % 5 : s2;
    return same ? s2 : (s2 + 1) % 5;
}

namespace {

struct Step {
    int tile, corner, exit;
};

// crosses `exit` of (tile, corner); returns false at a free half-edge
bool advance_corner(const CombTiling& t, Step& st) {
    int tw = t.twin[5 * st.tile + st.exit];
    if (tw < 0) return false;
    int k2 = twin_corner(t, st.tile, st.exit, st.corner);
    int tile2 = tw / 5, s2 = tw % 5;
    st.tile = tile2;
    st.corner = k2;
    st.exit = (s2 == k2) ? (k2 + 4) % 5 : k2;
    return true;
}

VertexOrbit walk_orbit(const CombTiling& t, int tile, int corner) {
    VertexOrbit o;
    o.corners.push_back({tile, corner});
    Step st{tile, corner, corner};
    int guard = 5 * t.size() + 1;
    while (true) {
        if (!advance_corner(t, st)) {
            o.closed = false;
            break;
        }
        if (st.tile == tile && st.corner == corner) break;
        o.corners.push_back({st.tile, st.corner});
        if (--guard < 0) throw InvariantError("vertex orbit does not close");
    }
    if (!o.closed) {
        std::vector<Corner> back;
        Step bs{tile, corner, (corner + 4) % 5};
        while (advance_corner(t, bs)) {
            back.push_back({bs.tile, bs.corner});
            if (--guard < 0) throw InvariantError("vertex orbit does not close");
        }
        std::reverse(back.begin(), back.end());
        back.insert(back.end(), o.corners.begin(), o.corners.end());
        o.corners = std::move(back);
    }
    for (const auto& c : o.corners) o.type[kCornerLabel[c.slot]]++;
    return o;
}

}  // namespace

std::vector<VertexOrbit> vertices(const CombTiling& t) {
    std::vector<VertexOrbit> out;
    std::vector<char> seen(5 * t.size(), 0);
    for (int tile = 0; tile < t.size(); ++tile)
        for (int k = 0; k < 5; ++k) {
            if (seen[5 * tile + k]) continue;
            VertexOrbit o = walk_orbit(t, tile, k);
            for (const auto& c : o.corners) {
                if (seen[5 * c.tile + c.slot]) throw InvariantError("corner belongs to two vertices");
                seen[5 * c.tile + c.slot] = 1;
            }
            out.push_back(std::move(o));
        }
    return out;
}

void validate(const CombTiling& t) {
    int n = t.size();
    if (n == 0) throw InvariantError("empty tiling");
    if (static_cast<int>(t.twin.size()) != 5 * n) throw InvariantError("twin table size mismatch");
    for (int i = 0; i < 5 * n; ++i) {
        int j = t.twin[i];
        if (j < 0) throw InvariantError("free half-edge at tile " + std::to_string(i / 5) + " slot " + std::to_string(i % 5));
        if (j >= 5 * n) throw InvariantError("twin out of range");
        if (j == i) throw InvariantError("twin has a fixed point");
        if (t.twin[j] != i) throw InvariantError("twin is not an involution");
        if (i / 5 == j / 5) throw InvariantError("tile glued to itself");
        if (is_b_slot(i % 5) != is_b_slot(j % 5)) throw InvariantError("a-edge glued to b-edge");
    }
    auto vs = vertices(t);
    for (const auto& v : vs) {
        if (!v.closed) throw InvariantError("open vertex orbit");
        if (v.corners.size() < 3) throw InvariantError("vertex of degree < 3");
    }
    int chi = static_cast<int>(vs.size()) - 5 * n / 2 + n;
    if (n % 2 != 0 || chi != 2) throw InvariantError("not a sphere (Euler characteristic " + std::to_string(chi) + ")");
}

Census census(const CombTiling& t) {
    Census c;
    for (const auto& v : vertices(t)) {
        if (!v.closed) throw InvariantError("open vertex orbit");
        c[v.type]++;
    }
    return c;
}

std::map<int, int> degree_histogram(const CombTiling& t) {
    std::map<int, int> h;
    for (const auto& v : vertices(t)) h[static_cast<int>(v.corners.size())]++;
    return h;
}

bool census_balanced(const Census& c, int f) {
    std::array<int, 5> tot{};
    for (const auto& [v, n] : c)
        for (int i = 0; i < 5; ++i) tot[i] += n * v[i];
    return std::all_of(tot.begin(), tot.end(), [f](int x) { return x == f; });
}

CombTiling from_polygons(const std::vector<Polygon>& input) {
    std::vector<Polygon> polys = input;
    int n = static_cast<int>(polys.size());
    if (n == 0) throw InvariantError("no polygons");
    using Key = std::pair<int, int>;
    auto key = [](int u, int v) { return Key{std::min(u, v), std::max(u, v)}; };
    std::map<Key, std::vector<int>> edge_tiles;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 5; ++j) {
            int u = polys[i][j].vertex, v = polys[i][(j + 1) % 5].vertex;
            if (u == v) throw InvariantError("polygon with repeated consecutive vertex");
            edge_tiles[key(u, v)].push_back(i);
        }
    std::vector<char> done(n, 0);
    std::deque<int> queue{0};
    done[0] = 1;
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < 5; ++j) {
            int u = polys[i][j].vertex, v = polys[i][(j + 1) % 5].vertex;
            for (int k : edge_tiles[key(u, v)]) {
                if (k == i || done[k]) continue;
                for (int l = 0; l < 5; ++l)
                    if (polys[k][l].vertex == u && polys[k][(l + 1) % 5].vertex == v) {
                        std::reverse(polys[k].begin(), polys[k].end());
                        break;
                    }
                done[k] = 1;
                queue.push_back(k);
            }
        }
    }
    if (std::find(done.begin(), done.end(), 0) != done.end()) throw InvariantError("polygons are not connected");

    CombTiling t;
    std::vector<std::array<int, 5>> vert(n);
    for (int i = 0; i < n; ++i) {
        int p = -1;
        for (int j = 0; j < 5; ++j)
            if (polys[i][j].label == kAlpha) p = j;
        if (p < 0) throw InvariantError("polygon without alpha corner");
        std::array<int, 5> seq{};
        for (int j = 0; j < 5; ++j) seq[j] = polys[i][(p + j) % 5].label;
        Chirality c;
        if (seq == std::array<int, 5>{kAlpha, kBeta, kDelta, kEpsilon, kGamma})
            c = Chirality::plain;
        else if (seq == std::array<int, 5>{kAlpha, kGamma, kEpsilon, kDelta, kBeta})
            c = Chirality::mirrored;
        else
            throw InvariantError("polygon labels are not a pentagon labeling");
        t.add_tile(c);
        for (int j = 0; j < 5; ++j) vert[i][kLabelSlot[polys[i][j].label]] = polys[i][j].vertex;
    }
    std::map<Key, std::vector<HalfEdge>> edges;
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 5; ++s) edges[key(vert[i][s], vert[i][(s + 1) % 5])].push_back({i, s});
    for (const auto& [k, hs] : edges) {
        if (hs.size() != 2) throw InvariantError("edge not shared by exactly two tiles");
        const auto &h1 = hs[0], &h2 = hs[1];
        if (h1.tile == h2.tile) throw InvariantError("tile adjacent to itself");
        if (is_b_slot(h1.slot) != is_b_slot(h2.slot)) throw InvariantError("edge length mismatch");
        t.glue(h1.tile, h1.slot, h2.tile, h2.slot);
        if (vert[h2.tile][twin_corner(t, h1.tile, h1.slot, h1.slot)] != vert[h1.tile][h1.slot])
            throw InvariantError("inconsistent orientation across edge");
    }
    validate(t);
    std::set<int> ids;
    for (const auto& p : polys)
        for (const auto& c : p) ids.insert(c.vertex);
    if (ids.size() != vertices(t).size()) throw InvariantError("pinched vertex");
    return t;
}

std::vector<Polygon> to_polygons(const CombTiling& t) {
    std::vector<std::array<int, 5>> vid(t.size());
    auto vs = vertices(t);
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
        for (const auto& c : vs[i].corners) vid[c.tile][c.slot] = i;
    std::vector<Polygon> out(t.size());
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < 5; ++j) {
            int s = t.chirality[i] == Chirality::plain ? j : (5 - j) % 5;
            out[i][j] = {vid[i][s], kCornerLabel[s]};
        }
    return out;
}

CombTiling mirror_image(const CombTiling& t) {
    CombTiling r = t;
    for (auto& c : r.chirality) c = c == Chirality::plain ? Chirality::mirrored : Chirality::plain;
    return r;
}

CombTiling relabel_tiles(const CombTiling& t, const std::vector<int>& tiles) {
    std::vector<char> sel(t.size(), 0);
    for (int i : tiles) sel.at(i) = 1;
    auto slot_map = [&](int tile, int s) { return sel[tile] ? (9 - s) % 5 : s; };
    CombTiling r;
    for (int i = 0; i < t.size(); ++i) {
        Chirality c = t.chirality[i];
        if (sel[i]) c = c == Chirality::plain ? Chirality::mirrored : Chirality::plain;
        r.add_tile(c);
    }
    for (int i = 0; i < t.size(); ++i)
        for (int s = 0; s < 5; ++s) {
            int tw = t.twin[5 * i + s];
            if (tw < 0) continue;
            r.twin[5 * i + slot_map(i, s)] = 5 * (tw / 5) + slot_map(tw / 5, tw % 5);
        }
    return r;
}

CombTiling mirror_relabel(const CombTiling& t) {
    std::vector<int> all(t.size());
    for (int i = 0; i < t.size(); ++i) all[i] = i;
    return relabel_tiles(t, all);
}

CombTiling permute_tiles(const CombTiling& t, const std::vector<int>& perm) {
    CombTiling r;
    r.chirality.resize(t.size());
    r.twin.assign(t.twin.size(), -1);
    for (int i = 0; i < t.size(); ++i) {
        r.chirality[perm[i]] = t.chirality[i];
        for (int s = 0; s < 5; ++s) {
            int tw = t.twin[5 * i + s];
            r.twin[5 * perm[i] + s] = tw < 0 ? -1 : 5 * perm[tw / 5] + tw % 5;
        }
    }
    return r;
}

namespace {

std::vector<Polygon> earth_polygons(int m, bool symmetric) {
    const int N = 0, S = 1;
    auto id = [m](int layer, int i) { return 2 + layer * m + ((i % m) + m) % m; };
    auto p = [&](int i) { return id(0, i); };
    auto q = [&](int i) { return id(1, i); };
    auto r = [&](int i) { return id(2, i); };
    auto s = [&](int i) { return id(3, i); };
    auto tt = [&](int i) { return id(4, i); };
    auto w = [&](int i) { return id(5, i); };
    const int a = kAlpha, b = kBeta, c = kGamma, d = kDelta, e = kEpsilon;
    std::vector<Polygon> P;
    for (int i = 0; i < m; ++i) {
        if (!symmetric) {
            P.push_back({{{N, c}, {p(i), a}, {q(i), b}, {r(i), d}, {p(i + 1), e}}});
            P.push_back({{{q(i), b}, {p(i), d}, {r(i - 1), e}, {tt(i - 1), c}, {s(i), a}}});
            P.push_back({{{r(i), a}, {q(i), c}, {s(i), e}, {w(i), d}, {tt(i), b}}});
            P.push_back({{{S, c}, {w(i), a}, {tt(i), b}, {s(i + 1), d}, {w(i + 1), e}}});
        } else {
            P.push_back({{{N, a}, {p(i), b}, {q(i), d}, {r(i), e}, {p(i + 1), c}}});
            P.push_back({{{q(i), b}, {p(i), a}, {r(i - 1), c}, {tt(i - 1), e}, {s(i), d}}});
            P.push_back({{{r(i), d}, {q(i), e}, {s(i), c}, {w(i), a}, {tt(i), b}}});
            P.push_back({{{S, a}, {w(i), b}, {tt(i), d}, {s(i + 1), e}, {w(i + 1), c}}});
        }
    }
    return P;
}

enum Zone { kA = 0, kX = 1, kY = 2, kB = 3 };

int zone_tile(int m, int i, Zone z) { return 4 * (((i % m) + m) % m) + z; }

std::set<int> zones_upto(int m, int k) {
    std::set<int> h;
    for (int j = 0; j < k; ++j)
        for (int z = 0; z < 4; ++z) h.insert(zone_tile(m, j, static_cast<Zone>(z)));
    return h;
}

int odd_half(int m) {
    if (m < 5 || m % 2 == 0) throw ParameterError("flip modifications need odd m >= 5, got " + std::to_string(m));
    return (m - 1) / 2;
}

VertexType vt(int a, int b, int c, int d, int e) { return {a, b, c, d, e}; }

}  // namespace

CombTiling build_earthmap(int m) {
    if (m < 4) throw ParameterError("earth map needs m >= 4");
    return from_polygons(earth_polygons(m, false));
}

CombTiling build_symmetric_earthmap(int m) {
    if (m < 4) throw ParameterError("earth map needs m >= 4");
    return from_polygons(earth_polygons(m, true));
}

std::vector<CombTiling> reflect_reglue_all(const CombTiling& t, const std::set<int>& half) {
    auto polys = to_polygons(t);
    std::set<std::pair<int, int>> directed;
    for (int i : half)
        for (int j = 0; j < 5; ++j) directed.insert({polys.at(i)[j].vertex, polys[i][(j + 1) % 5].vertex});
    std::map<int, int> next;
    for (const auto& [u, v] : directed)
        if (!directed.count({v, u})) {
            if (next.count(u)) throw InvariantError("half boundary is not a simple loop");
            next[u] = v;
        }
    if (next.empty()) throw InvariantError("half has no boundary");
    std::vector<int> loop{next.begin()->first};
    while (true) {
        int x = next.at(loop.back());
        if (x == loop.front()) break;
        loop.push_back(x);
        if (loop.size() > next.size()) throw InvariantError("half boundary is not a simple loop");
    }
    if (loop.size() != next.size()) throw InvariantError("half boundary has several loops");
    int L = static_cast<int>(loop.size());
    int offset = 0;
    for (const auto& p : polys)
        for (const auto& c : p) offset = std::max(offset, c.vertex + 1);
    std::map<int, int> pos;
    for (int j = 0; j < L; ++j) pos[loop[j]] = j;
    std::vector<CombTiling> out;
    for (int c = 0; c < L; ++c) {
        auto q = polys;
        for (int i : half)
            for (auto& corner : q[i]) {
                auto it = pos.find(corner.vertex);
                corner.vertex = it == pos.end() ? corner.vertex + offset : loop[((c - it->second) % L + L) % L];
            }
        try {
            out.push_back(from_polygons(q));
        } catch (const Error&) {
        }
    }
    return out;
}

CombTiling reflect_reglue(const CombTiling& t, const std::set<int>& half, const Census& target) {
    for (auto& r : reflect_reglue_all(t, half))
        if (census(r) == target) return r;
    throw InvariantError("no regluing of the half reaches census " + census_string(target));
}

CombTiling flip_standard(int m, int gluing) {
    int k = odd_half(m);
    std::set<int> h;
    if (gluing == 0) {
        h = zones_upto(m, k);
        h.insert(zone_tile(m, k, kX));
        h.insert(zone_tile(m, m - 1, kB));
    } else {
        for (int j = 0; j < k; ++j) {
            h.insert(zone_tile(m, j, kA));
            h.insert(zone_tile(m, j, kB));
            h.insert(zone_tile(m, j + 1, kX));
            h.insert(zone_tile(m, j + 1, kY));
        }
        h.insert(zone_tile(m, 0, kY));
        h.insert(zone_tile(m, k, kA));
    }
    Census target{{vt(1, 0, 0, 1, 1), 8 * k + 4}, {vt(0, 2, 1, 0, 0), 4 * k}, {vt(0, 1, k + 1, 0, 0), 4}};
    return reflect_reglue(build_earthmap(m), h, target);
}

CombTiling flip_symmetric(int m, int which) {
    int k = odd_half(m);
    CombTiling base = build_symmetric_earthmap(m);
    if (which == 1) {
        std::set<int> h = zones_upto(m, k);
        h.insert(zone_tile(m, k, kA));
        h.insert(zone_tile(m, k, kX));
        Census target{{vt(1, 1, 1, 0, 0), 4 * k},
                      {vt(0, 1, 0, 1, 1), 4 * k + 2},
                      {vt(0, 0, 1, 1, 1), 4 * k + 2},
                      {vt(k + 1, 1, 0, 0, 0), 2},
                      {vt(k + 1, 0, 1, 0, 0), 2}};
        return reflect_reglue(base, h, target);
    }
    if (which != 2) throw ParameterError("symmetric flip index must be 1 or 2");
    std::set<int> h = zones_upto(m, k);
    h.erase(zone_tile(m, 0, kX));
    h.insert(zone_tile(m, k, kA));
    h.insert(zone_tile(m, k, kX));
    h.insert(zone_tile(m, k, kY));
    Census reflected{{vt(1, 1, 1, 0, 0), 4 * k + 2},
                     {vt(0, 1, 0, 1, 1), 4 * k},
                     {vt(0, 0, 1, 1, 1), 4 * k + 2},
                     {vt(k + 1, 1, 0, 0, 0), 2},
                     {vt(k, 0, 0, 1, 1), 2}};
    CombTiling r = reflect_reglue(base, h, reflected);
    std::vector<int> ay;
    for (int i = 0; i < r.size(); i += 2) ay.push_back(i);
    return relabel_tiles(r, ay);
}

CombTiling build_f16_flip() {
    std::set<int> h;
    for (int i = 0; i < 4; ++i) {
        h.insert(zone_tile(4, i, kA));
        h.insert(zone_tile(4, i, kX));
    }
    Census target{{vt(1, 0, 0, 1, 1), 8}, {vt(1, 2, 0, 0, 0), 8}, {vt(0, 0, 1, 1, 1), 8}, {vt(0, 0, 4, 0, 0), 2}};
    return mirror_relabel(reflect_reglue(build_earthmap(4), h, target));
}

namespace {

struct Solid3 {
    std::vector<Vec3> v;
    std::vector<std::array<int, 3>> faces;  // counterclockwise seen from outside
};

Solid3 platonic(Solid s) {
    Solid3 out;
    if (s == Solid::tetra) {
        out.v = {Vec3(1, 1, 1), Vec3(1, -1, -1), Vec3(-1, 1, -1), Vec3(-1, -1, 1)};
    } else if (s == Solid::octa) {
        out.v = {Vec3(1, 0, 0), Vec3(-1, 0, 0), Vec3(0, 1, 0), Vec3(0, -1, 0), Vec3(0, 0, 1), Vec3(0, 0, -1)};
    } else {
        const double g = (1 + std::sqrt(5.0)) / 2;
        for (double x : {-1.0, 1.0})
            for (double y : {-g, g}) {
                out.v.emplace_back(0, x, y);
                out.v.emplace_back(x, y, 0);
                out.v.emplace_back(y, 0, x);
            }
    }
    for (auto& p : out.v) p.normalize();
    int n = static_cast<int>(out.v.size());
    double dmin = 10;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) dmin = std::min(dmin, (out.v[i] - out.v[j]).norm());
    auto adj = [&](int i, int j) { return std::abs((out.v[i] - out.v[j]).norm() - dmin) < 1e-9; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (adj(i, j) && adj(j, k) && adj(i, k)) {
                    Vec3 nrm = (out.v[j] - out.v[i]).cross(out.v[k] - out.v[i]);
                    if (nrm.dot(out.v[i] + out.v[j] + out.v[k]) > 0)
                        out.faces.push_back({i, j, k});
                    else
                        out.faces.push_back({i, k, j});
                }
    return out;
}

}  // namespace

CombTiling build_subdivision(Solid s) {
    Solid3 solid = platonic(s);
    int nv = static_cast<int>(solid.v.size());
    int nf = static_cast<int>(solid.faces.size());
    // ids: original vertices, face centers, then one point per directed edge
    std::map<std::pair<int, int>, int> edge_point;
    auto e = [&](int x, int y) {
        auto it = edge_point.find({x, y});
        if (it != edge_point.end()) return it->second;
        int id = nv + nf + static_cast<int>(edge_point.size());
        edge_point[{x, y}] = id;
        return id;
    };
    std::vector<Polygon> polys;
    for (int fi = 0; fi < nf; ++fi) {
        const auto& F = solid.faces[fi];
        int O = nv + fi;
        for (int j = 0; j < 3; ++j) {
            int W = F[(j + 2) % 3], X = F[j], Y = F[(j + 1) % 3];
            polys.push_back({{{O, kGamma}, {e(X, W), kAlpha}, {X, kBeta}, {e(X, Y), kDelta}, {e(Y, X), kEpsilon}}});
        }
    }
    return from_polygons(polys);
}

}  // namespace sphaera
