#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sphaera/avc_engine.hpp"
#include "sphaera/pentagon.hpp"

namespace sphaera {

// label of corner slot c: [alpha, beta, delta, epsilon, gamma]
constexpr std::array<int, 5> kCornerLabel = {kAlpha, kBeta, kDelta, kEpsilon, kGamma};
// slot of each angle label
constexpr std::array<int, 5> kLabelSlot = {0, 1, 4, 2, 3};
constexpr int kBEdgeSlot = 2;

inline bool is_b_slot(int s) { return s == kBEdgeSlot; }

struct HalfEdge {
    int tile = -1;
    int slot = -1;
    bool operator==(const HalfEdge&) const = default;
};

struct Corner {
    int tile;
    int slot;
    bool operator==(const Corner&) const = default;
};

// tiles carry chirality; corner slot i always carries label kCornerLabel[i]; edge slot i joins corners i and i+1
struct CombTiling {
    std::vector<Chirality> chirality;
    std::vector<int> twin;  // 5*tile + slot -> 5*tile' + slot', -1 when free

    int size() const { return static_cast<int>(chirality.size()); }
    HalfEdge twin_of(int tile, int slot) const {
        int t = twin[5 * tile + slot];
        return t < 0 ? HalfEdge{} : HalfEdge{t / 5, t % 5};
    }
    int add_tile(Chirality c);
    void glue(int t1, int s1, int t2, int s2);
};

// corner of the twin tile at the vertex shared with corner `corner` of `tile`, reached across edge `slot`
int twin_corner(const CombTiling& t, int tile, int slot, int corner);

struct VertexOrbit {
    std::vector<Corner> corners;
    VertexType type{};
    bool closed = true;
};

void validate(const CombTiling& t);
std::vector<VertexOrbit> vertices(const CombTiling& t);
Census census(const CombTiling& t);
std::map<int, int> degree_histogram(const CombTiling& t);
bool census_balanced(const Census& c, int f);

// polygon description: per tile five (vertex id, label) pairs in traversal order
struct PolyCorner {
    int vertex;
    int label;
};
using Polygon = std::array<PolyCorner, 5>;

CombTiling from_polygons(const std::vector<Polygon>& polys);
// consistently oriented polygons; vertex ids are orbit indices
std::vector<Polygon> to_polygons(const CombTiling& t);

CombTiling mirror_image(const CombTiling& t);
CombTiling mirror_relabel(const CombTiling& t);
CombTiling relabel_tiles(const CombTiling& t, const std::vector<int>& tiles);
CombTiling permute_tiles(const CombTiling& t, const std::vector<int>& perm);

// generators
CombTiling build_earthmap(int m);
CombTiling build_symmetric_earthmap(int m);
CombTiling flip_standard(int m, int gluing = 0);
CombTiling flip_symmetric(int m, int which);
CombTiling build_f16_flip();
enum class Solid { tetra, octa, icosa };
CombTiling build_subdivision(Solid s);

// one half of `t` (tile set) is mirrored and reglued along its boundary loop; the loop offset
// is the first whose result has census `target`
CombTiling reflect_reglue(const CombTiling& t, const std::set<int>& half, const Census& target);
std::vector<CombTiling> reflect_reglue_all(const CombTiling& t, const std::set<int>& half);

// canonical form
std::string canonical_code(const CombTiling& t, bool identify_mirror = true);
std::string to_hex(const std::string& bytes);
bool is_isomorphic(const CombTiling& a, const CombTiling& b, bool identify_mirror = true);
bool brute_force_isomorphic(const CombTiling& a, const CombTiling& b, bool identify_mirror = true);

// UFO patches
struct UfoPatch {
    std::array<int, 4> tiles;  // T1 (third tile at v1), T2, T3 (sharing the beta-delta edge v1v2), T4 (third tile at v2)
    std::vector<HalfEdge> boundary;
};
std::vector<UfoPatch> detect_ufos(const CombTiling& t);
CombTiling flip_ufo(const CombTiling& t, const UfoPatch& patch, const AngleSystem& sys);

// exhaustive search
struct SearchOptions {
    bool identify_mirror = true;
    bool fail_first = true;  // otherwise expand the lowest free half-edge
    long long node_limit = 200000000;
};
struct SearchStats {
    long long nodes = 0;
    long long leaves = 0;
};
std::vector<CombTiling> search_tilings(const AngleSystem& sys, int f, const std::vector<VertexType>& allowed,
                                       const SearchOptions& opt = {}, SearchStats* stats = nullptr);

// Table 3
long long count_table3(int k, int row);
Census table3_census(int k, int row);
std::vector<VertexType> table3_vertices(int k, int row);
// tilings of each AVC row found by search_tilings over table3_system(8k+4), filtered by exact census
std::array<std::vector<CombTiling>, 8> search_table3(int k, const SearchOptions& opt = {}, SearchStats* stats = nullptr);

}  // namespace sphaera
