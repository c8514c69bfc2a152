#include <algorithm>
#include <map>
#include <unordered_set>

#include "sphaera/comb_tiling.hpp"
#include "sphaera/errors.hpp"

namespace sphaera {

namespace {

std::uint32_t pack(const VertexType& v) {
    std::uint32_t k = 0;
    for (int i = 4; i >= 0; --i) k = k * 64 + static_cast<std::uint32_t>(v[i]);
    return k;
}

struct Move {
    int slot2;       // attach: slot of the new tile; glue: -1
    Chirality chir;  // attach: chirality of the new tile
    HalfEdge other;  // glue target
};

class Searcher {
public:
    Searcher(int f, const std::vector<VertexType>& allowed, const SearchOptions& opt, SearchStats* stats)
        : f_(f), opt_(opt), stats_(stats) {
        for (const auto& v : allowed) {
            allowed_.insert(pack(v));
            VertexType s{};
            add_subs(v, s, 0);
        }
        for (const auto& v : allowed) {
            bool strict_sub = false;
            for (const auto& w : allowed) {
                if (w == v) continue;
                bool le = true;
                for (int i = 0; i < 5; ++i) le = le && v[i] <= w[i];
                strict_sub = strict_sub || le;
            }
            if (!strict_sub) maximal_.insert(pack(v));
        }
    }

    std::map<std::string, CombTiling> run() {
        t_.add_tile(Chirality::plain);
        recurse();
        return found_;
    }

private:
    int f_;
    SearchOptions opt_;
    SearchStats* stats_;
    std::unordered_set<std::uint32_t> allowed_, sub_, maximal_;
    CombTiling t_;
    std::map<std::string, CombTiling> found_;
    long long nodes_ = 0;

    void add_subs(const VertexType& v, VertexType& s, int i) {
        if (i == 5) {
            sub_.insert(pack(s));
            return;
        }
        for (int n = 0; n <= v[i]; ++n) {
            s[i] = n;
            add_subs(v, s, i + 1);
        }
        s[i] = 0;
    }

    struct Fan {
        VertexType type{};
        bool closed = true;
        bool repeated = false;
        HalfEdge end1, end2;  // free half-edges bounding an open fan
    };

    bool step(int& tile, int& corner, int& exit) const {
        int tw = t_.twin[5 * tile + exit];
        if (tw < 0) return false;
        int k2 = twin_corner(t_, tile, exit, corner);
        int s2 = tw % 5;
        tile = tw / 5;
        corner = k2;
        exit = s2 == k2 ? (k2 + 4) % 5 : k2;
        return true;
    }

    Fan fan(int tile0, int corner0) const {
        Fan fn;
        std::uint64_t seen = 0;
        auto add = [&](int tile, int corner) {
            fn.type[kCornerLabel[corner]]++;
            std::uint64_t bit = std::uint64_t{1} << tile;
            if (seen & bit) fn.repeated = true;
            seen |= bit;
        };
        add(tile0, corner0);
        int tile = tile0, corner = corner0, exit = corner0;
        while (true) {
            if (!step(tile, corner, exit)) {
                fn.closed = false;
                fn.end1 = {tile, exit};
                break;
            }
            if (tile == tile0 && corner == corner0) return fn;
            add(tile, corner);
            if (fn.repeated) return fn;
        }
        tile = tile0, corner = corner0, exit = (corner0 + 4) % 5;
        while (step(tile, corner, exit)) {
            add(tile, corner);
            if (fn.repeated) return fn;
        }
        fn.end2 = {tile, exit};
        return fn;
    }

    bool fan_ok(int tile, int corner) const {
        Fan fn = fan(tile, corner);
        if (fn.repeated) return false;
        std::uint32_t k = pack(fn.type);
        return fn.closed ? allowed_.count(k) > 0 : sub_.count(k) > 0;
    }

    bool edge_ok(int tile, int slot) const { return fan_ok(tile, slot) && fan_ok(tile, (slot + 1) % 5); }

    // next free half-edge along the boundary cycle
    HalfEdge next_boundary(HalfEdge h) const {
        int tile = h.tile;
        int corner = t_.chirality[tile] == Chirality::plain ? (h.slot + 1) % 5 : h.slot;
        int exit = corner == h.slot ? (corner + 4) % 5 : corner;
        while (step(tile, corner, exit)) {
        }
        return {tile, exit};
    }

    bool try_attach(const HalfEdge& h, int s2, Chirality c) {
        int nt = t_.add_tile(c);
        t_.glue(h.tile, h.slot, nt, s2);
        bool ok = edge_ok(h.tile, h.slot);
        if (!ok) undo_attach();
        return ok;
    }
    void undo_attach() {
        int nt = t_.size() - 1;
        for (int s = 0; s < 5; ++s) {
            int tw = t_.twin[5 * nt + s];
            if (tw >= 0) t_.twin[tw] = -1;
        }
        t_.chirality.pop_back();
        t_.twin.resize(t_.twin.size() - 5);
    }
    bool try_glue(const HalfEdge& h, const HalfEdge& o) {
        t_.glue(h.tile, h.slot, o.tile, o.slot);
        bool ok = edge_ok(h.tile, h.slot);
        if (!ok) undo_glue(h, o);
        return ok;
    }
    void undo_glue(const HalfEdge& h, const HalfEdge& o) {
        t_.twin[5 * h.tile + h.slot] = -1;
        t_.twin[5 * o.tile + o.slot] = -1;
    }

    // the only legal twin when an endpoint fan cannot grow any more
    std::optional<HalfEdge> forced_partner(const HalfEdge& h) const {
        for (int corner : {h.slot, (h.slot + 1) % 5}) {
            Fan fn = fan(h.tile, corner);
            if (fn.closed || !maximal_.count(pack(fn.type))) continue;
            return fn.end1 == h ? fn.end2 : fn.end1;
        }
        return std::nullopt;
    }

    std::vector<Move> moves(const HalfEdge& h, const std::vector<HalfEdge>& cycle, size_t cap) {
        std::vector<Move> out;
        bool b = is_b_slot(h.slot);
        if (auto p = forced_partner(h)) {
            if (p->tile != h.tile && is_b_slot(p->slot) == b && try_glue(h, *p)) {
                undo_glue(h, *p);
                out.push_back({-1, Chirality::plain, *p});
            }
            return out;
        }
        for (const auto& o : cycle) {
            if (o == h || o.tile == h.tile || is_b_slot(o.slot) != b) continue;
            if (try_glue(h, o)) {
                undo_glue(h, o);
                out.push_back({-1, Chirality::plain, o});
                if (out.size() > cap) return out;
            }
        }
        if (t_.size() < f_) {
            for (int s2 = 0; s2 < 5; ++s2) {
                if (is_b_slot(s2) != b) continue;
                for (Chirality c : {Chirality::plain, Chirality::mirrored})
                    if (try_attach(h, s2, c)) {
                        undo_attach();
                        out.push_back({s2, c, {}});
                        if (out.size() > cap) return out;
                    }
            }
        }
        return out;
    }

    void recurse() {
        if (++nodes_ > opt_.node_limit) throw ResourceError("search node limit exceeded");
        if (stats_) stats_->nodes = nodes_;
        // boundary cycles
        std::vector<HalfEdge> free;
        for (int i = 0; i < 5 * t_.size(); ++i)
            if (t_.twin[i] < 0) free.push_back({i / 5, i % 5});
        if (free.empty()) {
            leaf();
            return;
        }
        std::map<std::pair<int, int>, int> cycle_of;
        std::vector<std::vector<HalfEdge>> cycles;
        for (const auto& h : free) {
            if (cycle_of.count({h.tile, h.slot})) continue;
            int id = static_cast<int>(cycles.size());
            cycles.emplace_back();
            HalfEdge cur = h;
            while (!cycle_of.count({cur.tile, cur.slot})) {
                cycle_of[{cur.tile, cur.slot}] = id;
                cycles[id].push_back(cur);
                cur = next_boundary(cur);
            }
        }
        // fail-first: the free half-edge with the fewest legal moves
        HalfEdge best{};
        std::vector<Move> best_moves;
        bool have = false;
        for (const auto& h : free) {
            auto ms = moves(h, cycles[cycle_of[{h.tile, h.slot}]], have ? best_moves.size() : 1u << 30);
            if (!have || ms.size() < best_moves.size()) {
                best = h;
                best_moves = std::move(ms);
                have = true;
                if (best_moves.size() <= 1 || !opt_.fail_first) break;
            }
        }
        for (const auto& m : best_moves) {
            if (m.slot2 < 0) {
                t_.glue(best.tile, best.slot, m.other.tile, m.other.slot);
                recurse();
                undo_glue(best, m.other);
            } else {
                int nt = t_.add_tile(m.chir);
                t_.glue(best.tile, best.slot, nt, m.slot2);
                recurse();
                undo_attach();
            }
        }
    }

    void leaf() {
        if (t_.size() != f_) return;
        try {
            validate(t_);
        } catch (const InvariantError&) {
            return;
        }
        if (stats_) stats_->leaves++;
        std::string code = canonical_code(t_, opt_.identify_mirror);
        found_.emplace(code, t_);
    }
};

}  // namespace

std::vector<CombTiling> search_tilings(const AngleSystem& sys, int f, const std::vector<VertexType>& allowed,
                                       const SearchOptions& opt, SearchStats* stats) {
    if (f < 2 || f > 64) throw ParameterError("search supports 2 <= f <= 64");
    if (sys.f != 0 && sys.f != f) throw ParameterError("angle system is for f=" + std::to_string(sys.f));
    for (const auto& v : allowed)
        if (!is_vertex(sys, v)) throw ParameterError("vertex " + vertex_name(v) + " is not admissible in the system");
    Searcher s(f, allowed, opt, stats);
    auto found = s.run();
    if (!opt.identify_mirror) {
        std::map<std::string, CombTiling> all;
        for (auto& [code, t] : found) {
            all.emplace(code, t);
            CombTiling m = mirror_image(t);
            all.emplace(canonical_code(m, false), m);
        }
        found = std::move(all);
    }
    std::vector<CombTiling> out;
    for (auto& [code, t] : found) out.push_back(std::move(t));
    return out;
}

}  // namespace sphaera
