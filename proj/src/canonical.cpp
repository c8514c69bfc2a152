#include <algorithm>
#include <deque>

#include "sphaera/comb_tiling.hpp"

namespace sphaera {

namespace {

void put16(std::string& s, int x) {
    s.push_back(static_cast<char>(x & 0xff));
    s.push_back(static_cast<char>((x >> 8) & 0xff));
}

std::string code_from(const CombTiling& t, int start, bool relative, const std::string& best) {
    int n = t.size();
    std::vector<int> id(n, -1);
    std::vector<int> order{start};
    id[start] = 0;
    std::string s;
    s.reserve(6 * n * 5);
    put16(s, n);
    auto chir = [&](int tile) {
        int c = t.chirality[tile] == Chirality::mirrored;
        if (relative) c ^= t.chirality[start] == Chirality::mirrored;
        return c;
    };
    for (size_t i = 0; i < order.size(); ++i) {
        int tile = order[i];
        s.push_back(static_cast<char>(chir(tile)));
        for (int slot = 0; slot < 5; ++slot) {
            int tw = t.twin[5 * tile + slot];
            if (tw < 0) {
                put16(s, 0xffff);
                s.push_back(0);
                continue;
            }
            int o = tw / 5;
            if (id[o] < 0) {
                id[o] = static_cast<int>(order.size());
                order.push_back(o);
            }
            put16(s, id[o]);
            s.push_back(static_cast<char>(tw % 5));
        }
        // prefix already larger than the best code: stop early
        if (!best.empty() && s.compare(0, s.size(), best, 0, std::min(s.size(), best.size())) > 0) return {};
    }
    if (static_cast<int>(order.size()) != n) {
        for (int tile = 0; tile < n; ++tile)
            if (id[tile] < 0) s.push_back(static_cast<char>(0xfe));
    }
    return s;
}

}  // namespace

std::string canonical_code(const CombTiling& t, bool identify_mirror) {
    std::string best;
    for (int start = 0; start < t.size(); ++start) {
        if (!identify_mirror && t.chirality[start] != Chirality::plain) {
            bool any_plain = std::find(t.chirality.begin(), t.chirality.end(), Chirality::plain) != t.chirality.end();
            if (any_plain) continue;
        }
        std::string c = code_from(t, start, identify_mirror, best);
        if (c.empty()) continue;
        if (best.empty() || c < best) best = c;
    }
    return best;
}

std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * bytes.size());
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

bool is_isomorphic(const CombTiling& a, const CombTiling& b, bool identify_mirror) {
    if (a.size() != b.size()) return false;
    return canonical_code(a, identify_mirror) == canonical_code(b, identify_mirror);
}

namespace {

bool extend(const CombTiling& a, const CombTiling& b, bool flip, std::vector<int>& map, std::vector<char>& used, int i) {
    int n = a.size();
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        bool ca = a.chirality[i] == Chirality::mirrored;
        bool cb = b.chirality[cand] == Chirality::mirrored;
        if ((ca ^ flip) != cb) continue;
        bool ok = true;
        for (int s = 0; s < 5 && ok; ++s) {
            int tw = a.twin[5 * i + s];
            int twb = b.twin[5 * cand + s];
            if ((tw < 0) != (twb < 0)) ok = false;
            else if (tw >= 0) {
                int j = tw / 5;
                if (j == i) ok = twb == 5 * cand + tw % 5;
                else if (j < i) ok = twb == 5 * map[j] + tw % 5;
            }
        }
        if (!ok) continue;
        map[i] = cand;
        used[cand] = 1;
        if (extend(a, b, flip, map, used, i + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

bool brute_force_isomorphic(const CombTiling& a, const CombTiling& b, bool identify_mirror) {
    if (a.size() != b.size()) return false;
    for (int flip = 0; flip < (identify_mirror ? 2 : 1); ++flip) {
        std::vector<int> map(a.size(), -1);
        std::vector<char> used(a.size(), 0);
        if (extend(a, b, flip, map, used, 0)) return true;
    }
    return false;
}

}  // namespace sphaera
