#include <map>

#include "sphaera/comb_tiling.hpp"
#include "sphaera/errors.hpp"

namespace sphaera {

namespace {

void check_row(int k, int row) {
    if (k < 2) throw ParameterError("Table 3 needs k >= 2");
    if (row < 1 || row > 8) throw ParameterError("Table 3 rows are 1..8");
}

}  // namespace

long long count_table3(int k, int row) {
    check_row(k, row);
    switch (row) {
        case 1: return 3;
        case 5: return 2LL * k - 2;
        case 6: return 2;
        case 7: return 3LL * k - 5;
        case 8: {
            long long h = k / 2;
            return 2LL * (k - 1) * (k - 2) + h * (k - h);
        }
        default: return 1;
    }
}

Census table3_census(int k, int row) {
    check_row(k, row);
    const VertexType abc{1, 1, 1, 0, 0}, ade{1, 0, 0, 1, 1}, bbc{0, 2, 1, 0, 0}, bde{0, 1, 0, 1, 1};
    const VertexType acc{1, 0, k + 1, 0, 0}, cde{0, 0, k, 1, 1}, aac{2, 0, 1, 0, 0};
    // counts of a2c, abc, ade, b2c, bde, ac^{k+1}, c^k de
    static const int rows[8][7][2] = {
        {{0, 0}, {0, 4}, {8, -2}, {4, -2}, {0, 4}, {0, 2}, {0, 2}},
        {{0, 2}, {0, 6}, {8, -6}, {4, -4}, {0, 6}, {0, 0}, {0, 4}},
        {{0, 2}, {0, 4}, {8, -6}, {4, -4}, {0, 8}, {0, 2}, {0, 2}},
        {{0, 2}, {0, 5}, {8, -6}, {4, -4}, {0, 7}, {0, 1}, {0, 3}},
        {{0, 2}, {0, 6}, {8, -7}, {4, -5}, {0, 8}, {0, 1}, {0, 3}},
        {{0, 4}, {0, 6}, {8, -10}, {4, -6}, {0, 10}, {0, 0}, {0, 4}},
        {{0, 4}, {0, 7}, {8, -11}, {4, -7}, {0, 11}, {0, 0}, {0, 4}},
        {{0, 4}, {0, 8}, {8, -12}, {4, -8}, {0, 12}, {0, 0}, {0, 4}},
    };
    const VertexType types[7] = {aac, abc, ade, bbc, bde, acc, cde};
    Census c;
    for (int i = 0; i < 7; ++i) {
        int n = rows[row - 1][i][0] * k + rows[row - 1][i][1];
        if (n > 0) c[types[i]] += n;
    }
    return c;
}

std::vector<VertexType> table3_vertices(int k, int row) {
    std::vector<VertexType> out;
    for (const auto& [v, n] : table3_census(k, row)) out.push_back(v);
    return out;
}

std::array<std::vector<CombTiling>, 8> search_table3(int k, const SearchOptions& opt, SearchStats* stats) {
    int f = 8 * k + 4;
    AngleSystem sys = table3_system(f);
    std::map<std::vector<VertexType>, std::vector<CombTiling>> by_avc;
    std::array<std::vector<CombTiling>, 8> out;
    for (int row = 1; row <= 8; ++row) {
        auto avc = table3_vertices(k, row);
        auto it = by_avc.find(avc);
        if (it == by_avc.end()) {
            SearchStats st;
            it = by_avc.emplace(avc, search_tilings(sys, f, avc, opt, &st)).first;
            if (stats) {
                stats->nodes += st.nodes;
                stats->leaves += st.leaves;
            }
        }
        Census want = table3_census(k, row);
        for (const auto& t : it->second)
            if (census(t) == want) out[row - 1].push_back(t);
    }
    return out;
}

}  // namespace sphaera
