#include <doctest.h>

#include "sphaera/comb_tiling.hpp"
#include "sphaera/errors.hpp"

using namespace sphaera;

namespace {

std::vector<VertexType> vs(std::initializer_list<const char*> names) {
    std::vector<VertexType> out;
    for (auto n : names) out.push_back(parse_vertex(n));
    return out;
}

int multiset_of(const std::vector<CombTiling>& ts, std::vector<int>* ufos) {
    for (const auto& t : ts) ufos->push_back(static_cast<int>(detect_ufos(t).size()));
    std::sort(ufos->begin(), ufos->end());
    return static_cast<int>(ts.size());
}

}  // namespace

TEST_CASE("f=16 search with the special pentagon's vertices") {
    auto sys = make_system(16, Rational(1, 2), Rational(1, 2), Rational(3, 4));
    auto found = search_tilings(sys, 16, vs({"ade", "bde", "acc", "b^4", "bcc"}));
    REQUIRE(found.size() == 2);
    std::vector<Census> cs = {census(found[0]), census(found[1])};
    CHECK(std::count(cs.begin(), cs.end(), parse_census("16ade,8bcc,2b^4")) == 1);
    CHECK(std::count(cs.begin(), cs.end(), parse_census("8ade,8bde,8acc,2b^4")) == 1);
    bool has_flip = false;
    for (const auto& t : found) has_flip = has_flip || is_isomorphic(t, build_f16_flip());
    CHECK(has_flip);
}

TEST_CASE("search finds the generated tilings") {
    auto found = search_tilings(table3_system(20), 20, vs({"ade", "bbc", "c^5", "bccc"}));
    bool em = false, fl = false;
    for (const auto& t : found) {
        em = em || is_isomorphic(t, build_earthmap(5));
        fl = fl || is_isomorphic(t, flip_standard(5));
    }
    CHECK(em);
    CHECK(fl);
}

TEST_CASE("Table 3 at k=2") {
    SearchStats st;
    auto rows = search_table3(2, {}, &st);
    const long long want[8] = {3, 1, 1, 1, 2, 2, 1, 1};
    for (int r = 0; r < 8; ++r) {
        CAPTURE(r + 1);
        CHECK(static_cast<long long>(rows[r].size()) == want[r]);
        CHECK(count_table3(2, r + 1) == want[r]);
        for (const auto& t : rows[r]) CHECK(census(t) == table3_census(2, r + 1));
    }
    std::vector<int> u;
    multiset_of(rows[0], &u);
    CHECK(u == std::vector<int>{1, 1, 2});
    u.clear();
    multiset_of(rows[5], &u);
    CHECK(u == std::vector<int>{4, 4});
}

TEST_CASE("mirror convention doubles the Table 3 counts") {
    SearchOptions so;
    so.identify_mirror = false;
    auto rows = search_table3(2, so);
    const size_t want[8] = {6, 2, 2, 2, 4, 4, 2, 2};
    for (int r = 0; r < 8; ++r) CHECK(rows[r].size() == want[r]);
}

TEST_CASE("UFO flips are involutions inside the Table 3 family") {
    auto rows = search_table3(2);
    auto sys = table3_system(20);
    for (int r = 0; r < 8; ++r)
        for (const auto& t : rows[r])
            for (const auto& p : detect_ufos(t)) {
                CHECK(p.boundary.size() == 10);
                auto g = flip_ufo(t, p, sys);
                validate(g);
                bool in_family = false;
                for (int r2 = 1; r2 <= 8; ++r2) in_family = in_family || census(g) == table3_census(2, r2);
                CHECK(in_family);
                bool back = false;
                for (const auto& q : detect_ufos(g)) back = back || is_isomorphic(flip_ufo(g, q, sys), t);
                CHECK(back);
            }
}

TEST_CASE("search rejects bad input") {
    CHECK_THROWS_AS(search_tilings(table3_system(20), 16, vs({"ade"})), ParameterError);
    CHECK_THROWS_AS(search_tilings(table3_system(20), 20, vs({"aaa"})), ParameterError);
    SearchOptions tiny;
    tiny.node_limit = 10;
    CHECK_THROWS_AS(search_table3(2, tiny), ResourceError);
}
