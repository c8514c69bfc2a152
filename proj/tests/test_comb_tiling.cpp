#include <doctest.h>

#include <random>

#include "sphaera/comb_tiling.hpp"
#include "sphaera/errors.hpp"

using namespace sphaera;

namespace {

void check_counting(const CombTiling& t) {
    auto hist = degree_histogram(t);
    auto r = counting_identities(hist);
    CHECK(r.f == t.size());
    CHECK(r.v3 == (hist.count(3) ? hist.at(3) : 0));
    CHECK(census_balanced(census(t), t.size()));
}

CombTiling shuffled(const CombTiling& t, unsigned seed) {
    std::vector<int> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return permute_tiles(t, perm);
}

}  // namespace

TEST_CASE("earth map censuses") {
    CHECK(census(build_earthmap(5)) == parse_census("20ade,10b^2c,2c^5"));
    for (int m = 4; m <= 12; ++m) {
        auto t = build_earthmap(m);
        CAPTURE(m);
        CHECK(t.size() == 4 * m);
        CHECK(census(t) == parse_census(std::to_string(4 * m) + "ade," + std::to_string(2 * m) + "b^2c,2c^" +
                                        std::to_string(m)));
        check_counting(t);
    }
    auto h = degree_histogram(build_earthmap(4));
    CHECK(h[4] == 2);
    CHECK(h[3] == 24);
}

TEST_CASE("standard flips") {
    CHECK(census(flip_standard(5)) == parse_census("20ade,8b^2c,4bc^3"));
    for (int m = 5; m <= 11; m += 2) {
        int k = m / 2;
        auto t = flip_standard(m);
        CHECK(census(t) == parse_census(std::to_string(8 * k + 4) + "ade," + std::to_string(4 * k) + "b^2c,4bc^" +
                                        std::to_string(k + 1)));
        check_counting(t);
        CHECK(is_isomorphic(flip_standard(m, 0), flip_standard(m, 1)));
        CHECK_FALSE(is_isomorphic(t, build_earthmap(m)));
    }
    CHECK_THROWS(flip_standard(6));
}

TEST_CASE("symmetric earth maps and their flips") {
    CHECK(census(build_symmetric_earthmap(5)) == parse_census("10abc,10bde,10cde,2a^5"));
    CHECK(census(flip_symmetric(5, 1)) == parse_census("8abc,10bde,10cde,2a^3b,2a^3c"));
    CHECK(census(flip_symmetric(5, 2)) == parse_census("10abc,9bde,9cde,a^3b,a^3c,2a^2de"));
    for (int m = 4; m <= 9; ++m) check_counting(build_symmetric_earthmap(m));
    CHECK_THROWS(flip_symmetric(6, 1));
}

TEST_CASE("f16 flip and subdivisions") {
    auto t = build_f16_flip();
    CHECK(census(t) == parse_census("8ade,8bde,8acc,2b^4"));
    check_counting(t);
    CHECK(census(build_subdivision(Solid::tetra)) == parse_census("12ade,4b^3,4c^3"));
    CHECK(census(build_subdivision(Solid::octa)) == parse_census("24ade,8c^3,6b^4"));
    auto ico = build_subdivision(Solid::icosa);
    CHECK(census(ico) == parse_census("60ade,20c^3,12b^5"));
    auto h = degree_histogram(ico);
    CHECK(h[3] == 80);
    CHECK(h[5] == 12);
    check_counting(ico);
}

TEST_CASE("invalid tilings are rejected") {
    CombTiling t;
    t.add_tile(Chirality::plain);
    CHECK_THROWS_AS(validate(t), InvariantError);
    t.glue(0, 0, 0, 1);
    CHECK_THROWS_AS(validate(t), InvariantError);
}

TEST_CASE("polygon round trip") {
    for (const auto& t : {build_earthmap(5), flip_standard(7), build_f16_flip(), build_subdivision(Solid::octa)}) {
        auto back = from_polygons(to_polygons(t));
        CHECK(is_isomorphic(t, back));
        CHECK(census(back) == census(t));
    }
}

TEST_CASE("canonical code is invariant under relabeling") {
    for (const auto& t : {build_earthmap(6), flip_standard(5), build_symmetric_earthmap(5), build_f16_flip()}) {
        std::string c = canonical_code(t);
        for (unsigned s = 1; s <= 5; ++s) CHECK(canonical_code(shuffled(t, s)) == c);
        CHECK(canonical_code(mirror_image(t)) == c);
        CHECK(canonical_code(mirror_image(mirror_image(t)), false) == canonical_code(t, false));
    }
    CHECK(canonical_code(mirror_image(flip_standard(5)), false) != canonical_code(flip_standard(5), false));
    CHECK(canonical_code(build_earthmap(5)) != canonical_code(flip_standard(5)));
}

TEST_CASE("canonical code agrees with brute-force isomorphism on small tilings") {
    std::vector<CombTiling> pool = {build_earthmap(4), build_f16_flip(), build_subdivision(Solid::tetra),
                                    mirror_image(build_f16_flip()), build_symmetric_earthmap(4)};
    auto extra = search_tilings(make_system(16, Rational(1, 2), Rational(1, 2), Rational(3, 4)), 16,
                                {parse_vertex("ade"), parse_vertex("bde"), parse_vertex("acc"), parse_vertex("b^4"),
                                 parse_vertex("bcc")},
                                {false});
    for (auto& t : extra) pool.push_back(t);
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = 0; j < pool.size(); ++j)
            for (bool mirror : {true, false}) {
                CombTiling b = shuffled(pool[j], static_cast<unsigned>(i * 31 + j));
                CAPTURE(i);
                CAPTURE(j);
                CHECK(is_isomorphic(pool[i], b, mirror) == brute_force_isomorphic(pool[i], b, mirror));
            }
}

TEST_CASE("reflect and reglue is an involution on the standard flip") {
    // zones Z_0, Z_1 plus X_2 and B_4 (zone tiles are 4i + {A, X, Y, B})
    const std::set<int> half = {0, 1, 2, 3, 4, 5, 6, 7, 9, 19};
    auto em = build_earthmap(5), fl = flip_standard(5);
    bool forward = false, back = false;
    for (const auto& r : reflect_reglue_all(em, half)) forward = forward || is_isomorphic(r, fl);
    for (const auto& r : reflect_reglue_all(fl, half)) back = back || is_isomorphic(r, em);
    CHECK(forward);
    CHECK(back);
}

TEST_CASE("Table 3 formulas") {
    CHECK(count_table3(2, 8) == 1);
    CHECK(count_table3(2, 7) == 1);
    CHECK(count_table3(3, 8) == 6);
    CHECK(count_table3(4, 5) == 6);
    for (int k = 2; k <= 6; ++k)
        for (int row = 1; row <= 8; ++row) CHECK(census_balanced(table3_census(k, row), 8 * k + 4));
}
