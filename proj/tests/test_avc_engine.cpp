#include <doctest.h>

#include <random>

#include "sphaera/avc_engine.hpp"
#include "sphaera/errors.hpp"

using namespace sphaera;

namespace {

std::vector<std::string> names(const std::vector<VertexType>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(vertex_name(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::string> enumerate(int f, Rational a, Rational b, Rational c) {
    return names(enumerate_vertices(make_system(f, a, b, c)));
}

std::vector<VertexType> brute_force(const AngleSystem& sys, int md) {
    std::vector<VertexType> out;
    VertexType v{};
    for (v[0] = 0; v[0] <= md; ++v[0])
        for (v[1] = 0; v[0] + v[1] <= md; ++v[1])
            for (v[2] = 0; v[0] + v[1] + v[2] <= md; ++v[2])
                for (v[3] = 0; v[0] + v[1] + v[2] + v[3] <= md; ++v[3])
                    for (v[4] = 0; degree(v) <= md; ++v[4]) {
                        if (degree(v) < 3 || (v[3] + v[4]) % 2) continue;
                        AffineAngle s = vertex_sum(sys, v);
                        if (s.r == Rational(2) && s.s == Rational(0)) out.push_back(v);
                    }
    return out;
}

Rational cofactor_det(std::vector<std::vector<Rational>> m) {
    if (m.size() == 1) return m[0][0];
    Rational d(0);
    for (size_t j = 0; j < m.size(); ++j) {
        std::vector<std::vector<Rational>> minor;
        for (size_t i = 1; i < m.size(); ++i) {
            std::vector<Rational> row;
            for (size_t k = 0; k < m.size(); ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Rational c = m[0][j] * cofactor_det(minor);
        d += j % 2 ? -c : c;
    }
    return d;
}

}  // namespace

TEST_CASE("Tab-2.2 rows") {
    CHECK(enumerate(16, Rational(1, 2), Rational(1, 2), Rational(3, 4)) ==
          sorted({"αδε", "βδε", "αγ²", "βγ²", "α⁴", "α³β", "α²β²", "αβ³", "β⁴"}));
    CHECK(enumerate(20, Rational(2, 5), Rational(2, 5), Rational(4, 5)) ==
          sorted({"αδε", "βδε", "αγ²", "βγ²", "α³γ", "α²βγ", "αβ²γ", "β³γ", "α⁵", "α⁴β", "α³β²", "α²β³", "αβ⁴",
                  "β⁵"}));
}

TEST_CASE("Table 5 rows (case ade, bde, c^5)") {
    CHECK(enumerate(20, Rational(4, 5), Rational(4, 5), Rational(2, 5)) ==
          sorted({"αδε", "βδε", "γ⁵", "α²γ", "αβγ", "β²γ", "αγ³", "βγ³", "γ²δε"}));
    CHECK(enumerate(60, Rational(2, 3), Rational(2, 3), Rational(2, 5)) ==
          sorted({"αδε", "βδε", "γ⁵", "α³", "α²β", "αβ²", "β³"}));
}

TEST_CASE("enumeration equals a brute-force box scan") {
    for (int f : {12, 16, 20, 24, 36, 60}) {
        auto sys = make_system(f, Rational(1, 2), Rational(2, 3), Rational(1) - Rational(4, f));
        int md = default_max_degree(sys);
        CAPTURE(f);
        CHECK(names(enumerate_vertices(sys, md)) == names(brute_force(sys, md)));
    }
    auto sym = symmetric_system(20);
    int md = default_max_degree(sym);
    CHECK(names(enumerate_vertices(sym, md)) == names(brute_force(sym, md)));
}

TEST_CASE("family systems contain their named vertices") {
    for (int m = 4; m <= 12; ++m) {
        auto v = names(enumerate_vertices(table3_system(4 * m)));
        auto has = [&](const std::string& n) { return std::find(v.begin(), v.end(), n) != v.end(); };
        CAPTURE(m);
        CHECK(has("αδε"));
        CHECK(has("β²γ"));
        CHECK(has(vertex_name({0, 0, m, 0, 0})));
    }
    auto s = names(enumerate_vertices(symmetric_system(20)));
    for (const char* n : {"αβγ", "βδε", "γδε", "α⁵"}) CHECK(std::find(s.begin(), s.end(), n) != s.end());
}

TEST_CASE("Lemma 5 parity and Lemma 12 determinant over many systems") {
    long long checks = 0;
    const VertexType u{1, 1, 1, 1, 1};
    for (int f = 12; f <= 120; f += 4)
        for (int na = 1; na <= 7; ++na)
            for (int nb = 1; nb <= 7; ++nb) {
                auto sys = make_system(f, Rational(na, 8), Rational(nb, 8), Rational(1) - Rational(4, f));
                auto vs = enumerate_vertices(sys);
                std::vector<VertexType> basis;
                for (const auto& v : vs) {
                    CHECK((v[3] + v[4]) % 2 == 0);
                    ++checks;
                    std::vector<VertexType> trial = basis;
                    trial.push_back(v);
                    if (trial.size() <= 3 && linear_relations(trial).size() + trial.size() + 1 == 5)
                        basis = trial;
                }
                if (basis.size() < 3) continue;
                for (const auto& n : vs) {
                    CHECK(irrational_det(basis[0], basis[1], basis[2], n) == Rational(0));
                    ++checks;
                }
            }
    (void)u;
    CHECK(checks > 5000);
}

TEST_CASE("irrational_det") {
    VertexType k{1, 0, 0, 1, 1}, l{0, 1, 0, 2, 0}, m{0, 0, 1, 0, 2};
    CHECK(irrational_det(k, l, m, k) == Rational(0));
    CHECK(irrational_det(k, l, m, {1, 1, 1, 0, 0}) == Rational(0));
    CHECK(irrational_det(k, l, m, {0, 1, 0, 0, 0}) != Rational(0));
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> d(0, 4);
    for (int i = 0; i < 200; ++i) {
        VertexType r[4];
        for (auto& v : r)
            for (auto& x : v) x = d(rng);
        std::vector<std::vector<Rational>> mat = {{1, 1, 1, 1, 1}};
        for (auto& v : r) mat.push_back({v[0], v[1], v[2], v[3], v[4]});
        CHECK(irrational_det(r[0], r[1], r[2], r[3]) == cofactor_det(mat));
    }
}

TEST_CASE("balance_admissible") {
    CHECK(balance_admissible({parse_vertex("ade"), parse_vertex("bbc"), parse_vertex("c^5")}).ok);
    auto r = balance_admissible({parse_vertex("add"), parse_vertex("bcee"), parse_vertex("abc")});
    CHECK(r.ok);
    CHECK_FALSE(r.note.empty());
    CHECK_FALSE(balance_admissible({parse_vertex("ade"), parse_vertex("abc")}).ok);
    CHECK_FALSE(balance_admissible({parse_vertex("ade"), parse_vertex("bdd"), parse_vertex("cee")}).ok);
}

TEST_CASE("counting identities") {
    auto a = counting_identities({{3, 20}});
    CHECK(a.f == 12);
    CHECK(a.v3 == 20);
    auto b = counting_identities({{3, 24}, {4, 2}});
    CHECK(b.f == 16);
    CHECK(b.v3 == 24);
    auto c = counting_identities({{5, 2}});
    CHECK(c.f == 20);
    CHECK(c.v3 == 30);
}

TEST_CASE("vertex name parsing") {
    CHECK(parse_vertex("b^2c") == VertexType{0, 2, 1, 0, 0});
    CHECK(parse_vertex("bbc") == VertexType{0, 2, 1, 0, 0});
    CHECK(parse_vertex("β²γ") == VertexType{0, 2, 1, 0, 0});
    CHECK(vertex_name({0, 0, 5, 0, 0}) == "γ⁵");
    CHECK(parse_census("T(16ade,8b^2c,2c^4)").size() == 3);
}
