#pragma once

#include <array>
#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sphaera {

using Rational = boost::rational<long long>;

// r + s*tau, in units of pi
struct AffineAngle {
    Rational r{0};
    Rational s{0};
    bool operator==(const AffineAngle&) const = default;
};

// multiplicities of alpha, beta, gamma, delta, epsilon
using VertexType = std::array<int, 5>;

int degree(const VertexType& v);

// ordering by (degree, n1..n5)
struct VertexTypeLess {
    bool operator()(const VertexType& x, const VertexType& y) const;
};

using Census = std::map<VertexType, int, VertexTypeLess>;

struct AngleSystem {
    std::array<AffineAngle, 5> angle;
    int f = 0;
    // admissible tau interval (units of pi), informational
    std::optional<std::pair<double, double>> tau_range;
};

// alpha, beta, gamma rational; delta = tau, epsilon = (3 + 4/f) - alpha - beta - gamma - tau
AngleSystem make_system(int f, Rational alpha, Rational beta, Rational gamma);
// all five angles rational
AngleSystem make_rational_system(int f, const std::array<Rational, 5>& angles);

// Table 2 earth-map system with alpha = beta = 1 - 4/f (Table 3)
AngleSystem table3_system(int f);
// Theorem 2 f = 16 special pentagon, Theorem 2 labels (alpha = pi/2, beta = 3pi/4, gamma = pi/2)
AngleSystem f16_system();
// symmetric earth-map pentagon (all angles rational)
AngleSystem symmetric_system(int f);

bool angle_sum_ok(const AngleSystem& sys);
AffineAngle vertex_sum(const AngleSystem& sys, const VertexType& v);
bool is_vertex(const AngleSystem& sys, const VertexType& v);

int default_max_degree(const AngleSystem& sys);
std::vector<VertexType> enumerate_vertices(const AngleSystem& sys, int max_degree = 0);

Rational irrational_det(const VertexType& k, const VertexType& l, const VertexType& m, const VertexType& n);
Rational det5(const std::array<std::array<Rational, 5>, 5>& rows);
// integer relations c with c.u = c.k = ... = 0 for the given known vertices (plus the all-ones row)
std::vector<std::array<Rational, 5>> linear_relations(const std::vector<VertexType>& known);

struct BalanceReport {
    bool ok = true;
    std::string note;
};
BalanceReport balance_admissible(const std::vector<VertexType>& avc);

struct CountingResult {
    int f;
    int v3;
};
CountingResult counting_identities(const std::map<int, int>& degree_histogram);

// "αδε", "β²γ", "γ⁵"
std::string vertex_name(const VertexType& v);
std::string census_string(const Census& c);
// accepts "ade", "b^2c", "b2c", "bbc", "αδε", "β²γ"
VertexType parse_vertex(const std::string& s);
Census parse_census(const std::string& s);

}  // namespace sphaera
