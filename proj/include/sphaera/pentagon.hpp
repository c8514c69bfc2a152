#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sphaera/spherical_core.hpp"

namespace sphaera {

// angle indices; corner order around a plain tile is [alpha, beta, delta, epsilon, gamma]
enum Angle : int { kAlpha = 0, kBeta = 1, kGamma = 2, kDelta = 3, kEpsilon = 4 };

enum class Chirality { plain, mirrored };

enum class Family { tetra_sub, octa_sub, icosa_sub, earthmap, symmetric_earthmap, f16_special, custom };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct Pentagon {
    std::array<double, 5> angle{};  // alpha, beta, gamma, delta, epsilon (radians)
    double a = 0, b = 0;
    Chirality chirality = Chirality::plain;
    int f = 0;
    Family family = Family::custom;
    std::optional<double> parameter;

    double alpha() const { return angle[kAlpha]; }
    double beta() const { return angle[kBeta]; }
    double gamma() const { return angle[kGamma]; }
    double delta() const { return angle[kDelta]; }
    double epsilon() const { return angle[kEpsilon]; }
    double angle_sum() const;
};

struct FamilyParam {
    Family family = Family::custom;
    int f = 0;
    double parameter = 0;  // t for subdivisions, alpha (radians) for earthmap
};

std::array<double, 3> coolsaet_residuals(const Pentagon& p);
double max_residual(const Pentagon& p);

double solve_cos_b(double alpha, double beta, double gamma, double a);
bool cos_b_in_range(double cb);
// closing chord of the four a-edges measured by a turtle walk
double cos_b_turtle(double alpha, double beta, double gamma, double a);

Pentagon make_pentagon(const FamilyParam& fp);

// mirror relabeling: beta<->gamma, delta<->epsilon (same geometric tile, opposite orientation)
Pentagon mirror_relabel(const Pentagon& p);

// five points in corner order [alpha, beta, delta, epsilon, gamma]
std::vector<Vec3> realize(const Pentagon& p, double tol = 1e-8);
double closure_defect(const Pentagon& p);
bool is_simple(const std::vector<Vec3>& pts);

struct Classification {
    bool convex = false;
    bool symmetric = false;
    std::optional<Angle> degenerate;
};
Classification classify(const Pentagon& p);
std::string describe(const Classification& c);

// Table 1 parameter intervals
struct Table1Range {
    double t_lo, t_hi, t0;
};
Table1Range table1_range(Family fam);
// numerically located endpoints (a=b root, alpha=3pi/2 root, epsilon=0 root) for cross-checks
Table1Range table1_range_numeric(Family fam);

// Table 2 lower alpha bounds
struct Table2Bounds {
    double reading1 = 0;             // outer sqrt over the whole numerator
    std::optional<double> reading2;  // inner sqrt added outside the product
    double numeric = 0;              // located by bisection on pentagon validity + simplicity
    double upper = 0;                // 3pi/2
    double convex_from = 0;          // arccos(q - 2q^2)
};
double table2_lower_bound(int f);
Table2Bounds table2_bounds(int f, bool with_numeric = true);

// symmetric earth-map pentagon data
double symmetric_cos_a(int f);
double symmetric_cos_b(int f);
double symmetric_printed_cos_a(int f);

// f16 special constants
struct F16Constants {
    double cos_delta, cos_a, cos_b;
};
F16Constants f16_constants();

}  // namespace sphaera
