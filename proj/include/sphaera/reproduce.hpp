#pragma once

#include <string>
#include <vector>

#include "sphaera/comb_tiling.hpp"
#include "sphaera/pentagon.hpp"

namespace sphaera {

struct Claim {
    std::string name;
    bool pass = false;
    std::string detail;
};

// census equality plus layout/verify at every sampled pentagon
Claim check_tiling(const std::string& name, const CombTiling& t, const Census& expected,
                   const std::vector<FamilyParam>& params, double tol);

// n parameters spread over the open family interval (t for subdivisions, alpha for earth maps)
std::vector<FamilyParam> sample_params(Family fam, int f, int n);

std::vector<Claim> reproduce_theorem1(double tol = 1e-6, int max_m = 10);
std::vector<Claim> reproduce_theorem2(double tol = 1e-6, int max_m = 10);
// per-row tiling counts at f = 8k+4 by search, compared with count_table3, plus UFO counts
std::vector<Claim> reproduce_table3(int k = 2);

std::string format_claims(const std::vector<Claim>& cs);

}  // namespace sphaera
