#pragma once

#include <array>
#include <string>
#include <vector>

#include "sphaera/comb_tiling.hpp"
#include "sphaera/pentagon.hpp"

namespace sphaera {

struct PlacedTiling {
    CombTiling tiling;
    Pentagon pentagon;       // the labeling actually used
    bool relabeled = false;  // pentagon is the mirror relabeling of the input
    std::vector<std::array<Vec3, 5>> points;  // per tile, slot order
};

struct LayoutOptions {
    int root = 0;
    double tol = 1e-7;
};

PlacedTiling layout(const CombTiling& t, const Pentagon& p, const LayoutOptions& opt = {});

struct VerifyReport {
    double vertex_closure = 0;  // largest spread of the corners meeting at one vertex (rad)
    double edge_defect = 0;     // largest endpoint mismatch across a glued edge (rad)
    double shape_defect = 0;    // largest deviation of a placed tile from the prototile edges/angles
    double area_defect = 0;     // sum of tile areas minus 4pi
    double angle_sum_defect = 0;
    std::vector<double> vertex_angle_defects;  // per vertex orbit: measured angle sum minus 2pi
    double tol = 0;
    bool pass = false;
};

VerifyReport verify_geometric(const PlacedTiling& pt, double tol);
std::string summary(const VerifyReport& r);

}  // namespace sphaera
