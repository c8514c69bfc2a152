#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sphaera/errors.hpp"

namespace sphaera {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using SpherePoint = Vec3;

struct Frame {
    Vec3 point;
    Vec3 heading;
};

struct Isometry {
    Mat3 m = Mat3::Identity();
    int det = 1;

    Vec3 apply(const Vec3& v) const { return m * v; }
    Isometry inverse() const { return {m.transpose(), det}; }
    Isometry compose(const Isometry& o) const { return {m * o.m, det * o.det}; }
};

constexpr double kPi = 3.14159265358979323846;

// acos/asin with roundoff clamping; hard error beyond 1e-12 outside [-1,1]
double safe_acos(double x);
double safe_asin(double x);

double arc(const Vec3& p, const Vec3& q);
Vec3 normalized(const Vec3& v);

double side_from_sas(double b, double c, double A);
double angle_from_sss(double a, double b, double c);

Frame make_frame(const Vec3& point, const Vec3& heading);
Frame advance(const Frame& f, double dist);
Frame turn(const Frame& f, double angle);

Isometry isometry_from_edge(const Vec3& src_p, const Vec3& src_q, const Vec3& dst_p,
                            const Vec3& dst_q, bool reflect, double tol = 1e-9);

// counterclockwise angle (seen from outside) at p from direction p->u to direction p->w, in [0, 2pi)
double ccw_angle(const Vec3& p, const Vec3& u, const Vec3& w);

// interior angles of a simple polygon listed counterclockwise
std::vector<double> interior_angles(const std::vector<Vec3>& pts);
double polygon_area(const std::vector<Vec3>& pts);

bool is_unit(const Vec3& v, double tol = 1e-12);
bool is_orthogonal(const Isometry& iso, double tol = 1e-12);

}  // namespace sphaera
