#include "sphaera/spherical_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sphaera {

double safe_acos(double x) {
    if (x > 1.0 + 1e-12 || x < -1.0 - 1e-12 || std::isnan(x))
        throw DomainError("acos argument out of range: " + std::to_string(x));
    return std::acos(std::clamp(x, -1.0, 1.0));
}

double safe_asin(double x) {
    if (x > 1.0 + 1e-12 || x < -1.0 - 1e-12 || std::isnan(x))
        throw DomainError("asin argument out of range: " + std::to_string(x));
    return std::asin(std::clamp(x, -1.0, 1.0));
}

double arc(const Vec3& p, const Vec3& q) {
    return std::atan2(p.cross(q).norm(), p.dot(q));
}

Vec3 normalized(const Vec3& v) {
    double n = v.norm();
    if (n < 1e-300) throw DegenerateError("cannot normalize zero vector");
    return v / n;
}

double side_from_sas(double b, double c, double A) {
    if (!(b > 0 && b < kPi && c > 0 && c < kPi))
        throw DomainError("side_from_sas: sides must lie in (0, pi)");
    if (A < -1e-12 || A > kPi + 1e-12)
        throw DomainError("side_from_sas: angle must lie in [0, pi]");
    double v = std::cos(b) * std::cos(c) + std::sin(b) * std::sin(c) * std::cos(A);
    return std::acos(std::clamp(v, -1.0, 1.0));
}

double angle_from_sss(double a, double b, double c) {
    double den = std::sin(b) * std::sin(c);
    if (std::abs(den) < 1e-14) throw DegenerateError("angle_from_sss: degenerate adjacent side");
    double v = (std::cos(a) - std::cos(b) * std::cos(c)) / den;
    if (v > 1.0 + 1e-9 || v < -1.0 - 1e-9)
        throw DomainError("angle_from_sss: triangle inequality violated");
    double s = (a + b + c) / 2;
    double num = std::max(0.0, std::sin(s - b) * std::sin(s - c));
    double dn = std::max(0.0, std::sin(s) * std::sin(s - a));
    if (num == 0 && dn == 0) return std::acos(std::clamp(v, -1.0, 1.0));
    return 2 * std::atan2(std::sqrt(num), std::sqrt(dn));
}

Frame make_frame(const Vec3& point, const Vec3& heading) {
    Vec3 p = normalized(point);
    Vec3 h = heading - p.dot(heading) * p;
    return {p, normalized(h)};
}

Frame advance(const Frame& f, double dist) {
    double c = std::cos(dist), s = std::sin(dist);
    return {c * f.point + s * f.heading, -s * f.point + c * f.heading};
}

Frame turn(const Frame& f, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {f.point, c * f.heading + s * f.point.cross(f.heading)};
}

namespace {

Mat3 edge_frame(const Vec3& p, const Vec3& q) {
    Vec3 e1 = p;
    Vec3 t = q - p.dot(q) * p;
    if (t.norm() < 1e-12) throw DegenerateError("isometry_from_edge: endpoints coincide or are antipodal");
    Vec3 e2 = t.normalized();
    Mat3 m;
    m.col(0) = e1;
    m.col(1) = e2;
    m.col(2) = e1.cross(e2);
    return m;
}

}  // namespace

Isometry isometry_from_edge(const Vec3& src_p, const Vec3& src_q, const Vec3& dst_p,
                            const Vec3& dst_q, bool reflect, double tol) {
    double d1 = arc(src_p, src_q), d2 = arc(dst_p, dst_q);
    if (std::abs(d1 - d2) > tol)
        throw MismatchError("isometry_from_edge: arc lengths differ by " + std::to_string(std::abs(d1 - d2)));
    Mat3 s = edge_frame(src_p, src_q);
    Mat3 d = edge_frame(dst_p, dst_q);
    if (reflect) d.col(2) = -d.col(2);
    return {d * s.transpose(), reflect ? -1 : 1};
}

double ccw_angle(const Vec3& p, const Vec3& u, const Vec3& w) {
    Vec3 tu = u - p.dot(u) * p;
    Vec3 tw = w - p.dot(w) * p;
    double ang = std::atan2(p.dot(tu.cross(tw)), tu.dot(tw));
    if (ang < 0) ang += 2 * kPi;
    return ang;
}

std::vector<double> interior_angles(const std::vector<Vec3>& pts) {
    const size_t n = pts.size();
    if (n < 3) throw DegenerateError("polygon needs at least 3 points");
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) {
        const Vec3& prev = pts[(i + n - 1) % n];
        const Vec3& next = pts[(i + 1) % n];
        if ((pts[i] + next).norm() < 1e-12) throw DegenerateError("antipodal consecutive points");
        out[i] = ccw_angle(pts[i], next, prev);
    }
    return out;
}

double polygon_area(const std::vector<Vec3>& pts) {
    auto ang = interior_angles(pts);
    double s = 0;
    for (double a : ang) s += a;
    return s - (static_cast<double>(pts.size()) - 2) * kPi;
}

bool is_unit(const Vec3& v, double tol) { return std::abs(v.norm() - 1.0) < tol; }

bool is_orthogonal(const Isometry& iso, double tol) {
    Mat3 e = iso.m.transpose() * iso.m - Mat3::Identity();
    return e.cwiseAbs().maxCoeff() < tol && std::abs(std::abs(iso.m.determinant()) - 1.0) < tol &&
           std::abs(iso.m.determinant() - iso.det) < tol;
}

}  // namespace sphaera
