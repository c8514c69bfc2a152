#include "sphaera/pentagon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>

namespace sphaera {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kSqrt3 = 1.73205080756887729353;
constexpr double kSqrt5 = 2.23606797749978969641;

double bisect(const std::function<double(double)>& g, double lo, double hi, int iters = 200) {
    double glo = g(lo);
    for (int i = 0; i < iters; ++i) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// first sign change of g on a uniform grid, refined by bisection
std::optional<double> find_root(const std::function<double(double)>& g, double lo, double hi, int steps = 400) {
    double prev_x = lo, prev = g(lo);
    for (int i = 1; i <= steps; ++i) {
        double x = lo + (hi - lo) * i / steps;
        double v = g(x);
        if (std::isfinite(prev) && std::isfinite(v) && (prev < 0) != (v < 0)) return bisect(g, prev_x, x);
        prev_x = x;
        prev = v;
    }
    return std::nullopt;
}

struct Sub {
    double alpha, beta, gamma, delta, epsilon, a, b;
    double cos_eps_arg;
};

Sub tetra_raw(double t) {
    Sub s{};
    s.beta = s.gamma = 2 * kPi / 3;
    s.a = std::acos(std::sqrt(6.0) * std::cos(t) / 3);
    s.b = kPi / 2 - 2 * t;
    double st = std::sin(t);
    s.alpha = 2 * std::acos(kSqrt2 * st / std::sqrt(1 + 2 * st * st));
    s.cos_eps_arg = (1 - kSqrt2 * std::cos(t) * std::cos(s.b / 2)) / (std::sqrt(1 + 2 * st * st) * std::sin(s.b / 2));
    return s;
}

Sub octa_raw(double t) {
    Sub s{};
    s.beta = kPi / 2;
    s.gamma = 2 * kPi / 3;
    double ct = std::cos(t), st = std::sin(t);
    s.a = std::acos(std::sqrt(18 + 6 * kSqrt3) * ct / 6);
    double k = std::sqrt(3 + kSqrt3);
    double cb2 = (k * (std::sqrt((4 - 2 * kSqrt3) * ct * ct) + 4 * ct) + 6 * st) / 12;
    s.b = 2 * std::acos(cb2);
    double den = std::sqrt(6 - (3 + kSqrt3) * ct * ct);
    s.alpha = 2 * std::acos(k * st / den);
    s.cos_eps_arg = (2 - k * ct * cb2) / (den * std::sin(s.b / 2));
    return s;
}

Sub icosa_raw(double t) {
    Sub s{};
    s.beta = 2 * kPi / 5;
    s.gamma = 2 * kPi / 3;
    double ct = std::cos(t), st = std::sin(t);
    s.a = std::acos(std::sqrt(450 + 30 * std::sqrt(75 + 30 * kSqrt5)) * ct / 30);
    double r4 = std::pow(5 - kSqrt5, 0.25);
    double w = std::sqrt(10 - 2 * kSqrt5);
    double cb2 = (std::pow(2.0, 1.25) * (kSqrt5 + 1) * std::sqrt(3 * w + std::sqrt(15.0) + kSqrt3) * ct +
                  (kSqrt5 - 1) * (std::pow(2.0, 0.25) * std::sqrt(3 * w - std::sqrt(15.0) - kSqrt3) * ct + 6 * r4 * st)) /
                 (24 * r4);
    s.b = 2 * std::acos(cb2);
    double sq = std::sqrt(5 - kSqrt5);
    double k = std::sqrt(6 * sq + std::sqrt(30.0) + std::sqrt(6.0));
    double den = std::sqrt(6 * sq * (1 + st * st) - (std::sqrt(30.0) + std::sqrt(6.0)) * ct * ct);
    s.alpha = 2 * std::acos(k * st / den);
    s.cos_eps_arg = ((kSqrt5 + 1) * r4 - k * ct * cb2) / (den * std::sin(s.b / 2));
    return s;
}

Sub sub_raw(Family fam, double t) {
    switch (fam) {
        case Family::tetra_sub: return tetra_raw(t);
        case Family::octa_sub: return octa_raw(t);
        case Family::icosa_sub: return icosa_raw(t);
        default: throw ParameterError("not a subdivision family");
    }
}

int sub_f(Family fam) {
    switch (fam) {
        case Family::tetra_sub: return 12;
        case Family::octa_sub: return 24;
        default: return 60;
    }
}

Table1Range closed_range(Family fam) {
    if (fam == Family::tetra_sub) return {-kPi / 4, kPi / 4, std::atan(kSqrt5 / 5)};
    if (fam == Family::octa_sub) {
        double s = std::sqrt(18 + 6 * kSqrt3);
        double t1 = std::atan(-std::pow(3.0, 0.75) * kSqrt2 / s);
        double t2 = std::atan(std::sqrt(6 - 2 * kSqrt3) / 2);
        // cos t0: largest root of the printed quartic
        auto quartic = [&](double x) {
            return (150 + 75 * kSqrt3) * std::pow(x, 4) - s * (6 + 10 * kSqrt3) * std::pow(x, 3) -
                   (90 + 78 * kSqrt3) * x * x + 12 * s * x + 18;
        };
        double best = -1;
        const int n = 4000;
        for (int i = 0; i < n; ++i) {
            double x0 = -1.5 + 3.0 * i / n, x1 = -1.5 + 3.0 * (i + 1) / n;
            if ((quartic(x0) < 0) != (quartic(x1) < 0)) best = std::max(best, bisect(quartic, x0, x1));
        }
        return {t1, t2, std::acos(best)};
    }
    if (fam == Family::icosa_sub) {
        double r = std::sqrt(75 + 30 * kSqrt5);
        double t1 = std::atan((kSqrt5 - 3) / 4 * std::sqrt(std::sqrt(15 + 6 * kSqrt5) + r - 3 * kSqrt5 - 7));
        double t2 = std::atan(std::sqrt(600 - 10 * std::sqrt(6.0) * std::pow(5 + kSqrt5, 1.5)) / 20);
        double t0 = std::atan(
            kSqrt3 / 1513800 *
            ((r * (42050 - 16820 * kSqrt5) + 25230 * kSqrt5) * std::sqrt(90 + 6 * r) +
             3 * ((11 * kSqrt5 - 27) * r - 5 * kSqrt5 - 35) *
                 std::sqrt(r * (7259325 + 3566635 * kSqrt5) - 36362925 * kSqrt5 - 70401375)));
        return {t1, t2, t0};
    }
    throw ParameterError("not a subdivision family");
}

void check_table1_transcription(Family fam) {
    static std::once_flag flags[3];
    static bool ok[3] = {false, false, false};
    int idx = fam == Family::tetra_sub ? 0 : fam == Family::octa_sub ? 1 : 2;
    std::call_once(flags[idx], [&] {
        Table1Range c = closed_range(fam);
        Table1Range n = table1_range_numeric(fam);
        ok[idx] = std::abs(c.t0 - n.t0) < 1e-8 && std::abs(c.t_lo - n.t_lo) < 1e-8 && std::abs(c.t_hi - n.t_hi) < 1e-8;
    });
    if (!ok[idx]) throw ClosureError("Table 1 endpoint constants disagree with the numerically located roots");
}

Pentagon make_subdivision(Family fam, double t) {
    check_table1_transcription(fam);
    Table1Range r = closed_range(fam);
    if (!(t > r.t_lo && t < r.t_hi))
        throw ParameterError("parameter t outside (" + std::to_string(r.t_lo) + ", " + std::to_string(r.t_hi) + ")");
    if (std::abs(t - r.t0) < 1e-12) throw ParameterError("degenerate family: the pentagon is equilateral at t0");
    Sub s = sub_raw(fam, t);
    Pentagon p;
    p.family = fam;
    p.f = sub_f(fam);
    p.parameter = t;
    p.a = s.a;
    p.b = s.b;
    double eps = safe_acos(s.cos_eps_arg);
    p.angle = {s.alpha, s.beta, s.gamma, 2 * kPi - s.alpha - eps, eps};
    return p;
}

struct Table2Raw {
    bool ok = false;
    Pentagon p;
};

Table2Raw table2_branch(int f, double alpha, int sign) {
    Table2Raw out;
    double p = std::cos(alpha), q = std::cos(4 * kPi / f);
    double rad = p * p * (p + 1) * (p - 1) * (p - 1) * (2 * q - 1) * (2 * q - 1) * std::pow(q - 1, 3) * (p * q + p - q);
    if (rad < 0) {
        if (rad < -1e-12) return out;
        rad = 0;
    }
    double num = sign * 4 * std::sqrt(rad) + (8 * p * p * p - 8 * p * p - 4 * p + 4) * q * q * q -
                 (12 * p * p * p - 16 * p * p - 4 * p + 4) * q * q - (14 * p * p - p - 1) * q + 4 * p * p * p +
                 6 * p * p - p;
    double den = -8 * p * p * q + 8 * p * p + 4 * q * q - 4 * q + 1;
    double v = num / den;
    if (v < 0 && v > -1e-12) v = 0;
    if (!(v >= 0 && v <= 1)) return out;
    double delta = std::acos(std::sqrt(v));
    double eps = 2 * kPi - alpha - delta;
    double ca = (std::sin(alpha / 2) * std::sin(2 * kPi / f) * std::cos(6 * kPi / f) * std::cos(delta) -
                 std::cos(alpha) * std::sin(4 * kPi / f) * std::sin(alpha / 2 + delta)) /
                (std::sin(alpha / 2) * std::cos(2 * kPi / f) * std::cos(6 * kPi / f) * std::sin(delta));
    if (!(std::abs(ca) <= 1)) return out;
    out.p.family = Family::earthmap;
    out.p.f = f;
    out.p.parameter = alpha;
    out.p.angle = {alpha, kPi - 4 * kPi / f, 8 * kPi / f, delta, eps};
    out.p.a = std::acos(ca);
    double cb = solve_cos_b(alpha, out.p.beta(), out.p.gamma(), out.p.a);
    if (!cos_b_in_range(cb)) return out;
    out.p.b = std::acos(std::clamp(cb, -1.0, 1.0));
    out.ok = true;
    return out;
}

Pentagon make_earthmap(int f, double alpha) {
    if (f < 16 || f % 4 != 0) throw ParameterError("earthmap family needs f = 4m with m >= 4");
    double lo = table2_lower_bound(f);
    if (!(alpha > lo && alpha < 1.5 * kPi))
        throw ParameterError("alpha outside (" + std::to_string(lo / kPi) + "pi, 1.5pi)");
    const double e = 1e-12;
    std::vector<int> signs;
    if (std::abs(alpha - kPi / 2) < e || std::abs(alpha - kPi) < e)
        signs = {-1, 1};
    else if (alpha > kPi / 2 && alpha < kPi)
        signs = {-1};
    else
        signs = {1};
    std::optional<Pentagon> best;
    double best_res = 0;
    for (int s : signs) {
        auto r = table2_branch(f, alpha, s);
        if (!r.ok) continue;
        double res = max_residual(r.p);
        if (!best || res < best_res) {
            best = r.p;
            best_res = res;
        }
    }
    if (!best) throw ParameterError("branch-infeasible: cos delta radicand outside [0, 1]");
    return *best;
}

Pentagon make_symmetric(int f) {
    if (f < 16 || f % 4 != 0) throw ParameterError("symmetric earthmap family needs f = 4m with m >= 4");
    Pentagon p;
    p.family = Family::symmetric_earthmap;
    p.f = f;
    double x = 1.0 / f;
    p.angle = {8 * x * kPi, (1 - 4 * x) * kPi, (1 - 4 * x) * kPi, (0.5 + 2 * x) * kPi, (0.5 + 2 * x) * kPi};
    p.a = std::acos(symmetric_cos_a(f));
    double cb = solve_cos_b(p.alpha(), p.beta(), p.gamma(), p.a);
    if (!cos_b_in_range(cb)) throw ParameterError("symmetric pentagon: cos b out of range");
    p.b = std::acos(std::clamp(cb, -1.0, 1.0));
    return p;
}

Pentagon make_f16() {
    F16Constants c = f16_constants();
    Pentagon p;
    p.family = Family::f16_special;
    p.f = 16;
    double delta = std::acos(c.cos_delta);
    p.angle = {kPi / 2, 3 * kPi / 4, kPi / 2, delta, 1.5 * kPi - delta};
    p.a = std::acos(c.cos_a);
    p.b = std::acos(c.cos_b);
    return p;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::tetra_sub: return "tetra-sub";
        case Family::octa_sub: return "octa-sub";
        case Family::icosa_sub: return "icosa-sub";
        case Family::earthmap: return "earthmap";
        case Family::symmetric_earthmap: return "symmetric-earthmap";
        case Family::f16_special: return "f16-special";
        case Family::custom: return "custom";
    }
    return "custom";
}

Family family_from_name(const std::string& s) {
    for (Family f : {Family::tetra_sub, Family::octa_sub, Family::icosa_sub, Family::earthmap,
                     Family::symmetric_earthmap, Family::f16_special, Family::custom}) {
        std::string n = family_name(f);
        std::string alt = n;
        std::replace(alt.begin(), alt.end(), '-', '_');
        if (s == n || s == alt) return f;
    }
    throw ParameterError("unknown family: " + s);
}

double Pentagon::angle_sum() const { return angle[0] + angle[1] + angle[2] + angle[3] + angle[4]; }

std::array<double, 3> coolsaet_residuals(const Pentagon& p) {
    const double al = p.alpha(), be = p.beta(), ga = p.gamma(), de = p.delta(), ep = p.epsilon(), a = p.a;
    using std::cos;
    using std::sin;
    double r1 = (((1 - cos(be)) * sin(de - al / 2) - (1 - cos(ga)) * sin(ep - al / 2)) * sin((de - ep) / 2) -
                 (1 - cos(be - ga)) * sin(al / 2) * sin((de + ep) / 2)) *
                cos((de + ep - al) / 2);
    double r2 = sin(al / 2) * sin((be - ga) / 2) * (sin(be / 2) * sin(de) * cos(a) - cos(be / 2) * cos(de)) +
                sin(ga / 2) * sin((de - ep) / 2) * cos((de + ep - al) / 2);
    double r3 = sin(al / 2) * sin((be - ga) / 2) * (sin(ga / 2) * sin(ep) * cos(a) - cos(ga / 2) * cos(ep)) +
                sin(be / 2) * sin((de - ep) / 2) * cos((de + ep - al) / 2);
    return {r1, r2, r3};
}

double max_residual(const Pentagon& p) {
    auto r = coolsaet_residuals(p);
    return std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
}

double solve_cos_b(double alpha, double beta, double gamma, double a) {
    using std::cos;
    using std::sin;
    double B4 = (1 - cos(alpha)) * (1 - cos(beta)) * (1 - cos(gamma));
    double B3 = sin(alpha) * (sin(beta + gamma) - sin(beta) - sin(gamma));
    double B1 = -B3;
    double B2 = cos(alpha) * (cos(beta - gamma) - cos(beta) - cos(gamma) + 1) - 2 * cos(beta) * cos(gamma) +
                cos(beta) + cos(gamma);
    double B0 = cos(beta) * cos(gamma) - cos(alpha) * sin(beta) * sin(gamma);
    double c = cos(a);
    return (((B4 * c + B3) * c + B2) * c + B1) * c + B0;
}

bool cos_b_in_range(double cb) { return cb >= -1 - 1e-9 && cb <= 1 + 1e-9; }

double cos_b_turtle(double alpha, double beta, double gamma, double a) {
    // epsilon -> gamma -> alpha -> beta -> delta along four a-edges
    Frame fr = make_frame(Vec3(0, 0, 1), Vec3(1, 0, 0));
    Vec3 start = fr.point;
    fr = turn(advance(fr, a), kPi - gamma);
    fr = turn(advance(fr, a), kPi - alpha);
    fr = turn(advance(fr, a), kPi - beta);
    fr = advance(fr, a);
    return start.dot(fr.point);
}

Pentagon make_pentagon(const FamilyParam& fp) {
    Pentagon p;
    switch (fp.family) {
        case Family::tetra_sub:
        case Family::octa_sub:
        case Family::icosa_sub: p = make_subdivision(fp.family, fp.parameter); break;
        case Family::earthmap: p = make_earthmap(fp.f, fp.parameter); break;
        case Family::symmetric_earthmap: p = make_symmetric(fp.f); break;
        case Family::f16_special: p = make_f16(); break;
        default: throw ParameterError("make_pentagon: family has no closed form");
    }
    if (max_residual(p) > 1e-9) throw ClosureError("constructed pentagon fails the Coolsaet equations");
    if (closure_defect(p) > 1e-9) throw ClosureError("constructed pentagon does not close");
    return p;
}

Pentagon mirror_relabel(const Pentagon& p) {
    Pentagon q = p;
    q.angle = {p.alpha(), p.gamma(), p.beta(), p.epsilon(), p.delta()};
    q.chirality = p.chirality == Chirality::plain ? Chirality::mirrored : Chirality::plain;
    return q;
}

namespace {

std::vector<Vec3> walk(const Pentagon& p) {
    // corner order alpha, beta, delta, epsilon, gamma; edges a, a, b, a, a
    const double sgn = p.chirality == Chirality::plain ? 1.0 : -1.0;
    const std::array<double, 5> len = {p.a, p.a, p.b, p.a, p.a};
    const std::array<double, 5> ang = {p.alpha(), p.beta(), p.delta(), p.epsilon(), p.gamma()};
    Frame fr = make_frame(Vec3(0, 0, 1), Vec3(1, 0, 0));
    std::vector<Vec3> pts{fr.point};
    for (int i = 0; i < 5; ++i) {
        fr = advance(fr, len[i]);
        pts.push_back(fr.point);
        fr = turn(fr, sgn * (kPi - ang[(i + 1) % 5]));
    }
    return pts;
}

}  // namespace

double closure_defect(const Pentagon& p) {
    auto pts = walk(p);
    return (pts[5] - pts[0]).norm();
}

std::vector<Vec3> realize(const Pentagon& p, double tol) {
    auto pts = walk(p);
    double d = (pts[5] - pts[0]).norm();
    if (d > tol) throw ClosureError("pentagon boundary does not close (defect " + std::to_string(d) + ")");
    pts.pop_back();
    return pts;
}

namespace {

bool on_arc(const Vec3& c, const Vec3& x, const Vec3& y) {
    return std::abs(arc(x, c) + arc(c, y) - arc(x, y)) < 1e-9;
}

bool arcs_cross(const Vec3& p1, const Vec3& p2, const Vec3& q1, const Vec3& q2) {
    Vec3 d = p1.cross(p2).cross(q1.cross(q2));
    if (d.norm() < 1e-14) return false;
    d.normalize();
    for (const Vec3& c : {d, Vec3(-d)})
        if (on_arc(c, p1, p2) && on_arc(c, q1, q2)) return true;
    return false;
}

}  // namespace

bool is_simple(const std::vector<Vec3>& pts) {
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (arcs_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) return false;
        }
    return true;
}

Classification classify(const Pentagon& p) {
    Classification c;
    for (Angle k : {kAlpha, kDelta, kEpsilon, kBeta, kGamma})
        if (std::abs(p.angle[k] - kPi) < 1e-9) {
            c.degenerate = k;
            break;
        }
    c.symmetric = std::abs(p.beta() - p.gamma()) < 1e-12 && std::abs(p.delta() - p.epsilon()) < 1e-12;
    c.convex = true;
    for (double x : p.angle)
        if (x >= kPi - 1e-9) c.convex = false;
    return c;
}

std::string describe(const Classification& c) {
    static const char* names[] = {"alpha", "beta", "gamma", "delta", "epsilon"};
    std::ostringstream os;
    if (c.degenerate)
        os << "degenerate(" << names[*c.degenerate] << ")";
    else
        os << (c.convex ? "convex" : "nonconvex");
    if (c.symmetric) os << ",symmetric";
    return os.str();
}

Table1Range table1_range(Family fam) { return closed_range(fam); }

Table1Range table1_range_numeric(Family fam) {
    auto a_minus_b = [&](double t) {
        Sub s = sub_raw(fam, t);
        return s.a - s.b;
    };
    if (fam == Family::tetra_sub) {
        auto t0 = find_root(a_minus_b, -kPi / 4 + 1e-9, kPi / 4 - 1e-9);
        return {-kPi / 4, kPi / 4, t0.value_or(NAN)};
    }
    double lo_scan = fam == Family::octa_sub ? -0.2 * kPi : -0.15 * kPi;
    double hi_scan = fam == Family::octa_sub ? 0.24 * kPi : 0.2 * kPi;
    auto alpha_minus = [&](double t) { return sub_raw(fam, t).alpha - 1.5 * kPi; };
    auto t1 = find_root(alpha_minus, lo_scan, 0.0);
    auto t0 = find_root(a_minus_b, 0.0, hi_scan);
    // epsilon -> 0 is a tangency: cos_eps_arg touches 1 from below, so locate the stationary point
    auto arg = [&](double t) { return sub_raw(fam, t).cos_eps_arg; };
    auto slope = [&](double t) {
        const double h = 1e-6;
        return arg(t + h) - arg(t - h);
    };
    auto t2 = find_root(slope, t0.value_or(0.0) + 0.02 * kPi, hi_scan);
    if (t2 && std::abs(arg(*t2) - 1) > 1e-9) t2.reset();
    return {t1.value_or(NAN), t2.value_or(NAN), t0.value_or(NAN)};
}

double table2_lower_bound(int f) {
    if (f == 16) return 2 * std::atan(std::sqrt(-5 + 4 * kSqrt2));
    return table2_bounds(f, false).reading1;
}

Table2Bounds table2_bounds(int f, bool with_numeric) {
    Table2Bounds b;
    double q = std::cos(4 * kPi / f);
    b.upper = 1.5 * kPi;
    b.convex_from = std::acos(q - 2 * q * q);
    double inner = std::sqrt((3 * q + 1) * (2 * q - 1) * (2 * q - 1) * std::pow(1 - q, 3));
    if (f == 16) {
        b.reading1 = 2 * std::atan(std::sqrt(-5 + 4 * kSqrt2));
    } else {
        b.reading1 = std::acos(std::sqrt(2 * (1 - 2 * q) * (2 * q * q * q - q * q - 2 * q + 1 + inner)) / (4 * q - 2));
        double v2 = 2 * (1 - 2 * q) * (2 * q * q * q - q * q - 2 * q + 1) + inner;
        if (v2 > 0) {
            double x = std::sqrt(v2) / (4 * q - 2);
            if (std::abs(x) <= 1) b.reading2 = std::acos(x);
        }
    }
    if (with_numeric) {
        auto valid = [&](double alpha) {
            auto r = table2_branch(f, alpha, 1);
            if (!r.ok || max_residual(r.p) > 1e-9) return -1.0;
            auto pts = walk(r.p);
            if ((pts[5] - pts[0]).norm() > 1e-8) return -1.0;
            pts.pop_back();
            return is_simple(pts) ? 1.0 : -1.0;
        };
        auto r = find_root(valid, 0.2 * kPi, 0.5 * kPi - 1e-6, 600);
        b.numeric = r.value_or(NAN);
    }
    return b;
}

double symmetric_cos_a(int f) {
    double x = (kSqrt5 - 1) / (4 * std::cos(2 * kPi / f));
    return 1 - 2 * x * x;
}

double symmetric_cos_b(int f) {
    double c = std::cos(2 * kPi / f);
    double y = ((3 - kSqrt5) * c * c + kSqrt5 - 2) / c;
    return 2 * y * y - 1;
}

double symmetric_printed_cos_a(int f) {
    double x = (kSqrt5 - 1) / (4 * std::cos(4 * kPi / f));
    return 1 - 2 * x * x;
}

F16Constants f16_constants() {
    double s = std::sqrt(kSqrt2 - 1);
    return {std::pow(2.0, -0.25), s, kSqrt2 * s};
}

}  // namespace sphaera
