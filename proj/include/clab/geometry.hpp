#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "specfun.hpp"

namespace clab {

enum class SpaceKind { S2, H2, E2, E11 };

struct Space {
    SpaceKind kind;
    double R = 1.0;

    static Space s2(double R)
    {
        if (R <= 0)
            throw std::invalid_argument("Space: R must be positive");
        return {SpaceKind::S2, R};
    }
    static Space h2(double R)
    {
        if (R <= 0)
            throw std::invalid_argument("Space: R must be positive");
        return {SpaceKind::H2, R};
    }
    static Space e2() { return {SpaceKind::E2, 0.0}; }
    static Space e11() { return {SpaceKind::E11, 0.0}; }

    bool curved() const { return kind == SpaceKind::S2 || kind == SpaceKind::H2; }
    int ambient_dim() const { return curved() ? 3 : 2; }
};

struct AmbientPoint {
    std::array<double, 3> u{0, 0, 0};
    int dim = 3;

    static AmbientPoint make2(double a, double b) { return {{a, b, 0}, 2}; }
    static AmbientPoint make3(double a, double b, double c) { return {{a, b, c}, 3}; }
};

// point outside the region a chart covers (distinct from an ambient-constraint violation)
struct coverage_error : std::domain_error {
    using std::domain_error::domain_error;
};

enum class ChartId {
    e2_cartesian,
    e2_polar,
    e2_parabolic,
    e2_elliptic,
    e11_cartesian,
    e11_pseudo_polar,
    e11_parabolic_1,
    e11_parabolic_2,
    e11_parabolic_3,
    e11_hyperbolic_1,
    e11_hyperbolic_2,
    e11_hyperbolic_3,
    e11_elliptic_1,
    e11_elliptic_2,
    s2_spherical,
    s2_spherical_prime,
    s2_spherical_dprime,
    s2_elliptic_algebraic,
    s2_elliptic_jacobi,
    h2_pseudo_spherical,
    h2_equidistant,
    h2_horocyclic,
    h2_elliptic,
    h2_hyperbolic,
    h2_semi_hyperbolic,
    h2_elliptic_parabolic,
    h2_hyperbolic_parabolic,
    h2_semicircular_parabolic,
};

struct Chart {
    ChartId id;
    // optional parameters; which ones are meaningful depends on id
    double D = 1.0;                       // focal half-distance (e2_elliptic, e11_elliptic_1)
    double d = 1.0;                       // e11_elliptic_2
    double len = 1.0;                     // e11_hyperbolic_1 scale l
    double k = 1.0 / std::sqrt(2.0);      // modulus (s2_elliptic_jacobi)
    std::array<double, 3> a{0.0, 1.0, 2.0}; // algebraic elliptic parameters

    static Chart make(ChartId id)
    {
        Chart c;
        c.id = id;
        return c;
    }
    static Chart e2_elliptic(double D)
    {
        Chart c = make(ChartId::e2_elliptic);
        c.D = D;
        return c;
    }
    static Chart e11_elliptic_1(double D)
    {
        Chart c = make(ChartId::e11_elliptic_1);
        c.D = D;
        return c;
    }
    static Chart e11_elliptic_2(double d)
    {
        Chart c = make(ChartId::e11_elliptic_2);
        c.d = d;
        return c;
    }
    static Chart e11_hyperbolic_1(double l)
    {
        Chart c = make(ChartId::e11_hyperbolic_1);
        c.len = l;
        return c;
    }
    static Chart s2_elliptic_algebraic(double a1, double a2, double a3)
    {
        Chart c = make(ChartId::s2_elliptic_algebraic);
        c.a = {a1, a2, a3};
        return c;
    }
    static Chart s2_elliptic_jacobi(double k)
    {
        Chart c = make(ChartId::s2_elliptic_jacobi);
        c.k = k;
        return c;
    }
    static Chart h2_elliptic(double a1, double a2, double a3)
    {
        Chart c = make(ChartId::h2_elliptic);
        c.a = {a1, a2, a3};
        return c;
    }
    static Chart h2_hyperbolic(double a1, double a2, double a3)
    {
        Chart c = make(ChartId::h2_hyperbolic);
        c.a = {a1, a2, a3};
        return c;
    }
};

struct ChartPoint {
    double q1 = 0, q2 = 0;
    // octant signs for algebraic charts whose printed formulas define only squares
    std::array<int, 3> signs{1, 1, 1};
};

inline double constraint_residual(const Space& s, const AmbientPoint& p)
{
    switch (s.kind) {
    case SpaceKind::S2:
        return std::abs(p.u[0] * p.u[0] + p.u[1] * p.u[1] + p.u[2] * p.u[2] - s.R * s.R);
    case SpaceKind::H2:
        return std::abs(p.u[0] * p.u[0] - p.u[1] * p.u[1] - p.u[2] * p.u[2] - s.R * s.R);
    default:
        return 0.0; // flat spaces carry no constraint
    }
}

namespace detail {

inline double wrap_2pi(double x)
{
    double w = std::fmod(x, 2 * M_PI);
    return w < 0 ? w + 2 * M_PI : w;
}

inline void check_modulus(double k)
{
    if (!(k > 0.0 && k < 1.0))
        throw std::invalid_argument("chart: modulus must be in (0,1)");
}

// roots of x^2 - s x + p = 0, stable form, returned ascending
inline std::array<double, 2> quadratic_roots(double s, double p)
{
    double disc = s * s - 4 * p;
    if (disc < 0) {
        if (disc > -1e-12 * std::max(1.0, s * s))
            disc = 0;
        else
            throw coverage_error("quadratic_roots: complex roots");
    }
    double q = 0.5 * (s + (s >= 0 ? 1 : -1) * std::sqrt(disc));
    double r1, r2;
    if (q == 0.0) {
        r1 = r2 = 0.0;
    } else {
        r1 = q;
        r2 = p / q;
    }
    if (r1 > r2)
        std::swap(r1, r2);
    return {r1, r2};
}

inline int sgn_of(double x) { return x < 0 ? -1 : 1; }

inline double ssqrt(double x)
{
    return std::sqrt(std::max(x, 0.0));
}

} // namespace detail

inline AmbientPoint to_ambient(const Space& s, const Chart& c, const ChartPoint& p)
{
    const double R = s.R;
    using detail::check_modulus;
    switch (c.id) {

    case ChartId::e2_cartesian:
        return AmbientPoint::make2(p.q1, p.q2);
    case ChartId::e2_polar: {
        if (p.q1 < 0)
            throw std::invalid_argument("e2_polar: r must be >= 0");
        return AmbientPoint::make2(p.q1 * std::cos(p.q2), p.q1 * std::sin(p.q2));
    }
    case ChartId::e2_parabolic: {
        if (p.q2 < 0)
            throw std::invalid_argument("e2_parabolic: v must be >= 0");
        return AmbientPoint::make2(0.5 * (p.q1 * p.q1 - p.q2 * p.q2), p.q1 * p.q2);
    }
    case ChartId::e2_elliptic: {
        if (p.q1 < 0)
            throw std::invalid_argument("e2_elliptic: xi must be >= 0");
        return AmbientPoint::make2(c.D * std::cosh(p.q1) * std::cos(p.q2),
                                   c.D * std::sinh(p.q1) * std::sin(p.q2));
    }

    case ChartId::e11_cartesian:
        return AmbientPoint::make2(p.q1, p.q2);
    case ChartId::e11_pseudo_polar: {
        if (p.q1 <= 0)
            throw std::invalid_argument("e11_pseudo_polar: r must be > 0");
        return AmbientPoint::make2(p.q1 * std::cosh(p.q2), p.q1 * std::sinh(p.q2));
    }
    case ChartId::e11_parabolic_1: {
        double u = p.q1, v = p.q2;
        if (v < 0)
            throw std::invalid_argument("e11_parabolic_1: v must be >= 0");
        return AmbientPoint::make2(0.5 * (u * u + v * v), u * v);
    }
    case ChartId::e11_parabolic_2: {
        double u = p.q1, v = p.q2;
        if (v < 0)
            throw std::invalid_argument("e11_parabolic_2: v must be >= 0");
        return AmbientPoint::make2(u * v, 0.5 * (u * u + v * v));
    }
    case ChartId::e11_parabolic_3: {
        double w = p.q1 - p.q2, su = p.q1 + p.q2;
        return AmbientPoint::make2(0.5 * w * w - su, 0.5 * w * w + su);
    }
    case ChartId::e11_hyperbolic_1: {
        double w = 0.5 * (p.q1 - p.q2), su = 0.5 * (p.q1 + p.q2);
        return AmbientPoint::make2(0.5 * c.len * (std::cosh(w) + std::sinh(su)),
                                   0.5 * c.len * (std::cosh(w) - std::sinh(su)));
    }
    case ChartId::e11_hyperbolic_2: {
        double w = p.q1 - p.q2, su = p.q1 + p.q2;
        return AmbientPoint::make2(std::sinh(w) + std::exp(su), std::sinh(w) - std::exp(su));
    }
    case ChartId::e11_hyperbolic_3: {
        double w = p.q1 - p.q2, su = p.q1 + p.q2;
        return AmbientPoint::make2(std::cosh(w) + std::exp(su), std::cosh(w) - std::exp(su));
    }
    case ChartId::e11_elliptic_1: {
        return AmbientPoint::make2(c.D * std::sinh(p.q1) * std::cosh(p.q2),
                                   c.D * std::cosh(p.q1) * std::sinh(p.q2));
    }
    case ChartId::e11_elliptic_2: {
        if (p.q2 < 0)
            throw std::invalid_argument("e11_elliptic_2: zeta must be >= 0");
        return AmbientPoint::make2(c.d * std::cosh(p.q1) * std::cosh(p.q2),
                                   c.d * std::sinh(p.q1) * std::sinh(p.q2));
    }

    case ChartId::s2_spherical: {
        double th = p.q1, ph = p.q2;
        if (th < 0 || th > M_PI)
            throw std::invalid_argument("s2_spherical: theta outside [0,pi]");
        return AmbientPoint::make3(R * std::sin(th) * std::cos(ph),
                                   R * std::sin(th) * std::sin(ph), R * std::cos(th));
    }
    case ChartId::s2_spherical_prime: {
        double th = p.q1, ph = p.q2;
        return AmbientPoint::make3(R * std::cos(th), R * std::sin(th) * std::cos(ph),
                                   R * std::sin(th) * std::sin(ph));
    }
    case ChartId::s2_spherical_dprime: {
        double th = p.q1, ph = p.q2;
        return AmbientPoint::make3(R * std::sin(th) * std::sin(ph), R * std::cos(th),
                                   R * std::sin(th) * std::cos(ph));
    }
    case ChartId::s2_elliptic_algebraic: {
        double a1 = c.a[0], a2 = c.a[1], a3 = c.a[2];
        if (!(a1 < a2 && a2 < a3))
            throw std::invalid_argument("s2_elliptic_algebraic: need a1 < a2 < a3");
        double r1 = p.q1, r2 = p.q2;
        if (!(a1 <= r1 && r1 <= a2 && a2 <= r2 && r2 <= a3))
            throw std::invalid_argument("s2_elliptic_algebraic: ordering a1<=rho1<=a2<=rho2<=a3 violated");
        double u1s = (r1 - a1) * (r2 - a1) / ((a2 - a1) * (a3 - a1));
        double u2s = (r1 - a2) * (r2 - a2) / ((a1 - a2) * (a3 - a2));
        double u3s = (r1 - a3) * (r2 - a3) / ((a1 - a3) * (a2 - a3));
        return AmbientPoint::make3(p.signs[0] * R * detail::ssqrt(u1s),
                                   p.signs[1] * R * detail::ssqrt(u2s),
                                   p.signs[2] * R * detail::ssqrt(u3s));
    }
    case ChartId::s2_elliptic_jacobi: {
        check_modulus(c.k);
        double kp = std::sqrt(1.0 - c.k * c.k);
        auto A = jacobi_elliptic(p.q1, c.k);
        auto B = jacobi_elliptic(p.q2, kp);
        return AmbientPoint::make3(R * A.sn * B.dn, R * A.cn * B.cn, R * A.dn * B.sn);
    }

    case ChartId::h2_pseudo_spherical: {
        double t = p.q1, ph = p.q2;
        if (t < 0)
            throw std::invalid_argument("h2_pseudo_spherical: tau must be >= 0");
        return AmbientPoint::make3(R * std::cosh(t), R * std::sinh(t) * std::cos(ph),
                                   R * std::sinh(t) * std::sin(ph));
    }
    case ChartId::h2_equidistant: {
        double t1 = p.q1, t2 = p.q2;
        return AmbientPoint::make3(R * std::cosh(t1) * std::cosh(t2),
                                   R * std::cosh(t1) * std::sinh(t2), R * std::sinh(t1));
    }
    case ChartId::h2_horocyclic: {
        double xt = p.q1, yt = p.q2;
        if (yt <= 0)
            throw std::invalid_argument("h2_horocyclic: y must be > 0");
        double s2v = xt * xt + yt * yt;
        return AmbientPoint::make3(R * (s2v + 1) / (2 * yt), R * (s2v - 1) / (2 * yt), R * xt / yt);
    }
    case ChartId::h2_elliptic: {
        double a1 = c.a[0], a2 = c.a[1], a3 = c.a[2];
        if (!(a3 < a2 && a2 < a1))
            throw std::invalid_argument("h2_elliptic: need a3 < a2 < a1");
        double r1 = p.q1, r2 = p.q2;
        if (!(a2 <= r2 && r2 <= a1 && a1 <= r1))
            throw std::invalid_argument("h2_elliptic: ordering a3<a2<rho2<a1<rho1 violated");
        double u0s = (r1 - a3) * (r2 - a3) / ((a1 - a3) * (a2 - a3));
        double u1s = (r1 - a2) * (r2 - a2) / ((a1 - a2) * (a2 - a3));
        double u2s = (r1 - a1) * (a1 - r2) / ((a1 - a2) * (a1 - a3));
        return AmbientPoint::make3(R * detail::ssqrt(u0s), p.signs[1] * R * detail::ssqrt(u1s),
                                   p.signs[2] * R * detail::ssqrt(u2s));
    }
    case ChartId::h2_hyperbolic: {
        double a1 = c.a[0], a2 = c.a[1], a3 = c.a[2];
        if (!(a3 < a2 && a2 < a1))
            throw std::invalid_argument("h2_hyperbolic: need a3 < a2 < a1");
        double r1 = p.q1, r2 = p.q2;
        if (!(r2 <= a3 && a1 <= r1))
            throw std::invalid_argument("h2_hyperbolic: ordering rho2<a3<a2<a1<rho1 violated");
        double u0s = (r1 - a2) * (a2 - r2) / ((a1 - a2) * (a2 - a3));
        double u1s = (r1 - a3) * (a3 - r2) / ((a1 - a3) * (a2 - a3));
        double u2s = (r1 - a1) * (a1 - r2) / ((a1 - a2) * (a1 - a3));
        return AmbientPoint::make3(R * detail::ssqrt(u0s), p.signs[1] * R * detail::ssqrt(u1s),
                                   p.signs[2] * R * detail::ssqrt(u2s));
    }
    case ChartId::h2_semi_hyperbolic: {
        double m1 = p.q1, m2 = p.q2;
        if (m1 <= 0 || m2 <= 0)
            throw std::invalid_argument("h2_semi_hyperbolic: mu must be > 0");
        double sum = (1 + m1 * m1) * (1 + m2 * m2);
        double dif = 1 + m1 * m2;
        double u0s = 0.5 * (sum + dif), u1s = 0.5 * (sum - dif);
        return AmbientPoint::make3(R * std::sqrt(u0s), p.signs[1] * R * detail::ssqrt(u1s),
                                   R * std::sqrt(m1 * m2));
    }
    case ChartId::h2_elliptic_parabolic: {
        double av = p.q1, th = p.q2;
        if (std::abs(th) >= M_PI / 2)
            throw std::invalid_argument("h2_elliptic_parabolic: theta outside (-pi/2,pi/2)");
        double ca = std::cosh(av), ct = std::cos(th);
        return AmbientPoint::make3(R * (ca * ca + ct * ct) / (2 * ca * ct),
                                   R * (std::sinh(av) * std::sinh(av) - std::sin(th) * std::sin(th)) /
                                       (2 * ca * ct),
                                   R * std::tan(th) * std::tanh(av));
    }
    case ChartId::h2_hyperbolic_parabolic: {
        double b = p.q1, th = p.q2;
        if (b <= 0 || th <= 0 || th >= M_PI)
            throw std::invalid_argument("h2_hyperbolic_parabolic: need b > 0, theta in (0,pi)");
        double sb = std::sinh(b), st = std::sin(th);
        double cb = std::cosh(b), ct = std::cos(th);
        return AmbientPoint::make3(R * (cb * cb + ct * ct) / (2 * sb * st),
                                   R * (sb * sb - st * st) / (2 * sb * st),
                                   R * (ct / st) * (cb / sb));
    }
    case ChartId::h2_semicircular_parabolic: {
        double xi = p.q1, eta = p.q2;
        if (xi <= 0 || eta <= 0)
            throw std::invalid_argument("h2_semicircular_parabolic: need xi, eta > 0");
        double s2v = xi * xi + eta * eta;
        return AmbientPoint::make3(R * (s2v * s2v + 4) / (8 * xi * eta),
                                   R * (s2v * s2v - 4) / (8 * xi * eta),
                                   R * (eta * eta - xi * xi) / (2 * xi * eta));
    }
    }
    throw std::logic_error("to_ambient: unhandled chart");
}

inline ChartPoint from_ambient(const Space& s, const Chart& c, const AmbientPoint& a)
{
    const double R = s.R;
    using detail::sgn_of;
    using detail::ssqrt;
    using detail::wrap_2pi;
    ChartPoint p;
    switch (c.id) {

    case ChartId::e2_cartesian:
        p.q1 = a.u[0];
        p.q2 = a.u[1];
        return p;
    case ChartId::e2_polar: {
        p.q1 = std::hypot(a.u[0], a.u[1]);
        p.q2 = wrap_2pi(std::atan2(a.u[1], a.u[0]));
        return p;
    }
    case ChartId::e2_parabolic: {
        double x = a.u[0], y = a.u[1];
        double r = std::hypot(x, y);
        double v = ssqrt(r - x);
        double u = (v > 1e-150) ? y / v : ssqrt(2 * x);
        p.q1 = u;
        p.q2 = v;
        return p;
    }
    case ChartId::e2_elliptic: {
        cplx w = std::acosh(cplx(a.u[0], a.u[1]) / c.D);
        p.q1 = w.real();
        p.q2 = wrap_2pi(w.imag());
        return p;
    }

    case ChartId::e11_cartesian:
        p.q1 = a.u[0];
        p.q2 = a.u[1];
        return p;
    case ChartId::e11_pseudo_polar: {
        double t = a.u[0], x = a.u[1];
        if (t * t - x * x <= 0 || t <= 0)
            throw coverage_error("e11_pseudo_polar: requires t^2 - x^2 > 0, t > 0");
        p.q1 = std::sqrt(t * t - x * x);
        p.q2 = std::atanh(x / t);
        return p;
    }
    case ChartId::e11_parabolic_1: {
        double t = a.u[0], x = a.u[1];
        if (t < std::abs(x))
            throw coverage_error("e11_parabolic_1: requires t >= |x|");
        double s1 = std::sqrt(2 * (t + x)), s2 = std::sqrt(2 * (t - x));
        p.q1 = 0.5 * (s1 - s2);
        p.q2 = 0.5 * (s1 + s2);
        return p;
    }
    case ChartId::e11_parabolic_2: {
        double t = a.u[0], x = a.u[1];
        if (x < std::abs(t))
            throw coverage_error("e11_parabolic_2: requires x >= |t|");
        double s1 = std::sqrt(2 * (x + t)), s2 = std::sqrt(2 * (x - t));
        p.q1 = 0.5 * (s1 - s2);
        p.q2 = 0.5 * (s1 + s2);
        return p;
    }
    case ChartId::e11_parabolic_3: {
        double t = a.u[0], x = a.u[1];
        if (x + t < 0)
            throw coverage_error("e11_parabolic_3: requires x + t >= 0");
        double w = std::sqrt(x + t), su = 0.5 * (x - t);
        p.q1 = 0.5 * (w + su);
        p.q2 = 0.5 * (su - w);
        return p;
    }
    case ChartId::e11_hyperbolic_1: {
        double A = (a.u[0] + a.u[1]) / c.len, B = (a.u[0] - a.u[1]) / c.len;
        if (A < 1)
            throw coverage_error("e11_hyperbolic_1: requires (t+x)/l >= 1");
        double w = std::acosh(A), su = std::asinh(B);
        p.q1 = su + w;
        p.q2 = su - w;
        return p;
    }
    case ChartId::e11_hyperbolic_2: {
        double t = a.u[0], x = a.u[1];
        if (t - x <= 0)
            throw coverage_error("e11_hyperbolic_2: requires t > x");
        double su = std::log(0.5 * (t - x)), w = std::asinh(0.5 * (t + x));
        p.q1 = 0.5 * (su + w);
        p.q2 = 0.5 * (su - w);
        return p;
    }
    case ChartId::e11_hyperbolic_3: {
        double t = a.u[0], x = a.u[1];
        if (t - x <= 0 || t + x < 2)
            throw coverage_error("e11_hyperbolic_3: requires t > x and t + x >= 2");
        double su = std::log(0.5 * (t - x)), w = std::acosh(0.5 * (t + x));
        p.q1 = 0.5 * (su + w);
        p.q2 = 0.5 * (su - w);
        return p;
    }
    case ChartId::e11_elliptic_1: {
        double sp = std::asinh((a.u[0] + a.u[1]) / c.D), sm = std::asinh((a.u[0] - a.u[1]) / c.D);
        p.q1 = 0.5 * (sp + sm);
        p.q2 = 0.5 * (sp - sm);
        return p;
    }
    case ChartId::e11_elliptic_2: {
        // inverse valid on the |eta| <= zeta branch only
        double ap = (a.u[0] + a.u[1]) / c.d, am = (a.u[0] - a.u[1]) / c.d;
        if (ap < 1 || am < 1)
            throw coverage_error("e11_elliptic_2: requires (t+x)/d >= 1 and (t-x)/d >= 1");
        double va = std::acosh(ap), vb = std::acosh(am);
        p.q1 = 0.5 * (va - vb);
        p.q2 = 0.5 * (va + vb);
        return p;
    }

    case ChartId::s2_spherical: {
        p.q1 = std::acos(std::clamp(a.u[2] / R, -1.0, 1.0));
        p.q2 = wrap_2pi(std::atan2(a.u[1], a.u[0]));
        return p;
    }
    case ChartId::s2_spherical_prime: {
        p.q1 = std::acos(std::clamp(a.u[0] / R, -1.0, 1.0));
        p.q2 = wrap_2pi(std::atan2(a.u[2], a.u[1]));
        return p;
    }
    case ChartId::s2_spherical_dprime: {
        p.q1 = std::acos(std::clamp(a.u[1] / R, -1.0, 1.0));
        p.q2 = wrap_2pi(std::atan2(a.u[0], a.u[2]));
        return p;
    }
    case ChartId::s2_elliptic_algebraic: {
        double a1 = c.a[0], a2 = c.a[1], a3 = c.a[2];
        double S = a1 + a2 + a3, R2 = R * R;
        double u1s = a.u[0] * a.u[0], u2s = a.u[1] * a.u[1], u3s = a.u[2] * a.u[2];
        double sum = (u1s * (S - a1) + u2s * (S - a2) + u3s * (S - a3)) / R2;
        double prod = (u1s * a2 * a3 + u2s * a1 * a3 + u3s * a1 * a2) / R2;
        auto r = detail::quadratic_roots(sum, prod);
        p.q1 = std::clamp(r[0], a1, a2);
        p.q2 = std::clamp(r[1], a2, a3);
        p.signs = {sgn_of(a.u[0]), sgn_of(a.u[1]), sgn_of(a.u[2])};
        return p;
    }
    case ChartId::s2_elliptic_jacobi: {
        detail::check_modulus(c.k);
        double k = c.k, kp = std::sqrt(1 - k * k);
        Chart alg = Chart::s2_elliptic_algebraic(0.0, k * k, 1.0);
        ChartPoint rp = from_ambient(s, alg, a);
        double sna = sgn_of(a.u[0]) * ssqrt(rp.q1) / k;
        double cnb = sgn_of(a.u[1]) * ssqrt((rp.q2 - k * k) / (kp * kp));
        p.q1 = elliptic_F(std::asin(std::clamp(sna, -1.0, 1.0)), k);
        p.q2 = sgn_of(a.u[2]) * elliptic_F(std::acos(std::clamp(cnb, -1.0, 1.0)), kp);
        return p;
    }

    case ChartId::h2_pseudo_spherical: {
        p.q1 = std::acosh(std::max(a.u[0] / R, 1.0));
        p.q2 = wrap_2pi(std::atan2(a.u[2], a.u[1]));
        return p;
    }
    case ChartId::h2_equidistant: {
        p.q1 = std::asinh(a.u[2] / R);
        p.q2 = std::atanh(a.u[1] / a.u[0]);
        return p;
    }
    case ChartId::h2_horocyclic: {
        double den = a.u[0] - a.u[1];
        if (den <= 0)
            throw coverage_error("h2_horocyclic: requires u0 > u1");
        p.q1 = a.u[2] / den;
        p.q2 = R / den;
        return p;
    }
    case ChartId::h2_elliptic: {
        double a1 = c.a[0], a2 = c.a[1], a3 = c.a[2], R2 = R * R;
        double u0s = a.u[0] * a.u[0], u1s = a.u[1] * a.u[1], u2s = a.u[2] * a.u[2];
        double sum = (u0s * (a1 + a2) - u1s * (a1 + a3) - u2s * (a2 + a3)) / R2;
        double prod = (u0s * a1 * a2 - u1s * a1 * a3 - u2s * a2 * a3) / R2;
        auto r = detail::quadratic_roots(sum, prod);
        p.q1 = std::max(r[1], a1);
        p.q2 = std::clamp(r[0], a2, a1);
        p.signs = {1, sgn_of(a.u[1]), sgn_of(a.u[2])};
        return p;
    }
    case ChartId::h2_hyperbolic: {
        double a1 = c.a[0], a2 = c.a[1], a3 = c.a[2], R2 = R * R;
        double u0s = a.u[0] * a.u[0], u1s = a.u[1] * a.u[1], u2s = a.u[2] * a.u[2];
        double sum = (u0s * (a1 + a3) - u1s * (a1 + a2) - u2s * (a2 + a3)) / R2;
        double prod = (u0s * a1 * a3 - u1s * a1 * a2 - u2s * a2 * a3) / R2;
        auto r = detail::quadratic_roots(sum, prod);
        p.q1 = std::max(r[1], a1);
        p.q2 = std::min(r[0], a3);
        p.signs = {1, sgn_of(a.u[1]), sgn_of(a.u[2])};
        return p;
    }
    case ChartId::h2_semi_hyperbolic: {
        double R2 = R * R;
        double pq = a.u[2] * a.u[2] / R2;
        double q = (a.u[0] * a.u[0] + a.u[1] * a.u[1]) / R2;
        double sum = q - 1 - pq * pq;
        auto r = detail::quadratic_roots(sum, pq * pq);
        if (r[0] <= 0)
            throw coverage_error("h2_semi_hyperbolic: point outside coverage");
        p.q1 = std::sqrt(r[1]);
        p.q2 = std::sqrt(r[0]);
        p.signs = {1, sgn_of(a.u[1]), 1};
        return p;
    }
    case ChartId::h2_elliptic_parabolic: {
        double den = a.u[0] - a.u[1];
        if (den <= 0)
            throw coverage_error("h2_elliptic_parabolic: requires u0 > u1");
        double prod = R * R / (den * den);             // cosh^2 a * cos^2 theta
        double sum = 1 + (a.u[0] + a.u[1]) / den;      // cosh^2 a + cos^2 theta
        auto r = detail::quadratic_roots(sum, prod);
        double C = std::max(r[1], 1.0), cc = std::clamp(r[0], 0.0, 1.0);
        p.q1 = sgn_of(a.u[2]) * std::acosh(std::sqrt(C));
        p.q2 = std::acos(std::sqrt(cc));
        return p;
    }
    case ChartId::h2_hyperbolic_parabolic: {
        double den = a.u[0] - a.u[1];
        if (den <= 0)
            throw coverage_error("h2_hyperbolic_parabolic: requires u0 > u1");
        double prod = R * R / (den * den);             // sinh^2 b * sin^2 theta
        double M = (a.u[0] + a.u[1]) / den - 1;        // sinh^2 b - sin^2 theta
        double S = 0.5 * (-M + std::sqrt(M * M + 4 * prod)); // sin^2 theta
        S = std::clamp(S, 0.0, 1.0);
        double A = S + M;                              // sinh^2 b
        if (A <= 0)
            throw coverage_error("h2_hyperbolic_parabolic: point outside coverage");
        p.q1 = std::asinh(std::sqrt(A));
        double th = std::asin(std::clamp(std::sqrt(S), 0.0, 1.0));
        p.q2 = (a.u[2] >= 0) ? th : M_PI - th;
        return p;
    }
    case ChartId::h2_semicircular_parabolic: {
        double den = a.u[0] - a.u[1];
        if (den <= 0)
            throw coverage_error("h2_semicircular_parabolic: requires u0 > u1");
        double pr = R / den;                           // xi * eta
        double sv = std::sqrt(4 * pr * (a.u[0] + a.u[1]) / R); // xi^2 + eta^2
        double dv = 2 * pr * a.u[2] / R;               // eta^2 - xi^2
        if (sv < std::abs(dv))
            throw coverage_error("h2_semicircular_parabolic: point outside coverage");
        p.q1 = std::sqrt(0.5 * (sv - dv));
        p.q2 = std::sqrt(0.5 * (sv + dv));
        return p;
    }
    }
    throw std::logic_error("from_ambient: unhandled chart");
}

enum class BeltramiTarget { Auto, E2, E11 };

inline std::array<double, 2> beltrami_project(const Space& s, const AmbientPoint& a,
                                              BeltramiTarget target = BeltramiTarget::Auto)
{
    const double eps = 1e-12;
    switch (s.kind) {
    case SpaceKind::S2: {
        if (std::abs(a.u[2]) < eps * s.R)
            throw std::domain_error("beltrami_project: equatorial singularity (u3 ~ 0)");
        return {s.R * a.u[0] / a.u[2], s.R * a.u[1] / a.u[2]};
    }
    case SpaceKind::H2: {
        if (target == BeltramiTarget::E11) {
            if (std::abs(a.u[2]) < eps * s.R)
                throw std::domain_error("beltrami_project: singularity (u2 ~ 0)");
            return {s.R * a.u[0] / a.u[2], s.R * a.u[1] / a.u[2]};
        }
        if (std::abs(a.u[0]) < eps * s.R)
            throw std::domain_error("beltrami_project: singularity (u0 ~ 0)");
        return {s.R * a.u[1] / a.u[0], s.R * a.u[2] / a.u[0]};
    }
    default:
        return {a.u[0], a.u[1]};
    }
}

using Field2 = std::function<double(double, double)>;

// Laplace-Beltrami operator in Beltrami coordinates, central differences.
// S2 uses the explicit Beltrami-coordinate form; H2 is its R^2 -> -R^2 continuation.
inline double laplace_beltrami_apply(const Space& s, const Field2& f,
                                     const std::array<double, 2>& x, double h)
{
    if (!(h > 0 && h <= 0.1))
        throw std::invalid_argument("laplace_beltrami_apply: h must be in (0, 0.1]");
    double X = x[0], Y = x[1];
    double f0 = f(X, Y);
    double fxp = f(X + h, Y), fxm = f(X - h, Y);
    double fyp = f(X, Y + h), fym = f(X, Y - h);
    double fpp = f(X + h, Y + h), fpm = f(X + h, Y - h);
    double fmp = f(X - h, Y + h), fmm = f(X - h, Y - h);
    double fx = (fxp - fxm) / (2 * h), fy = (fyp - fym) / (2 * h);
    double fxx = (fxp - 2 * f0 + fxm) / (h * h), fyy = (fyp - 2 * f0 + fym) / (h * h);
    double fxy = (fpp - fpm - fmp + fmm) / (4 * h * h);

    switch (s.kind) {
    case SpaceKind::E2:
        return fxx + fyy;
    case SpaceKind::E11:
        return fxx - fyy;
    case SpaceKind::S2: {
        double R2 = s.R * s.R, r2 = X * X + Y * Y;
        double br = (1 + X * X / R2) * fxx + (1 + Y * Y / R2) * fyy + (2 * X * Y / R2) * fxy
                  + (2 * X / R2) * fx + (2 * Y / R2) * fy;
        return (1 + r2 / R2) * br;
    }
    case SpaceKind::H2: {
        double R2 = s.R * s.R, r2 = X * X + Y * Y;
        double br = (1 - X * X / R2) * fxx + (1 - Y * Y / R2) * fyy - (2 * X * Y / R2) * fxy
                  - (2 * X / R2) * fx - (2 * Y / R2) * fy;
        return (1 - r2 / R2) * br;
    }
    }
    throw std::logic_error("laplace_beltrami_apply: unhandled space");
}

inline std::string chart_name(ChartId id)
{
    switch (id) {
    case ChartId::e2_cartesian: return "cartesian";
    case ChartId::e2_polar: return "polar";
    case ChartId::e2_parabolic: return "parabolic";
    case ChartId::e2_elliptic: return "elliptic";
    case ChartId::e11_cartesian: return "cartesian";
    case ChartId::e11_pseudo_polar: return "pseudo_polar";
    case ChartId::e11_parabolic_1: return "parabolic_1";
    case ChartId::e11_parabolic_2: return "parabolic_2";
    case ChartId::e11_parabolic_3: return "parabolic_3";
    case ChartId::e11_hyperbolic_1: return "hyperbolic_1";
    case ChartId::e11_hyperbolic_2: return "hyperbolic_2";
    case ChartId::e11_hyperbolic_3: return "hyperbolic_3";
    case ChartId::e11_elliptic_1: return "elliptic_1";
    case ChartId::e11_elliptic_2: return "elliptic_2";
    case ChartId::s2_spherical: return "spherical";
    case ChartId::s2_spherical_prime: return "spherical_prime";
    case ChartId::s2_spherical_dprime: return "spherical_dprime";
    case ChartId::s2_elliptic_algebraic: return "elliptic_algebraic";
    case ChartId::s2_elliptic_jacobi: return "elliptic_jacobi";
    case ChartId::h2_pseudo_spherical: return "pseudo_spherical";
    case ChartId::h2_equidistant: return "equidistant";
    case ChartId::h2_horocyclic: return "horocyclic";
    case ChartId::h2_elliptic: return "elliptic";
    case ChartId::h2_hyperbolic: return "hyperbolic";
    case ChartId::h2_semi_hyperbolic: return "semi_hyperbolic";
    case ChartId::h2_elliptic_parabolic: return "elliptic_parabolic";
    case ChartId::h2_hyperbolic_parabolic: return "hyperbolic_parabolic";
    case ChartId::h2_semicircular_parabolic: return "semicircular_parabolic";
    }
    return "?";
}

} // namespace clab
