#pragma once
/** \file  bases.hpp
    \brief Separable eigenfunction families on the four spaces and a generic
           Helmholtz-residual checker.

    Eigenvalue conventions are stored per space exactly as the source
    formulas have them: Delta Y_lm = -l(l+1)/R^2 Y_lm on S2, while on H2 the
    principal series has Delta Psi = l(l+1)/R^2 Psi with l = -1/2 + i rho,
    i.e. the numeric eigenvalue -(rho^2 + 1/4)/R^2.  Flat-space families use
    -k^2 (E2) and k1^2 - k0^2 (E11 Cartesian), -k^2 (E11 pseudo-polar).
*/
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "geometry.hpp"
#include "specfun.hpp"
#include "wigner.hpp"

namespace clab {

struct QuantumNumbers {
    int l = 0, m = 0;                       // discrete labels (S2; angular m on H2)
    double rho = 0, lambda = 0;             // H2 principal-series labels
    double k = 0, k1 = 0, k2 = 0, k0 = 0;   // flat-space wave numbers
};

struct BasisFunction {
    Space space;
    ChartId chart;
    QuantumNumbers qn;
    double eigenvalue = 0;                  // of Delta_LB in the convention above
    std::function<cplx(double, double)> eval;   // chart coordinates (q1, q2)
};

/// pseudo-spherical eigenfunction on H2, delta-normalized:
/// sqrt(rho sinh(pi rho)/(2 pi^2 R)) |Gamma(1/2 + i rho + |m|)| P^{-|m|}_{i rho - 1/2}(cosh tau) e^{i m phi}
/// (the P^{-|m|} normalization is the one consistent with the generalized
/// Mehler-Fock weight and with the flat polar Bessel limit)
inline cplx h2_pseudospherical(double rho, int m, double tau, double phi, double R)
{
    if (R <= 0)
        throw std::invalid_argument("h2_pseudospherical: R must be positive");
    int am = std::abs(m);
    // sqrt(rho sinh(pi rho)) grows like e^{pi rho/2} while |Gamma(1/2+|m|+i rho)|
    // decays the same way; combine in log space so large rho does not overflow
    double lognorm = 0.5 * (std::log(rho) + detail::log_sinh(M_PI * rho) -
                            std::log(2 * M_PI * M_PI * R)) +
                     detail::log_gamma(cplx(0.5 + am, rho)).real();
    double P = conical_p(am, rho, tau);
    double v = (P == 0.0) ? 0.0
                          : std::copysign(std::exp(lognorm + std::log(std::abs(P))), P);
    return v * std::exp(cplx(0, m * phi));
}

/// equidistant eigenfunction on H2 via the even/odd hypergeometric splitting
/// of P^{i rho}_{i lambda - 1/2}(-tanh tau1)
inline cplx h2_equidistant(double rho, double lambda, double tau1, double tau2, double R)
{
    (void)R;  // the printed normalization carries no explicit R factor
    cplx a(0, 0.5 * (rho - lambda)), b(0, 0.5 * (rho + lambda));
    double t = std::tanh(tau1), t2 = t * t;
    cplx lg34 = detail::log_gamma(0.75 - a) + detail::log_gamma(0.75 - b);
    cplx lg14 = detail::log_gamma(0.25 - a) + detail::log_gamma(0.25 - b);
    cplx even = hyp_2f1(0.25 + a, 0.25 + b, 0.5, t2);
    cplx odd  = hyp_2f1(0.75 + a, 0.75 + b, 1.5, t2);
    // the normalization's e^{-pi rho/2} decay cancels against 1/|Gamma(3/4-a)Gamma(3/4-b)|;
    // assemble the whole prefactor in log space to survive large rho, lambda
    double lsh = detail::log_sinh(M_PI * rho);
    double lch = detail::log_cosh(M_PI * lambda);
    double hi = std::max(2 * lch, 2 * lsh);
    double lden = hi + std::log(std::exp(2 * lch - hi) + std::exp(2 * lsh - hi));
    double lognorm = 0.5 * (std::log(rho) + lsh - lden);
    cplx logpre = lognorm + 0.5 * std::log(M_PI) - 0.5 * std::log(std::cosh(tau1)) +
                  cplx(0, rho) * (M_LN2 - std::log(std::cosh(tau1))) - lg34;
    return std::exp(logpre) * (even + 2.0 * t * std::exp(lg34 - lg14) * odd) *
           std::exp(cplx(0, lambda * tau2));
}

/// flat-space Helmholtz solutions from the operator tables:
/// exponentials, Bessel x exponential, Hankel x exponential
inline cplx flat_basis(const Space& s, ChartId chart, const QuantumNumbers& qn,
                       const ChartPoint& p)
{
    switch (chart) {
    case ChartId::e2_cartesian:
        if (s.kind != SpaceKind::E2) break;
        return std::exp(cplx(0, qn.k1 * p.q1 + qn.k2 * p.q2));
    case ChartId::e2_polar:
        if (s.kind != SpaceKind::E2) break;
        return bessel_j(std::abs(qn.m), qn.k * p.q1) * std::exp(cplx(0, qn.m * p.q2));
    case ChartId::e11_cartesian:
        if (s.kind != SpaceKind::E11) break;
        return std::exp(cplx(0, qn.k0 * p.q1 - qn.k1 * p.q2));
    case ChartId::e11_pseudo_polar:
        if (s.kind != SpaceKind::E11) break;
        return hankel1_imag_order(qn.lambda, qn.k * p.q1) *
               std::exp(cplx(0, qn.lambda * p.q2));
    default:
        break;
    }
    throw std::invalid_argument("flat_basis: unsupported space/chart combination");
}

// ready-made BasisFunction wrappers with their eigenvalues

inline BasisFunction basis_s2_spherical(int l, int m, double R)
{
    BasisFunction f;
    f.space = Space::s2(R);
    f.chart = ChartId::s2_spherical;
    f.qn.l = l;
    f.qn.m = m;
    f.eigenvalue = -double(l) * (l + 1) / (R * R);
    f.eval = [l, m](double th, double ph) { return sph_harm(l, m, th, ph); };
    return f;
}

inline BasisFunction basis_h2_pseudospherical(double rho, int m, double R)
{
    BasisFunction f;
    f.space = Space::h2(R);
    f.chart = ChartId::h2_pseudo_spherical;
    f.qn.rho = rho;
    f.qn.m = m;
    f.eigenvalue = -(rho * rho + 0.25) / (R * R);
    f.eval = [rho, m, R](double tau, double ph) {
        return h2_pseudospherical(rho, m, tau, ph, R);
    };
    return f;
}

inline BasisFunction basis_h2_equidistant(double rho, double lambda, double R)
{
    BasisFunction f;
    f.space = Space::h2(R);
    f.chart = ChartId::h2_equidistant;
    f.qn.rho = rho;
    f.qn.lambda = lambda;
    f.eigenvalue = -(rho * rho + 0.25) / (R * R);
    f.eval = [rho, lambda, R](double t1, double t2) {
        return h2_equidistant(rho, lambda, t1, t2, R);
    };
    return f;
}

inline BasisFunction basis_flat(const Space& s, ChartId chart, const QuantumNumbers& qn)
{
    BasisFunction f;
    f.space = s;
    f.chart = chart;
    f.qn = qn;
    switch (chart) {
    case ChartId::e2_cartesian:
        f.eigenvalue = -(qn.k1 * qn.k1 + qn.k2 * qn.k2);
        break;
    case ChartId::e2_polar:
        f.eigenvalue = -qn.k * qn.k;
        break;
    case ChartId::e11_cartesian:
        f.eigenvalue = qn.k1 * qn.k1 - qn.k0 * qn.k0;
        break;
    case ChartId::e11_pseudo_polar:
        f.eigenvalue = -qn.k * qn.k;
        break;
    default:
        throw std::invalid_argument("basis_flat: unsupported chart");
    }
    f.eval = [s, chart, qn](double q1, double q2) {
        return flat_basis(s, chart, qn, ChartPoint{q1, q2});
    };
    return f;
}

namespace detail {

/// inverse of beltrami_project for the curved spaces (E2-type projection)
inline AmbientPoint ambient_from_beltrami(const Space& s, double x, double y)
{
    double R = s.R, r2 = x * x + y * y;
    if (s.kind == SpaceKind::S2) {
        double u3 = R / std::sqrt(1 + r2 / (R * R));
        return AmbientPoint::make3(x * u3 / R, y * u3 / R, u3);
    }
    if (s.kind == SpaceKind::H2) {
        if (r2 >= R * R)
            throw std::domain_error("ambient_from_beltrami: point outside the disk");
        double u0 = R / std::sqrt(1 - r2 / (R * R));
        return AmbientPoint::make3(u0, x * u0 / R, y * u0 / R);
    }
    return AmbientPoint::make2(x, y);
}

} // namespace detail

/** |Delta_LB f(p) - eigenvalue f(p)| with the Laplacian taken by finite
    differences in Beltrami (curved) or Cartesian (flat) coordinates; the
    basis itself is evaluated through its chart.  */
inline double helmholtz_residual(const Space& s, const BasisFunction& f,
                                 double eigenvalue, const ChartPoint& p, double h)
{
    Chart chart = Chart::make(f.chart);
    auto value_at = [&](double X, double Y) -> cplx {
        AmbientPoint a = detail::ambient_from_beltrami(s, X, Y);
        ChartPoint q = from_ambient(s, chart, a);
        return f.eval(q.q1, q.q2);
    };
    AmbientPoint a0 = to_ambient(s, chart, p);
    std::array<double, 2> x0 = beltrami_project(s, a0);
    Field2 re = [&](double X, double Y) { return value_at(X, Y).real(); };
    Field2 im = [&](double X, double Y) { return value_at(X, Y).imag(); };
    // Richardson combination of the second-order stencil at steps h and h/2;
    // this cancels the leading h^2 truncation term, which for high-degree
    // eigenfunctions would otherwise dominate the residual.
    auto lap1 = [&](const Field2& g) {
        return (4.0 * laplace_beltrami_apply(s, g, x0, h / 2)
                - laplace_beltrami_apply(s, g, x0, h)) / 3.0;
    };
    cplx lap(lap1(re), lap1(im));
    return std::abs(lap - eigenvalue * value_at(x0[0], x0[1]));
}

} // namespace clab
