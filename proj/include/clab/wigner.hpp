#pragma once
/** \file  wigner.hpp
    \brief Spherical harmonics, Wigner d/D functions and plane-wave expansions.

    Spherical harmonics come in two equivalent evaluations: the hypergeometric
    form in sin^2(theta/2) (sph_harm) and the parity-split form in cos^2(theta)
    (sph_harm_parity).  Both carry the phase (-1)^{(m+|m|)/2}, which is the
    usual Condon-Shortley convention.

    The little-d function at beta = pi/2 has two dedicated evaluations: a
    terminating 3F2 closed form and a trapezoid quadrature of the integral
    representation; they serve as cross-checks for each other and for the
    general-angle wigner_d.
*/
#include <cmath>
#include <complex>
#include <stdexcept>

#include "specfun.hpp"

namespace clab {

namespace detail {

inline double log_fact(int n)
{
    if(n < 0) throw std::invalid_argument("log_fact: negative argument");
    return std::lgamma(n + 1.0);
}

/// integer power with correct sign for negative base (std::pow is unreliable there)
inline double ipow(double x, int n)
{
    if(n < 0) return 1.0 / ipow(x, -n);
    double r = 1, b = x;
    for(; n; n >>= 1, b *= b)
        if(n & 1) r *= b;
    return r;
}

inline int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

/// principal value of i^n as a complex unit
inline cplx unit_ipow(int n)
{
    switch(((n % 4) + 4) % 4) {
        case 0:  return { 1, 0};
        case 1:  return { 0, 1};
        case 2:  return {-1, 0};
        default: return { 0,-1};
    }
}

}  // namespace detail

/** Spherical harmonic Y_lm(theta,phi):
    (-1)^{(m+|m|)/2} sqrt((2l+1)/2 (l+|m|)!/(l-|m|)!) sin^{|m|}theta / (2^{|m|} |m|!)
    * 2F1(-l+|m|, l+|m|+1; |m|+1; sin^2(theta/2)) * e^{i m phi} / sqrt(2 pi).  */
inline cplx sph_harm(int l, int m, double theta, double phi)
{
    int am = std::abs(m);
    if(am > l) throw std::invalid_argument("sph_harm: |m| > l");
    double st = std::sin(theta);
    double lognorm = 0.5 * (std::log(0.5 * (2*l + 1)) +
        detail::log_fact(l + am) - detail::log_fact(l - am)) -
        am * M_LN2 - detail::log_fact(am);
    cplx F = hyp_2f1(-l + am, l + am + 1, am + 1,
        std::pow(std::sin(0.5 * theta), 2));
    double ph = (m > 0 && (m & 1)) ? -1.0 : 1.0;   // (-1)^{(m+|m|)/2}
    double val = ph * std::exp(lognorm) * detail::ipow(st, am) * F.real();
    return val * std::exp(cplx(0, m * phi)) / std::sqrt(2 * M_PI);
}

/** Parity-split form of Y_lm: hypergeometric argument cos^2(theta),
    even/odd branch by the parity of l+m.  Equals sph_harm everywhere.
    For m < 0 the gamma/2F1 arguments take |m| while the branch phase keeps
    the signed exponent (l+m)/2, which is what makes Y_{l,-m} = (-1)^m Y*_lm
    come out right.  */
inline cplx sph_harm_parity(int l, int m, double theta, double phi)
{
    int am = std::abs(m);
    if(am > l) throw std::invalid_argument("sph_harm_parity: |m| > l");
    double c = std::cos(theta), z = c * c;
    double pref = std::sqrt(2*l + 1.0) / (2 * M_PI) *
        detail::ipow(std::sin(theta), am);
    double val;
    if((l + am) % 2 == 0) {
        double g = std::exp(0.5 * (
            std::lgamma(0.5 * (l + am + 1)) + std::lgamma(0.5 * (l - am + 1)) -
            std::lgamma(0.5 * (l + am + 2)) - std::lgamma(0.5 * (l - am + 2))));
        cplx F = hyp_2f1(-0.5 * (l - am), 0.5 * (l + am + 1), 0.5, z);
        val = detail::parity_sign((l + m) / 2) * g * F.real();
    } else {
        double g = std::exp(0.5 * (
            std::lgamma(0.5 * (l + am + 2)) + std::lgamma(0.5 * (l - am + 2)) -
            std::lgamma(0.5 * (l + am + 1)) - std::lgamma(0.5 * (l - am + 1))));
        cplx F = hyp_2f1(-0.5 * (l - am - 1), 0.5 * (l + am + 2), 1.5, z);
        val = detail::parity_sign((l + m - 1) / 2) * g * 2 * c * F.real();
    }
    return pref * val * std::exp(cplx(0, m * phi));
}

/** Wigner little-d function d^l_{m,m'}(beta) via the terminating
    2F1(m-l, -m'-l; m-m'+1; -tan^2(beta/2)) representation; the m < m' range
    is reached through d_{m,m'} = (-1)^{m-m'} d_{m',m}.  */
inline double wigner_d(int l, int m, int mp, double beta)
{
    if(std::abs(m) > l || std::abs(mp) > l)
        throw std::invalid_argument("wigner_d: |m| or |m'| exceeds l");
    if(m < mp)
        return detail::parity_sign(m - mp) * wigner_d(l, mp, m, beta);
    double c = std::cos(0.5 * beta), s = std::sin(0.5 * beta);
    if(c * c < 1e-12)   // beta ~ pi: d_{m,m'}(pi) = (-1)^{l-m'} delta_{m,-m'}
        return (m == -mp) ? detail::parity_sign(l - mp) : 0.0;
    double lognorm = 0.5 * (
        detail::log_fact(l + m) + detail::log_fact(l - mp) -
        detail::log_fact(l - m) - detail::log_fact(l + mp)) -
        detail::log_fact(m - mp);
    cplx F = hyp_2f1(m - l, -mp - l, m - mp + 1, -(s / c) * (s / c));
    return detail::parity_sign(m - mp) * std::exp(lognorm) *
        detail::ipow(c, 2*l - m + mp) * detail::ipow(s, m - mp) * F.real();
}

enum class HalfPiMethod { hyp3f2, integral };

namespace detail {

/// closed 3F2 form of d^l_{m2,m1}(pi/2), split by the parity of l+m1.
/// The raw closed form produces d^l_{m1,m2}(pi/2); the extra (-1)^{m2-m1}
/// (applied per branch below) converts it to the same index convention as
/// wigner_d and the integral route.
inline double halfpi_hyp3f2(int l, int m2, int m1)
{
    double base = 0.5 * (log_fact(l + m2) + log_fact(l - m2)) -
        log_fact(l) - 0.5 * std::log(M_PI);
    if((l + m1) % 2 == 0) {
        double g = 0.5 * (
            std::lgamma(0.5 * (l + m1 + 1)) + std::lgamma(0.5 * (l - m1 + 1)) -
            std::lgamma(0.5 * (l + m1) + 1) - std::lgamma(0.5 * (l - m1) + 1));
        double f = hyp_3f2_unit(-m2, m2, 0.5 * (l + m1 + 1), 0.5, l + 1);
        return parity_sign((l - m1) / 2 + l + m2 - m1) * std::exp(base + g) * f;
    }
    if(m2 == 0) return 0.0;       // P_l^{m1}(0) = 0 for odd l+m1
    double g = 0.5 * (
        std::lgamma(0.5 * (l + m1) + 1) + std::lgamma(0.5 * (l - m1) + 1) -
        std::lgamma(0.5 * (l + m1 + 1)) - std::lgamma(0.5 * (l - m1 + 1)));
    double f = hyp_3f2_unit(-m2 + 1, m2 + 1, 0.5 * (l + m1) + 1, 1.5, l + 2);
    cplx ph = unit_ipow(l - m1) * double(parity_sign(l + m2 - m1)) *
        cplx(0, 2.0 * m2 / (l + 1));
    return (ph * std::exp(base + g) * f).real();
}

/// trapezoid quadrature of the integral representation of d^l_{m2,m1}(pi/2);
/// integrand is pi-periodic analytic, so node doubling converges geometrically
inline double halfpi_integral(int l, int m2, int m1)
{
    double lognorm = l * M_LN2 - std::log(M_PI) + 0.5 * (
        log_fact(l + m2) + log_fact(l - m2) -
        log_fact(l + m1) - log_fact(l - m1));
    auto integrand = [&](double a) -> cplx {
        double sa = std::sin(a), ca = std::cos(a);
        return ipow(sa, l - m1) * ipow(ca, l + m1) * std::exp(cplx(0, 2 * m2 * a));
    };
    cplx prev = 0;
    // the integrand carries harmonics up to e^{i(2l + 2|m2|)a}; starting below
    // that aliases them onto the trapezoid nodes and can fake convergence
    int n = 16;
    while (n <= 2 * l + 2 * std::abs(m2))
        n *= 2;
    for(; n <= (1 << 14); n *= 2) {
        cplx sum = 0;
        double h = M_PI / n;
        for(int i = 0; i < n; i++)     // endpoints coincide by periodicity
            sum += integrand(i * h);
        sum *= h;
        if(n > 16 && std::abs(sum - prev) < 1e-10 * (1 + std::abs(sum)))
            return (unit_ipow(l - m1) * std::exp(lognorm) * sum).real();
        prev = sum;
    }
    throw std::runtime_error("wigner_d_halfpi: quadrature did not converge");
}

}  // namespace detail

/// d^l_{m2,m1}(pi/2) by the terminating 3F2 closed form or by quadrature
inline double wigner_d_halfpi(int l, int m2, int m1,
                              HalfPiMethod method = HalfPiMethod::hyp3f2)
{
    if(std::abs(m1) > l || std::abs(m2) > l)
        throw std::invalid_argument("wigner_d_halfpi: |m1| or |m2| exceeds l");
    return method == HalfPiMethod::hyp3f2 ?
        detail::halfpi_hyp3f2(l, m2, m1) : detail::halfpi_integral(l, m2, m1);
}

/** Sum_m e^{-i m alpha} d^l_{m,m'}(beta) e^{-i m' gamma} Y_lm(theta,phi),
    i.e. the rotated harmonic Y_{l,m'}(theta',phi') with the primed angles
    given by rotated_angles().  */
inline cplx rotate_sph_expansion(int l, int mp,
    double alpha, double beta, double gamma, double theta, double phi)
{
    if(std::abs(mp) > l)
        throw std::invalid_argument("rotate_sph_expansion: |m'| > l");
    cplx sum = 0;
    for(int m = -l; m <= l; m++)
        sum += std::exp(cplx(0, -m * alpha)) * wigner_d(l, m, mp, beta) *
               sph_harm(l, m, theta, phi);
    return sum * std::exp(cplx(0, -mp * gamma));
}

/** Rotated spherical angles (theta', phi'):
    cos theta' = cos theta cos beta + sin theta sin beta cos(phi - alpha),
    cot(phi' + gamma) = cot(phi - alpha) cos beta
                        - cot theta sin beta / sin(phi - alpha).
    The cotangent relation is solved with atan2 after clearing denominators,
    which keeps the poles at sin(phi - alpha) = 0 harmless.  */
inline std::pair<double,double> rotated_angles(
    double alpha, double beta, double gamma, double theta, double phi)
{
    double ct = std::cos(theta), st = std::sin(theta);
    double dphi = phi - alpha;
    double ctp = ct * std::cos(beta) + st * std::sin(beta) * std::cos(dphi);
    if(std::abs(ctp) > 1 + 1e-12)
        throw std::domain_error("rotated_angles: |cos theta'| > 1");
    ctp = std::clamp(ctp, -1.0, 1.0);
    double num = st * std::sin(dphi);
    double den = st * std::cos(dphi) * std::cos(beta) - ct * std::sin(beta);
    if(num == 0 && den == 0)
        throw std::domain_error("rotated_angles: phi' undefined at pole");
    return { std::acos(ctp), std::atan2(num, den) - gamma };
}

/// partial sum Sum_{|m|<=M} i^m J_m(kr) e^{i m Delta} of the plane wave e^{i kr cos Delta}
inline cplx plane_wave_partial(double k, double r, double delta, int M)
{
    if(M < 0) throw std::invalid_argument("plane_wave_partial: M < 0");
    cplx sum = bessel_j(0.0, k * r);
    for(int m = 1; m <= M; m++) {
        double J = bessel_j(double(m), k * r).real();
        // J_{-m} = (-1)^m J_m and i^{-m} = (-1)^m i^m make the pair real-symmetric
        sum += detail::unit_ipow(m) * J *
            (std::exp(cplx(0, m * delta)) + std::exp(cplx(0, -m * delta)));
    }
    return sum;
}

/** Inverse of the plane-wave expansion:
    J_m(kr) e^{i m theta} = (i^{-m}/2 pi) Int_0^{2pi} e^{i m phi + i kr cos(theta-phi)} dphi,
    evaluated by the trapezoid rule on the periodic integrand.  */
inline cplx bessel_via_quadrature(int m, double k, double r, double theta)
{
    const int n = 512;
    cplx sum = 0;
    double h = 2 * M_PI / n;
    for(int i = 0; i < n; i++) {
        double phi = i * h;
        sum += std::exp(cplx(0, m * phi + k * r * std::cos(theta - phi)));
    }
    return detail::unit_ipow(-m) * sum * h / (2 * M_PI);
}

}  // namespace clab
