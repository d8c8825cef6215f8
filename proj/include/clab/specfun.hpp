#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace clab {

using cplx = std::complex<double>;

struct SeriesControl {
    int max_terms = 500;
    double abs_tol = 1e-15;
    double rel_tol = 1e-13;
};

namespace detail {

// log sin(pi z), stable for large |Im z| where sin(pi z) itself overflows
inline cplx log_sin_pi(cplx z)
{
    if (std::abs(z.imag()) < 20.0)
        return std::log(std::sin(M_PI * z));
    cplx ipz = cplx(0, M_PI) * z;
    if (z.imag() > 0)
        return -ipz + std::log(1.0 - std::exp(2.0 * ipz)) + std::log(cplx(0, 0.5));
    return ipz + std::log(1.0 - std::exp(-2.0 * ipz)) + std::log(cplx(0, -0.5));
}

// overflow-free log sinh(x) (x > 0) and log cosh(x)
inline double log_sinh(double x)
{
    return x - M_LN2 + std::log1p(-std::exp(-2 * x));
}
inline double log_cosh(double x)
{
    double a = std::abs(x);
    return a - M_LN2 + std::log1p(std::exp(-2 * a));
}

// Lanczos approximation, g=7, 9 coefficients; reflection for Re(z)<0.5
inline cplx log_gamma(cplx z)
{
    static const double cf[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7};
    const double pi = M_PI;
    if (z.real() < 0.5) {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1-z)
        return std::log(pi) - log_sin_pi(z) - log_gamma(1.0 - z);
    }
    cplx zz = z - 1.0;
    cplx x = cf[0];
    for (int i = 1; i < 9; i++)
        x += cf[i] / (zz + double(i));
    cplx t = zz + 7.5;
    return 0.5 * std::log(2.0 * pi) + (zz + 0.5) * std::log(t) - t + std::log(x);
}

inline bool near_nonpos_int(const cplx& a, double tol, int& n)
{
    if (std::abs(a.imag()) > tol)
        return false;
    double r = std::round(a.real());
    if (r > 0.5 || std::abs(a.real() - r) > tol)
        return false;
    n = int(-r);
    return true;
}

inline cplx hyp_2f1_series(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl)
{
    cplx term = 1.0, sum = 1.0;
    for (int n = 0; n < ctl.max_terms; n++) {
        term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
        sum += term;
        if (std::abs(term) < ctl.abs_tol + ctl.rel_tol * std::abs(sum))
            return sum;
    }
    throw std::domain_error("hyp_2f1: series did not converge");
}

inline cplx hyp_2f1_terminating(cplx a, cplx b, cplx c, cplx z, int nterms)
{
    cplx term = 1.0, sum = 1.0;
    for (int n = 0; n < nterms; n++) {
        term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
        sum += term;
    }
    return sum;
}

cplx hyp_2f1_impl(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl, int depth);

// linear transformation in 1-z; assumes |1-z| small enough for the inner series
inline cplx hyp_2f1_conn_1mz(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl, int depth)
{
    int dummy;
    if (near_nonpos_int(c - a - b, 1e-8, dummy) || near_nonpos_int(a + b - c, 1e-8, dummy)) {
        // integer c-a-b: evaluate at c +/- eps and average, O(eps^2) error
        const double eps = 1e-7;
        cplx p = hyp_2f1_conn_1mz(a, b, c + eps, z, ctl, depth);
        cplx m = hyp_2f1_conn_1mz(a, b, c - eps, z, ctl, depth);
        return 0.5 * (p + m);
    }
    cplx g1 = std::exp(log_gamma(c) + log_gamma(c - a - b) - log_gamma(c - a) - log_gamma(c - b));
    cplx g2 = std::exp(log_gamma(c) + log_gamma(a + b - c) - log_gamma(a) - log_gamma(b));
    cplx w = 1.0 - z;
    return g1 * hyp_2f1_impl(a, b, a + b - c + 1.0, w, ctl, depth + 1)
         + g2 * std::pow(w, c - a - b) * hyp_2f1_impl(c - a, c - b, c - a - b + 1.0, w, ctl, depth + 1);
}

// linear transformation in 1/z
inline cplx hyp_2f1_conn_inv(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl, int depth)
{
    int dummy;
    if (near_nonpos_int(b - a, 1e-8, dummy) || near_nonpos_int(a - b, 1e-8, dummy)) {
        const double eps = 1e-7;
        cplx p = hyp_2f1_conn_inv(a + eps, b, c, z, ctl, depth);
        cplx m = hyp_2f1_conn_inv(a - eps, b, c, z, ctl, depth);
        return 0.5 * (p + m);
    }
    cplx g1 = std::exp(log_gamma(c) + log_gamma(b - a) - log_gamma(b) - log_gamma(c - a));
    cplx g2 = std::exp(log_gamma(c) + log_gamma(a - b) - log_gamma(a) - log_gamma(c - b));
    cplx w = 1.0 / z;
    return g1 * std::pow(-z, -a) * hyp_2f1_impl(a, a - c + 1.0, a - b + 1.0, w, ctl, depth + 1)
         + g2 * std::pow(-z, -b) * hyp_2f1_impl(b, b - c + 1.0, b - a + 1.0, w, ctl, depth + 1);
}

inline cplx hyp_2f1_impl(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl, int depth)
{
    if (depth > 2)
        throw std::domain_error("hyp_2f1: transformation recursion too deep");
    int na = 0, nb = 0, nc = 0;
    bool ta = near_nonpos_int(a, 1e-13, na);
    bool tb = near_nonpos_int(b, 1e-13, nb);
    bool tc = near_nonpos_int(c, 1e-13, nc);
    if (ta || tb) {
        int nt = ta && tb ? std::min(na, nb) : (ta ? na : nb);
        if (tc && nc < nt)
            throw std::invalid_argument("hyp_2f1: c is a nonpositive integer");
        return hyp_2f1_terminating(a, b, c, z, nt);
    }
    if (tc)
        throw std::invalid_argument("hyp_2f1: c is a nonpositive integer");
    if (std::abs(z) <= 0.75)
        return hyp_2f1_series(a, b, c, z, ctl);
    cplx w = z / (z - 1.0);
    if (std::abs(w) <= 0.75)
        return std::pow(1.0 - z, -a) * hyp_2f1_series(a, c - b, c, w, ctl);
    if (std::abs(1.0 - z) <= 0.75)
        return hyp_2f1_conn_1mz(a, b, c, z, ctl, depth);
    if (std::abs(z) >= 1.0 / 0.75)
        return hyp_2f1_conn_inv(a, b, c, z, ctl, depth);
    throw std::domain_error("hyp_2f1: argument outside supported region");
}

// Carlson symmetric integral R_F
inline double carlson_rf(double x, double y, double z)
{
    const double errtol = 1e-12;
    double a = 0, dx = 0, dy = 0, dz = 0;
    for (int it = 0; it < 200; it++) {
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lam = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        a = (x + y + z) / 3.0;
        dx = (a - x) / a;
        dy = (a - y) / a;
        dz = (a - z) / a;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < errtol)
            break;
    }
    double e2 = dx * dy - dz * dz;
    double e3 = dx * dy * dz;
    return (1.0 + (e2 * (e2 / 24.0 - 0.1) - e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(a);
}

} // namespace detail

inline cplx hyp_2f1(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl = {})
{
    return detail::hyp_2f1_impl(a, b, c, z, ctl, 0);
}

inline cplx hyp_0f1(cplx c, cplx z, const SeriesControl& ctl = {})
{
    cplx term = 1.0, sum = 1.0;
    for (int n = 0; n < ctl.max_terms; n++) {
        term *= z / ((c + double(n)) * double(n + 1));
        sum += term;
        if (std::abs(term) < ctl.abs_tol + ctl.rel_tol * std::abs(sum))
            return sum;
    }
    throw std::domain_error("hyp_0f1: series did not converge");
}

// J_nu(x) for complex order, real argument
inline cplx bessel_j(cplx nu, double x, const SeriesControl& ctl = {})
{
    if (x == 0.0) {
        if (std::abs(nu) < 1e-14)
            return 1.0;
        if (nu.real() > 0)
            return 0.0;
        throw std::domain_error("bessel_j: x=0 with Re(nu)<=0");
    }
    if (x < 0)
        throw std::invalid_argument("bessel_j: negative argument");
    cplx pref = std::exp(nu * std::log(0.5 * x) - detail::log_gamma(nu + 1.0));
    return pref * hyp_0f1(nu + 1.0, -0.25 * x * x, ctl);
}

// H^(1)_{i lam}(x), lam real nonzero
inline cplx hankel1_imag_order(double lam, double x, const SeriesControl& ctl = {})
{
    if (std::abs(lam) < 1e-10)
        throw std::domain_error("hankel1_imag_order: order too close to 0");
    cplx ju = bessel_j(cplx(0, lam), x, ctl);
    cplx jd = bessel_j(cplx(0, -lam), x, ctl);
    return (std::exp(M_PI * lam) * ju - jd) / std::sinh(M_PI * lam);
}

// |Gamma(x+iy)|
inline double abs_gamma(double x, double y)
{
    return std::abs(std::exp(detail::log_gamma(cplx(x, y))));
}

// P^{-m}_{-1/2+i rho}(cosh tau), m >= 0
inline double conical_p(int m, double rho, double tau, const SeriesControl& ctl = {})
{
    if (m < 0)
        throw std::invalid_argument("conical_p: m must be >= 0");
    double fact = 1.0;
    for (int j = 0; j < m; j++)
        fact *= 2.0 * (j + 1.0);
    double sh2 = std::sinh(0.5 * tau);
    cplx f = hyp_2f1(cplx(0.5 + m, rho), cplx(0.5 + m, -rho), cplx(1.0 + m, 0.0),
                     -sh2 * sh2, ctl);
    return std::pow(std::sinh(tau), m) / fact * f.real();
}

inline double elliptic_K(double k)
{
    if (!(k >= 0.0 && k < 1.0))
        throw std::invalid_argument("elliptic_K: need 0 <= k < 1");
    double a = 1.0, b = std::sqrt(1.0 - k * k);
    while (std::abs(a - b) > 1e-15 * a) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return M_PI / (2.0 * a);
}

struct JacobiElliptic {
    double sn, cn, dn;
};

// descending Landen (Numerical Recipes sncndn scheme), real u, 0 <= k <= 1
inline JacobiElliptic jacobi_elliptic(double u, double k)
{
    if (k < 0.0 || k > 1.0)
        throw std::invalid_argument("jacobi_elliptic: need 0 <= k <= 1");
    double emc = 1.0 - k * k;
    const double ca = 1e-12;
    double sn, cn, dn;
    if (std::abs(emc) < ca) {
        cn = 1.0 / std::cosh(u);
        dn = cn;
        sn = std::tanh(u);
        return {sn, cn, dn};
    }
    bool bo = emc < 0.0;
    double d = 1.0;
    if (bo) {
        d = 1.0 - emc;
        emc /= -1.0 / d;
        u *= (d = std::sqrt(d));
    }
    double a = 1.0, dnv = 1.0, c = 0.0;
    std::array<double, 20> em{}, en{};
    int l = 0;
    for (int i = 0; i < 20; i++) {
        l = i;
        em[i] = a;
        en[i] = (emc = std::sqrt(emc));
        c = 0.5 * (a + emc);
        if (std::abs(a - emc) <= ca * a)
            break;
        emc *= a;
        a = c;
    }
    u *= c;
    sn = std::sin(u);
    cn = std::cos(u);
    if (sn != 0.0) {
        double aa = cn / sn;
        c *= aa;
        for (int ii = l; ii >= 0; ii--) {
            double b = em[ii];
            aa *= c;
            c *= dnv;
            dnv = (en[ii] + aa) / (b + aa);
            aa = c / b;
        }
        aa = 1.0 / std::sqrt(c * c + 1.0);
        sn = (sn >= 0.0 ? aa : -aa);
        cn = c * sn;
    }
    if (bo) {
        double aa = dnv;
        dnv = cn;
        cn = aa;
        sn /= d;
    }
    return {sn, cn, dnv};
}

// incomplete elliptic integral F(phi, k), any real phi
inline double elliptic_F(double phi, double k)
{
    if (k < 0.0 || k >= 1.0)
        throw std::invalid_argument("elliptic_F: need 0 <= k < 1");
    double n = std::round(phi / M_PI);
    double phir = phi - n * M_PI;
    double s = std::sin(phir), c = std::cos(phir);
    double val = (s == 0.0) ? 0.0
                            : s * detail::carlson_rf(c * c, 1.0 - k * k * s * s, 1.0);
    return val + 2.0 * n * elliptic_K(k);
}

// terminating 3F2 at unit argument
inline double hyp_3f2_unit(double a1, double a2, double a3, double b1, double b2)
{
    int nt = -1;
    for (double a : {a1, a2, a3}) {
        double r = std::round(a);
        if (r <= 0.0 && std::abs(a - r) < 1e-12) {
            int n = int(-r);
            if (nt < 0 || n < nt)
                nt = n;
        }
    }
    if (nt < 0)
        throw std::invalid_argument("hyp_3f2_unit: series does not terminate");
    // the terminating sum alternates with individual terms that can exceed the
    // result by many orders of magnitude (e.g. the Wigner-d closed forms at
    // large degree), so accumulate in quad precision
    __float128 term = 1, sum = 1;
    for (int n = 0; n < nt; n++) {
        term *= (__float128(a1) + n) * (__float128(a2) + n) * (__float128(a3) + n) /
                ((__float128(b1) + n) * (__float128(b2) + n) * (n + 1));
        sum += term;
    }
    return double(sum);
}

} // namespace clab
