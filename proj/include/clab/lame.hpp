#pragma once
/** \file  lame.hpp
    \brief Lame polynomials on the sphere: three-term recursion, secular
           eigenvalues, basis assembly, the dense-diagonalization oracle and
           the Mathieu / parabolic-cylinder ODE limits.

    A Lame polynomial of degree l is written as
        psi(rho) = prod_j |rho - a_j|^{alpha_j/2} sum_{t=0}^N b_t (rho - a_k)^t
    with alpha_j in {0,1}, l = 2N + alpha_1 + alpha_2 + alpha_3, and the b_t
    satisfying a three-term recursion whose secular problem is an (N+1)x(N+1)
    tridiagonal eigenproblem in the separation constant lambda.

    The off-diagonal product beta_t * delta_{t+1} of that tridiagonal matrix
    is negative for some a-orderings, so it is not symmetrizable in general;
    eigenvalues are taken from a general real eigensolver and cross-checked
    against the dense diagonalization of Q = a1 L1^2 + a2 L2^2 + a3 L3^2 in
    the (2l+1)-dimensional multiplet (oracle_q_spectrum).
*/
#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "geometry.hpp"
#include "bases.hpp"

namespace clab {

struct LameSystem {
    int l = 0;
    std::array<int, 3> alpha{0, 0, 0};
    std::array<double, 3> a{0, 1, 2};
    int N = 0;
    std::vector<double> eigenvalues;              // ascending, N+1 entries
    std::vector<std::vector<double>> coeff1;      // per eigenvalue, center a1
    std::vector<std::vector<double>> coeff2;      // per eigenvalue, center a2
    std::vector<double> norm;                     // L2 normalization constants
};

namespace detail {

inline void check_lame_inputs(int l, const std::array<int, 3>& alpha,
                              const std::array<double, 3>& a)
{
    for (int x : alpha)
        if (x != 0 && x != 1)
            throw std::invalid_argument("lame: alpha components must be 0 or 1");
    int asum = alpha[0] + alpha[1] + alpha[2];
    if (l < asum || (l - asum) % 2 != 0)
        throw std::invalid_argument("lame: l and alpha must have the same parity with l >= alpha");
    if (a[0] == a[1] || a[1] == a[2] || a[0] == a[2])
        throw std::invalid_argument("lame: a values must be distinct");
}

inline void cyclic_of(int k, int& i, int& j)
{
    // (i,j,k) cyclic: k=1 -> (2,3), k=2 -> (3,1), k=3 -> (1,2); 1-based
    i = k % 3 + 1;
    j = i % 3 + 1;
}

} // namespace detail

/// coefficients (beta_t, gamma_t + lambda - l(l+1) a_k, delta_t) multiplying
/// b_{t+1}, b_t, b_{t-1} in the three-term recursion about center a_k
inline std::array<double, 3> recursion_row(int k, int t, const LameSystem& sys,
                                           double lambda)
{
    if (k < 1 || k > 3)
        throw std::invalid_argument("recursion_row: center k must be 1, 2 or 3");
    if (t < 0)
        throw std::invalid_argument("recursion_row: t must be non-negative");
    int i, j;
    detail::cyclic_of(k, i, j);
    double ai = sys.a[i - 1], aj = sys.a[j - 1], ak = sys.a[k - 1];
    int al_i = sys.alpha[i - 1], al_j = sys.alpha[j - 1], al_k = sys.alpha[k - 1];
    int asum = sys.alpha[0] + sys.alpha[1] + sys.alpha[2];
    double beta = 4 * (ai - ak) * (aj - ak) * (t + 1) * (t + al_k + 0.5);
    double gamma = -(ai - ak) * std::pow(2 * t + al_k + al_j, 2)
                   - (aj - ak) * std::pow(2 * t + al_k + al_i, 2);
    double lower = (2.0 * t + asum - sys.l - 2) * (2.0 * t + asum + sys.l - 1);
    return {beta, gamma + lambda - double(sys.l) * (sys.l + 1) * ak, lower};
}

namespace detail {

// eigen-decomposition of the center-k tridiagonal: lambda b_t =
// (l(l+1)a_k - gamma_t) b_t - beta_t b_{t+1} - delta_t b_{t-1}
inline void secular_center(const LameSystem& sys, int k,
                           std::vector<double>& lam, std::vector<std::vector<double>>& vec)
{
    int n = sys.N + 1;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (int t = 0; t < n; t++) {
        std::array<double, 3> row = recursion_row(k, t, sys, 0.0);
        M(t, t) = -row[1];        // l(l+1) a_k - gamma_t
        if (t + 1 < n)
            M(t, t + 1) = -row[0];
        if (t > 0)
            M(t, t - 1) = -row[2];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(M);
    std::vector<std::pair<double, int>> order(n);
    for (int c = 0; c < n; c++) {
        if (std::abs(es.eigenvalues()(c).imag()) > 1e-8 * (1 + std::abs(es.eigenvalues()(c).real())))
            throw std::runtime_error("secular_eigenvalues: complex eigenvalue encountered");
        order[c] = {es.eigenvalues()(c).real(), c};
    }
    std::sort(order.begin(), order.end());
    lam.resize(n);
    vec.assign(n, std::vector<double>(n));
    for (int c = 0; c < n; c++) {
        lam[c] = order[c].first;
        Eigen::VectorXcd v = es.eigenvectors().col(order[c].second);
        double scale = v(0).real();
        // sign policy b_0 > 0; eigenvectors of a tridiagonal with nonzero
        // off-diagonals cannot have b_0 = 0
        if (std::abs(scale) < 1e-300)
            throw std::runtime_error("secular_eigenvalues: degenerate leading coefficient");
        for (int t = 0; t < n; t++)
            vec[c][t] = v(t).real() / scale;
    }
}

} // namespace detail

/// 2l+1 eigenvalues of Q = a1 L1^2 + a2 L2^2 + a3 L3^2 on the degree-l
/// multiplet, by dense diagonalization with ladder-operator matrix elements
inline std::vector<double> oracle_q_spectrum(int l, const std::array<double, 3>& a)
{
    if (l < 0 || l > 30)
        throw std::invalid_argument("oracle_q_spectrum: need 0 <= l <= 30");
    int n = 2 * l + 1;
    auto cplus = [l](int m) { return std::sqrt(double(l) * (l + 1) - double(m) * (m + 1)); };
    // J1 = (J+ + J-)/2 (symmetric), K2 = (J+ - J-)/2 (antisymmetric, J2 = -i K2)
    Eigen::MatrixXd J1 = Eigen::MatrixXd::Zero(n, n), K2 = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd J3 = Eigen::MatrixXd::Zero(n, n);
    for (int idx = 0; idx < n; idx++) {
        int m = idx - l;
        J3(idx, idx) = m;
        if (idx + 1 < n) {
            J1(idx + 1, idx) = 0.5 * cplus(m);
            J1(idx, idx + 1) = 0.5 * cplus(m);
            K2(idx + 1, idx) = 0.5 * cplus(m);
            K2(idx, idx + 1) = -0.5 * cplus(m);
        }
    }
    // L_i^2 = -J_i^2 in the vector-field realization; J2^2 = -K2^2
    Eigen::MatrixXd M = a[0] * (J1 * J1) - a[1] * (K2 * K2) + a[2] * (J3 * J3);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    std::vector<double> q(n);
    for (int c = 0; c < n; c++)
        q[c] = -es.eigenvalues()(c);
    std::sort(q.begin(), q.end());
    return q;
}

/// assemble the full system: secular eigenvalues plus coefficient vectors
/// about centers a1 and a2 (centers agree on the spectrum; checked)
inline LameSystem lame_system(int l, const std::array<int, 3>& alpha,
                              const std::array<double, 3>& a)
{
    detail::check_lame_inputs(l, alpha, a);
    LameSystem sys;
    sys.l = l;
    sys.alpha = alpha;
    sys.a = a;
    sys.N = (l - alpha[0] - alpha[1] - alpha[2]) / 2;
    std::vector<double> lam2;
    detail::secular_center(sys, 1, sys.eigenvalues, sys.coeff1);
    detail::secular_center(sys, 2, lam2, sys.coeff2);
    double scale = 1 + std::abs(sys.eigenvalues.front()) + std::abs(sys.eigenvalues.back());
    for (int c = 0; c <= sys.N; c++)
        if (std::abs(sys.eigenvalues[c] - lam2[c]) > 1e-8 * scale)
            throw std::runtime_error("lame_system: center-1/center-2 spectra disagree");
    sys.norm.assign(sys.N + 1, 1.0);
    return sys;
}

inline std::vector<double> secular_eigenvalues(const LameSystem& sys)
{
    return sys.eigenvalues;
}

/// eigenvalues of every parity class compatible with l, merged and sorted;
/// 2l+1 values in total
inline std::vector<std::array<int, 3>> lame_parity_classes(int l)
{
    std::vector<std::array<int, 3>> out;
    for (int a1 = 0; a1 <= 1; a1++)
        for (int a2 = 0; a2 <= 1; a2++)
            for (int a3 = 0; a3 <= 1; a3++)
                if ((a1 + a2 + a3) % 2 == l % 2 && a1 + a2 + a3 <= l)
                    out.push_back({a1, a2, a3});
    return out;
}

inline std::vector<double> lame_full_spectrum(int l, const std::array<double, 3>& a)
{
    std::vector<double> all;
    for (const auto& alpha : lame_parity_classes(l)) {
        LameSystem sys = lame_system(l, alpha, a);
        all.insert(all.end(), sys.eigenvalues.begin(), sys.eigenvalues.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

/** Affine map q = s*lambda + c between the separation constant and the
    eigenvalue of Q(a1,a2,a3), determined empirically at l = 1 (the source
    text leaves the convention open).  */
inline std::pair<double, double> lame_affine_map(const std::array<double, 3>& a)
{
    std::vector<double> lam = lame_full_spectrum(1, a);
    std::vector<double> q = oracle_q_spectrum(1, a);
    // slope is negative: largest lambda pairs with smallest q
    int n = int(lam.size());
    double sl = 0, sq = 0, sll = 0, slq = 0;
    for (int i = 0; i < n; i++) {
        double x = lam[i], y = q[n - 1 - i];
        sl += x; sq += y; sll += x * x; slq += x * y;
    }
    double den = n * sll - sl * sl;
    if (std::abs(den) < 1e-12)
        throw std::runtime_error("lame_affine_map: degenerate l=1 spectrum");
    double s = (n * slq - sl * sq) / den;
    double c = (sq - s * sl) / n;
    return {s, c};
}

namespace detail {

inline int lame_eigen_index(const LameSystem& sys, double lambda)
{
    double scale = 1;
    for (double l : sys.eigenvalues)
        scale = std::max(scale, std::abs(l));
    for (int c = 0; c < int(sys.eigenvalues.size()); c++)
        if (std::abs(sys.eigenvalues[c] - lambda) < 1e-7 * scale)
            return c;
    throw std::invalid_argument("lame: lambda is not an eigenvalue of this system");
}

} // namespace detail

/** psi(rho) = prod_j |rho - a_j|^{alpha_j/2} sum_t b_t (rho - a_k)^t with the
    expansion center chosen by band: rho <= a2 uses center a1, else center a2
    (a ascending assumed for the band logic).  */
inline double lame_eval(const LameSystem& sys, double lambda, double rho)
{
    int c = detail::lame_eigen_index(sys, lambda);
    bool band1 = rho <= sys.a[1];
    const std::vector<double>& b = band1 ? sys.coeff1[c] : sys.coeff2[c];
    double center = band1 ? sys.a[0] : sys.a[1];
    double sum = 0;
    for (int t = sys.N; t >= 0; t--)
        sum = sum * (rho - center) + b[t];
    double pref = 1;
    for (int j = 0; j < 3; j++)
        if (sys.alpha[j])
            pref *= std::sqrt(std::abs(rho - sys.a[j]));
    return pref * sum;
}

/// normalized product basis A psi(rho1) psi(rho2); normalization policy:
/// unit L2 norm over the sphere (set by lame_normalize), sign by b0 > 0
inline double lame_basis(const LameSystem& sys, double lambda, double rho1, double rho2)
{
    int c = detail::lame_eigen_index(sys, lambda);
    return sys.norm[c] * lame_eval(sys, lambda, rho1) * lame_eval(sys, lambda, rho2);
}

/** Fill sys.norm with the constants making lame_basis unit-L2 on the sphere
    of radius R.  Quadrature uses the trigonometric parametrization
    rho1 = a1 + (a2-a1) cos^2 phi, rho2 = a3 - (a3-a2) cos^2 theta, under
    which the area element is smooth and trapezoid rules converge fast.
    Requires a ascending.  */
inline void lame_normalize(LameSystem& sys, double R, int nq = 160)
{
    if (!(sys.a[0] < sys.a[1] && sys.a[1] < sys.a[2]))
        throw std::invalid_argument("lame_normalize: a must be ascending");
    for (int c = 0; c <= sys.N; c++) {
        sys.norm[c] = 1.0;
        double lambda = sys.eigenvalues[c];
        double acc = 0;
        for (int ip = 0; ip < nq; ip++) {
            double phi = 2 * M_PI * ip / nq;
            double rho1 = sys.a[0] + (sys.a[1] - sys.a[0]) * std::pow(std::cos(phi), 2);
            for (int it = 0; it < nq; it++) {
                double th = M_PI * it / nq;
                double rho2 = sys.a[2] - (sys.a[2] - sys.a[1]) * std::pow(std::cos(th), 2);
                double psi = lame_eval(sys, lambda, rho1) * lame_eval(sys, lambda, rho2);
                double dS = R * R * (rho2 - rho1) /
                    (std::sqrt(sys.a[2] - rho1) * std::sqrt(rho2 - sys.a[0]));
                acc += psi * psi * dS;
            }
        }
        acc *= (2 * M_PI / nq) * (M_PI / nq);
        if (acc <= 0)
            throw std::runtime_error("lame_normalize: non-positive norm integral");
        sys.norm[c] = 1.0 / std::sqrt(acc);
    }
}

/// BasisFunction wrapper over the elliptic chart (q1 = rho1, q2 = rho2)
inline BasisFunction basis_s2_lame(const LameSystem& sys, double lambda, double R)
{
    BasisFunction f;
    f.space = Space::s2(R);
    f.chart = ChartId::s2_elliptic_algebraic;
    f.qn.l = sys.l;
    f.eigenvalue = -double(sys.l) * (sys.l + 1) / (R * R);
    LameSystem local = sys;
    f.eval = [local, lambda](double rho1, double rho2) -> cplx {
        return lame_basis(local, lambda, rho1, rho2);
    };
    return f;
}

/// limiting expansion coefficient C_t = R^{2t}/(alpha_j+1/2)_t (-k_j^2/4)^t / t!
inline double cartesian_limit_coeffs(int t, int alpha_j, double k_j, double R)
{
    if (t < 0)
        throw std::invalid_argument("cartesian_limit_coeffs: t must be non-negative");
    double c = 1;
    for (int s = 0; s < t; s++)
        c *= R * R * (-k_j * k_j / 4) / ((alpha_j + 0.5 + s) * (s + 1));
    return c;
}

/** Finite-R coefficients C_t of the Cartesian-limit recursion (equally spaced
    a with a1 < a3 < a2, a = a3-a1 = a2-a3), solved forward from C_0 = 1 with
    mu^(1) = 2 R^2 k1^2 or mu^(2) = -2 R^2 k2^2 and l = kR.  */
inline std::vector<double> lame_cartesian_finite_coeffs(
    int j, const std::array<int, 3>& alpha, double kj, double k, double R, int tmax)
{
    if (j != 1 && j != 2)
        throw std::invalid_argument("lame_cartesian_finite_coeffs: j must be 1 or 2");
    double l = k * R;
    int asum = alpha[0] + alpha[1] + alpha[2];
    double mu = (j == 1 ? 2.0 : -2.0) * R * R * kj * kj;
    std::vector<double> C(tmax + 1);
    C[0] = 1;
    double Cm1 = 0;
    for (int t = 0; t < tmax; t++) {
        double delta = (2.0 * t + asum - l - 2) * (2.0 * t + asum + l - 1);
        double next;
        if (j == 1) {
            double mid = mu - 2 * std::pow(2 * t + alpha[0] + alpha[2], 2)
                            - std::pow(2 * t + alpha[0] + alpha[1], 2);
            next = -(mid * C[t] + delta * Cm1) / (8.0 * (t + 1) * (t + alpha[0] + 0.5));
        } else {
            double mid = mu + 2 * std::pow(2 * t + alpha[1] + alpha[2], 2)
                            + std::pow(2 * t + alpha[0] + alpha[1], 2);
            next = (mid * C[t] - delta * Cm1) / (8.0 * (t + 1) * (t + alpha[1] + 0.5));
        }
        Cm1 = C[t];
        C[t + 1] = next;
    }
    return C;
}

enum class MathieuVar { eta, xi };
enum class PcfVar { u, v };

/** Coefficients (constant, cos 2eta or cosh 2xi amplitude) of the exact
    separated-equation potential Q = (lambda - l(l+1) rho)/(a3 - rho) with
    rho = a1 + (a2-a1) cos^2 eta (resp. cosh^2 xi), a3 = a1 + R^2(a2-a1)/D^2,
    lambda = mu a3, l = kR.  Limits as R -> infinity:
    { mu - (k^2 D^2/2)(a2+a1)/(a2-a1), -k^2 D^2/2 }.
    In the xi band the potential enters the ODE as psi'' - Q psi = 0; the
    reported coefficients are those of Q in both cases.  */
inline std::pair<double, double> mathieu_ode_coeffs(
    double R, double a1, double a2, double D, double k, MathieuVar var, double mu = 0)
{
    if (a2 <= a1 || D <= 0 || R <= 0)
        throw std::invalid_argument("mathieu_ode_coeffs: need a2 > a1, D > 0, R > 0");
    double a3 = a1 + R * R * (a2 - a1) / (D * D);
    double l = k * R, ll1 = l * (l + 1), lambda = mu * a3;
    // least-squares fit of Q on a grid with basis {1, c(2v), c(4v)};
    // the c(4v) term absorbs the finite-R contamination
    const int n = 96;
    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; i++) {
        double v = (var == MathieuVar::eta) ? M_PI * i / n : 1.2 * (i + 1) / n;
        double c2 = (var == MathieuVar::eta) ? std::cos(2 * v) : std::cosh(2 * v);
        double c4 = (var == MathieuVar::eta) ? std::cos(4 * v) : std::cosh(4 * v);
        double cs = (var == MathieuVar::eta) ? std::pow(std::cos(v), 2)
                                             : std::pow(std::cosh(v), 2);
        double rho = a1 + (a2 - a1) * cs;
        A(i, 0) = 1; A(i, 1) = c2; A(i, 2) = c4;
        y(i) = (lambda - ll1 * rho) / (a3 - rho);
    }
    Eigen::Vector3d c = (A.transpose() * A).ldlt().solve(A.transpose() * y);
    return {c(0), c(1)};
}

/** Max deviation of the exact separated-equation potential from the
    parabolic-cylinder limit k^2 u^2 + mu (u band) / k^2 v^2 - mu (v band),
    under the substitutions sn alpha = -1 + u^2/(2R) and
    sqrt(2) dn beta = 1 + v^2/(2R) with a = (0, a, 2a), l = kR and
    lambda = a2 l(l+1) + mu R a.  */
inline double pcf_ode_limit(double R, double a, double k, PcfVar var, double mu = 0.3)
{
    if (a <= 0 || R <= 0)
        throw std::invalid_argument("pcf_ode_limit: need a > 0, R > 0");
    double a2 = a, l = k * R, ll1 = l * (l + 1);
    double lambda = a2 * ll1 + mu * R * a;
    double worst = 0;
    for (int i = 1; i <= 40; i++) {
        double v = 0.2 + (1.5 - 0.2) * i / 40.0;
        double Q, target;
        if (var == PcfVar::u) {
            double sn = -1 + v * v / (2 * R), sn2 = sn * sn;
            double rho = a * sn2;           // a1 = 0
            Q = v * v * (lambda - ll1 * rho) / (a * R * R * (sn2 - 1) * (sn2 - 2));
            target = k * k * v * v + mu;
        } else {
            double w = std::pow(1 + v * v / (2 * R), 2) - 1;
            double rho = a2 + a * w;
            Q = v * v * (lambda - ll1 * rho) / (a * R * R * w * (w - 1));
            target = k * k * v * v - mu;
        }
        worst = std::max(worst, std::abs(Q - target));
    }
    return worst;
}

} // namespace clab
