#include <catch2/catch_amalgamated.hpp>

#include <clab/bases.hpp>
#include <clab/lame.hpp>
#include <clab/liealg.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_support.hpp"

using namespace clab;
using Catch::Approx;
using support::uni;

TEST_CASE("recursion_row pinned values", "[lame]")
{
    std::array<double, 3> a{0, 1, 2};
    LameSystem sys = lame_system(2, {0, 0, 0}, a);
    // center a_1, t=0: beta_0 = 4 (a_i-a_1)(a_j-a_1) (1)(1/2) with l=2 terms
    auto row = recursion_row(1, 0, sys, 0.0);
    CHECK(row[0] == Approx(4.0));
    // the lower coefficient at t=0 multiplies b_{-1} = 0; the eigenvalue
    // relation only uses rows 0..N, so b_N != 0 and the recursion closes
    LameSystem s1 = lame_system(1, {1, 0, 0}, a);
    // N=0: single eigenvalue solves the 1x1 determinant middle(lambda) = 0
    REQUIRE(s1.eigenvalues.size() == 1);
    auto mid = recursion_row(1, 0, s1, s1.eigenvalues[0]);
    CHECK(mid[1] == Approx(0.0).margin(1e-10));
}

TEST_CASE("oracle_q_spectrum pinned spectra", "[lame]")
{
    auto s1 = oracle_q_spectrum(1, {1, 0, 0});
    REQUIRE(s1.size() == 3);
    CHECK(s1[0] == Approx(-1.0).margin(1e-12));
    CHECK(s1[1] == Approx(-1.0).margin(1e-12));
    CHECK(s1[2] == Approx(0.0).margin(1e-12));
    auto s2 = oracle_q_spectrum(1, {1, 1, 1});
    for (double v : s2)
        CHECK(v == Approx(-2.0).margin(1e-12));
    CHECK(oracle_q_spectrum(2, {0, 1, 2}).size() == 5);
}

TEST_CASE("secular eigenvalues match the oracle", "[lame]")
{
    std::array<double, 3> a{0, 1, 2};
    for (int l : {2, 3, 5}) {
        auto lam = lame_full_spectrum(l, a);
        auto q = oracle_q_spectrum(l, a);
        REQUIRE(int(lam.size()) == 2 * l + 1);
        REQUIRE(q.size() == lam.size());
        auto [s, c] = lame_affine_map(a);
        std::vector<double> mapped;
        for (double v : lam)
            mapped.push_back(s * v + c);
        std::sort(mapped.begin(), mapped.end());
        for (size_t i = 0; i < q.size(); i++)
            CHECK(mapped[i] == Approx(q[i]).margin(1e-9));
    }
}

TEST_CASE("eigenvalues shift affinely under a -> a + c", "[lame]")
{
    std::array<double, 3> a{0.3, 1.1, 2.6};
    double c = 0.7;
    std::array<double, 3> ac{a[0] + c, a[1] + c, a[2] + c};
    for (int l : {2, 4}) {
        auto v1 = lame_full_spectrum(l, a);
        auto v2 = lame_full_spectrum(l, ac);
        REQUIRE(v1.size() == v2.size());
        for (size_t i = 0; i < v1.size(); i++)
            CHECK(v2[i] == Approx(v1[i] + c * l * (l + 1)).margin(1e-8));
    }
}

TEST_CASE("lame_eval structure: constants and root factors", "[lame]")
{
    std::array<double, 3> a{0, 1, 2};
    LameSystem s0 = lame_system(0, {0, 0, 0}, a);
    double lam = s0.eigenvalues[0];
    CHECK(lame_eval(s0, lam, 0.3) == Approx(lame_eval(s0, lam, 0.8)).epsilon(1e-12));
    // alpha_1 = 1 root factor vanishes at rho = a1 and nowhere else in band 1
    LameSystem s1 = lame_system(1, {1, 0, 0}, a);
    double l1 = s1.eigenvalues[0];
    CHECK(lame_eval(s1, l1, 0.0) == Approx(0.0).margin(1e-12));
    for (double rho : {0.1, 0.3, 0.5, 0.7, 0.9})
        CHECK(std::abs(lame_eval(s1, l1, rho)) > 1e-8);
    CHECK_THROWS_AS(lame_eval(s1, 123.456, 0.5), std::invalid_argument);
}

TEST_CASE("lame basis satisfies the eigen-relation for Q(a)", "[lame]")
{
    std::array<double, 3> a{0, 1, 2};
    Space s2 = Space::s2(1.0);
    Chart chart = Chart::s2_elliptic_algebraic(0, 1, 2);
    LameSystem sys = lame_system(2, {0, 0, 0}, a);
    lame_normalize(sys, 1.0);
    auto [sl, cc] = lame_affine_map(a);
    for (double lam : sys.eigenvalues) {
        // homogeneous ambient extension of the basis
        Field F = [&](const Point3& u) {
            double n = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
            AmbientPoint amb = AmbientPoint::make3(u[0] / n, u[1] / n, u[2] / n);
            ChartPoint p = from_ambient(s2, chart, amb);
            return lame_basis(sys, lam, p.q1, p.q2);
        };
        QuadraticOperator Q = support::qop(a[0], 0, 0, a[1], 0, a[2]);
        Point3 p0{0.55, 0.6, 0.58};
        double n0 = std::sqrt(p0[0] * p0[0] + p0[1] * p0[1] + p0[2] * p0[2]);
        for (auto& v : p0)
            v /= n0;
        double qv = qop_apply(generator_basis(s2), Q, F, p0, 1e-4);
        double fv = F(p0);
        REQUIRE(std::abs(fv) > 1e-6);
        CHECK(qv / fv == Approx(sl * lam + cc).margin(1e-4));
    }
}

TEST_CASE("helmholtz residual of the lame bases", "[lame]")
{
    std::array<double, 3> a{0, 1, 2};
    Space s2 = Space::s2(1.0);
    std::mt19937 g(21);
    for (int l = 1; l <= 4; l++)
        for (auto& alpha : lame_parity_classes(l)) {
            LameSystem sys = lame_system(l, alpha, a);
            lame_normalize(sys, 1.0);
            for (double lam : sys.eigenvalues) {
                BasisFunction f = basis_s2_lame(sys, lam, 1.0);
                for (int t = 0; t < 3; t++) {
                    ChartPoint p{uni(g, 0.15, 0.85), uni(g, 1.15, 1.85)};
                    CHECK(helmholtz_residual(s2, f, f.eigenvalue, p, 1e-3) < 1e-5);
                }
            }
        }
}

TEST_CASE("cartesian_limit_coeffs reproduce cos(kx)", "[lame]")
{
    CHECK(cartesian_limit_coeffs(0, 0, 0.8, 50.0) == Approx(1.0));
    CHECK(cartesian_limit_coeffs(0, 1, 0.8, 50.0) == Approx(1.0));
    double R = 10.0, k1 = 0.9;
    for (double x : {0.5, 1.5, 3.0}) {
        double sum = 0;
        for (int t = 0; t <= 60; t++)
            sum += cartesian_limit_coeffs(t, 0, k1, R) * std::pow(x * x / (R * R), t);
        CHECK(sum == Approx(std::cos(k1 * x)).margin(1e-12));
    }
}

TEST_CASE("finite-R coefficients converge to the closed form", "[lame]")
{
    double k = 1.0, k1 = 0.6, R = 1000.0;
    std::array<int, 3> alpha{0, 0, 0};
    auto fin = lame_cartesian_finite_coeffs(1, alpha, k1, k, R, 3);
    for (int t = 1; t <= 3; t++) {
        double lim = cartesian_limit_coeffs(t, alpha[0], k1, R);
        CHECK(fin[t] / lim == Approx(1.0).margin(0.01));
    }
}

TEST_CASE("mathieu ODE coefficients approach their limits", "[lame]")
{
    double a1 = 0.0, a2 = 1.0, D = 2.0, k = 1.0, mu = 0.4;
    double lim_amp = -k * k * D * D / 2;          // = -2 at k=1, D=2
    double lim_const = mu - (k * k * D * D / 2) * (a2 + a1) / (a2 - a1);
    CHECK(lim_amp == Approx(-2.0));
    for (MathieuVar var : {MathieuVar::eta, MathieuVar::xi}) {
        double prev = 1e300;
        for (double R : {10.0, 100.0, 1000.0}) {
            auto [c0, c2] = mathieu_ode_coeffs(R, a1, a2, D, k, var, mu);
            double err = std::abs(c0 - lim_const) + std::abs(c2 - lim_amp);
            CHECK(err < prev);
            prev = err;
        }
    }
    // the two bands share the same limiting coefficients (cos -> cosh only)
    auto [e0, e2] = mathieu_ode_coeffs(1000.0, a1, a2, D, k, MathieuVar::eta, mu);
    auto [x0, x2] = mathieu_ode_coeffs(1000.0, a1, a2, D, k, MathieuVar::xi, mu);
    CHECK(e0 == Approx(x0).margin(1e-2));
    CHECK(e2 == Approx(x2).margin(1e-2));
}

TEST_CASE("parabolic-cylinder ODE limit", "[lame]")
{
    double a = 1.0, k = 1.0;
    for (PcfVar var : {PcfVar::u, PcfVar::v}) {
        double prev = 1e300;
        for (double R : {10.0, 100.0, 1000.0}) {
            double err = pcf_ode_limit(R, a, k, var);
            CHECK(err < prev);
            prev = err;
        }
    }
    // mu = 0: both bands converge to the same k^2 v^2 potential
    CHECK(pcf_ode_limit(1000.0, a, k, PcfVar::u, 0.0) < 1e-2);
    CHECK(pcf_ode_limit(1000.0, a, k, PcfVar::v, 0.0) < 1e-2);
}
