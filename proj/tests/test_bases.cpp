#include <catch2/catch_amalgamated.hpp>

#include <clab/bases.hpp>
#include <clab/wigner.hpp>

#include <cmath>
#include <random>

#include "test_support.hpp"

using namespace clab;
using Catch::Approx;
using support::uni;

TEST_CASE("sph_harm pinned values", "[bases]")
{
    CHECK(std::abs(sph_harm(0, 0, 0.7, 1.3) - 1.0 / std::sqrt(4 * M_PI)) < 1e-14);
    cplx y11 = sph_harm(1, 1, M_PI / 2, 0.0);
    CHECK(y11.real() == Approx(-std::sqrt(3.0 / (8 * M_PI))).epsilon(1e-12));
    CHECK(y11.imag() == Approx(0.0).margin(1e-14));
}

TEST_CASE("sph_harm is unit-normalized on the sphere", "[bases]")
{
    // phi integral is exact (|e^{im phi}|^2 = 1); composite Simpson in theta
    const int N = 4000;
    for (int l = 0; l <= 5; l++)
        for (int m = -l; m <= l; m++) {
            double acc = 0;
            for (int i = 0; i <= N; i++) {
                double th = M_PI * i / N;
                double w = (i == 0 || i == N) ? 1 : (i % 2 ? 4 : 2);
                acc += w * std::norm(sph_harm(l, m, th, 0.4)) * std::sin(th);
            }
            acc *= (M_PI / N) / 3.0 * 2 * M_PI;
            INFO("l=" << l << " m=" << m);
            CHECK(acc == Approx(1.0).margin(1e-10));
        }
}

TEST_CASE("sph_harm parity and parity-form agreement", "[bases]")
{
    std::mt19937 g(17);
    for (int l = 0; l <= 5; l++)
        for (int m = -l; m <= l; m++)
            for (int t = 0; t < 5; t++) {
                double th = uni(g, 0.05, M_PI - 0.05), ph = uni(g, 0, 2 * M_PI);
                cplx a = sph_harm(l, m, th, ph);
                cplx b = sph_harm(l, m, M_PI - th, ph);
                CHECK(std::abs(b - double((l + m) % 2 ? -1 : 1) * a) < 1e-12);
                CHECK(std::abs(sph_harm_parity(l, m, th, ph) - a) < 1e-12);
            }
}

TEST_CASE("wigner_d pinned values and orthogonality", "[bases]")
{
    for (int l = 0; l <= 4; l++)
        for (int m = -l; m <= l; m++)
            for (int mp = -l; mp <= l; mp++)
                CHECK(wigner_d(l, m, mp, 0.0) == Approx(m == mp ? 1.0 : 0.0).margin(1e-14));
    CHECK(wigner_d(1, 0, 0, 0.7) == Approx(std::cos(0.7)).epsilon(1e-13));
    CHECK(wigner_d(1, 0, 0, M_PI / 2) == Approx(0.0).margin(1e-14));
    for (int l = 0; l <= 10; l++)
        for (double beta : {0.3, 0.7, 2.1}) {
            double worst = 0;
            for (int m1 = -l; m1 <= l; m1++)
                for (int m2 = -l; m2 <= l; m2++) {
                    double s = 0;
                    for (int m = -l; m <= l; m++)
                        s += wigner_d(l, m, m1, beta) * wigner_d(l, m, m2, beta);
                    worst = std::max(worst, std::abs(s - (m1 == m2 ? 1.0 : 0.0)));
                }
            CHECK(worst < 1e-10);
        }
}

TEST_CASE("wigner_d_halfpi: pinned values and triple method agreement", "[bases]")
{
    CHECK(wigner_d_halfpi(1, 0, 0) == Approx(0.0).margin(1e-14));
    CHECK(wigner_d_halfpi(1, 1, 1, HalfPiMethod::integral) == Approx(0.5).epsilon(1e-10));
    for (int l = 0; l <= 12; l++) {
        double worst = 0;
        for (int m2 = -l; m2 <= l; m2++)
            for (int m1 = -l; m1 <= l; m1++) {
                double a = wigner_d_halfpi(l, m2, m1, HalfPiMethod::hyp3f2);
                double b = wigner_d(l, m2, m1, M_PI / 2);
                double c = wigner_d_halfpi(l, m2, m1, HalfPiMethod::integral);
                worst = std::max({worst, std::abs(a - b), std::abs(a - c),
                                  std::abs(b - c)});
            }
        INFO("l=" << l);
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("rotate_sph_expansion identity and rotated_angles consistency", "[bases]")
{
    std::mt19937 g(31);
    for (int t = 0; t < 5; t++) {
        double th = uni(g, 0.2, M_PI - 0.2), ph = uni(g, 0.1, 2 * M_PI - 0.1);
        double al = uni(g, 0, 2), be = uni(g, 0.2, 2.8), ga = uni(g, 0, 2);
        for (int l = 1; l <= 3; l++)
            for (int mp = -l; mp <= l; mp++) {
                CHECK(std::abs(rotate_sph_expansion(l, mp, 0, 0, 0, th, ph) -
                               sph_harm(l, mp, th, ph)) < 1e-12);
                auto [tp, pp] = rotated_angles(al, be, ga, th, ph);
                CHECK(std::abs(rotate_sph_expansion(l, mp, al, be, ga, th, ph) -
                               sph_harm(l, mp, tp, pp)) < 1e-10);
            }
    }
}

TEST_CASE("interbasis rotations between the three spherical frames", "[bases]")
{
    Space s2 = Space::s2(1.0);
    std::mt19937 g(77);
    // frozen Euler angles: (0,pi/2,pi/2) maps base to primed frame, the same
    // triple maps primed to double-primed, and (pi/2,pi/2,pi) goes directly
    for (int t = 0; t < 5; t++) {
        ChartPoint p{uni(g, 0.2, M_PI - 0.2), uni(g, 0.1, 2 * M_PI - 0.1)};
        AmbientPoint a = to_ambient(s2, Chart::make(ChartId::s2_spherical), p);
        ChartPoint pp = from_ambient(s2, Chart::make(ChartId::s2_spherical_prime), a);
        ChartPoint pd = from_ambient(s2, Chart::make(ChartId::s2_spherical_dprime), a);
        for (int l = 1; l <= 3; l++)
            for (int mp = -l; mp <= l; mp++) {
                CHECK(std::abs(sph_harm(l, mp, pp.q1, pp.q2) -
                               rotate_sph_expansion(l, mp, 0, M_PI / 2, M_PI / 2,
                                                    p.q1, p.q2)) < 1e-10);
                CHECK(std::abs(sph_harm(l, mp, pd.q1, pd.q2) -
                               rotate_sph_expansion(l, mp, M_PI / 2, M_PI / 2, M_PI,
                                                    p.q1, p.q2)) < 1e-10);
                CHECK(std::abs(sph_harm(l, mp, pd.q1, pd.q2) -
                               rotate_sph_expansion(l, mp, 0, M_PI / 2, M_PI / 2,
                                                    pp.q1, pp.q2)) < 1e-10);
            }
    }
}

TEST_CASE("plane wave partial sums and inverse quadrature", "[bases]")
{
    CHECK(std::abs(plane_wave_partial(1.0, 0.0, 0.9, 0) - 1.0) < 1e-14);
    cplx exact = std::exp(cplx(0, 5 * std::cos(0.3)));
    CHECK(std::abs(plane_wave_partial(1.0, 5.0, 0.3, 40) - exact) < 1e-10);
    // tail decreases monotonically once M exceeds kr
    double kr = 8.0, delta = 1.1;
    cplx target = std::exp(cplx(0, kr * std::cos(delta)));
    double prev = 1e300;
    for (int M = 11; M <= 19; M++) {
        double e = std::abs(plane_wave_partial(1.0, kr, delta, M) - target);
        CHECK(e < prev);
        prev = e;
    }
    CHECK(std::abs(bessel_via_quadrature(3, 1.0, 2.0, 0.0) - bessel_j(3, 2.0)) < 1e-10);
}

TEST_CASE("h2 pseudo-spherical basis", "[bases]")
{
    cplx v = h2_pseudospherical(1.0, 0, 0.0, 0.4, 1.0);
    CHECK(v.real() == Approx(0.398218).epsilon(1e-4));
    CHECK(std::abs(v.imag()) < 1e-12);
    for (double tau : {0.3, 0.8})
        CHECK(std::abs(std::abs(h2_pseudospherical(1.7, 2, tau, 0.9, 1.0)) -
                       std::abs(h2_pseudospherical(1.7, -2, tau, 0.9, 1.0))) < 1e-12);
    BasisFunction f = basis_h2_pseudospherical(2.0, 1, 1.0);
    std::mt19937 g(3);
    for (int t = 0; t < 10; t++)
        CHECK(helmholtz_residual(Space::h2(1.0), f, f.eigenvalue,
                                 {uni(g, 0.2, 1.2), uni(g, 0.1, 6.0)}, 1e-3) < 1e-6);
}

TEST_CASE("h2 equidistant basis", "[bases]")
{
    // unimodular e^{i lambda tau2} factor
    double lam = 1.3;
    for (double d : {0.4, 1.1})
        CHECK(std::abs(std::abs(h2_equidistant(2.0, lam, 0.35, 0.2 + d, 1.0)) -
                       std::abs(h2_equidistant(2.0, lam, 0.35, 0.2, 1.0))) < 1e-12);
    // even/odd splitting: at tau1 = 0 only the even branch survives, so the
    // tau1-even part of Psi reduces to Psi(0) up to O(tau1^2)
    double h = 1e-3;
    cplx even = 0.5 * (h2_equidistant(2.0, 1.0, h, 0.1, 1.0) +
                       h2_equidistant(2.0, 1.0, -h, 0.1, 1.0));
    CHECK(std::abs(even - h2_equidistant(2.0, 1.0, 0.0, 0.1, 1.0)) < 1e-5);
    BasisFunction f = basis_h2_equidistant(2.0, 1.0, 1.0);
    CHECK(helmholtz_residual(Space::h2(1.0), f, f.eigenvalue, {0.3, 0.5}, 1e-3) < 1e-6);
    std::mt19937 g(5);
    for (int t = 0; t < 10; t++)
        CHECK(helmholtz_residual(Space::h2(1.0), f, f.eigenvalue,
                                 {uni(g, -0.8, 0.8), uni(g, -0.8, 0.8)}, 1e-3) < 1e-6);
}

TEST_CASE("flat bases pinned values and wave-operator residual", "[bases]")
{
    QuantumNumbers qc;
    qc.k1 = 0.9;
    qc.k2 = 0.4;
    CHECK(std::abs(flat_basis(Space::e2(), ChartId::e2_cartesian, qc, {0, 0}) - 1.0)
          < 1e-14);
    QuantumNumbers qp;
    qp.k = 1.2;
    qp.m = 0;
    CHECK(std::abs(flat_basis(Space::e2(), ChartId::e2_polar, qp, {0, 0.3}) - 1.0)
          < 1e-14);
    QuantumNumbers qe;
    qe.k0 = 1.1;
    qe.k1 = 0.7;
    BasisFunction f = basis_flat(Space::e11(), ChartId::e11_cartesian, qe);
    std::mt19937 g(9);
    for (int t = 0; t < 10; t++)
        CHECK(helmholtz_residual(Space::e11(), f, f.eigenvalue,
                                 {uni(g, -1, 1), uni(g, -1, 1)}, 1e-3) < 1e-8);
}

TEST_CASE("helmholtz_residual pinned checks", "[bases]")
{
    Space s2 = Space::s2(1.0);
    BasisFunction y21 = basis_s2_spherical(2, 1, 1.0);
    CHECK(y21.eigenvalue == Approx(-6.0));
    CHECK(helmholtz_residual(s2, y21, y21.eigenvalue, {0.8, 1.1}, 1e-3) < 1e-5);

    QuantumNumbers qp;
    qp.k = 1.1;
    qp.m = 2;
    BasisFunction fp = basis_flat(Space::e2(), ChartId::e2_polar, qp);
    CHECK(helmholtz_residual(Space::e2(), fp, fp.eigenvalue, {1.2, 0.7}, 1e-3) < 1e-6);

    // a deliberately wrong eigenvalue is detected: residual ~ |dlambda| |f|
    double dl = 0.37;
    ChartPoint p{0.8, 1.1};
    double r = helmholtz_residual(s2, y21, y21.eigenvalue + dl, p, 1e-3);
    double fv = std::abs(y21.eval(p.q1, p.q2));
    CHECK(r == Approx(dl * fv).epsilon(1e-3));
}
