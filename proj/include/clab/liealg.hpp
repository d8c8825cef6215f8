#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include "geometry.hpp"

namespace clab {

using Point3 = std::array<double, 3>;
using Field = std::function<double(const Point3&)>;

struct VectorField {
    int dim = 2;
    std::function<Point3(const Point3&)> coef;
};

struct GeneratorBasis {
    SpaceKind kind;
    int dim = 2;
    bool contracted = false;
    double R = 0.0;
    std::array<VectorField, 3> X;
    double c[3][3][3] = {};
    std::array<std::string, 3> names;

    void set_c(int i, int j, int k, double v)
    {
        c[i][j][k] = v;
        c[j][i][k] = -v;
    }
};

enum class ContractionPair { S2_E2, H2_E2, H2_E11 };

inline GeneratorBasis generator_basis(const Space& s)
{
    GeneratorBasis b;
    b.kind = s.kind;
    switch (s.kind) {
    case SpaceKind::E2:
        b.dim = 2;
        b.names = {"L", "P1", "P2"};
        b.X[0] = {2, [](const Point3& p) { return Point3{p[1], -p[0], 0}; }};
        b.X[1] = {2, [](const Point3&) { return Point3{1, 0, 0}; }};
        b.X[2] = {2, [](const Point3&) { return Point3{0, 1, 0}; }};
        b.set_c(0, 1, 2, 1);
        b.set_c(0, 2, 1, -1);
        break;
    case SpaceKind::E11:
        b.dim = 2;
        b.names = {"K", "P0", "P1"};
        b.X[0] = {2, [](const Point3& p) { return Point3{p[1], p[0], 0}; }};
        b.X[1] = {2, [](const Point3&) { return Point3{1, 0, 0}; }};
        b.X[2] = {2, [](const Point3&) { return Point3{0, 1, 0}; }};
        b.set_c(0, 1, 2, -1);
        b.set_c(0, 2, 1, -1);
        break;
    case SpaceKind::S2:
        b.dim = 3;
        b.names = {"L1", "L2", "L3"};
        b.X[0] = {3, [](const Point3& u) { return Point3{0, u[2], -u[1]}; }};
        b.X[1] = {3, [](const Point3& u) { return Point3{-u[2], 0, u[0]}; }};
        b.X[2] = {3, [](const Point3& u) { return Point3{u[1], -u[0], 0}; }};
        b.set_c(0, 1, 2, 1);
        b.set_c(1, 2, 0, 1);
        b.set_c(2, 0, 1, 1);
        break;
    case SpaceKind::H2:
        b.dim = 3;
        b.names = {"K1", "K2", "L3"};
        b.X[0] = {3, [](const Point3& u) { return Point3{-u[2], 0, -u[0]}; }};
        b.X[1] = {3, [](const Point3& u) { return Point3{-u[1], -u[0], 0}; }};
        b.X[2] = {3, [](const Point3& u) { return Point3{0, u[2], -u[1]}; }};
        // brackets of the realization above: [K1,K2] = L3, [L3,K1] = -K2,
        // [K2,L3] = -K1 (an so(2,1) basis with the boost pair listed first)
        b.set_c(0, 1, 2, 1);
        b.set_c(2, 0, 1, -1);
        b.set_c(1, 2, 0, -1);
        break;
    }
    return b;
}

// R-dependent families of Section 3: (pi_1, pi_2, rotation/boost) acting on
// Beltrami coordinates, contracting onto the flat generator basis as R -> infinity
inline GeneratorBasis contracted_basis(ContractionPair pair, double R)
{
    if (R <= 0)
        throw std::invalid_argument("contracted_basis: R must be positive");
    GeneratorBasis b;
    b.dim = 2;
    b.contracted = true;
    b.R = R;
    double R2 = R * R;
    switch (pair) {
    case ContractionPair::S2_E2:
        b.kind = SpaceKind::S2;
        b.names = {"pi1", "pi2", "L3"};
        b.X[0] = {2, [R2](const Point3& p) {
                      return Point3{1 + p[0] * p[0] / R2, p[0] * p[1] / R2, 0};
                  }};
        b.X[1] = {2, [R2](const Point3& p) {
                      return Point3{p[0] * p[1] / R2, 1 + p[1] * p[1] / R2, 0};
                  }};
        b.X[2] = {2, [](const Point3& p) { return Point3{p[1], -p[0], 0}; }};
        b.set_c(0, 1, 2, 1 / R2);
        b.set_c(2, 0, 1, 1);
        b.set_c(2, 1, 0, -1);
        break;
    case ContractionPair::H2_E2:
        b.kind = SpaceKind::H2;
        b.names = {"pi1", "pi2", "L3"};
        b.X[0] = {2, [R2](const Point3& p) {
                      return Point3{1 - p[0] * p[0] / R2, -p[0] * p[1] / R2, 0};
                  }};
        b.X[1] = {2, [R2](const Point3& p) {
                      return Point3{-p[0] * p[1] / R2, 1 - p[1] * p[1] / R2, 0};
                  }};
        b.X[2] = {2, [](const Point3& p) { return Point3{p[1], -p[0], 0}; }};
        b.set_c(0, 1, 2, -1 / R2);
        b.set_c(2, 0, 1, 1);
        b.set_c(2, 1, 0, -1);
        break;
    case ContractionPair::H2_E11:
        b.kind = SpaceKind::H2;
        b.names = {"pi1", "pi2", "K"};
        b.X[0] = {2, [R2](const Point3& p) {
                      return Point3{1 - p[0] * p[0] / R2, -p[0] * p[1] / R2, 0};
                  }};
        b.X[1] = {2, [R2](const Point3& p) {
                      return Point3{p[0] * p[1] / R2, 1 + p[1] * p[1] / R2, 0};
                  }};
        b.X[2] = {2, [](const Point3& p) { return Point3{p[1], p[0], 0}; }};
        b.set_c(0, 1, 2, 1 / R2);
        b.set_c(2, 0, 1, -1);
        b.set_c(2, 1, 0, -1);
        break;
    }
    return b;
}

inline double generator_apply(const GeneratorBasis& b, int index, const Field& f,
                              const Point3& p, double h)
{
    if (index < 0 || index > 2)
        throw std::invalid_argument("generator_apply: index out of range");
    Point3 xi = b.X[index].coef(p);
    double acc = 0;
    for (int c = 0; c < b.X[index].dim; c++) {
        if (xi[c] == 0)
            continue;
        Point3 pp = p, pm = p;
        pp[c] += h;
        pm[c] -= h;
        acc += xi[c] * (f(pp) - f(pm)) / (2 * h);
    }
    return acc;
}

inline double generator_apply(const Space& s, int index, const Field& f, const Point3& p,
                              double h)
{
    return generator_apply(generator_basis(s), index, f, p, h);
}

inline Field generator_field(const GeneratorBasis& b, int index, const Field& f, double h)
{
    return [&b, index, f, h](const Point3& p) { return generator_apply(b, index, f, p, h); };
}

inline double commutator_residual(const GeneratorBasis& b, int i, int j, const Field& f,
                                  const Point3& p, double h)
{
    Field xjf = generator_field(b, j, f, h);
    Field xif = generator_field(b, i, f, h);
    double comm = generator_apply(b, i, xjf, p, h) - generator_apply(b, j, xif, p, h);
    for (int k = 0; k < 3; k++)
        if (b.c[i][j][k] != 0)
            comm -= b.c[i][j][k] * generator_apply(b, k, f, p, h);
    return std::abs(comm);
}

inline double commutator_residual(const Space& s, int i, int j, const Field& f, const Point3& p,
                                  double h)
{
    return commutator_residual(generator_basis(s), i, j, f, p, h);
}

struct QuadraticOperator {
    // symmetric coefficient matrix over the ordered generator basis
    std::array<std::array<double, 3>, 3> A{};

    double& operator()(int i, int j) { return A[i][j]; }
    double operator()(int i, int j) const { return A[i][j]; }

    static QuadraticOperator square(int i)
    {
        QuadraticOperator q;
        q.A[i][i] = 1;
        return q;
    }
    // {X_i, X_j} = X_i X_j + X_j X_i
    static QuadraticOperator anticomm(int i, int j)
    {
        QuadraticOperator q;
        q.A[i][j] += 1;
        q.A[j][i] += 1;
        return q;
    }
    QuadraticOperator& add(const QuadraticOperator& o, double w = 1)
    {
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++)
                A[i][j] += w * o.A[i][j];
        return *this;
    }
    double norm() const
    {
        double n = 0;
        for (auto& r : A)
            for (double v : r)
                n += v * v;
        return std::sqrt(n);
    }
};

inline double qop_apply(const GeneratorBasis& b, const QuadraticOperator& Q, const Field& f,
                        const Point3& p, double h)
{
    double acc = 0;
    for (int i = 0; i < 3; i++)
        for (int k = 0; k < 3; k++) {
            if (Q(i, k) == 0)
                continue;
            Field xkf = generator_field(b, k, f, h);
            Field xif = generator_field(b, i, f, h);
            double sym = 0.5 * (generator_apply(b, i, xkf, p, h) + generator_apply(b, k, xif, p, h));
            acc += Q(i, k) * sym;
        }
    return acc;
}

inline double qop_apply(const Space& s, const QuadraticOperator& Q, const Field& f,
                        const Point3& p, double h)
{
    return qop_apply(generator_basis(s), Q, f, p, h);
}

inline std::array<double, 2> e2_invariants(const QuadraticOperator& Q)
{
    double a = Q(0, 0), b1 = Q(0, 1), b2 = Q(0, 2);
    double c1 = Q(1, 1), c2 = Q(2, 2), c3 = Q(1, 2);
    double t1 = a * (c1 - c2) - (b1 * b1 - b2 * b2);
    double t2 = a * c3 - b1 * b2;
    return {a, std::sqrt(t1 * t1 + 4 * t2 * t2)};
}

struct CanonicalClass {
    std::string label;
    double param = 0;
    double margin = 0;
    bool trivial = false;
    bool non_separating = false;
};

inline CanonicalClass classify_e2(const QuadraticOperator& Q, double tol = 1e-10)
{
    double scale = Q.norm();
    if (scale == 0)
        return {"trivial", 0, 0, true};
    // Casimir P1^2 + P2^2: remove the multiple and test what is left
    double mu = 0.5 * (Q(1, 1) + Q(2, 2));
    QuadraticOperator res = Q;
    res.A[1][1] -= mu;
    res.A[2][2] -= mu;
    if (res.norm() < tol * scale)
        return {"trivial", 0, res.norm() / scale, true};
    auto inv = e2_invariants(Q);
    double I1 = inv[0], I2 = inv[1];
    bool z1 = std::abs(I1) < tol * std::sqrt(scale);
    bool z2 = I2 < tol * scale;
    CanonicalClass r;
    r.margin = std::min(std::abs(I1), I2);
    if (z1 && z2)
        r.label = "cartesian";
    else if (!z1 && z2)
        r.label = "polar";
    else if (z1 && !z2)
        r.label = "parabolic";
    else {
        r.label = "elliptic";
        r.param = std::sqrt(I2) / std::abs(I1); // focal half-distance D
    }
    return r;
}

inline CanonicalClass classify_e11(const QuadraticOperator& Q, double tol = 1e-10)
{
    double scale = Q.norm();
    if (scale == 0)
        return {"trivial", 0, 0, true};
    double a = Q(0, 0), b0 = Q(0, 1), b1 = Q(0, 2);
    double c0 = Q(1, 1), c1 = Q(2, 2), c2 = Q(1, 2);
    // Casimir is P0^2 - P1^2
    {
        double mu = 0.5 * (c0 - c1);
        QuadraticOperator res = Q;
        res.A[1][1] -= mu;
        res.A[2][2] += mu;
        if (res.norm() < tol * scale)
            return {"trivial", 0, res.norm() / scale, true};
    }
    CanonicalClass r;
    if (std::abs(a) > tol * scale) {
        // X = J(C - b b^T / a), classified through its trace-free part N
        double m00 = c0 / a - (b0 / a) * (b0 / a), m11 = c1 / a - (b1 / a) * (b1 / a);
        double m01 = c2 / a - (b0 / a) * (b1 / a);
        double n0 = 0.5 * (m00 + m11); // N diag (Casimir shifts drop out)
        double n1 = m01;
        double nn = std::hypot(n0, n1);
        double msc = 1 + std::abs(m00) + std::abs(m11) + std::abs(m01);
        if (nn < tol * msc) {
            r.label = "Q2";
            r.margin = nn;
            return r;
        }
        double dd = n0 * n0 - n1 * n1;
        r.margin = std::abs(dd) / (nn * nn);
        if (dd > tol * nn * nn) {
            // real distinct: p = eigenvalue on the timelike eigenvector
            double nu = std::sqrt(dd);
            // eigenvector of N=[[n0,n1],[-n1,-n0]] for +nu, stabler of the two row solutions
            double v0 = -n1, v1 = n0 - nu;
            double w0 = n0 + nu, w1 = -n1;
            if (w0 * w0 + w1 * w1 > v0 * v0 + v1 * v1) {
                v0 = w0;
                v1 = w1;
            }
            double jn = v0 * v0 - v1 * v1;
            double pmq = (jn > 0 ? 1.0 : -1.0) * 2 * nu; // p - q
            if (pmq > 0) {
                r.label = "Q8";
                r.param = std::sqrt(pmq);
            } else {
                r.label = "Q9";
                r.param = std::sqrt(-pmq);
            }
        } else if (dd < -tol * nn * nn) {
            r.label = "Q7";
            r.param = std::sqrt(2 * std::sqrt(-dd)); // l
        } else {
            r.label = n0 > 0 ? "Q10" : "Q11";
        }
        return r;
    }
    double bn = std::hypot(b0, b1);
    if (bn > tol * scale) {
        double sdd = b0 * b0 - b1 * b1;
        r.margin = std::abs(sdd) / (bn * bn);
        if (sdd > tol * bn * bn)
            r.label = "Q4";
        else if (sdd < -tol * bn * bn)
            r.label = "Q3";
        else {
            // b lightlike: invariant of C along the opposite null direction
            double sg = (b0 * b1 >= 0) ? 1.0 : -1.0;
            double qt = c0 + c1 - 2 * sg * c2;
            if (std::abs(qt) < tol * scale) {
                r.label = "Q5";
                r.non_separating = true;
            } else {
                r.label = "Q6";
            }
            r.margin = std::abs(qt);
        }
        return r;
    }
    // pure momentum part
    double n0 = 0.5 * (c0 + c1), n1 = c2;
    double nn = std::hypot(n0, n1);
    if (nn < tol * scale)
        return {"trivial", 0, nn / scale, true};
    double dd = n0 * n0 - n1 * n1;
    r.margin = std::abs(dd) / (nn * nn);
    if (dd > tol * nn * nn)
        r.label = "Q1(1,0)";
    else if (dd < -tol * nn * nn)
        r.label = "Q1(0,1)";
    else
        r.label = "Q1(1,1)";
    return r;
}

struct CharacteristicRoots {
    cplx rho1, rho2;
    bool equal = false;
    bool complex_pair = false;
};

inline CharacteristicRoots characteristic_roots(const Space& s, const QuadraticOperator& Q,
                                                const Point3& p)
{
    if (s.curved())
        throw std::invalid_argument("characteristic_roots: flat spaces only");
    GeneratorBasis b = generator_basis(s);
    // principal symbol a_kl = sum_ij A_ij xi^i_k xi^j_l
    double a[2][2] = {{0, 0}, {0, 0}};
    Point3 xi[3];
    for (int i = 0; i < 3; i++)
        xi[i] = b.X[i].coef(p);
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
            if (Q(i, j) == 0)
                continue;
            for (int k = 0; k < 2; k++)
                for (int l = 0; l < 2; l++)
                    a[k][l] += Q(i, j) * 0.5 * (xi[i][k] * xi[j][l] + xi[j][k] * xi[i][l]);
        }
    double g11 = 1, g22 = (s.kind == SpaceKind::E11) ? -1 : 1;
    // det(a - rho g) = 0
    double A2 = g11 * g22;
    double B = -(a[0][0] * g22 + a[1][1] * g11);
    double C = a[0][0] * a[1][1] - a[0][1] * a[0][1];
    cplx disc = cplx(B * B - 4 * A2 * C, 0);
    cplx sq = std::sqrt(disc);
    CharacteristicRoots r;
    r.rho1 = (-B - sq) / (2 * A2);
    r.rho2 = (-B + sq) / (2 * A2);
    double sc = std::abs(r.rho1) + std::abs(r.rho2) + 1e-300;
    r.equal = std::abs(r.rho1 - r.rho2) < 1e-10 * sc;
    r.complex_pair = std::abs(r.rho1.imag()) > 1e-10 * sc;
    if (r.rho1.real() > r.rho2.real())
        std::swap(r.rho1, r.rho2);
    return r;
}

inline double contracted_generator_residual(ContractionPair pair, int index, const Field& f,
                                            const Point3& p, double R, double h)
{
    GeneratorBasis curved = contracted_basis(pair, R);
    GeneratorBasis flat = generator_basis(
        pair == ContractionPair::H2_E11 ? Space::e11() : Space::e2());
    // flat basis order (L/K, P1, P2): pi_1, pi_2 contract onto the momenta
    int flat_index = (index == 2) ? 0 : index + 1;
    return std::abs(generator_apply(curved, index, f, p, h)
                    - generator_apply(flat, flat_index, f, p, h));
}

} // namespace clab
