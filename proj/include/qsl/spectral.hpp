// Spectral measure of the twisted Casimir element in the GNS representation.
//
// In the canonical orthonormal basis of either GNS block the twisted Casimir
// acts as a Jacobi (symmetric tridiagonal) operator; after the i^p gauge the
// off-diagonal is real and positive.  Its spectral measure at the cyclic
// vector splits into an absolutely continuous part supported on [-2, 2],
// written in terms of infinite q-Pochhammer products, plus finitely many
// atoms outside the band.  This header builds the truncated operator, the
// closed-form measure, and the numerical cross-checks (moments, truncated
// eigendecomposition) used to validate one against the other.

#pragma once

#include <Eigen/Dense>
#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsl/qspecial.hpp"

namespace qsl::spectral {

using qspecial::kInfinity;
using qspecial::QParams;
using qspecial::QScalarKind;

struct JacobiOperator {
    int sign;  // GNS block: +1 or -1
    double c;  // twist parameter
    double q, a;
    std::vector<double> diag;
    std::vector<double> off;  // off[p] couples basis states p and p+1

    int size() const { return static_cast<int>(diag.size()); }
};

/// Truncation to the first N basis states of the gauged twisted Casimir.
inline JacobiOperator twisted_casimir_jacobi(int sign, double c, int N, const QParams& p) {
    assert(sign == 1 || sign == -1);
    if (N < 1) throw std::invalid_argument("twisted_casimir_jacobi: N must be positive");
    JacobiOperator J;
    J.sign = sign;
    J.c = c;
    J.q = p.q;
    J.a = p.a;
    double brc = qspecial::q_number(QScalarKind::brace, c, p);
    J.diag.resize(N);
    J.off.resize(N - 1);
    for (int k = 0; k < N; ++k)
        J.diag[k] = sign * brc * std::pow(p.q, 2 * k - sign * p.a + 1);
    for (int k = 0; k + 1 < N; ++k) {
        double f1 = 1.0 - std::pow(p.q, 2 * k + 2);
        double f2 = 1.0 + std::pow(p.q, -2 * sign * p.a + 2 * k + 2);
        J.off[k] = std::sqrt(f1 * f2);
    }
    return J;
}

struct Atom {
    double location;
    double weight;
    int family;      // +1: right of the band (exponent sign*(a-c)), -1: left (sign*(a+c))
    int k;           // index within the family, outermost atom first
    bool near_edge;  // within 1e-4 of the band edge +-2
};

namespace detail {

inline double poch_real(double x, double base, int n) {
    return qspecial::q_pochhammer(std::complex<double>(x, 0.0), base, n).real();
}

/// Closed-form mass of atom number n in the given family (+1 or -1).
inline double atom_weight(int sign, double c, int family, int n, const QParams& p) {
    double q2 = p.q * p.q;
    double e = (family > 0) ? sign * (p.a - c) : sign * (p.a + c);
    double w = std::pow(p.q, 2 * n) * (1.0 - std::pow(p.q, 2 * e - 4 * n - 2));
    w *= poch_real(-std::pow(p.q, 2 * sign * p.a - 2 * n), q2, n);
    w *= poch_real(std::pow(p.q, 2 * e - 2 * n), q2, kInfinity);
    w /= poch_real(q2, q2, n);
    if (family > 0) {
        w /= poch_real(-std::pow(p.q, -2 * sign * c), q2, kInfinity);
        w /= poch_real(-std::pow(p.q, 2 + 2 * sign * c), q2, n);
    } else {
        w /= poch_real(-std::pow(p.q, 2 * sign * c), q2, kInfinity);
        w /= poch_real(-std::pow(p.q, 2 - 2 * sign * c), q2, n);
    }
    return w;
}

}  // namespace detail

/// Atoms of the measure, outermost first within each family.  The right
/// family exists when sign*(a-c) > 1, sitting at +(q^x + q^{-x}) for
/// x = sign*(a-c) - 2k - 1 > 0; the left family mirrors it with a+c and a
/// minus sign on the location.
inline std::vector<Atom> predicted_atoms(int sign, double c, const QParams& p) {
    std::vector<Atom> atoms;
    auto emit = [&](int family) {
        double e = (family > 0) ? sign * (p.a - c) : sign * (p.a + c);
        // exponents below 1e-9 are the band edge itself up to floating slop
        // (integer a - c cases); their mass vanishes linearly with the
        // exponent, so dropping them changes nothing at working tolerance
        for (int k = 0; 2 * k < e - 1.0 - 1e-9; ++k) {
            double x = e - 2 * k - 1;
            double loc = family * qspecial::q_number(QScalarKind::dif, x, p);
            Atom atom;
            atom.location = loc;
            atom.weight = detail::atom_weight(sign, c, family, k, p);
            atom.family = family;
            atom.k = k;
            atom.near_edge = std::abs(std::abs(loc) - 2.0) < 1e-4;
            atoms.push_back(atom);
        }
    };
    emit(+1);
    emit(-1);
    return atoms;
}

/// Density of the continuous part at lambda = 2 cos(theta), theta in (0, pi).
inline double density_theta(double theta, int sign, double c, const QParams& p) {
    double q2 = p.q * p.q;
    using C = std::complex<double>;
    C eip = std::polar(1.0, theta);
    C e2ip = std::polar(1.0, 2.0 * theta);
    double num = (qspecial::q_pochhammer(e2ip, q2, kInfinity) *
                  qspecial::q_pochhammer(std::conj(e2ip), q2, kInfinity))
                     .real();
    num *= detail::poch_real(-std::pow(p.q, -2 * sign * p.a + 2), q2, kInfinity);
    num *= detail::poch_real(q2, q2, kInfinity);
    C d1 = qspecial::q_pochhammer(std::pow(p.q, 1 - sign * (p.a - c)) * eip, q2, kInfinity);
    C d2 = qspecial::q_pochhammer(-std::pow(p.q, 1 - sign * (p.a + c)) * eip, q2, kInfinity);
    double den = std::norm(d1) * std::norm(d2);
    return num / (4.0 * std::numbers::pi * std::abs(std::sin(theta)) * den);
}

namespace detail {

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on P_n).
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

}  // namespace detail

/// The full measure: atoms plus a quadrature discretization of the
/// continuous part.  node_weight[i] already includes the lambda = 2 cos theta
/// Jacobian, so integrals against the continuous part are plain dot products
/// over the node list.
struct SpectralMeasure {
    int sign;
    double c;
    std::vector<Atom> atoms;
    std::vector<double> node_lambda;   // quadrature abscissae in (-2, 2)
    std::vector<double> node_density;  // g(lambda) there
    std::vector<double> node_weight;   // quadrature weight times g(lambda)
    double continuous_mass = 0.0;
    double atomic_mass = 0.0;
    double total_mass = 0.0;

    double moment(int k) const {
        double m = 0.0;
        for (std::size_t i = 0; i < node_lambda.size(); ++i)
            m += node_weight[i] * std::pow(node_lambda[i], k);
        for (const Atom& a : atoms) m += a.weight * std::pow(a.location, k);
        return m;
    }
};

inline SpectralMeasure spectral_measure(int sign, double c, const QParams& p, int nodes = 2048) {
    SpectralMeasure mu;
    mu.sign = sign;
    mu.c = c;
    mu.atoms = predicted_atoms(sign, c, p);
    for (const Atom& a : mu.atoms) mu.atomic_mass += a.weight;

    std::vector<double> x, w;
    detail::gauss_legendre(nodes, x, w);
    mu.node_lambda.resize(nodes);
    mu.node_density.resize(nodes);
    mu.node_weight.resize(nodes);
    for (int i = 0; i < nodes; ++i) {
        double theta = 0.5 * std::numbers::pi * (x[i] + 1.0);
        double wt = 0.5 * std::numbers::pi * w[i];
        double g = density_theta(theta, sign, c, p);
        // lambda = 2 cos theta, d lambda = -2 sin theta d theta; orientation
        // flips so the weight stays positive
        mu.node_lambda[i] = 2.0 * std::cos(theta);
        mu.node_density[i] = g;
        mu.node_weight[i] = wt * g * 2.0 * std::sin(theta);
        mu.continuous_mass += mu.node_weight[i];
    }
    mu.total_mass = mu.continuous_mass + mu.atomic_mass;
    return mu;
}

/// Moments (J^k)_{00} of the truncated operator, k = 0..kmax.  Exact for the
/// untruncated operator as long as kmax < size (the k-th moment only reaches
/// bandwidth k).
inline std::vector<double> jacobi_moments(const JacobiOperator& J, int kmax) {
    int n = J.size();
    if (kmax >= n) throw std::invalid_argument("jacobi_moments: truncation too small for kmax");
    std::vector<double> v(n, 0.0), nv(n);
    v[0] = 1.0;
    std::vector<double> m(kmax + 1);
    m[0] = 1.0;
    for (int k = 1; k <= kmax; ++k) {
        for (int i = 0; i < n; ++i) {
            double acc = J.diag[i] * v[i];
            if (i > 0) acc += J.off[i - 1] * v[i - 1];
            if (i + 1 < n) acc += J.off[i] * v[i + 1];
            nv[i] = acc;
        }
        v.swap(nv);
        m[k] = v[0];
    }
    return m;
}

namespace detail {

// Extended-precision helpers for the moment comparison.  When atoms sit far
// outside the band (locations up to q^{-|a-c|+1}) the high moments reach
// 1e14 and beyond, so a double-precision evaluation of either side caps the
// achievable absolute agreement near 1e-2.  The atom locations, atom
// weights, and matrix entries are cheap closed forms, so both large sides
// are evaluated in 200-digit floats; only the O(1)-scale continuous part
// stays on the double quadrature grid.
using HP = qspecial::detail::HP;

// All exponent arithmetic happens in extended precision: the identity
// between the measure and the matrix moments holds exactly for the real
// numbers the double parameters represent, so rounding the exponents in
// double first would reintroduce a relative 1e-16 error that the huge atom
// locations amplify.
inline HP hp_powq(double q, const HP& e) { return pow(HP(q), e); }

inline HP hp_poch(HP x, const HP& base, int n) {
    HP prod(1);
    if (n == kInfinity) {
        while (abs(x) >= HP(1e-45)) {
            prod *= HP(1) - x;
            x *= base;
        }
        return prod;
    }
    for (int k = 0; k < n; ++k) {
        prod *= HP(1) - x;
        x *= base;
    }
    return prod;
}

inline HP hp_atom_exponent(const Atom& atom, int sign, double c, double a) {
    return (atom.family > 0) ? HP(sign) * (HP(a) - HP(c)) : HP(sign) * (HP(a) + HP(c));
}

inline HP hp_atom_location(const Atom& atom, int sign, double c, double q, double a) {
    HP x = hp_atom_exponent(atom, sign, c, a) - HP(2 * atom.k + 1);
    return HP(atom.family) * (hp_powq(q, x) + hp_powq(q, -x));
}

inline HP hp_atom_weight(const Atom& atom, int sign, double c, double q, double a) {
    HP q2 = HP(q) * HP(q);
    int n = atom.k;
    HP e = hp_atom_exponent(atom, sign, c, a);
    HP sa = HP(sign) * HP(a), sc = HP(sign) * HP(c);
    HP w = hp_powq(q, HP(2 * n)) * (HP(1) - hp_powq(q, HP(2) * e - HP(4 * n + 2)));
    w *= hp_poch(-hp_powq(q, HP(2) * sa - HP(2 * n)), q2, n);
    w *= hp_poch(hp_powq(q, HP(2) * e - HP(2 * n)), q2, kInfinity);
    w /= hp_poch(q2, q2, n);
    if (atom.family > 0) {
        w /= hp_poch(-hp_powq(q, -HP(2) * sc), q2, kInfinity);
        w /= hp_poch(-hp_powq(q, HP(2) + HP(2) * sc), q2, n);
    } else {
        w /= hp_poch(-hp_powq(q, HP(2) * sc), q2, kInfinity);
        w /= hp_poch(-hp_powq(q, HP(2) - HP(2) * sc), q2, n);
    }
    return w;
}

}  // namespace detail

/// Residuals |<e_0, J^k e_0> - integral of lambda^k d mu| for k = 0..kmax.
/// Matrix moments and atom contributions are evaluated in extended
/// precision (see detail above); the continuous part uses the measure's
/// quadrature grid.
inline std::vector<double> moment_check(const SpectralMeasure& mu, const JacobiOperator& J,
                                        int kmax) {
    using detail::HP;
    int n = kmax + 2;
    // rebuild the tridiagonal entries in extended precision
    HP qa(J.a), qc(J.c);
    HP brc = detail::hp_powq(J.q, qc) - detail::hp_powq(J.q, -qc);
    std::vector<HP> d(n), o(n - 1);
    for (int k = 0; k < n; ++k)
        d[k] = HP(J.sign) * brc * detail::hp_powq(J.q, HP(2 * k + 1) - HP(J.sign) * qa);
    for (int k = 0; k + 1 < n; ++k) {
        HP f1 = HP(1) - detail::hp_powq(J.q, HP(2 * k + 2));
        HP f2 = HP(1) + detail::hp_powq(J.q, HP(2 * k + 2) - HP(2 * J.sign) * qa);
        o[k] = sqrt(f1 * f2);
    }
    std::vector<HP> v(n, HP(0)), nv(n);
    v[0] = HP(1);
    std::vector<HP> mop(kmax + 1);
    mop[0] = HP(1);
    for (int k = 1; k <= kmax; ++k) {
        for (int i = 0; i < n; ++i) {
            HP acc = d[i] * v[i];
            if (i > 0) acc += o[i - 1] * v[i - 1];
            if (i + 1 < n) acc += o[i] * v[i + 1];
            nv[i] = acc;
        }
        v.swap(nv);
        mop[k] = v[0];
    }

    std::vector<double> res(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        HP meas(0);
        for (const Atom& a : mu.atoms) {
            HP loc = detail::hp_atom_location(a, mu.sign, mu.c, J.q, J.a);
            HP wt = detail::hp_atom_weight(a, mu.sign, mu.c, J.q, J.a);
            meas += wt * pow(loc, k);
        }
        double cont = 0.0;
        for (std::size_t i = 0; i < mu.node_lambda.size(); ++i)
            cont += mu.node_weight[i] * std::pow(mu.node_lambda[i], k);
        meas += HP(cont);
        res[k] = abs(mop[k] - meas).convert_to<double>();
    }
    return res;
}

struct EigenDecomposition {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // columns, orthonormal
};

inline EigenDecomposition truncated_eigendecomposition(const JacobiOperator& J) {
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(J.diag.data(), J.size());
    Eigen::VectorXd e = J.size() > 1
                            ? Eigen::Map<const Eigen::VectorXd>(J.off.data(), J.size() - 1)
                            : Eigen::VectorXd(0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(d, e);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("truncated_eigendecomposition: solver failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace qsl::spectral
