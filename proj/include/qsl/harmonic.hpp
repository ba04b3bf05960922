// Harmonic analysis checks built on the truncated models: spin-model
// eigenvectors of the coideal generator, the translation-side induced
// representation and its character inductions (principal series), branching
// of the irreducible models over the sphere subalgebra, and the
// channel-by-channel decomposition of the regular representation.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsl/qspecial.hpp"
#include "qsl/repkit.hpp"
#include "qsl/spectral.hpp"

namespace qsl::harmonic {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using qspecial::QParams;
using qspecial::QScalarKind;

namespace detail {

inline MatrixXcd kron(const MatrixXcd& A, const MatrixXcd& B) {
    MatrixXcd R(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            R.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return R;
}

/// Sum over legs of K^{x j} (x) M (x) T^{x (n-1-j)}; the skew-primitive
/// coproduct pattern with left twist K and right twist T.
inline MatrixXcd coproduct_sum(const MatrixXcd& K, const MatrixXcd& M, const MatrixXcd& T,
                               int n) {
    int d = 1;
    MatrixXcd acc = MatrixXcd::Zero(1, 1);
    acc(0, 0) = 0.0;
    // build by extending one leg at a time: acc_n = acc_{n-1} (x) T + K^{x(n-1)} (x) M
    MatrixXcd kpow = MatrixXcd::Identity(1, 1);
    for (int j = 0; j < n; ++j) {
        acc = kron(acc, T) + kron(kpow, M);
        kpow = kron(kpow, K);
        d *= 2;
    }
    return acc;
}

}  // namespace detail

/// The n-fold coproduct action of the coideal generator iB_t on the
/// 2^n-dimensional tensor power of the spin-1/2 space.
inline MatrixXcd spin_ib_matrix(int n, const QParams& p) {
    if (n < 1) throw std::invalid_argument("spin_ib_matrix: n >= 1 required");
    std::complex<double> i(0, 1);
    MatrixXcd K(2, 2), P(2, 2), one = MatrixXcd::Identity(2, 2);
    K << p.q, 0, 0, 1.0 / p.q;
    // i q^{-1/2} (E - FK) in the spin-1/2 model
    P << 0, i, -i, 0;
    double bra = qspecial::q_number(QScalarKind::bracket, p.a, p);
    MatrixXcd M = detail::coproduct_sum(K, P, one, n);
    MatrixXcd kn = MatrixXcd::Identity(1, 1);
    for (int j = 0; j < n; ++j) kn = detail::kron(kn, K);
    return M + bra * kn;
}

struct SpinEigenvector {
    VectorXcd tensor;      // 2^n tensor-product vector, unit norm
    VectorXcd components;  // n+1 coordinates in the top-spin F-orbit basis
    double eigenvalue;     // [a + sign*n]
    double residual;       // eigen-equation residual of the tensor vector
};

/// The tensor product of the displayed spin-1/2 eigenvectors with sliding
/// parameter, expressed in the (n+1)-dimensional top-spin component.
inline SpinEigenvector spin_ib_eigenvectors(int n, int sign, const QParams& p) {
    if (n < 1) throw std::invalid_argument("spin_ib_eigenvectors: n >= 1 required");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    std::complex<double> i(0, 1);

    VectorXcd v = VectorXcd::Ones(1);
    for (int j = 0; j < n; ++j) {
        double b = p.a + sign * (n - 1 - j);
        double nrm = std::sqrt(qspecial::q_number(QScalarKind::dif, b, p));
        VectorXcd leg(2);
        leg << std::pow(p.q, sign * b / 2.0) / nrm,
            -double(sign) * i * std::pow(p.q, -sign * b / 2.0) / nrm;
        VectorXcd nv(v.size() * 2);
        for (int r = 0; r < v.size(); ++r) {
            nv[2 * r] = v[r] * leg[0];
            nv[2 * r + 1] = v[r] * leg[1];
        }
        v = nv;
    }

    MatrixXcd M = spin_ib_matrix(n, p);
    double ev = qspecial::q_number(QScalarKind::bracket, p.a + sign * n, p);
    double res = (M * v - ev * v).norm();

    // top-spin basis: repeated lowering of the highest-weight vector
    MatrixXcd F(2, 2), Ki(2, 2), one = MatrixXcd::Identity(2, 2);
    F << 0, 0, 1.0 / std::sqrt(p.q), 0;
    Ki << 1.0 / p.q, 0, 0, p.q;
    MatrixXcd Fhat = detail::coproduct_sum(one, F, Ki, n);
    VectorXcd w = VectorXcd::Zero(1 << n);
    w[0] = 1.0;
    VectorXcd comp(n + 1);
    for (int k = 0; k <= n; ++k) {
        comp[k] = w.dot(v);  // Eigen's dot conjugates the left argument
        if (k < n) {
            w = Fhat * w;
            w.normalize();
        }
    }
    return {v, comp, ev, res};
}

/// The translation-side induced representation on the lattice c = a + n,
/// n in [-N, N], in the orthonormal e-basis.  kx/kz/ky are only populated
/// by principal_series.
struct InducedRep {
    int N = 0;
    std::complex<double> z{1.0, 0.0};
    bool has_kappa = false;
    std::vector<double> lattice;  // c-values, ascending
    MatrixXcd alpha, beta, gamma, delta;
    MatrixXcd ib;  // diagonal [c]
    MatrixXcd kx, kz, ky;

    int dim() const { return 2 * N + 1; }
};

inline InducedRep induced_translation(int N, const QParams& p) {
    if (N < 3) throw std::invalid_argument("induced_translation: N >= 3 required");
    InducedRep rep;
    rep.N = N;
    int d = 2 * N + 1;
    rep.alpha = MatrixXcd::Zero(d, d);
    rep.beta = MatrixXcd::Zero(d, d);
    rep.gamma = MatrixXcd::Zero(d, d);
    rep.delta = MatrixXcd::Zero(d, d);
    rep.ib = MatrixXcd::Zero(d, d);
    std::complex<double> i(0, 1);
    auto dif = [&](double x) { return qspecial::q_number(QScalarKind::dif, x, p); };
    for (int k = 0; k < d; ++k) {
        double c = p.a + (k - N);
        rep.lattice.push_back(c);
        rep.ib(k, k) = qspecial::q_number(QScalarKind::bracket, c, p);
        double sq = std::sqrt(dif(c));
        if (k + 1 < d) {
            double up = std::sqrt(dif(c + 1)) * sq;
            rep.alpha(k + 1, k) = std::pow(p.q, 0.5 + c) / up;
            rep.delta(k + 1, k) = std::pow(p.q, -0.5 - c) / up;
            rep.beta(k + 1, k) = i * std::pow(p.q, 0.5) / up;
            rep.gamma(k + 1, k) = -i * std::pow(p.q, -0.5) / up;
        }
        if (k > 0) {
            double dn = std::sqrt(dif(c - 1)) * sq;
            rep.alpha(k - 1, k) = std::pow(p.q, 0.5 - c) / dn;
            rep.delta(k - 1, k) = std::pow(p.q, -0.5 + c) / dn;
            rep.beta(k - 1, k) = -i * std::pow(p.q, 0.5) / dn;
            rep.gamma(k - 1, k) = i * std::pow(p.q, -0.5) / dn;
        }
    }
    return rep;
}

/// Largest |M(i,j) - s delta_ij| over the interior window (margin rows and
/// columns trimmed at each end).
inline double interior_residual(const MatrixXcd& M, std::complex<double> s, int margin) {
    int d = static_cast<int>(M.rows());
    double worst = 0.0;
    for (int i = margin; i < d - margin; ++i)
        for (int j = margin; j < d - margin; ++j) {
            std::complex<double> want = (i == j) ? s : std::complex<double>(0.0);
            worst = std::max(worst, std::abs(M(i, j) - want));
        }
    return worst;
}

/// Induction of the character chi_z along the coproduct: the sphere
/// generators become quadratics in the pi_g matrices.
inline InducedRep principal_series(std::complex<double> z, int N, const QParams& p) {
    if (std::abs(std::abs(z) - 1.0) > 1e-12)
        throw std::invalid_argument("principal_series requires |z| = 1");
    InducedRep rep = induced_translation(N, p);
    rep.z = z;
    rep.has_kappa = true;
    std::complex<double> zb = std::conj(z);
    const MatrixXcd &al = rep.alpha, &be = rep.beta, &ga = rep.gamma, &de = rep.delta;
    rep.kx = -p.q * zb * ga * ga + z * al * al - p.t * al * ga;
    rep.kz = p.q * zb * de * ga - z * be * al + p.t * be * ga;
    rep.ky = zb * de * de - z / p.q * be * be + p.t / p.q * be * de;
    return rep;
}

/// Casimir of the induced representation; equals i(z - conj(z)) times the
/// identity on the interior.
inline MatrixXcd principal_casimir(const InducedRep& rep, const QParams& p) {
    if (!rep.has_kappa) throw std::invalid_argument("principal_casimir: no kappa matrices");
    std::complex<double> i(0, 1);
    return i / p.q * rep.kx + (p.q - 1.0 / p.q) * rep.kz * rep.ib - i * p.q * rep.ky;
}

struct BranchingReport {
    repkit::IrrepLabel label;
    std::map<std::string, int> components;  // keys "pi+", "pi-", "chi(-i)", "chi(+i)"
    std::vector<double> z_spectrum;
    bool conclusive = false;
    std::string diagnostic;
};

/// Restriction of a truncated irreducible model to the sphere subalgebra,
/// decided by matching the Z_t spectrum against the two geometric families
/// (and the kernel/character test in the one-dimensional case).
inline BranchingReport branch(const repkit::IrrepLabel& label, int N, const QParams& p,
                              double tol = 1e-6) {
    if (!label.one_dimensional() && N < 40)
        throw std::invalid_argument("branch: N >= 40 required");
    BranchingReport rep;
    rep.label = label;
    repkit::TruncatedRep model = repkit::sl2r_irrep(label, N, p);

    if (label.one_dimensional()) {
        std::complex<double> zval = model["Z"](0, 0), xval = model["X"](0, 0);
        rep.z_spectrum = {zval.real()};
        if (std::abs(zval) < tol && std::abs(std::abs(xval) - 1.0) < tol) {
            std::string key = (xval.imag() < 0) ? "chi(-i)" : "chi(+i)";
            rep.components[key] = 1;
            rep.conclusive = true;
        } else {
            rep.diagnostic = "kernel/character test failed";
        }
        return rep;
    }

    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(model["Z"]);
    if (es.info() != Eigen::Success) {
        rep.diagnostic = "eigensolver failed";
        return rep;
    }
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        rep.z_spectrum.push_back(es.eigenvalues()[i]);

    auto family_value = [&](int sg, int pidx) {
        return sg * std::pow(p.q, 2 * pidx - sg * p.a + 1);
    };
    // heads of the two geometric families decide the multiplicities
    int mult_plus = 0, mult_minus = 0;
    for (double ev : rep.z_spectrum) {
        if (std::abs(ev - family_value(+1, 0)) < tol) ++mult_plus;
        if (std::abs(ev - family_value(-1, 0)) < tol) ++mult_minus;
    }
    // every eigenvalue clear of the accumulation point must sit on a family
    double cutoff = 100.0 * tol;
    for (double ev : rep.z_spectrum) {
        if (std::abs(ev) <= cutoff) continue;
        int sg = (ev > 0) ? +1 : -1;
        bool hit = false;
        for (int pidx = 0; !hit; ++pidx) {
            double fv = family_value(sg, pidx);
            if (std::abs(fv) < std::abs(ev) - tol && std::abs(fv) <= cutoff) break;
            if (std::abs(ev - fv) < tol) hit = true;
            if (pidx > 4 * N) break;
        }
        if (!hit) {
            rep.diagnostic = "unmatched Z eigenvalue " + std::to_string(ev);
            return rep;
        }
    }
    if (mult_plus > 0) rep.components["pi+"] = mult_plus;
    if (mult_minus > 0) rep.components["pi-"] = mult_minus;
    rep.conclusive = !rep.components.empty();
    if (!rep.conclusive) rep.diagnostic = "no family head found in spectrum";
    return rep;
}

struct OutlierMatch {
    double value;
    repkit::IrrepLabel label;
    double weight;  // squared first eigenvector component
};

struct ChannelReport {
    int n = 0;
    int sign = 0;
    int N = 0;
    std::vector<OutlierMatch> outliers;
    double continuous_mass = 0.0;
    std::string continuous_family;  // "L+" for even channels, "L-" for odd
};

/// One channel of the regular representation: diagonalize the twisted
/// Casimir at c = a + n and match every outlier against the discrete and
/// exceptional series Casimir values admissible in this channel.
inline ChannelReport regular_channel(int n, int sign, int N, const QParams& p,
                                     double rel_tol = 1e-5) {
    if (N < 200) throw std::invalid_argument("regular_channel: N >= 200 required");
    double half = 2.0 * p.a;
    if (std::abs(half - std::round(half)) < 1e-9)
        throw std::invalid_argument(
            "regular_channel: a in (1/2)Z degenerates the series separation; "
            "choose a generic a");

    ChannelReport rep;
    rep.n = n;
    rep.sign = sign;
    rep.N = N;
    rep.continuous_family = (((n % 2) + 2) % 2 == 0) ? "L+" : "L-";

    auto J = spectral::twisted_casimir_jacobi(sign, p.a + n, N, p);
    auto ed = spectral::truncated_eigendecomposition(J);

    // admissible candidates: D of the opposite sign with index parity n,
    // E of the channel sign with the floor-shifted parity
    std::vector<repkit::IrrepLabel> candidates;
    int d_parity = ((n % 2) + 2) % 2;
    for (int m = 2; m <= 2 * std::abs(n) + 8; ++m)
        if (m % 2 == d_parity) candidates.push_back(repkit::IrrepLabel::D(-sign, m, p));
    int shift = (sign > 0) ? static_cast<int>(repkit::floor_stable(-2 * p.a))
                           : static_cast<int>(repkit::floor_stable(2 * p.a));
    int e_parity = (((-sign * n - shift) % 2) + 2) % 2;
    for (int m = 1; m <= 2 * std::abs(n) + 2 * static_cast<int>(std::ceil(p.a)) + 8; ++m)
        if (m % 2 == e_parity) candidates.push_back(repkit::IrrepLabel::E(sign, m, p));

    double atom_sum = 0.0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < ed.values.size(); ++i) {
        double v = ed.values[i];
        if (std::abs(v) <= 2.0 + 1e-6) continue;
        if (!std::isnan(prev) && std::abs(v - prev) < rel_tol * std::max(1.0, std::abs(v)))
            throw std::runtime_error("regular_channel: repeated outlier at " +
                                     std::to_string(v));
        prev = v;
        const repkit::IrrepLabel* found = nullptr;
        for (const auto& cand : candidates) {
            if (std::abs(v - cand.lambda) <= rel_tol * std::max(1.0, std::abs(v))) {
                if (found)
                    throw std::runtime_error("regular_channel: ambiguous match for outlier " +
                                             std::to_string(v) + " (" + found->name() +
                                             " vs " + cand.name() + ")");
                found = &cand;
            }
        }
        if (!found)
            throw std::runtime_error("regular_channel: unmatched outlier " + std::to_string(v) +
                                     " in channel n=" + std::to_string(n) +
                                     " sign=" + std::to_string(sign));
        double w = std::norm(ed.vectors(0, i));
        rep.outliers.push_back({v, *found, w});
        atom_sum += w;
    }
    rep.continuous_mass = 1.0 - atom_sum;
    return rep;
}

}  // namespace qsl::harmonic
