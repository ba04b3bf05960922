// Truncated matrix models: sphere irreps and characters, the eight
// unitary representation families of the q-deformed SL(2,R), the GNS
// model of the invariant state, the Heisenberg action, and the
// decoupled two-leg representations.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsl/hopf.hpp"
#include "qsl/qspecial.hpp"

namespace qsl::repkit {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using qspecial::QParams;
using qspecial::QScalarKind;
using qspecial::q_number;

/// Finite window of a representation: one matrix per generator. Defining
/// relations hold exactly only away from the truncation edge; `margin`
/// records how many boundary indices carry no exactness claim.
struct TruncatedRep {
    std::string algebra;  // registry name of the represented algebra
    std::string basis;    // human-readable window description
    int margin = 1;
    std::map<std::string, MatrixXcd> gen;
    std::vector<double> lattice;  // c-values, for iB_t-diagonal models

    int dim() const { return gen.empty() ? 0 : static_cast<int>(gen.begin()->second.rows()); }

    const MatrixXcd& operator[](const std::string& g) const { return gen.at(g); }

    /// Evaluate a polynomial of the represented algebra as a matrix.
    MatrixXcd apply(const ncalg::NCPoly& x, const QParams& p) const {
        int N = dim();
        MatrixXcd acc = MatrixXcd::Zero(N, N);
        for (auto& [w, c] : x.terms) {
            MatrixXcd prod = MatrixXcd::Identity(N, N);
            for (int g : w) prod = prod * gen.at(x.alg->gens[g]);
            acc += c.eval(p.q, p.a) * prod;
        }
        return acc;
    }
};

namespace detail {

inline int bandwidth(const MatrixXcd& m) {
    int n = static_cast<int>(m.rows()), b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(m(i, j)) > 1e-14) b = std::max(b, std::abs(i - j));
    return b;
}

}  // namespace detail

/// Max interior residual of every defining relation, as matrix identities.
/// `interior` marks which basis indices count as interior; by default all
/// indices at distance >= margin * (relation bandwidth) from the window edge.
inline double relation_residual(const TruncatedRep& rep, const QParams& p,
                                const std::vector<bool>* interior = nullptr) {
    const ncalg::AlgebraSpec& A = ncalg::Registry::instance().get(rep.algebra);
    int N = rep.dim();
    double worst = 0.0;
    for (auto& [lhs, rhs] : A.rules) {
        const MatrixXcd& g1 = rep.gen.at(A.gens[lhs.first]);
        const MatrixXcd& g2 = rep.gen.at(A.gens[lhs.second]);
        MatrixXcd diff = g1 * g2;
        // entrywise magnitude scale, so that residuals stay meaningful where
        // localized generators (Z^{-1}) blow entries up to q^{-2p}
        Eigen::MatrixXd scale = g1.cwiseAbs() * g2.cwiseAbs();
        for (auto& [w, c] : rhs) {
            MatrixXcd prod = MatrixXcd::Identity(N, N);
            for (int g : w) prod = prod * rep.gen.at(A.gens[g]);
            diff -= c.eval(p.q, p.a) * prod;
            scale += std::abs(c.eval(p.q, p.a)) * prod.cwiseAbs();
        }
        int band = detail::bandwidth(g1) + detail::bandwidth(g2);
        int trim = rep.margin * std::max(band, 1);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                bool ok = interior ? ((*interior)[i] && (*interior)[j])
                                   : (i >= trim && i < N - trim && j >= trim && j < N - trim);
                if (ok)
                    worst = std::max(worst, std::abs(diff(i, j)) / std::max(1.0, scale(i, j)));
            }
    }
    return worst;
}

/// Max interior deviation of the star structure from the matrix adjoint.
inline double star_residual(const TruncatedRep& rep, const QParams& p,
                            const std::vector<bool>* interior = nullptr) {
    const ncalg::AlgebraSpec& A = ncalg::Registry::instance().get(rep.algebra);
    int N = rep.dim();
    double worst = 0.0;
    for (size_t g = 0; g < A.gens.size(); ++g) {
        ncalg::NCPoly sg(A);
        sg.terms = A.star_table[g];
        MatrixXcd expect = rep.apply(sg, p);
        MatrixXcd diff = rep.gen.at(A.gens[g]).adjoint() - expect;
        int trim = rep.margin * std::max(detail::bandwidth(expect), 1);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                bool ok = interior ? ((*interior)[i] && (*interior)[j])
                                   : (i >= trim && i < N - trim && j >= trim && j < N - trim);
                if (ok) worst = std::max(worst, std::abs(diff(i, j)));
            }
    }
    return worst;
}

/// Irreducible sphere representation pi_sign on e_0..e_{N-1}:
///   Z e_p = sign q^{2p - sign a + 1} e_p,
///   Y e_p = sqrt((1 - q^{2p+2})(q^{-2 sign a + 2p+2} + 1)) e_{p+1},  X = Y^*.
inline TruncatedRep podles_irrep(int sign, int N, const QParams& p) {
    TruncatedRep rep;
    rep.algebra = "podles";
    rep.basis = "e_p, p in [0," + std::to_string(N) + ")";
    rep.margin = 1;
    MatrixXcd Z = MatrixXcd::Zero(N, N), Zi = MatrixXcd::Zero(N, N);
    MatrixXcd Y = MatrixXcd::Zero(N, N), X = MatrixXcd::Zero(N, N);
    for (int k = 0; k < N; ++k) {
        double z = sign * std::pow(p.q, 2 * k - sign * p.a + 1);
        Z(k, k) = z;
        Zi(k, k) = 1.0 / z;
        if (k + 1 < N) {
            double v = std::sqrt((1.0 - std::pow(p.q, 2 * k + 2)) *
                                 (std::pow(p.q, -2 * sign * p.a + 2 * k + 2) + 1.0));
            Y(k + 1, k) = v;
            X(k, k + 1) = v;
        }
    }
    rep.gen = {{"Y", Y}, {"X", X}, {"Z", Z}, {"Zi", Zi}};
    return rep;
}

/// One-dimensional character chi_z: Z -> 0, X -> z, Y -> conj(z).
inline TruncatedRep character_rep(std::complex<double> z) {
    if (std::abs(std::abs(z) - 1.0) > 1e-12)
        throw std::invalid_argument("character_rep requires |z| = 1");
    TruncatedRep rep;
    rep.algebra = "podles";
    rep.basis = "one-dimensional";
    rep.margin = 0;
    auto m = [](std::complex<double> v) {
        MatrixXcd m1(1, 1);
        m1(0, 0) = v;
        return m1;
    };
    rep.gen = {{"X", m(z)}, {"Y", m(std::conj(z))}, {"Z", m(0.0)}};
    return rep;
}

enum class Family { Lplus, Lminus, Dplus, Dminus, Eplus, Eminus, Tplus, Tminus };

inline double floor_stable(double x) { return std::floor(x + 1e-12); }

/// Label of an irreducible admissible unitary representation: family tag,
/// Casimir value, and the iB_t-eigenvalue lattice.
struct IrrepLabel {
    Family family;
    double lambda = 0.0;  // Casimir value
    int n = 0;            // series index for D/E

    static IrrepLabel L(int sign, double lam) {
        return {sign > 0 ? Family::Lplus : Family::Lminus, lam, 0};
    }
    static IrrepLabel D(int sign, int n, const QParams& p) {
        return {sign > 0 ? Family::Dplus : Family::Dminus,
                q_number(QScalarKind::dif, n - 1, p), n};
    }
    static IrrepLabel E(int sign, int n, const QParams& p) {
        double lam = sign > 0
                         ? -q_number(QScalarKind::dif, 2 * p.a + floor_stable(-2 * p.a) + n - 1, p)
                         : -q_number(QScalarKind::dif, -2 * p.a + floor_stable(2 * p.a) + n - 1, p);
        return {sign > 0 ? Family::Eplus : Family::Eminus, lam, n};
    }
    static IrrepLabel T(int sign, const QParams& p) {
        return {sign > 0 ? Family::Tplus : Family::Tminus,
                (sign > 0 ? 1.0 : -1.0) * q_number(QScalarKind::dif, 1, p), 0};
    }

    bool one_dimensional() const { return family == Family::Tplus || family == Family::Tminus; }
    bool two_sided() const { return family == Family::Lplus || family == Family::Lminus; }

    /// +1 when the lattice extends upward from its base point, -1 downward.
    int direction() const {
        switch (family) {
            case Family::Dplus:
            case Family::Eplus: return +1;
            case Family::Dminus:
            case Family::Eminus: return -1;
            default: return +1;
        }
    }

    /// Base point of the iB_t-eigenvalue lattice (a c-value).
    double base_point(const QParams& p) const {
        switch (family) {
            case Family::Lplus: return p.a;
            case Family::Lminus: return p.a + 1;
            case Family::Dplus: return p.a + n;
            case Family::Dminus: return p.a - n;
            case Family::Eplus: return p.a + floor_stable(-2 * p.a) + n;
            case Family::Eminus: return p.a - floor_stable(2 * p.a) - n;
            case Family::Tplus: return p.a;
            case Family::Tminus: return -p.a;
        }
        return p.a;
    }

    /// Sign branch of the tridiagonal action formulas: + for L, D-, E+;
    /// - for D+, E-.
    int branch() const {
        switch (family) {
            case Family::Dplus:
            case Family::Eminus: return -1;
            default: return +1;
        }
    }

    std::string name() const {
        auto num = [](double v) {
            std::string s = std::to_string(v);
            while (s.size() > 1 && s.back() == '0') s.pop_back();
            if (!s.empty() && s.back() == '.') s.pop_back();
            return s;
        };
        switch (family) {
            case Family::Lplus: return "L+:" + num(lambda);
            case Family::Lminus: return "L-:" + num(lambda);
            case Family::Dplus: return "D+:" + std::to_string(n);
            case Family::Dminus: return "D-:" + std::to_string(n);
            case Family::Eplus: return "E+:" + std::to_string(n);
            case Family::Eminus: return "E-:" + std::to_string(n);
            case Family::Tplus: return "T+";
            case Family::Tminus: return "T-";
        }
        return "?";
    }

    /// Parse a textual label: "L+:0.5", "D-:3", "E+:1", "T-".
    static IrrepLabel parse(const std::string& text, const QParams& p) {
        if (text.size() < 2 || (text[1] != '+' && text[1] != '-'))
            throw std::invalid_argument("bad label '" + text + "': expected F+ or F- prefix");
        int sign = text[1] == '+' ? +1 : -1;
        char fam = text[0];
        std::string arg = text.size() > 3 && text[2] == ':' ? text.substr(3) : "";
        if (fam == 'T') {
            if (!arg.empty()) throw std::invalid_argument("T labels take no parameter");
            return T(sign, p);
        }
        if (arg.empty()) throw std::invalid_argument("label '" + text + "' needs a parameter");
        std::size_t used = 0;
        if (fam == 'L') {
            double lam = std::stod(arg, &used);
            if (used != arg.size()) throw std::invalid_argument("bad L parameter '" + arg + "'");
            return L(sign, lam);
        }
        int n = std::stoi(arg, &used);
        if (used != arg.size()) throw std::invalid_argument("bad series index '" + arg + "'");
        if (n < 1) throw std::invalid_argument("D/E series require n >= 1");
        if (fam == 'D') return D(sign, n, p);
        if (fam == 'E') return E(sign, n, p);
        throw std::invalid_argument("unknown family '" + std::string(1, fam) + "'");
    }

    /// Throws with the violated classification window when inadmissible.
    void validate(const QParams& p) const {
        auto dif = [&](double x) { return q_number(QScalarKind::dif, x, p); };
        switch (family) {
            case Family::Lplus: {
                double s = std::ceil(p.a) - p.a;
                double lo = -dif(1 - 2 * s), hi = dif(1);
                if (!(lambda > lo && lambda < hi))
                    throw std::invalid_argument("L+ requires lambda in (" + std::to_string(lo) +
                                                ", " + std::to_string(hi) + "), got " +
                                                std::to_string(lambda));
                break;
            }
            case Family::Lminus: {
                double s = std::ceil(p.a - 0.5) - (p.a - 0.5);
                double lo = -dif(1 - 2 * s), hi = 2.0;
                if (!(lambda > lo && lambda < hi))
                    throw std::invalid_argument("L- requires lambda in (" + std::to_string(lo) +
                                                ", " + std::to_string(hi) + "), got " +
                                                std::to_string(lambda));
                break;
            }
            case Family::Dplus:
            case Family::Dminus:
            case Family::Eplus:
            case Family::Eminus:
                if (n < 1) throw std::invalid_argument("D/E series require n >= 1");
                break;
            case Family::Tplus: break;
            case Family::Tminus: {
                double h = 2 * p.a;
                if (std::abs(h - std::round(h)) > 1e-9)
                    throw std::invalid_argument("T- only arises for a in (1/2)Z");
                break;
            }
        }
    }
};

/// Tridiagonal model of an infinite-dimensional family member, in the
/// orthonormal basis obtained from the orthogonal basis xi_{[c]} by the
/// norm recursion that self-adjointness of Z_t imposes. Window: 2N+1
/// lattice points (two-sided families) or N points (one-sided).
inline TruncatedRep sl2r_irrep(const IrrepLabel& label, int N, const QParams& p) {
    label.validate(p);
    TruncatedRep rep;
    rep.algebra = "podles";
    rep.margin = 1;

    auto bracket = [&](double x) { return q_number(QScalarKind::bracket, x, p); };

    if (label.one_dimensional()) {
        int sg = (label.family == Family::Tplus) ? +1 : -1;
        rep.basis = "one-dimensional";
        rep.margin = 0;
        auto m = [](std::complex<double> v) {
            MatrixXcd m1(1, 1);
            m1(0, 0) = v;
            return m1;
        };
        std::complex<double> i(0, 1);
        rep.gen = {{"X", m(-double(sg) * i)},
                   {"Y", m(double(sg) * i)},
                   {"Z", m(0.0)},
                   {"iB", m(bracket(sg * p.a))}};
        rep.lattice = {double(sg) * p.a};
        return rep;
    }

    auto dif = [&](double x) { return q_number(QScalarKind::dif, x, p); };
    auto brc = [&](double x) { return q_number(QScalarKind::brace, x, p); };
    const double lam = label.lambda;
    const int beta = label.branch();

    // ascending lattice of c-values; closed_lo / closed_hi mark one-sided ends
    std::vector<double> cv;
    int base_idx;
    if (label.two_sided()) {
        for (int k = -N; k <= N; ++k) cv.push_back(label.base_point(p) + 2 * k);
        base_idx = N;
    } else {
        double b0 = label.base_point(p);
        int dir = label.direction();
        for (int j = 0; j < N; ++j) cv.push_back(dir > 0 ? b0 + 2 * j : b0 - 2 * (N - 1 - j));
        base_idx = dir > 0 ? 0 : N - 1;
    }
    int M = static_cast<int>(cv.size());
    rep.lattice = cv;
    rep.basis = "e_[c], c in [" + std::to_string(cv.front()) + ", " + std::to_string(cv.back()) + "]";

    // shared up/down numerators of the displayed tridiagonal formulas
    auto Aup = [&](double c) { return (dif(p.a + beta * (c + 1)) + beta * lam) / (dif(c) * dif(c + 1)); };
    auto Bdn = [&](double c) { return (dif(p.a - beta * (c - 1)) - beta * lam) / (dif(c - 1) * dif(c)); };

    // norm ratios r_j = |xi_{j+1}|^2 / |xi_j|^2 from self-adjointness of Z_t
    std::vector<double> r(M - 1);
    for (int j = 0; j + 1 < M; ++j) {
        double num = Bdn(cv[j] + 2), den = Aup(cv[j]);
        if (!(den != 0.0) || !std::isfinite(num / den) || num / den <= 0.0)
            throw std::invalid_argument("norm recursion failed for " + label.name() +
                                        ": non-positive ratio at c = " + std::to_string(cv[j]) +
                                        " (label outside the classification windows)");
        r[j] = num / den;
    }

    MatrixXcd iX = MatrixXcd::Zero(M, M), Z = MatrixXcd::Zero(M, M), iY = MatrixXcd::Zero(M, M);
    MatrixXcd iB = MatrixXcd::Zero(M, M);
    for (int j = 0; j < M; ++j) {
        double c = cv[j];
        double A = Aup(c), B = Bdn(c);
        // the lambda / <a> cross-coefficient must be q + q^{-1}: it is the
        // unique value for which the Casimir acts as the scalar lambda
        double cross = dif(1);
        double midXY = (brc(c) * brc(p.a) + cross * lam) / (dif(c - 1) * dif(c + 1));
        double midZ = (-cross * brc(p.a) + brc(c) * lam) / (dif(c - 1) * dif(c + 1));
        iX(j, j) = midXY;
        Z(j, j) = midZ;
        iY(j, j) = -midXY;
        iB(j, j) = bracket(c);
        if (j + 1 < M) {
            double s = std::sqrt(r[j]);
            iX(j + 1, j) = std::pow(p.q, c + 1) * A * s;
            Z(j + 1, j) = -A * s;
            iY(j + 1, j) = std::pow(p.q, -c - 1) * A * s;
        }
        if (j > 0) {
            double s = 1.0 / std::sqrt(r[j - 1]);
            iX(j - 1, j) = -std::pow(p.q, -c + 1) * B * s;
            Z(j - 1, j) = -B * s;
            iY(j - 1, j) = -std::pow(p.q, c - 1) * B * s;
        }
    }
    (void)base_idx;
    std::complex<double> mi(0, -1);
    rep.gen = {{"X", mi * iX}, {"Y", mi * iY}, {"Z", Z}, {"iB", iB}};
    return rep;
}

/// Casimir  Omega = i q^{-1} X + (q - q^{-1}) Z iB - i q Y.
inline MatrixXcd casimir_matrix(const TruncatedRep& rep, const QParams& p) {
    std::complex<double> i(0, 1);
    return (i / p.q) * rep["X"] + (p.q - 1.0 / p.q) * rep["Z"] * rep["iB"] -
           (i * p.q) * rep["Y"];
}

/// Max interior deviation from unitarizability: Z = Z*, X* = Y, iB = iB*.
inline double unitarity_residual(const TruncatedRep& rep) {
    int N = rep.dim();
    int trim = rep.margin;
    MatrixXcd dz = rep["Z"].adjoint() - rep["Z"];
    MatrixXcd dx = rep["X"].adjoint() - rep["Y"];
    MatrixXcd db = rep["iB"].adjoint() - rep["iB"];
    double worst = 0.0;
    for (int i = trim; i < N - trim; ++i)
        for (int j = trim; j < N - trim; ++j)
            worst = std::max({worst, std::abs(dz(i, j)), std::abs(dx(i, j)), std::abs(db(i, j))});
    return worst;
}

/// GNS model of the invariant state Phi(b) = Tr(pi(b) T) on the two
/// diagonal N x N grids (H_+ tensor H_+) + (H_- tensor H_-).
struct GnsModel {
    int N;
    QParams p;
    TruncatedRep rep_plus, rep_minus;
    VectorXd weight_plus, weight_minus;  // trace weights of T per block
    VectorXd xi_plus, xi_minus;          // GNS-vector diagonal coefficients

    GnsModel(int N_, const QParams& p_)
        : N(N_), p(p_), rep_plus(podles_irrep(+1, N_, p_)), rep_minus(podles_irrep(-1, N_, p_)) {
        double pref = (1.0 / p.q - p.q) / q_number(QScalarKind::dif, p.a, p);
        weight_plus.resize(N);
        weight_minus.resize(N);
        xi_plus.resize(N);
        xi_minus.resize(N);
        for (int k = 0; k < N; ++k) {
            weight_plus[k] = pref * std::pow(p.q, 2 * k - p.a + 1);
            weight_minus[k] = pref * std::pow(p.q, 2 * k + p.a + 1);
            xi_plus[k] = std::sqrt(pref) * std::pow(p.q, k - (p.a - 1) / 2);
            xi_minus[k] = std::sqrt(pref) * std::pow(p.q, k + (p.a + 1) / 2);
        }
    }

    /// The invariant state as a truncated trace.
    std::complex<double> phi(const ncalg::NCPoly& b) const {
        MatrixXcd mp = rep_plus.apply(b, p), mm = rep_minus.apply(b, p);
        std::complex<double> acc = 0.0;
        for (int k = 0; k < N; ++k) acc += mp(k, k) * weight_plus[k] + mm(k, k) * weight_minus[k];
        return acc;
    }

    /// GNS coordinates of b: the vector (pi(b) tensor 1) xi_T, laid out as
    /// [+ block row-major (p, k); - block row-major].
    VectorXcd vectorize(const ncalg::NCPoly& b, double overflow_tol = 1e-10) const {
        size_t deg = 0;
        double maxc = 0.0;
        for (auto& [w, c] : b.terms) {
            deg = std::max(deg, w.size());
            maxc = std::max(maxc, std::abs(c.eval(p.q, p.a)));
        }
        if (static_cast<int>(deg) >= N ||
            maxc * std::pow(p.q, 2.0 * (N - static_cast<int>(deg))) > overflow_tol)
            throw std::runtime_error("GNS truncation overflow: degree " + std::to_string(deg) +
                                     " support exceeds window N = " + std::to_string(N));
        MatrixXcd mp = rep_plus.apply(b, p), mm = rep_minus.apply(b, p);
        VectorXcd v(2 * N * N);
        for (int r = 0; r < N; ++r)
            for (int k = 0; k < N; ++k) {
                v[r * N + k] = mp(r, k) * xi_plus[k];
                v[N * N + r * N + k] = mm(r, k) * xi_minus[k];
            }
        return v;
    }
};

inline GnsModel gns_model(int N, const QParams& p) { return GnsModel(N, p); }

/// Heisenberg action on GNS coordinates: sphere elements multiply from the
/// left, enveloping elements act by the pairing-twisted translation.
inline VectorXcd heisenberg_action(const ncalg::NCPoly& x, const ncalg::NCPoly& b,
                                   const GnsModel& model) {
    if (x.alg->name == "podles") return model.vectorize(x * b);
    return model.vectorize(hopf::translation_action(x, b));
}

namespace detail {

inline MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    int n = static_cast<int>(a.rows()), m = static_cast<int>(b.rows());
    MatrixXcd r(n * m, n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.block(i * m, j * m, m, m) = a(i, j) * b;
    return r;
}

}  // namespace detail

/// Decoupled representation on the N x N grid of one sign block:
///   K = Z^{-1} ox Z,
///   (q^{-1}-q) E = q^{-1/2} Z^{-1}X ox 1 - q^{1/2} Z^{-1} ox Y,
///   (q^{-1}-q) F = q^{-1/2} Y ox Z^{-1} - q^{1/2} 1 ox X Z^{-1},
///   (q-q^{-1}) iB = i(q^{-1}Y - qX)Z^{-1} ox 1 + Z^{-1} ox (i(Y-X) + s Z).
/// Sphere generators act on the first leg.
inline TruncatedRep pi_tilde(int sign, double s_param, int N, const QParams& p) {
    TruncatedRep leg = podles_irrep(sign, N, p);
    const MatrixXcd &Z1 = leg["Z"], &Zi = leg["Zi"], &X1 = leg["X"], &Y1 = leg["Y"];
    MatrixXcd I = MatrixXcd::Identity(N, N);
    std::complex<double> i(0, 1);
    double dq = 1.0 / p.q - p.q;  // q^{-1} - q
    double sq = std::sqrt(p.q);

    TruncatedRep rep;
    rep.algebra = "uq-su2";
    rep.basis = "xi_{p,k}, p,k in [0," + std::to_string(N) + ")^2, sign " +
                (sign > 0 ? "+" : "-");
    rep.margin = 2;
    using detail::kron;
    rep.gen["K"] = kron(Zi, Z1);
    rep.gen["Ki"] = kron(Z1, Zi);
    rep.gen["E"] = (kron(Zi * X1, I) / sq - sq * kron(Zi, Y1)) / dq;
    rep.gen["F"] = (kron(Y1, Zi) / sq - sq * kron(I, X1 * Zi)) / dq;
    rep.gen["iB"] =
        (kron(i * (Y1 / p.q - p.q * X1) * Zi, I) + kron(Zi, i * (Y1 - X1) + s_param * Z1)) / (-dq);
    // sphere generators, first leg
    rep.gen["Y1"] = kron(Y1, I);
    rep.gen["X1"] = kron(X1, I);
    rep.gen["Z1"] = kron(Z1, I);
    return rep;
}

/// Interior mask for an N x N tensor grid: both legs at distance >= trim
/// from the window edge.
inline std::vector<bool> grid_interior(int N, int trim) {
    std::vector<bool> mask(N * N, false);
    for (int a = trim; a < N - trim; ++a)
        for (int b = trim; b < N - trim; ++b) mask[a * N + b] = true;
    return mask;
}

}  // namespace qsl::repkit
