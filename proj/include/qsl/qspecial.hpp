// Scalar special functions: q-numbers, q-Pochhammer symbols, terminating
// basic hypergeometric series, and Al-Salam-Chihara polynomials.
//
// Everything here is double precision except the terminating 3phi2 sum,
// whose terms grow like base^{-k^2} before cancelling; that sum runs in
// 400-digit floats internally and returns a double-precision complex.

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cassert>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qsl::qspecial {

struct QParams {
    double q;
    double a;
    double t;  // q^a - q^{-a}

    QParams(double q_, double a_) : q(q_), a(a_) {
        if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0,1)");
        t = std::pow(q, a) - std::pow(q, -a);
    }
};

enum class QScalarKind {
    bracket,  // [x] = (q^x - q^{-x})/(q - q^{-1})
    brace,    // q^x - q^{-x}
    dif,      // q^x + q^{-x}
};

inline double q_number(QScalarKind kind, double x, const QParams& p) {
    double up = std::pow(p.q, x), dn = std::pow(p.q, -x);
    switch (kind) {
        case QScalarKind::brace: return up - dn;
        case QScalarKind::dif: return up + dn;
        case QScalarKind::bracket: return (up - dn) / (p.q - 1.0 / p.q);
    }
    return 0.0;  // unreachable
}

inline constexpr int kInfinity = -1;

/// (x; base)_n = prod_{k<n} (1 - x base^k); n = kInfinity gives the
/// convergent infinite product, truncated once |x base^k| < 1e-17.
inline std::complex<double> q_pochhammer(std::complex<double> x, double base, int n) {
    assert(base > 0.0 && base < 1.0);
    std::complex<double> prod = 1.0;
    if (n == kInfinity) {
        std::complex<double> xk = x;
        while (std::abs(xk) >= 1e-17) {
            prod *= 1.0 - xk;
            xk *= base;
        }
        return prod;
    }
    if (n < 0) throw std::invalid_argument("q_pochhammer: negative order");
    std::complex<double> xk = x;
    for (int k = 0; k < n; ++k) {
        prod *= 1.0 - xk;
        xk *= base;
    }
    return prod;
}

namespace detail {

// 400 digits: the terminating 3phi2 below cancels terms of size up to
// base^{-p^2}, which already exceeds 200 digits at base ~ 0.1, p ~ 20
using HP = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;

struct HPComplex {
    HP re, im;
    HPComplex(double r = 0, double i = 0) : re(r), im(i) {}
    HPComplex(HP r, HP i) : re(std::move(r)), im(std::move(i)) {}
    HPComplex operator+(const HPComplex& o) const { return {re + o.re, im + o.im}; }
    HPComplex operator-(const HPComplex& o) const { return {re - o.re, im - o.im}; }
    HPComplex operator*(const HPComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    std::complex<double> to_double() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }
};

}  // namespace detail

/// Terminating 3phi2: num[0] must equal base^{-p} for some integer p >= 0.
/// Sum of p+1 terms  prod_i (num_i; base)_k / ((base; base)_k prod_j (den_j; base)_k) z^k.
inline std::complex<double> phi32(const std::complex<double> num[3],
                                  const std::complex<double> den[2], double base,
                                  std::complex<double> z) {
    // recover the termination order p from the first numerator parameter
    if (num[0].imag() != 0.0 || num[0].real() <= 0.0)
        throw std::invalid_argument("phi32: series does not terminate");
    double pf = -std::log(num[0].real()) / std::log(base);
    int p = static_cast<int>(std::lround(pf));
    if (p < 0 || std::abs(pf - p) > 1e-6)
        throw std::invalid_argument("phi32: first parameter is not base^{-p}");

    using detail::HP;
    using detail::HPComplex;
    HP b(base);
    HPComplex zh(z.real(), z.imag());
    // rebuild the terminating parameter as base^{-p} in working precision:
    // the partial sums cancel by many orders of magnitude, and that
    // cancellation is structural only if a1 is exactly a power of base
    HPComplex a1(pow(b, -p), HP(0));
    HPComplex a2(num[1].real(), num[1].imag()), a3(num[2].real(), num[2].imag());
    HPComplex b1(den[0].real(), den[0].imag()), b2(den[1].real(), den[1].imag());

    HPComplex sum(1.0, 0.0);
    HPComplex term(1.0, 0.0);
    HP bk(1);  // base^k
    HPComplex one(1.0, 0.0);
    for (int k = 0; k < p; ++k) {
        HPComplex bkx(bk, HP(0));
        HPComplex numer = (one - a1 * bkx) * (one - a2 * bkx) * (one - a3 * bkx);
        HP bk1 = bk * b;
        HPComplex qfac(HP(1) - bk1, HP(0));
        HPComplex denom = qfac * (one - b1 * bkx) * (one - b2 * bkx);
        // divide numer/denom in high precision
        HP d2 = denom.re * denom.re + denom.im * denom.im;
        HPComplex ratio((numer.re * denom.re + numer.im * denom.im) / d2,
                        (numer.im * denom.re - numer.re * denom.im) / d2);
        term = term * ratio * zh;
        sum = sum + term;
        bk = bk1;
    }
    return sum.to_double();
}

/// Al-Salam-Chihara polynomial Q_p(lambda) from the three-term recursion
///   Q_{p+1} = (2 lambda + sigma <c> q^{2p - sigma a + 1}) Q_p
///             - (1 - q^{2p})(1 + q^{-2 sigma a + 2p}) Q_{p-1},
/// Q_{-1} = 0, Q_0 = 1.
inline double al_salam_chihara(int p, double lambda, double c, int sign, const QParams& pr) {
    assert(p >= 0 && (sign == 1 || sign == -1));
    double brc = q_number(QScalarKind::brace, c, pr);
    double prev = 0.0, cur = 1.0;
    for (int k = 0; k < p; ++k) {
        double diag = sign * brc * std::pow(pr.q, 2 * k - sign * pr.a + 1);
        double off2 = (1.0 - std::pow(pr.q, 2 * k)) * (1.0 + std::pow(pr.q, -2 * sign * pr.a + 2 * k));
        double next = (2.0 * lambda + diag) * cur - off2 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Gauge-normalized variant: component p of the (real, i^p-gauged) unit-free
/// eigenvector of the twisted-Casimir Jacobi operator at spectral point Lambda,
///   P~_p(Lambda) = (-1)^p Q_p(-Lambda/2) / sqrt((q^2;q^2)_p (-q^{-2 sigma a+2};q^2)_p).
inline double al_salam_chihara_normalized(int p, double Lambda, double c, int sign,
                                          const QParams& pr) {
    double Q = al_salam_chihara(p, -Lambda / 2.0, c, sign, pr);
    double q2 = pr.q * pr.q;
    double w1 = q_pochhammer(q2, q2, p).real();
    double w2 = q_pochhammer(-std::pow(pr.q, -2.0 * sign * pr.a + 2.0), q2, p).real();
    double s = (p % 2 == 0) ? 1.0 : -1.0;
    return s * Q / std::sqrt(w1 * w2);
}

}  // namespace qsl::qspecial
