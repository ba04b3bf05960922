// Exact scalar arithmetic for the symbolic layer.
//
// Coefficients live in the ring  Q(i)[s^{±1}, u^{±1}][1/D]  with
//   s = q^{1/2},  u = q^{a/2},  D = s^2 - s^{-2} = q - q^{-1}.
// Gaussian-rational coefficients keep every defining relation of the
// quantum algebras exact; the single localized denominator D covers the
// q-integer normalizations ([a], the skew-primitive B_t, the psi map).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsl::exact {

using Rational = boost::multiprecision::cpp_rational;

/// A Gaussian rational re + i*im.
struct GaussRat {
    Rational re{0};
    Rational im{0};

    GaussRat() = default;
    GaussRat(long v) : re(v) {}
    GaussRat(Rational r) : re(std::move(r)) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat imaginary_unit() { return GaussRat{Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat conj() const { return {re, -im}; }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }

    std::complex<double> to_complex() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }
};

/// Sparse bivariate Laurent polynomial  sum v_{ij} s^i u^j.
/// Keys are (i, j) exponent pairs; zero values are never stored.
class Laurent {
public:
    using Term = std::pair<int, int>;
    std::map<Term, GaussRat> terms;

    Laurent() = default;

    static Laurent monomial(int i, int j, GaussRat v) {
        Laurent r;
        if (!v.is_zero()) r.terms[{i, j}] = std::move(v);
        return r;
    }
    static Laurent constant(GaussRat v) { return monomial(0, 0, std::move(v)); }

    bool is_zero() const { return terms.empty(); }

    void add_term(int i, int j, const GaussRat& v) {
        if (v.is_zero()) return;
        auto it = terms.find({i, j});
        if (it == terms.end()) {
            terms.emplace(Term{i, j}, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (auto& [k, v] : o.terms) r.add_term(k.first, k.second, v);
        return r;
    }
    Laurent operator-(const Laurent& o) const {
        Laurent r = *this;
        for (auto& [k, v] : o.terms) r.add_term(k.first, k.second, -v);
        return r;
    }
    Laurent operator-() const {
        Laurent r;
        for (auto& [k, v] : terms) r.terms[k] = -v;
        return r;
    }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (auto& [ka, va] : terms)
            for (auto& [kb, vb] : o.terms)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    bool operator==(const Laurent& o) const { return terms == o.terms; }

    /// Complex conjugate: s, u stay real, i -> -i. Exponents unchanged.
    Laurent conj() const {
        Laurent r;
        for (auto& [k, v] : terms) r.terms[k] = v.conj();
        return r;
    }

    std::complex<double> eval(double q, double a) const {
        std::complex<double> acc{0.0, 0.0};
        for (auto& [k, v] : terms)
            acc += v.to_complex() * std::pow(q, 0.5 * k.first + 0.5 * a * k.second);
        return acc;
    }
};

namespace detail {

/// Exact division of f by (s^4 - 1) viewed as a polynomial in s with
/// Laurent-in-u coefficients. Returns false when not divisible.
inline bool divide_s4_minus_1(const Laurent& f, Laurent& quotient) {
    if (f.is_zero()) {
        quotient = Laurent{};
        return true;
    }
    int max_e = f.terms.rbegin()->first.first;
    int min_e = f.terms.begin()->first.first;
    Laurent rem = f;
    Laurent quot;
    int guard = (max_e - min_e) + 2;  // one iteration per quotient s-degree level
    while (!rem.is_zero()) {
        if (--guard < 0) return false;
        int d = rem.terms.rbegin()->first.first;
        if (d - 4 < min_e) return false;
        // strip every term at top s-degree d
        std::map<int, GaussRat> lead;  // u-exponent -> value
        for (auto it = rem.terms.rbegin(); it != rem.terms.rend() && it->first.first == d; ++it)
            lead[it->first.second] = it->second;
        for (auto& [ju, v] : lead) {
            quot.add_term(d - 4, ju, v);
            rem.add_term(d, ju, -v);       // cancel
            rem.add_term(d - 4, ju, v);    // remainder shift
        }
    }
    quotient = std::move(quot);
    return true;
}

}  // namespace detail

/// Element of Q(i)[s^{±1},u^{±1}] localized at D = s^2 - s^{-2}.
/// Canonical form: num not divisible by D unless zero; zero has dpow = 0.
class Coeff {
public:
    Laurent num;
    int dpow = 0;  // value = num / D^dpow

    Coeff() = default;
    Coeff(long v) : num(Laurent::constant(GaussRat(v))) {}
    Coeff(Laurent n, int d = 0) : num(std::move(n)), dpow(d) { normalize(); }

    static Coeff zero() { return Coeff{}; }
    static Coeff one() { return Coeff{1}; }
    static Coeff imaginary() { return Coeff{Laurent::constant(GaussRat::imaginary_unit())}; }
    /// q^{k/2} = s^k
    static Coeff s_pow(int k) { return Coeff{Laurent::monomial(k, 0, GaussRat(1))}; }
    /// q^k
    static Coeff q_pow(int k) { return s_pow(2 * k); }
    /// q^{ka/2} = u^k
    static Coeff u_pow(int k) { return Coeff{Laurent::monomial(0, k, GaussRat(1))}; }
    /// t = q^a - q^{-a} = u^2 - u^{-2}
    static Coeff t() {
        Laurent l = Laurent::monomial(0, 2, GaussRat(1)) - Laurent::monomial(0, -2, GaussRat(1));
        return Coeff{std::move(l)};
    }
    /// D = q - q^{-1}
    static Coeff qd() {
        Laurent l = Laurent::monomial(2, 0, GaussRat(1)) - Laurent::monomial(-2, 0, GaussRat(1));
        return Coeff{std::move(l)};
    }
    /// 1 / (q - q^{-1})
    static Coeff qd_inv() { return Coeff{Laurent::constant(GaussRat(1)), 1}; }
    static Coeff rational(GaussRat v) { return Coeff{Laurent::constant(std::move(v))}; }
    /// q^c - q^{-c} for c = a + n (exact: u^2 q^n - u^{-2} q^{-n})
    static Coeff qbra_a_plus(int n) {
        Laurent l = Laurent::monomial(2 * n, 2, GaussRat(1)) -
                    Laurent::monomial(-2 * n, -2, GaussRat(1));
        return Coeff{std::move(l)};
    }

    bool is_zero() const { return num.is_zero(); }

    void normalize() {
        if (num.is_zero()) {
            dpow = 0;
            return;
        }
        while (dpow > 0) {
            // num / D = (num * s^2) / (s^4 - 1)
            Laurent shifted;
            for (auto& [k, v] : num.terms) shifted.terms[{k.first + 2, k.second}] = v;
            Laurent quot;
            if (!detail::divide_s4_minus_1(shifted, quot)) break;
            num = std::move(quot);
            --dpow;
        }
    }

    Coeff operator+(const Coeff& o) const {
        int m = std::max(dpow, o.dpow);
        Laurent a = scale_to(m), b = o.scale_to(m);
        return Coeff{a + b, m};
    }
    Coeff operator-(const Coeff& o) const {
        int m = std::max(dpow, o.dpow);
        Laurent a = scale_to(m), b = o.scale_to(m);
        return Coeff{a - b, m};
    }
    Coeff operator-() const {
        Coeff r;
        r.num = -num;
        r.dpow = dpow;
        return r;
    }
    Coeff operator*(const Coeff& o) const { return Coeff{num * o.num, dpow + o.dpow}; }
    bool operator==(const Coeff& o) const { return dpow == o.dpow && num == o.num; }

    /// i -> -i with s, u fixed; D is real so the denominator is unchanged.
    Coeff conj() const {
        Coeff r;
        r.num = num.conj();
        r.dpow = dpow;
        return r;
    }

    std::complex<double> eval(double q, double a) const {
        std::complex<double> v = num.eval(q, a);
        if (dpow > 0) v /= std::pow(q - 1.0 / q, dpow);
        return v;
    }

private:
    Laurent scale_to(int m) const {
        Laurent r = num;
        static const Laurent D = qd().num;
        for (int k = dpow; k < m; ++k) r = r * D;
        return r;
    }
};

}  // namespace qsl::exact
