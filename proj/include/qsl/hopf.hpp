// Hopf-structure maps on the quantum algebras: coproduct, counit, the
// dual pairing with the enveloping algebra, the sphere embedding into
// O_q(SU(2)), the localization homomorphism, and the translation action.

#pragma once

#include <array>
#include <stdexcept>

#include "qsl/ncalg.hpp"

namespace qsl::hopf {

using exact::Coeff;
using ncalg::AlgebraSpec;
using ncalg::NCPoly;
using ncalg::PolyData;
using ncalg::Word;

/// Finite sum  sum_k c_k (w_k tensor v_k)  with both legs normal-ordered.
class TensorPoly {
public:
    const AlgebraSpec* left = nullptr;
    const AlgebraSpec* right = nullptr;
    std::map<std::pair<Word, Word>, Coeff> terms;

    TensorPoly() = default;
    TensorPoly(const AlgebraSpec& l, const AlgebraSpec& r) : left(&l), right(&r) {}

    void add(const Word& w, const Word& v, const Coeff& c) {
        if (c.is_zero()) return;
        auto it = terms.find({w, v});
        if (it == terms.end()) {
            terms.emplace(std::make_pair(w, v), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    static TensorPoly tensor(const NCPoly& a, const NCPoly& b) {
        TensorPoly r(*a.alg, *b.alg);
        for (auto& [wa, ca] : a.terms)
            for (auto& [wb, cb] : b.terms) r.add(wa, wb, ca * cb);
        return r;
    }

    TensorPoly operator+(const TensorPoly& o) const {
        TensorPoly r = *this;
        for (auto& [k, c] : o.terms) r.add(k.first, k.second, c);
        return r;
    }
    /// (a tensor b)(c tensor d) = ac tensor bd, each leg normal-formed.
    TensorPoly operator*(const TensorPoly& o) const {
        TensorPoly r(*left, *right);
        for (auto& [ka, ca] : terms)
            for (auto& [kb, cb] : o.terms) {
                Word wl = ka.first, wr = ka.second;
                wl.insert(wl.end(), kb.first.begin(), kb.first.end());
                wr.insert(wr.end(), kb.second.begin(), kb.second.end());
                PolyData nl = ncalg::normal_form_data(*left, {{wl, Coeff::one()}});
                PolyData nr = ncalg::normal_form_data(*right, {{wr, Coeff::one()}});
                for (auto& [l, cl] : nl)
                    for (auto& [rr, cr] : nr) r.add(l, rr, ca * cb * cl * cr);
            }
        return r;
    }
    TensorPoly operator*(const Coeff& c) const {
        TensorPoly r(*left, *right);
        for (auto& [k, v] : terms) r.add(k.first, k.second, v * c);
        return r;
    }
    bool operator==(const TensorPoly& o) const { return terms == o.terms; }
};

namespace detail {

inline bool is_uq(const AlgebraSpec& a) { return a.name.rfind("uq-su2", 0) == 0; }

/// Coproduct of a single generator, as a TensorPoly over alg tensor alg.
inline TensorPoly gen_coproduct(const AlgebraSpec& a, int g) {
    TensorPoly r(a, a);
    auto add1 = [&](Word w, Word v, Coeff c = Coeff::one()) { r.add(w, v, c); };
    if (a.name == "su2") {
        // corepresentation matrix: Delta(u_ij) = sum_k u_ik tensor u_kj
        int al = 0, de = 1, be = 2, ga = 3;
        if (g == al) { add1({al}, {al}); add1({be}, {ga}); }
        else if (g == be) { add1({al}, {be}); add1({be}, {de}); }
        else if (g == ga) { add1({ga}, {al}); add1({de}, {ga}); }
        else { add1({ga}, {be}); add1({de}, {de}); }
    } else if (is_uq(a)) {
        int F = 0, K = 1, Ki = 2, E = 3;
        if (g == K) add1({K}, {K});
        else if (g == Ki) add1({Ki}, {Ki});
        else if (g == E) { add1({E}, {}); add1({K}, {E}); }
        else { add1({F}, {Ki}); add1({}, {F}); }
    } else {
        throw std::invalid_argument("coproduct unsupported on " + a.name);
    }
    return r;
}

/// Counit value of a single generator.
inline Coeff gen_counit(const AlgebraSpec& a, int g) {
    if (a.name == "su2")
        return (g == 0 || g == 1) ? Coeff::one() : Coeff::zero();
    if (is_uq(a))
        return (g == 1 || g == 2) ? Coeff::one() : Coeff::zero();
    if (a.name == "podles") {
        // from restricting the counit through the sphere embedding: eps(E_t) = L_t
        if (g == 0) return Coeff::imaginary();        // Y
        if (g == 1) return -Coeff::imaginary();       // X
        return Coeff::zero();                         // Z
    }
    throw std::invalid_argument("counit unsupported on " + a.name);
}

using Mat2 = std::array<std::array<Coeff, 2>, 2>;

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

/// Spin-1/2 matrix of an enveloping-algebra generator.
inline const Mat2& spin_half(int g) {
    static const std::array<Mat2, 4> tbl = [] {
        std::array<Mat2, 4> m{};
        const Coeff z = Coeff::zero();
        m[0] = Mat2{{{z, z}, {Coeff::s_pow(-1), z}}};                  // F
        m[1] = Mat2{{{Coeff::q_pow(1), z}, {z, Coeff::q_pow(-1)}}};    // K
        m[2] = Mat2{{{Coeff::q_pow(-1), z}, {z, Coeff::q_pow(1)}}};    // Ki
        m[3] = Mat2{{{z, Coeff::s_pow(1)}, {z, z}}};                   // E
        return m;
    }();
    return tbl[g];
}

inline Mat2 spin_half_word(const Word& w) {
    Mat2 r{{{Coeff::one(), Coeff::zero()}, {Coeff::zero(), Coeff::one()}}};
    for (int g : w) r = mat2_mul(r, spin_half(g));
    return r;
}

}  // namespace detail

/// Algebra-map coproduct on O_q(SU(2)) or U_q^{mu,nu}(su(2)).
inline TensorPoly coproduct(const NCPoly& x) {
    const AlgebraSpec& a = *x.alg;
    TensorPoly result(a, a);
    for (auto& [w, c] : x.terms) {
        TensorPoly prod(a, a);
        prod.add({}, {}, c);
        for (int g : w) prod = prod * detail::gen_coproduct(a, g);
        result = result + prod;
    }
    return result;
}

/// Multiplicative counit.
inline Coeff counit(const NCPoly& x) {
    Coeff acc = Coeff::zero();
    for (auto& [w, c] : x.terms) {
        Coeff v = c;
        for (int g : w) {
            if (v.is_zero()) break;
            v = v * detail::gen_counit(*x.alg, g);
        }
        acc = acc + v;
    }
    return acc;
}

namespace detail {

struct PodlesImages {
    NCPoly Z, Y, X, E22;  // sphere matrix entries inside O_q(SU(2))
};

/// Entries of E_t = U* L_t U with L_t = [[0, i], [-i, -t]].
inline const PodlesImages& podles_images() {
    static const PodlesImages imgs = [] {
        const AlgebraSpec& A = ncalg::su2();
        auto al = NCPoly::generator(A, "a"), de = NCPoly::generator(A, "d");
        auto be = NCPoly::generator(A, "b"), ga = NCPoly::generator(A, "c");
        const Coeff I = Coeff::imaginary(), t = Coeff::t();
        NCPoly Us[2][2] = {{de, be * (-Coeff::q_pow(-1))}, {ga * (-Coeff::q_pow(1)), al}};
        Coeff L[2][2] = {{Coeff::zero(), I}, {-I, -t}};
        NCPoly U[2][2] = {{al, be}, {ga, de}};
        NCPoly E[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                NCPoly acc(A);
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) acc = acc + Us[i][k] * U[l][j] * L[k][l];
                E[i][j] = acc;
            }
        return PodlesImages{E[0][0] * Coeff::q_pow(1), E[0][1], E[1][0], E[1][1]};
    }();
    return imgs;
}

}  // namespace detail

/// *-algebra embedding of the sphere into O_q(SU(2)): Z = q(E_t)_11, Y = (E_t)_12, X = (E_t)_21.
inline NCPoly embed_podles(const NCPoly& x) {
    if (x.alg->name != "podles")
        throw std::invalid_argument("embed_podles expects the (unlocalized) sphere algebra");
    const AlgebraSpec& A = ncalg::su2();
    const auto& img = detail::podles_images();
    NCPoly result(A);
    for (auto& [w, c] : x.terms) {
        NCPoly prod = NCPoly::scalar(A, c);
        for (int g : w) prod = prod * (g == 0 ? img.Y : g == 1 ? img.X : img.Z);
        result = result + prod;
    }
    return result;
}

namespace detail {

// generator id in O_q(SU(2)) -> (row, col) of the corepresentation matrix
inline std::pair<int, int> entry_of(int g) {
    switch (g) {
        case 0: return {0, 0};  // alpha
        case 1: return {1, 1};  // delta
        case 2: return {0, 1};  // beta
        default: return {1, 0};  // gamma
    }
}

inline Coeff pairing_word(const AlgebraSpec& uqa, const Word& f, size_t pos, const NCPoly& x) {
    if (pos == f.size()) return counit(x);
    auto [r, c] = entry_of(f[pos]);
    TensorPoly dx = coproduct(x);
    Coeff acc = Coeff::zero();
    for (auto& [legs, coef] : dx.terms) {
        Coeff e = spin_half_word(legs.first)[r][c];
        if (e.is_zero()) continue;
        NCPoly x2(uqa);
        x2.terms[legs.second] = Coeff::one();
        acc = acc + coef * e * pairing_word(uqa, f, pos + 1, x2);
    }
    return acc;
}

}  // namespace detail

/// Dual pairing tau(f, x), f in O_q(SU(2)), x in U_q(su(2)). A degree-n
/// monomial of f pairs as a matrix coefficient of the n-fold spin-1/2
/// tensor power applied to the iterated coproduct of x.
inline Coeff pairing(const NCPoly& f, const NCPoly& x) {
    if (f.alg->name != "su2" || !detail::is_uq(*x.alg))
        throw std::invalid_argument("pairing expects (O_q(SU(2)), U_q) arguments");
    Coeff acc = Coeff::zero();
    for (auto& [w, c] : f.terms) acc = acc + c * detail::pairing_word(*x.alg, w, 0, x);
    return acc;
}

/// Localization homomorphism from U_q^{+,-}(su(2)) onto the localized sphere:
/// K -> Z^{-1}, (q^{-1}-q)E -> q^{-1/2} Z^{-1} X, (q^{-1}-q)F -> q^{-1/2} Y.
inline NCPoly psi_map(const NCPoly& x) {
    if (x.alg->name != "uq-su2+-")
        throw std::invalid_argument("psi_map is defined on U_q^{+,-}(su(2))");
    const AlgebraSpec& P = ncalg::podles_loc();
    auto Y = NCPoly::generator(P, "Y"), X = NCPoly::generator(P, "X");
    auto Z = NCPoly::generator(P, "Z"), Zi = NCPoly::generator(P, "Zi");
    // q^{-1} - q = -(q - q^{-1})
    const Coeff pref = -(Coeff::s_pow(-1) * Coeff::qd_inv());
    NCPoly images[4] = {Y * pref, Zi, Z, Zi * X * pref};  // F, K, Ki, E
    NCPoly result(P);
    for (auto& [w, c] : x.terms) {
        NCPoly prod = NCPoly::scalar(P, c);
        for (int g : w) prod = prod * images[g];
        result = result + prod;
    }
    return result;
}

/// iB_t with the parameter shifted by n steps, as an element of U_q(su(2)):
/// iB = i q^{-1/2}(E - FK) + (q - q^{-1})^{-1} <a+n> K.
inline NCPoly ib_element(int n = 0) {
    const AlgebraSpec& U = ncalg::uq();
    auto E = NCPoly::generator(U, "E"), F = NCPoly::generator(U, "F");
    auto K = NCPoly::generator(U, "K");
    const Coeff is = Coeff::imaginary() * Coeff::s_pow(-1);
    return (E - F * K) * is + K * (Coeff::qbra_a_plus(n) * Coeff::qd_inv());
}

namespace detail {

/// Action of a single enveloping generator on a single sphere generator,
/// from y acting on the matrix E_t entrywise:
///   y |> E_t = pi(S(y_(1))) E_t pi(y_(2)),
/// with E_t = [[q^{-1}Z, Y], [X, -t - qZ]] over the sphere algebra.
struct GenActionTable {
    // [uq generator][podles generator] -> image
    std::array<std::array<NCPoly, 3>, 4> img;

    GenActionTable() {
        const AlgebraSpec& P = ncalg::podles();
        auto Y = NCPoly::generator(P, "Y"), X = NCPoly::generator(P, "X");
        auto Z = NCPoly::generator(P, "Z");
        NCPoly Et[2][2] = {{Z * Coeff::q_pow(-1), Y},
                           {X, NCPoly::scalar(P, -Coeff::t()) - Z * Coeff::q_pow(1)}};
        auto left = [&](const Mat2& m, NCPoly out[2][2]) {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    out[i][j] = Et[0][j] * m[i][0] + Et[1][j] * m[i][1];
        };
        auto right = [&](NCPoly in[2][2], const Mat2& m, NCPoly out[2][2]) {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    out[i][j] = in[i][0] * m[0][j] + in[i][1] * m[1][j];
        };
        int F = 0, K = 1, Ki = 2, E = 3;
        NCPoly acted[4][2][2], tmp[2][2];
        // K |> M = pi(Ki) M pi(K)
        left(spin_half(Ki), tmp);
        right(tmp, spin_half(K), acted[K]);
        // Ki |> M = pi(K) M pi(Ki)
        left(spin_half(K), tmp);
        right(tmp, spin_half(Ki), acted[Ki]);
        // E |> M = -pi(KiE) M + pi(Ki) M pi(E)   (S(E) = -KiE)
        {
            NCPoly t1[2][2], t2[2][2];
            left(mat2_mul(spin_half(Ki), spin_half(E)), t1);
            left(spin_half(Ki), tmp);
            right(tmp, spin_half(E), t2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) acted[E][i][j] = -t1[i][j] + t2[i][j];
        }
        // F |> M = -pi(FK) M pi(Ki) + M pi(F)    (S(F) = -FK)
        {
            NCPoly t1[2][2], t2[2][2];
            left(mat2_mul(spin_half(F), spin_half(K)), tmp);
            right(tmp, spin_half(Ki), t1);
            right(Et, spin_half(F), t2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) acted[F][i][j] = -t1[i][j] + t2[i][j];
        }
        for (int y = 0; y < 4; ++y) {
            img[y][0] = acted[y][0][1];                      // Y
            img[y][1] = acted[y][1][0];                      // X
            img[y][2] = acted[y][0][0] * Coeff::q_pow(1);    // Z
        }
    }

    static const GenActionTable& instance() {
        static const GenActionTable t;
        return t;
    }
};

/// y |> (word), extended by the module-algebra rule for the coproducts
/// Delta(E) = E ox 1 + K ox E and Delta(F) = F ox Ki + 1 ox F.
inline NCPoly act_gen_word(int y, const Word& w, const AlgebraSpec& P);

inline NCPoly act_gen(int y, const NCPoly& b) {
    NCPoly r(*b.alg);
    for (auto& [w, c] : b.terms) r = r + act_gen_word(y, w, *b.alg) * c;
    return r;
}

inline NCPoly act_gen_word(int y, const Word& w, const AlgebraSpec& P) {
    int F = 0, K = 1, Ki = 2, E = 3;
    if (w.empty()) {
        // y |> 1 = eps(y) 1
        return (y == K || y == Ki) ? NCPoly::unit(P) : NCPoly(P);
    }
    const auto& tbl = GenActionTable::instance();
    const NCPoly& head = tbl.img[y][w.front()];
    Word rest(w.begin() + 1, w.end());
    NCPoly restp(P);
    restp.terms[rest] = Coeff::one();
    restp = ncalg::normal_form(restp);
    if (y == K || y == Ki) return head * act_gen_word(y, rest, P);
    if (y == E) {
        // E |> (bc) = (E|>b)c + (K|>b)(E|>c)
        return head * restp + tbl.img[K][w.front()] * act_gen_word(E, rest, P);
    }
    // F |> (bc) = (F|>b)(Ki|>c) + b(F|>c)
    NCPoly headp(P);
    headp.terms[Word{w.front()}] = Coeff::one();
    return head * act_gen_word(Ki, rest, P) + headp * act_gen_word(F, rest, P);
}

}  // namespace detail

/// Left module-algebra action  y |> b  of U_q(su(2)) on the sphere algebra,
/// y |> b = (id tensor tau(y, .)) Delta(b), computed generatorwise.
inline NCPoly translation_action(const NCPoly& y, const NCPoly& b) {
    if (!detail::is_uq(*y.alg) || b.alg->name != "podles")
        throw std::invalid_argument("translation_action expects (U_q, sphere) arguments");
    NCPoly result(*b.alg);
    for (auto& [wy, cy] : y.terms) {
        NCPoly cur = b;
        for (auto it = wy.rbegin(); it != wy.rend(); ++it) cur = detail::act_gen(*it, cur);
        result = result + cur * cy;
    }
    return result;
}

}  // namespace qsl::hopf
