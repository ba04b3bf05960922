// Normal-form arithmetic for the q-deformed coordinate and enveloping algebras.
//
// Every algebra is presented by an ordered generator list and rewrite rules on
// adjacent generator pairs. Each rule strictly decreases the monomial measure
// (degree of the eliminated pair, word length, inversion count) in lexicographic
// order, so rewriting terminates; confluence on these presentations is covered
// by randomized double-reduction tests.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsl/exact.hpp"

namespace qsl::ncalg {

using exact::Coeff;

using Word = std::vector<int>;           // generator ids, left to right
using PolyData = std::map<Word, Coeff>;  // canonical sparse form

struct RewriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Presentation of an algebra: generator order fixes the normal form,
/// rules map length-2 words to their normal-ordered expansion.
class AlgebraSpec {
public:
    std::string name;
    std::vector<std::string> gens;
    std::map<std::pair<int, int>, PolyData> rules;
    std::vector<PolyData> star_table;  // star of each generator

    int gen_id(const std::string& g) const {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == g) return static_cast<int>(i);
        throw std::invalid_argument("unknown generator " + g + " in " + name);
    }

    void add_rule(const std::string& g1, const std::string& g2, PolyData rhs) {
        rules[{gen_id(g1), gen_id(g2)}] = std::move(rhs);
    }
    void set_star(const std::string& g, PolyData img) {
        star_table.at(gen_id(g)) = std::move(img);
    }
};

inline void add_term(PolyData& p, const Word& w, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = p.find(w);
    if (it == p.end()) {
        p.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

/// Reduce to normal form. pick_random (tests only) randomizes which reducible
/// pair is rewritten first, to probe confluence.
inline PolyData normal_form_data(const AlgebraSpec& alg, const PolyData& input,
                                 std::mt19937* pick_random = nullptr,
                                 std::int64_t step_budget = 1'000'000) {
    PolyData result;
    std::vector<std::pair<Word, Coeff>> work(input.begin(), input.end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        // locate reducible adjacent pairs
        std::vector<size_t> sites;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (alg.rules.count({w[i], w[i + 1]})) {
                sites.push_back(i);
                if (!pick_random) break;
            }
        if (sites.empty()) {
            add_term(result, w, c);
            continue;
        }
        if (--step_budget < 0)
            throw RewriteError("rewrite-step budget exceeded in algebra " + alg.name);
        size_t i = sites[pick_random ? (*pick_random)() % sites.size() : 0];
        const PolyData& rhs = alg.rules.at({w[i], w[i + 1]});
        for (auto& [rw, rc] : rhs) {
            Word nw;
            nw.reserve(w.size() - 2 + rw.size());
            nw.insert(nw.end(), w.begin(), w.begin() + i);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + i + 2, w.end());
            work.emplace_back(std::move(nw), c * rc);
        }
    }
    return result;
}

/// Normal-ordered polynomial over a named algebra.
class NCPoly {
public:
    const AlgebraSpec* alg = nullptr;
    PolyData terms;

    NCPoly() = default;
    explicit NCPoly(const AlgebraSpec& a) : alg(&a) {}
    NCPoly(const AlgebraSpec& a, PolyData raw) : alg(&a) {
        terms = normal_form_data(a, raw);
    }

    static NCPoly unit(const AlgebraSpec& a) {
        NCPoly p(a);
        p.terms[{}] = Coeff::one();
        return p;
    }
    static NCPoly generator(const AlgebraSpec& a, const std::string& g) {
        NCPoly p(a);
        p.terms[Word{a.gen_id(g)}] = Coeff::one();
        return p;
    }
    static NCPoly scalar(const AlgebraSpec& a, const Coeff& c) {
        NCPoly p(a);
        add_term(p.terms, {}, c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    NCPoly operator+(const NCPoly& o) const {
        check_same(o);
        NCPoly r = *this;
        for (auto& [w, c] : o.terms) add_term(r.terms, w, c);
        return r;
    }
    NCPoly operator-(const NCPoly& o) const {
        check_same(o);
        NCPoly r = *this;
        for (auto& [w, c] : o.terms) add_term(r.terms, w, -c);
        return r;
    }
    NCPoly operator-() const {
        NCPoly r(*alg);
        for (auto& [w, c] : terms) r.terms[w] = -c;
        return r;
    }
    NCPoly operator*(const NCPoly& o) const {
        check_same(o);
        PolyData raw;
        for (auto& [wa, ca] : terms)
            for (auto& [wb, cb] : o.terms) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                add_term(raw, w, ca * cb);
            }
        return NCPoly(*alg, std::move(raw));
    }
    NCPoly operator*(const Coeff& c) const {
        NCPoly r(*alg);
        for (auto& [w, v] : terms) add_term(r.terms, w, v * c);
        return r;
    }
    bool operator==(const NCPoly& o) const { return terms == o.terms; }

private:
    void check_same(const NCPoly& o) const {
        if (alg != o.alg) throw std::invalid_argument("mixing algebras " + alg->name + "/" + o.alg->name);
    }
};

inline NCPoly normal_form(const NCPoly& x) {
    NCPoly r(*x.alg);
    r.terms = normal_form_data(*x.alg, x.terms);
    return r;
}

/// Anti-linear anti-multiplicative involution from the generator star table.
inline NCPoly star(const NCPoly& x) {
    const AlgebraSpec& a = *x.alg;
    NCPoly result(a);
    for (auto& [w, c] : x.terms) {
        // (g1...gn)* = gn*...g1*
        NCPoly prod = NCPoly::scalar(a, c.conj());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            NCPoly g(a);
            g.terms = a.star_table.at(*it);
            prod = prod * g;
        }
        result = result + prod;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Registered presentations
// ---------------------------------------------------------------------------

/// Generator order alpha < delta < beta < gamma keeps the determinant pair
/// adjacent, so mixed alpha/delta words are eliminated by the two relations.
inline AlgebraSpec make_oq_su2() {
    AlgebraSpec A;
    A.name = "su2";
    A.gens = {"a", "d", "b", "c"};  // alpha, delta, beta, gamma
    A.star_table.resize(4);
    const Coeff q = Coeff::q_pow(1), qi = Coeff::q_pow(-1), one = Coeff::one();
    int al = 0, de = 1, be = 2, ga = 3;
    auto mono = [](Word w, Coeff c) {
        PolyData p;
        p[std::move(w)] = std::move(c);
        return p;
    };
    A.rules[{be, al}] = mono({al, be}, qi);
    A.rules[{ga, al}] = mono({al, ga}, qi);
    A.rules[{be, de}] = mono({de, be}, q);
    A.rules[{ga, de}] = mono({de, ga}, q);
    A.rules[{ga, be}] = mono({be, ga}, one);
    PolyData da;  // delta.alpha = 1 + q^{-1} beta gamma
    da[{}] = one;
    da[{be, ga}] = qi;
    A.rules[{de, al}] = da;
    PolyData ad;  // alpha.delta = 1 + q beta gamma
    ad[{}] = one;
    ad[{be, ga}] = q;
    A.rules[{al, de}] = ad;
    A.set_star("a", mono({de}, one));
    A.set_star("d", mono({al}, one));
    A.set_star("b", mono({ga}, -q));
    A.set_star("c", mono({be}, -qi));
    return A;
}

/// Podles sphere generators ordered Y < X < Z (plus Zi in the localization);
/// the XY/YX relations eliminate words containing both X and Y.
inline AlgebraSpec make_podles(bool localized) {
    AlgebraSpec A;
    A.name = localized ? "podles-loc" : "podles";
    A.gens = {"Y", "X", "Z"};
    if (localized) A.gens.push_back("Zi");
    A.star_table.resize(A.gens.size());
    const Coeff one = Coeff::one(), t = Coeff::t();
    int Y = 0, X = 1, Z = 2;
    auto mono = [](Word w, Coeff c) {
        PolyData p;
        p[std::move(w)] = std::move(c);
        return p;
    };
    PolyData xy;  // X.Y = 1 - q t Z - q^2 Z^2
    xy[{}] = one;
    xy[{Z}] = -(Coeff::q_pow(1) * t);
    xy[{Z, Z}] = -Coeff::q_pow(2);
    A.rules[{X, Y}] = xy;
    PolyData yx;  // Y.X = 1 - q^{-1} t Z - q^{-2} Z^2
    yx[{}] = one;
    yx[{Z}] = -(Coeff::q_pow(-1) * t);
    yx[{Z, Z}] = -Coeff::q_pow(-2);
    A.rules[{Y, X}] = yx;
    A.rules[{Z, Y}] = mono({Y, Z}, Coeff::q_pow(2));
    A.rules[{Z, X}] = mono({X, Z}, Coeff::q_pow(-2));
    A.set_star("Y", mono({X}, one));
    A.set_star("X", mono({Y}, one));
    A.set_star("Z", mono({Z}, one));
    if (localized) {
        int Zi = 3;
        A.rules[{Z, Zi}] = mono({}, one);
        A.rules[{Zi, Z}] = mono({}, one);
        A.rules[{Zi, Y}] = mono({Y, Zi}, Coeff::q_pow(-2));
        A.rules[{Zi, X}] = mono({X, Zi}, Coeff::q_pow(2));
        A.set_star("Zi", mono({Zi}, one));
    }
    return A;
}

/// U_q^{mu,nu}(su(2)); (mu,nu) = (+,+) is the standard U_q(su(2)).
/// PBW order F < K < Ki < E.
inline AlgebraSpec make_uq_su2(int mu = +1, int nu = +1) {
    AlgebraSpec A;
    A.name = std::string("uq-su2") +
             ((mu == 1 && nu == 1) ? "" : (std::string(mu == 1 ? "+" : "-") + (nu == 1 ? "+" : "-")));
    A.gens = {"F", "K", "Ki", "E"};
    A.star_table.resize(4);
    const Coeff one = Coeff::one();
    int F = 0, K = 1, Ki = 2, E = 3;
    auto mono = [](Word w, Coeff c) {
        PolyData p;
        p[std::move(w)] = std::move(c);
        return p;
    };
    A.rules[{K, Ki}] = mono({}, one);
    A.rules[{Ki, K}] = mono({}, one);
    A.rules[{K, F}] = mono({F, K}, Coeff::q_pow(-2));
    A.rules[{Ki, F}] = mono({F, Ki}, Coeff::q_pow(2));
    A.rules[{E, K}] = mono({K, E}, Coeff::q_pow(-2));
    A.rules[{E, Ki}] = mono({Ki, E}, Coeff::q_pow(2));
    PolyData ef;  // E.F = F.E + (nu K - mu Ki)/(q - q^{-1})
    ef[{F, E}] = one;
    Coeff di = Coeff::qd_inv();
    ef[{K}] = (nu == 1 ? di : -di);
    ef[{Ki}] = (mu == 1 ? -di : di);
    A.rules[{E, F}] = ef;
    A.set_star("K", mono({K}, one));
    A.set_star("Ki", mono({Ki}, one));
    A.set_star("E", mono({F, K}, one));
    A.set_star("F", mono({Ki, E}, one));
    return A;
}

/// Immutable registry of all presentations used by the library.
class Registry {
public:
    Registry() {
        specs_.push_back(std::make_unique<AlgebraSpec>(make_oq_su2()));
        specs_.push_back(std::make_unique<AlgebraSpec>(make_podles(false)));
        specs_.push_back(std::make_unique<AlgebraSpec>(make_podles(true)));
        specs_.push_back(std::make_unique<AlgebraSpec>(make_uq_su2(+1, +1)));
        specs_.push_back(std::make_unique<AlgebraSpec>(make_uq_su2(+1, -1)));
        specs_.push_back(std::make_unique<AlgebraSpec>(make_uq_su2(-1, +1)));
        specs_.push_back(std::make_unique<AlgebraSpec>(make_uq_su2(-1, -1)));
    }
    static const Registry& instance() {
        static const Registry r;
        return r;
    }
    const AlgebraSpec& get(const std::string& name) const {
        for (auto& s : specs_)
            if (s->name == name) return *s;
        throw std::invalid_argument("unknown algebra " + name);
    }
    std::vector<std::string> names() const {
        std::vector<std::string> n;
        for (auto& s : specs_) n.push_back(s->name);
        return n;
    }

private:
    std::vector<std::unique_ptr<AlgebraSpec>> specs_;
};

inline const AlgebraSpec& su2() { return Registry::instance().get("su2"); }
inline const AlgebraSpec& podles() { return Registry::instance().get("podles"); }
inline const AlgebraSpec& podles_loc() { return Registry::instance().get("podles-loc"); }
inline const AlgebraSpec& uq() { return Registry::instance().get("uq-su2"); }
inline const AlgebraSpec& uq_pm() { return Registry::instance().get("uq-su2+-"); }

}  // namespace qsl::ncalg
