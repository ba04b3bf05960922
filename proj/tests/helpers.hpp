// Shared helpers for the test suite: seeded random words and polynomials
// over a registered algebra.

#pragma once

#include <random>
#include <vector>

#include "qsl/ncalg.hpp"

namespace testutil {

using qsl::exact::Coeff;
using qsl::ncalg::AlgebraSpec;
using qsl::ncalg::NCPoly;
using qsl::ncalg::PolyData;
using qsl::ncalg::Word;

inline Word random_word(const AlgebraSpec& alg, std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(alg.gens.size()) - 1);
    Word w(len(rng));
    for (auto& g : w) g = pick(rng);
    return w;
}

inline Coeff random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-3, 3);
    Coeff c(small(rng));
    if (c.is_zero()) c = Coeff::one();
    // sprinkle in units of the coefficient ring so cancellation paths differ
    switch (rng() % 4) {
        case 0: c = c * Coeff::imaginary(); break;
        case 1: c = c * Coeff::s_pow(static_cast<int>(rng() % 3) - 1); break;
        case 2: c = c * Coeff::u_pow(static_cast<int>(rng() % 3) - 1); break;
        default: break;
    }
    return c;
}

/// Random normal-formed polynomial with at most `nterms` monomials of
/// length at most `max_len`.
inline NCPoly random_poly(const AlgebraSpec& alg, std::mt19937& rng, int nterms, int max_len) {
    PolyData raw;
    std::uniform_int_distribution<int> cnt(1, nterms);
    int n = cnt(rng);
    for (int i = 0; i < n; ++i) raw[random_word(alg, rng, max_len)] = random_coeff(rng);
    return NCPoly(alg, std::move(raw));
}

}  // namespace testutil
