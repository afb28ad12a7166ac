#pragma once

// Formal sl(2) characters: the image of a reciprocal polynomial in the
// representation ring, its decomposition into irreducible characters, and the
// associated pair of unimodal polynomials.

#include "gammacheb/gamma.hpp"
#include "gammacheb/laurent.hpp"
#include "gammacheb/reciprocal.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace gammacheb {

/// chi_n = mu^{n-1} + mu^{n-3} + ... + mu^{1-n}, the character of the
/// n-dimensional irreducible representation.
inline LaurentPoly sl2_character(std::size_t n) {
    if (n == 0) throw std::invalid_argument("irreducible dimension must be positive");
    std::vector<Rational> cs(2 * n - 1);
    for (std::size_t i = 0; i < cs.size(); i += 2) cs[i] = 1;
    return LaurentPoly(1 - static_cast<long>(n), std::move(cs));
}

/// Multiplicity of chi_n keyed by the dimension n.
struct CharacterClass {
    std::map<std::size_t, Rational> multiplicities;

    LaurentPoly reconstruct() const {
        LaurentPoly out;
        for (const auto& [n, m] : multiplicities) out += sl2_character(n) * m;
        return out;
    }
};

/// mu^{-d} h(mu^2).
inline LaurentPoly char_image(const ReciprocalPoly& h) {
    const long d = static_cast<long>(h.degree());
    h.half();  // even degree only
    std::vector<Rational> cs(static_cast<std::size_t>(2 * d + 1));
    for (long k = 0; k <= d; ++k) cs[static_cast<std::size_t>(2 * k)] = h[static_cast<std::size_t>(k)];
    return LaurentPoly(-d, std::move(cs));
}

namespace detail {

/// Greedy top-down peeling: the top exponent n - 1 fixes m_n, subtract m_n chi_n, repeat.
inline CharacterClass peel_characters(const LaurentPoly& l) {
    if (!is_symmetric(l)) throw std::invalid_argument("character must be symmetric under mu -> 1/mu");
    CharacterClass out;
    LaurentPoly rest = l;
    while (!rest.is_zero()) {
        const long top = rest.max_exp();
        const std::size_t n = static_cast<std::size_t>(top) + 1;
        const Rational m = rest[top];
        out.multiplicities[n] = m;
        rest -= sl2_character(n) * m;
    }
    return out;
}

}  // namespace detail

/// Decomposition of a single-parity symmetric Laurent polynomial (the shape of char_image).
inline CharacterClass decompose_characters(const LaurentPoly& l) {
    if (!l.is_zero()) {
        for (long e = l.min_exp(); e <= l.max_exp(); ++e)
            if (l[e] != 0 && (e - l.min_exp()) % 2 != 0)
                throw std::invalid_argument("character mixes even and odd exponents");
    }
    return detail::peel_characters(l);
}

struct UnimodalPair {
    Poly F;
    Poly G;
};

/// [u^p] F = h_{d/2} + h_{d/2-2} + ... + h_{d/2-2p} for d/2 - 2p >= 0;
/// [u^q] G = h_{d/2-1} + h_{d/2-3} + ... + h_{d/2-2q-1} for d/2 - 2q - 1 >= 0.
inline UnimodalPair unimodal_pair(const ReciprocalPoly& h) {
    const long half = static_cast<long>(h.half());
    std::vector<Rational> f, g;
    Rational acc = 0;
    for (long idx = half; idx >= 0; idx -= 2) {
        acc += h[static_cast<std::size_t>(idx)];
        f.push_back(acc);
    }
    acc = 0;
    for (long idx = half - 1; idx >= 0; idx -= 2) {
        acc += h[static_cast<std::size_t>(idx)];
        g.push_back(acc);
    }
    return {Poly(std::move(f)), Poly(std::move(g))};
}

struct Part3Row {
    std::size_t j = 0;
    Rational chi_j;        // computed multiplicity of the j-dimensional irreducible
    Rational sym_j;        // computed multiplicity of Sym^j V (dimension j + 1)
    Rational stated;       // (j - 1) h_{d/2-j}
    Rational j_weighted;   // j h_{d/2-j}
};

struct Part3Report {
    Poly shifted_reversed;  // (u+2)^{d/2} gamma(1/(u+2))
    Poly doubled_derivative;
    CharacterClass classes;  // of 2 d/du[...] under u -> mu + 1/mu
    std::vector<Part3Row> rows;
    bool matches_2j_rule = false;  // chi_j multiplicity == 2 j h_{d/2-j} for every j
};

/**
 * Pushes 2 d/du[(u+2)^{d/2} gamma(1/(u+2))] through u -> mu + 1/mu (u is the
 * character of the standard representation V) and tabulates the resulting
 * multiplicities next to the candidate weightings (j-1) h_{d/2-j} and j h_{d/2-j}.
 */
inline Part3Report part3_report(const ReciprocalPoly& h) {
    const std::size_t half = h.half();
    Part3Report rep;
    GammaVector gamma = gamma_by_peeling(h);
    for (std::size_t i = 0; i <= half; ++i)
        if (gamma.entries[i] != 0) rep.shifted_reversed += pow(Poly{2, 1}, half - i) * gamma.entries[i];
    rep.doubled_derivative = derivative(rep.shifted_reversed) * Rational(2);
    // polynomials in mu + 1/mu mix both parities, so the parity guard does not apply
    rep.classes = detail::peel_characters(compose(rep.doubled_derivative, LaurentPoly(-1, {1, 0, 1})));

    auto mult = [&](std::size_t n) {
        auto it = rep.classes.multiplicities.find(n);
        return it == rep.classes.multiplicities.end() ? Rational(0) : it->second;
    };
    rep.matches_2j_rule = true;
    for (std::size_t j = 1; j <= half; ++j) {
        Part3Row row;
        row.j = j;
        row.chi_j = mult(j);
        row.sym_j = mult(j + 1);
        const Rational& hj = h[half - j];
        row.stated = Rational(static_cast<long>(j) - 1) * hj;
        row.j_weighted = Rational(static_cast<long>(j)) * hj;
        if (row.chi_j != Rational(2 * static_cast<long>(j)) * hj) rep.matches_2j_rule = false;
        rep.rows.push_back(std::move(row));
    }
    for (const auto& [n, m] : rep.classes.multiplicities)
        if (n > half && m != 0) rep.matches_2j_rule = false;
    return rep;
}

}  // namespace gammacheb
