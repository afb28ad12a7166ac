#pragma once

#include "gammacheb/chebyshev.hpp"
#include "gammacheb/laurent.hpp"
#include "gammacheb/reciprocal.hpp"
#include "gammacheb/series.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammacheb {

/**
 * Gamma vector of an even-degree reciprocal polynomial: the unique
 * (gamma_0, ..., gamma_{d/2}) with h(t) = sum_i gamma_i t^i (1+t)^{d-2i}.
 */
struct GammaVector {
    std::vector<Rational> entries;

    /// gamma(u) = sum_i gamma_i u^i.
    Poly to_poly() const { return Poly(entries); }

    /// sum_i gamma_i t^i (1+t)^{d-2i} with d = 2 (size - 1).
    Poly reconstruct() const {
        const std::size_t half = entries.size() - 1;
        Poly out;
        for (std::size_t i = 0; i <= half; ++i)
            if (entries[i] != 0) out += Poly::monomial(entries[i], i) * pow(Poly{1, 1}, 2 * (half - i));
        return out;
    }

    friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

namespace detail {

inline GammaVector padded(const Poly& p, std::size_t half) {
    if (p.size() > half + 1)
        throw consistency_error("gamma polynomial has degree above d/2");
    std::vector<Rational> e(half + 1);
    for (std::size_t i = 0; i < p.size(); ++i) e[i] = p[i];
    return {std::move(e)};
}

}  // namespace detail

/// Peels gamma_i t^i (1+t)^{d-2i} off the lowest remaining coefficient.
inline GammaVector gamma_by_peeling(const ReciprocalPoly& h) {
    const std::size_t half = h.half(), d = h.degree();
    GammaVector g{std::vector<Rational>(half + 1)};
    Poly rest = h.poly();
    for (std::size_t i = 0; i <= half; ++i) {
        g.entries[i] = rest[i];
        if (rest[i] != 0) rest -= Poly::monomial(rest[i], i) * pow(Poly{1, 1}, d - 2 * i);
    }
    if (!rest.is_zero()) throw consistency_error("peeling left a nonzero remainder");
    return g;
}

/**
 * gamma(u) = h(C(u) - 1) / C(u)^d with C the Catalan series.
 *
 * Works to order d/2 + 2 by default, one coefficient past the last one that
 * may be nonzero, so a non-terminating expansion is detected rather than
 * truncated. A larger order checks more coefficients; anything below
 * d/2 + 1 cannot see all of gamma and is rejected.
 */
inline GammaVector gamma_by_catalan(const ReciprocalPoly& h, std::optional<std::size_t> working_order = {}) {
    const std::size_t half = h.half(), d = h.degree();
    const std::size_t order = working_order.value_or(half + 2);
    if (order < half + 1) throw std::invalid_argument("series order must be at least d/2 + 1");
    TruncatedSeries c = catalan_series(order);
    TruncatedSeries c_tilde = c - TruncatedSeries::constant(order, 1);
    TruncatedSeries gamma = series_compose(h.poly(), c_tilde) * inverse(pow(c, d));
    for (std::size_t i = half + 1; i < order; ++i)
        if (gamma[i] != 0)
            throw consistency_error("Catalan expansion does not terminate at degree d/2 (coefficient " +
                                    std::to_string(i) + ")");
    return detail::padded(gamma.truncated(half + 1).to_poly(), half);
}

/// gamma(u) = u^{d/2} g(1/u - 2), evaluated in Laurent polynomials.
inline GammaVector gamma_by_cheb(const ReciprocalPoly& h) {
    const std::size_t half = h.half();
    Poly g = g_from_palindromic(h);
    LaurentPoly inv_u_minus_2(-1, {1, -2});
    LaurentPoly gamma = compose(g, inv_u_minus_2).shifted(static_cast<long>(half));
    if (!gamma.is_zero() && gamma.min_exp() < 0)
        throw consistency_error("inverted Chebyshev expansion left negative exponents");
    return detail::padded(gamma.to_poly(), half);
}

/// Checks u^{d/2} gamma(1/u) = g(u - 2) and (u+2)^{d/2} gamma(1/(u+2)) = g(u),
/// with gamma taken from the peeling route.
inline bool verify_gamchebinv_variants(const ReciprocalPoly& h) {
    const std::size_t half = h.half();
    const GammaVector gamma = gamma_by_peeling(h);
    const Poly g = g_from_palindromic(h);

    LaurentPoly reversed = compose(gamma.to_poly(), LaurentPoly::monomial(1, -1)).shifted(static_cast<long>(half));
    bool first = reversed == LaurentPoly(compose(g, Poly{-2, 1}));

    Poly shifted;
    for (std::size_t i = 0; i <= half; ++i)
        if (gamma.entries[i] != 0) shifted += pow(Poly{2, 1}, half - i) * gamma.entries[i];
    bool second = shifted == g;
    return first && second;
}

/// P_0 = 2, P_1 = z - 2, P_{r+1} = (z - 2) P_r - P_{r-1}; w^r + w^-r = P_r((w+1)^2 / w).
inline Poly basis_gamma_P(std::size_t r) {
    Poly prev = Poly::constant(2);
    if (r == 0) return prev;
    const Poly z_minus_2{-2, 1};
    Poly cur = z_minus_2;
    for (std::size_t k = 1; k < r; ++k) {
        Poly next = z_minus_2 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Q_r(z) = P_r(z + 2).
inline Poly basis_gamma_Q(std::size_t r) { return compose(basis_gamma_P(r), Poly{2, 1}); }

/// Exact check of P_r((w+1)^2 / w) == w^r + w^-r.
inline bool basis_gamma_P_identity_holds(std::size_t r) {
    LaurentPoly z(-1, {1, 2, 1});
    LaurentPoly expected = LaurentPoly::monomial(1, static_cast<long>(r)) + LaurentPoly::monomial(1, -static_cast<long>(r));
    return compose(basis_gamma_P(r), z) == expected;
}

/**
 * Gamma vector of the reciprocal basis element x^k + x^{d-k} (which is
 * 2 x^{d/2} when k = d/2), read off P_{d/2-k}: the coefficient of z^m in
 * P_{d/2-k} is gamma_{d/2-m}.
 */
inline GammaVector basis_gamma_of_pair(std::size_t k, std::size_t d) {
    if (d % 2 != 0) throw std::invalid_argument("basis_gamma_of_pair needs even d");
    const std::size_t half = d / 2;
    if (k > half) throw std::invalid_argument("k must satisfy 0 <= k <= d/2");
    Poly p = basis_gamma_P(half - k);
    GammaVector g{std::vector<Rational>(half + 1)};
    for (std::size_t m = 0; m < p.size(); ++m) g.entries[half - m] = p[m];
    return g;
}

/// Gamma vector assembled from the basis elements: sum_{k<d/2} h_k * pair(k) + (h_{d/2}/2) * pair(d/2).
inline GammaVector gamma_by_basis(const ReciprocalPoly& h) {
    const std::size_t half = h.half(), d = h.degree();
    GammaVector out{std::vector<Rational>(half + 1)};
    for (std::size_t k = 0; k <= half; ++k) {
        Rational weight = k == half ? Rational(h[k] / 2) : h[k];
        if (weight == 0) continue;
        GammaVector part = basis_gamma_of_pair(k, d);
        for (std::size_t i = 0; i <= half; ++i) out.entries[i] += weight * part.entries[i];
    }
    return out;
}

}  // namespace gammacheb
