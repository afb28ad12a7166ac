#pragma once

// Chebyshev polynomials of both kinds, conversions between the monomial and
// Chebyshev bases, and the palindromic-polynomial correspondence
// h(t) = t^n g(t + 1/t).

#include "gammacheb/laurent.hpp"
#include "gammacheb/poly.hpp"
#include "gammacheb/reciprocal.hpp"

#include <stdexcept>
#include <vector>

namespace gammacheb {

enum class ChebKind { First, Second };

namespace detail {

inline Poly cheb(std::size_t n, ChebKind kind) {
    Poly prev = Poly::constant(1);
    if (n == 0) return prev;
    Poly cur = kind == ChebKind::First ? Poly::x() : Poly::monomial(2, 1);
    const Poly two_x = Poly::monomial(2, 1);
    for (std::size_t k = 1; k < n; ++k) {
        Poly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace detail

/// First kind: T_0 = 1, T_1 = x, T_n = 2x T_{n-1} - T_{n-2}.
inline Poly cheb_T(std::size_t n) { return detail::cheb(n, ChebKind::First); }

/// Second kind: U_0 = 1, U_1 = 2x, same three-term recursion.
inline Poly cheb_U(std::size_t n) { return detail::cheb(n, ChebKind::Second); }

inline Poly cheb(std::size_t n, ChebKind kind) { return detail::cheb(n, kind); }

/// T_j(u/2) scaled by 2, i.e. the monic Chebyshev polynomial of degree j
/// (for j >= 1), with 2 T_j(u/2) evaluated by exact composition.
inline Poly monic_cheb_T(std::size_t j) { return compose(cheb_T(j), Poly{0, Rational(1, 2)}) * Rational(2); }

/// Square rational matrix, row-major.
using Matrix = std::vector<std::vector<Rational>>;

inline Matrix identity_matrix(std::size_t n) {
    Matrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
    Matrix out(n, std::vector<Rational>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

struct BasisMatrix {
    enum class Direction { MonomialToCheb, ChebToMonomial };

    Matrix entries;
    Direction direction;

    std::size_t size() const { return entries.size(); }
};

/**
 * Change of basis between 1, x, ..., x^n and T_0, ..., T_n.
 *
 * ChebToMonomial: column j holds the monomial coefficients of T_j.
 * MonomialToCheb: column i holds the Chebyshev coefficients of x^i, taken from
 * x^i = 2^{1-i} sum_k C(i,k) T_{i-2k} (T_0 term halved), which makes every
 * entry visibly nonnegative. The two are inverse to each other; the tests
 * check that rather than assume it.
 */
inline BasisMatrix basis_matrix(std::size_t n, BasisMatrix::Direction direction) {
    Matrix m(n + 1, std::vector<Rational>(n + 1));
    if (direction == BasisMatrix::Direction::ChebToMonomial) {
        for (std::size_t j = 0; j <= n; ++j) {
            Poly t = cheb_T(j);
            for (std::size_t i = 0; i <= j; ++i) m[i][j] = t[i];
        }
    } else {
        for (std::size_t i = 0; i <= n; ++i) {
            Rational scale(Integer(2), Integer(1) << static_cast<unsigned>(i));
            scale.canonicalize();
            for (std::size_t k = 0; 2 * k <= i; ++k) {
                Rational v = scale * Rational(detail::binomial(i, k));
                if (2 * k == i) v /= 2;
                m[i - 2 * k][i] = v;
            }
        }
    }
    return {std::move(m), direction};
}

/// Coefficients b_j with p = sum_j b_j X_j (X = T or U), by peeling off the
/// leading term against X_deg. Zero input gives an empty sequence.
inline std::vector<Rational> to_cheb_basis(const Poly& p, ChebKind kind) {
    if (p.is_zero()) return {};
    std::vector<Rational> out(p.size());
    Poly rest = p;
    while (!rest.is_zero()) {
        const std::size_t k = *rest.degree();
        Poly basis = cheb(k, kind);
        Rational b = rest.leading() / basis.leading();
        out[k] = b;
        rest -= basis * b;
    }
    return out;
}

inline Poly from_cheb_basis(const std::vector<Rational>& b, ChebKind kind) {
    Poly out;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] != 0) out += cheb(j, kind) * b[j];
    return out;
}

/// For palindromic h of even degree 2n, g(u) = a_n + sum_{j>=1} 2 a_{n-j} T_j(u/2),
/// the unique polynomial with h(t) = t^n g(t + 1/t).
inline Poly g_from_palindromic(const ReciprocalPoly& h) {
    const std::size_t n = h.half();
    Poly g = Poly::constant(h[n]);
    for (std::size_t j = 1; j <= n; ++j)
        if (h[n - j] != 0) g += monic_cheb_T(j) * h[n - j];
    return g;
}

inline Poly g_from_palindromic(const Poly& h) { return g_from_palindromic(ReciprocalPoly(h)); }

/// Exact check of h(t) - t^n g(t + 1/t) == 0 for a caller-supplied g.
inline bool palindromic_identity_holds(const ReciprocalPoly& h, const Poly& g) {
    const std::size_t n = h.half();
    LaurentPoly t_plus_inv(-1, {1, 0, 1});
    LaurentPoly rhs = compose(g, t_plus_inv).shifted(static_cast<long>(n));
    return LaurentPoly(h.poly()) - rhs == LaurentPoly{};
}

inline bool verify_palindromic_identity(const ReciprocalPoly& h) {
    return palindromic_identity_holds(h, g_from_palindromic(h));
}

/// h(t) / (1 + t) for odd-degree reciprocal h. The quotient is reciprocal of
/// even degree. Throws for even degree, non-palindromic input, or nonzero remainder.
inline ReciprocalPoly reduce_odd_reciprocal(const Poly& h) {
    if (h.is_zero() || *h.degree() % 2 == 0)
        throw std::invalid_argument("reduce_odd_reciprocal expects odd degree");
    if (!is_palindromic(h)) throw std::invalid_argument("input is not reciprocal");
    auto [q, r] = divmod(h, Poly{1, 1});
    if (!r.is_zero()) throw std::invalid_argument("input is not divisible by 1 + t");
    return ReciprocalPoly(std::move(q));
}

}  // namespace gammacheb
