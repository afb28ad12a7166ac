#pragma once

// Exact real-root counting with Sturm sequences over the rationals.

#include "gammacheb/gamma.hpp"
#include "gammacheb/poly.hpp"
#include "gammacheb/reciprocal.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gammacheb {

/// p, p', and successive negated remainders, ending at gcd(p, p') up to scale.
struct SturmChain {
    std::vector<Poly> polys;

    explicit SturmChain(const Poly& p) {
        if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
        polys.push_back(p);
        Poly d = derivative(p);
        if (d.is_zero()) return;
        polys.push_back(std::move(d));
        for (;;) {
            Poly r = -divmod(polys[polys.size() - 2], polys.back()).second;
            if (r.is_zero()) break;
            polys.push_back(std::move(r));
        }
    }

    /// Sign changes at +inf (sign = +1) or -inf (sign = -1).
    std::size_t variations_at_infinity(int sign) const {
        std::vector<int> signs;
        for (const auto& q : polys) {
            int s = sgn(q.leading());
            if (sign < 0 && *q.degree() % 2 == 1) s = -s;
            signs.push_back(s);
        }
        return count_changes(signs);
    }

    std::size_t variations_at(const Rational& x) const {
        std::vector<int> signs;
        for (const auto& q : polys) signs.push_back(sgn(q(x)));
        return count_changes(signs);
    }

    /// Distinct real roots of polys.front().
    std::size_t distinct_real_roots() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

private:
    static std::size_t count_changes(const std::vector<int>& signs) {
        std::size_t n = 0;
        int last = 0;
        for (int s : signs) {
            if (s == 0) continue;
            if (last != 0 && s != last) ++n;
            last = s;
        }
        return n;
    }
};

struct RootCount {
    std::size_t distinct_real = 0;
    std::size_t total_real = 0;  // with multiplicity
    std::size_t degree = 0;
    bool is_real_rooted = false;  // total_real == degree
};

/// Yun's squarefree factorization: p = c * prod_i a_i^i with each a_i squarefree
/// and monic. Element i-1 of the result is a_i (possibly 1).
inline std::vector<Poly> squarefree_factors(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree factorization of the zero polynomial");
    std::vector<Poly> out;
    if (*p.degree() == 0) return out;
    Poly dp = derivative(p);
    Poly c = gcd(p, dp);
    Poly w = divmod(p, c).first;
    Poly y = divmod(dp, c).first;
    Poly z = y - derivative(w);
    while (*w.degree() > 0) {
        Poly g = gcd(w, z);
        out.push_back(g);
        w = divmod(w, g).first;
        y = divmod(z, g).first;
        z = y - derivative(w);
    }
    return out;
}

inline RootCount count_real_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    RootCount rc;
    rc.degree = *p.degree();
    rc.distinct_real = SturmChain(p).distinct_real_roots();
    auto factors = squarefree_factors(p);
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (*factors[i].degree() > 0) rc.total_real += (i + 1) * SturmChain(factors[i]).distinct_real_roots();
    rc.is_real_rooted = rc.total_real == rc.degree;
    return rc;
}

inline bool is_real_rooted(const Poly& p) { return count_real_roots(p).is_real_rooted; }

/// Distinct real roots in the half-open interval (lo, hi]; an empty optional
/// bound means infinity on that side.
inline std::size_t count_roots_in(const Poly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    SturmChain chain(p);
    std::size_t vlo = lo ? chain.variations_at(*lo) : chain.variations_at_infinity(-1);
    std::size_t vhi = hi ? chain.variations_at(*hi) : chain.variations_at_infinity(1);
    return vlo - vhi;
}

/// t^{deg p} p(1/t): the coefficient sequence reversed. Zero maps to zero.
inline Poly reciprocal_of(const Poly& p) {
    auto cs = p.coeffs();
    return Poly(std::vector<Rational>(cs.rbegin(), cs.rend()));
}

inline bool verify_reciprocal_lemma(const Poly& p) { return is_real_rooted(p) == is_real_rooted(reciprocal_of(p)); }

/// How a Chebyshev coefficient tuple a_0..a_r is laid onto h_0..h_r.
enum class TupleOrientation {
    /// h_r = a_0 and h_{r-j} = a_j / 2: forced by g(2u) = sum a_j T_j(u).
    ProofForced,
    /// (h_0, ..., h_r) = (a_r, a_{r-1}/2, ..., a_0/2), read from the statement literally.
    Printed,
};

inline ReciprocalPoly reciprocal_from_cheb_coeffs(const std::vector<Rational>& a, std::size_t r,
                                                  TupleOrientation orientation = TupleOrientation::ProofForced,
                                                  bool strict_degree = false) {
    if (a.size() != r + 1) throw std::invalid_argument("expected r + 1 Chebyshev coefficients");
    if (strict_degree && a[r] == 0) throw std::invalid_argument("leading Chebyshev coefficient a_r is zero");
    std::vector<Rational> h(2 * r + 1);
    for (std::size_t k = 0; k <= r; ++k) {
        Rational v;
        if (orientation == TupleOrientation::ProofForced)
            v = k == r ? a[0] : Rational(a[r - k] / 2);
        else
            v = k == 0 ? a[r] : Rational(a[r - k] / 2);
        h[k] = v;
        h[2 * r - k] = v;
    }
    return ReciprocalPoly::from_coeffs(std::move(h));
}

struct CheblinReport {
    bool lhs_real_rooted = false;  // A(x) = sum a_j T_j(x)
    bool rhs_real_rooted = false;  // proof-forced reciprocal polynomial
    bool agree = false;
    bool printed_rhs_real_rooted = false;
    bool printed_agree = false;
    bool gamma_real_rooted = false;  // gamma of the proof-forced polynomial
};

/// Compares real-rootedness of A(x) = sum a_j T_j(x) with that of the
/// reciprocal polynomial built from the coefficients, under both orientations.
/// Descriptive only: nothing here asserts that the two sides agree.
inline CheblinReport check_cheblinreal(const std::vector<Rational>& a) {
    if (a.empty()) throw std::invalid_argument("empty Chebyshev coefficient tuple");
    const std::size_t r = a.size() - 1;
    Poly A = from_cheb_basis(a, ChebKind::First);
    if (A.is_zero()) throw std::invalid_argument("Chebyshev combination is identically zero");
    ReciprocalPoly forced = reciprocal_from_cheb_coeffs(a, r, TupleOrientation::ProofForced);
    ReciprocalPoly printed = reciprocal_from_cheb_coeffs(a, r, TupleOrientation::Printed);

    CheblinReport rep;
    rep.lhs_real_rooted = is_real_rooted(A);
    rep.rhs_real_rooted = is_real_rooted(forced.poly());
    rep.agree = rep.lhs_real_rooted == rep.rhs_real_rooted;
    rep.printed_rhs_real_rooted = is_real_rooted(printed.poly());
    rep.printed_agree = rep.lhs_real_rooted == rep.printed_rhs_real_rooted;
    rep.gamma_real_rooted = is_real_rooted(gamma_by_peeling(forced).to_poly());
    return rep;
}

inline bool verify_petersen_observation(const ReciprocalPoly& h) {
    return is_real_rooted(h.poly()) == is_real_rooted(gamma_by_peeling(h).to_poly());
}

/**
 * Sharpened form of the h/gamma real-rootedness relation for h_0 != 0:
 * h is real-rooted iff gamma is real-rooted with no root in (1/4, inf).
 * Roots s of g map to gamma-roots 1/(s+2), and t + 1/t = s has real
 * solutions t exactly when |s| >= 2.
 */
inline bool petersen_sharpened_holds(const ReciprocalPoly& h) {
    if (h[0] == 0) throw std::invalid_argument("sharpened criterion needs h_0 != 0");
    Poly gamma = gamma_by_peeling(h).to_poly();
    bool gamma_side = is_real_rooted(gamma) && count_roots_in(gamma, Rational(1, 4), std::nullopt) == 0;
    return is_real_rooted(h.poly()) == gamma_side;
}

}  // namespace gammacheb
