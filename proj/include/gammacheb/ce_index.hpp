#pragma once

// Noncommutative polynomials in the letters c and e, the ce-index recursion of
// the Tchebyshev posets, and the reciprocal Chebyshev recursions tied to it.

#include "gammacheb/chebyshev.hpp"
#include "gammacheb/laurent.hpp"
#include "gammacheb/poly.hpp"
#include "gammacheb/reciprocal.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace gammacheb {

/// Orders words by length first, then lexicographically.
struct LengthLex {
    bool operator()(const std::string& a, const std::string& b) const {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};

/**
 * Rational linear combination of words over {c, e}. Multiplication is word
 * concatenation; zero coefficients are never stored.
 */
class CePoly {
public:
    using Terms = std::map<std::string, Rational, LengthLex>;

    CePoly() = default;

    static CePoly word(const std::string& w, const Rational& coeff = 1) {
        for (char ch : w)
            if (ch != 'c' && ch != 'e') throw std::invalid_argument("ce-words use only the letters c and e");
        CePoly p;
        if (coeff != 0) p.terms_.emplace(w, coeff);
        return p;
    }
    static CePoly one() { return word(""); }
    static CePoly c() { return word("c"); }
    static CePoly e() { return word("e"); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CePoly& operator+=(const CePoly& o) {
        for (const auto& [w, k] : o.terms_) add(w, k);
        return *this;
    }
    CePoly& operator-=(const CePoly& o) {
        for (const auto& [w, k] : o.terms_) add(w, -k);
        return *this;
    }
    friend CePoly operator+(CePoly a, const CePoly& b) { return a += b; }
    friend CePoly operator-(CePoly a, const CePoly& b) { return a -= b; }
    friend CePoly operator*(const CePoly& a, const Rational& s) {
        CePoly out;
        if (s == 0) return out;
        for (const auto& [w, k] : a.terms_) out.terms_.emplace(w, k * s);
        return out;
    }
    friend CePoly operator*(const Rational& s, const CePoly& a) { return a * s; }
    friend CePoly operator*(const CePoly& a, const CePoly& b) {
        CePoly out;
        for (const auto& [wa, ka] : a.terms_)
            for (const auto& [wb, kb] : b.terms_) out.add(wa + wb, ka * kb);
        return out;
    }
    friend bool operator==(const CePoly& a, const CePoly& b) { return a.terms_ == b.terms_; }

private:
    void add(const std::string& w, const Rational& k) {
        auto [it, inserted] = terms_.try_emplace(w, k);
        if (!inserted) it->second += k;
        if (it->second == 0) terms_.erase(it);
    }

    Terms terms_;
};

/// Terms in length-lex order, e.g. "2·cc − ee". The empty word prints as its coefficient.
inline std::string to_string(const CePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, k] : p.terms()) {
        Rational mag = abs(k);
        if (out.empty())
            out += k < 0 ? "−" : "";
        else
            out += k < 0 ? " − " : " + ";
        if (w.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += w;
        else
            out += to_string(mag) + "·" + w;
    }
    return out;
}

/// Psi(T_0) = 1, Psi(T_1) = c, Psi(T_n) = 2c Psi(T_{n-1}) - e^2 Psi(T_{n-2}).
inline CePoly tcheb_ce_index(std::size_t n) {
    CePoly prev = CePoly::one();
    if (n == 0) return prev;
    CePoly cur = CePoly::c();
    const CePoly two_c = CePoly::word("c", 2), ee = CePoly::word("ee");
    for (std::size_t k = 1; k < n; ++k) {
        CePoly next = two_c * cur - ee * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Substitutes commuting polynomials for c and e, word by word.
inline Poly specialize(const CePoly& p, const Poly& c_val, const Poly& e_val) {
    Poly out;
    for (const auto& [w, k] : p.terms()) {
        Poly term = Poly::constant(k);
        for (char ch : w) term *= ch == 'c' ? c_val : e_val;
        out += term;
    }
    return out;
}

/// A_0 = A_1 = 1, A_n = 2 A_{n-1} - x^2 A_{n-2}; equals x^n T_n(1/x).
inline Poly reciprocal_cheb_A(std::size_t m) {
    Poly prev = Poly::constant(1);
    if (m == 0) return prev;
    Poly cur = Poly::constant(1);
    const Poly x2 = Poly::monomial(1, 2);
    for (std::size_t k = 1; k < m; ++k) {
        Poly next = cur * Rational(2) - x2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// R_0 = 0, R_1 = 1/2, R_k = R_{k-1} - x^2 R_{k-2}.
inline Poly offset_R(std::size_t k) {
    Poly prev;
    if (k == 0) return prev;
    Poly cur = Poly::constant(Rational(1, 2));
    const Poly x2 = Poly::monomial(1, 2);
    for (std::size_t i = 1; i < k; ++i) {
        Poly next = cur - x2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

struct OffsetComparison {
    std::size_t n = 0;
    Poly S;  // Psi(T_n) with c -> 1, e -> x
    Poly A;
    Poly R;
    Poly A_minus_S;
    Poly A_minus_2S;
    Poly A_minus_S_minus_R;
};

/// Descriptive comparison of the c -> 1, e -> x specialization against A_n and R_n.
inline OffsetComparison compare_specialization_offset(std::size_t n) {
    OffsetComparison r;
    r.n = n;
    r.S = specialize(tcheb_ce_index(n), Poly::constant(1), Poly::x());
    r.A = reciprocal_cheb_A(n);
    r.R = offset_R(n);
    r.A_minus_S = r.A - r.S;
    r.A_minus_2S = r.A - r.S * Rational(2);
    r.A_minus_S_minus_R = r.A - r.S - r.R;
    return r;
}

namespace detail {

/// h_{d/2} w^{-d/2} + 2 sum_j h_{d/2-j} w^{-(d/2-j)} [w^{-j} X_j(w)], where
/// X_j is T_j(1/w) when at_inverse is set and T_j(w) otherwise.
inline LaurentPoly gamtopdes_expansion(const ReciprocalPoly& h, bool at_inverse) {
    const long half = static_cast<long>(h.half());
    const LaurentPoly arg = at_inverse ? LaurentPoly::monomial(1, -1) : LaurentPoly::monomial(1, 1);
    LaurentPoly rhs = LaurentPoly::monomial(h[h.half()], -half);
    for (long j = 1; j <= half; ++j) {
        const Rational& coeff = h[static_cast<std::size_t>(half - j)];
        if (coeff == 0) continue;
        LaurentPoly bracket = compose(cheb_T(static_cast<std::size_t>(j)), arg).shifted(-j);
        rhs += bracket.shifted(-(half - j)) * Rational(2 * coeff);
    }
    return rhs;
}

inline LaurentPoly gamtopdes_lhs(const ReciprocalPoly& h) {
    // g(2/w) / w^{d/2}
    Poly g = g_from_palindromic(h);
    return compose(g, LaurentPoly::monomial(2, -1)).shifted(-static_cast<long>(h.half()));
}

}  // namespace detail

/**
 * Under u = w / (2(w+1)): checks 1/u - 2 = 2/w, then the expansion
 * g(2/w) / w^{d/2} = h_{d/2} w^{-d/2} + 2 sum_j h_{d/2-j} w^{-(d/2-j)} [w^{-j} T_j(1/w)].
 * The argument of T_j is 1/w because T_j(u/2) at u = 2/w is T_j(1/w).
 */
inline bool gamtopdes_substitution_check(const ReciprocalPoly& h) {
    // 1/u = 2(w + 1)/w as a Laurent polynomial in w.
    LaurentPoly inv_u = LaurentPoly(0, {2, 2}) * LaurentPoly::monomial(1, -1);
    bool substitution = inv_u - LaurentPoly::constant(2) == LaurentPoly::monomial(2, -1);
    return substitution && detail::gamtopdes_lhs(h) == detail::gamtopdes_expansion(h, true);
}

/// Same expansion with T_j(w) in the bracket, as the identity is sometimes
/// displayed. Holds only in degenerate cases; kept for reporting.
inline bool gamtopdes_printed_variant_holds(const ReciprocalPoly& h) {
    return detail::gamtopdes_lhs(h) == detail::gamtopdes_expansion(h, false);
}

}  // namespace gammacheb
