#pragma once

#include "gammacheb/poly.hpp"

#include <string>
#include <vector>

namespace gammacheb {

/// Finitely supported polynomial in x and x^-1 over the rationals. Stored as a
/// lowest exponent plus a dense run of coefficients; both ends of the run are
/// nonzero unless the polynomial is zero (empty run, min_exp 0).
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long min_exp, std::vector<Rational> cs) : min_(min_exp), c_(std::move(cs)) { trim(); }
    explicit LaurentPoly(const Poly& p) : c_(p.coeffs().begin(), p.coeffs().end()) { trim(); }

    static LaurentPoly constant(const Rational& v) { return LaurentPoly(0, {v}); }
    static LaurentPoly monomial(const Rational& v, long e) { return LaurentPoly(e, {v}); }

    bool is_zero() const { return c_.empty(); }
    long min_exp() const { return min_; }
    /// Highest exponent; only meaningful for nonzero values.
    long max_exp() const { return min_ + static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& operator[](long e) const {
        static const Rational zero{0};
        if (c_.empty() || e < min_ || e > max_exp()) return zero;
        return c_[static_cast<std::size_t>(e - min_)];
    }

    /// Multiply by x^k.
    LaurentPoly shifted(long k) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.min_ += k;
        return r;
    }

    /// Converts to an ordinary polynomial; throws if any negative exponent survives.
    Poly to_poly() const {
        if (is_zero()) return {};
        if (min_ < 0) throw std::domain_error("Laurent polynomial has negative exponents");
        std::vector<Rational> out(static_cast<std::size_t>(max_exp()) + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(min_) + i] = c_[i];
        return Poly(std::move(out));
    }

    /// Value under x -> 1/x.
    LaurentPoly inverted() const {
        if (is_zero()) return {};
        return LaurentPoly(-max_exp(), std::vector<Rational>(c_.rbegin(), c_.rend()));
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, 1); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, -1); }
    friend LaurentPoly operator*(const LaurentPoly& a, const Rational& s) {
        if (s == 0) return {};
        LaurentPoly r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& a) { return a * s; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return LaurentPoly(a.min_ + b.min_, std::move(out));
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.min_ == b.min_ && a.c_ == b.c_;
    }

private:
    static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, int sign) {
        if (a.is_zero()) return sign > 0 ? b : b * Rational(-1);
        if (b.is_zero()) return a;
        long lo = std::min(a.min_, b.min_), hi = std::max(a.max_exp(), b.max_exp());
        std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
        for (long e = lo; e <= hi; ++e) {
            auto& slot = out[static_cast<std::size_t>(e - lo)];
            slot = a[e];
            if (sign > 0)
                slot += b[e];
            else
                slot -= b[e];
        }
        return LaurentPoly(lo, std::move(out));
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            min_ += static_cast<long>(lead);
        }
        if (c_.empty()) min_ = 0;
    }

    long min_ = 0;
    std::vector<Rational> c_;
};

inline LaurentPoly pow(const LaurentPoly& p, std::size_t k) {
    LaurentPoly result = LaurentPoly::constant(1), base = p;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

/// p(L) for an ordinary polynomial p and Laurent argument L.
inline LaurentPoly compose(const Poly& p, const LaurentPoly& arg) {
    LaurentPoly acc;
    auto cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * arg + LaurentPoly::constant(*it);
    return acc;
}

/// True iff the coefficient at x^e equals the one at x^-e for every e.
inline bool is_symmetric(const LaurentPoly& p) { return p == p.inverted(); }

inline std::string to_string(const LaurentPoly& p, char var = 'x') {
    if (p.is_zero()) return "0";
    std::string out;
    for (long e = p.max_exp(); e >= p.min_exp(); --e) {
        const Rational& c = p[e];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (e == 0)
            out += to_string(mag);
        else if (mag != 1)
            out += is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
        if (e != 0) out += var;
        if (e != 0 && e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace gammacheb
