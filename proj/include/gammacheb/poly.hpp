#pragma once

#include "gammacheb/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gammacheb {

/// Degree of a polynomial. The zero polynomial has no degree (std::nullopt),
/// standing in for negative infinity; callers must handle it explicitly.
using Degree = std::optional<std::size_t>;

/**
 * Dense univariate polynomial over the rationals.
 *
 * coeffs()[i] is the coefficient of x^i. Trailing zeros are always trimmed, so
 * the zero polynomial stores nothing and a nonzero polynomial's last stored
 * coefficient is nonzero.
 */
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }

    static Poly constant(const Rational& v) { return Poly(std::vector<Rational>{v}); }
    static Poly monomial(const Rational& v, std::size_t k) {
        std::vector<Rational> cs(k + 1);
        cs[k] = v;
        return Poly(std::move(cs));
    }
    static Poly x() { return monomial(1, 1); }

    Degree degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    bool is_zero() const { return c_.empty(); }
    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    std::size_t size() const { return c_.size(); }
    std::span<const Rational> coeffs() const { return c_; }

    /// Coefficient of x^i; zero beyond the stored range.
    const Rational& operator[](std::size_t i) const {
        static const Rational zero{0};
        return i < c_.size() ? c_[i] : zero;
    }
    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Rational operator()(const Rational& at) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }
    Poly& operator/=(const Rational& s) {
        if (s == 0) throw std::domain_error("polynomial division by zero scalar");
        for (auto& v : c_) v /= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const Rational& s) { return a /= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Poly pow(const Poly& p, std::size_t k) {
    Poly result = Poly::constant(1), base = p;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

/// p(q(x)) by Horner's scheme.
inline Poly compose(const Poly& p, const Poly& q) {
    Poly acc;
    auto cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * q + Poly::constant(*it);
    return acc;
}

inline Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    std::vector<Rational> out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
}

/// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {Poly{}, a};
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quo(a.size() - b.size() + 1);
    const std::size_t db = b.size() - 1;
    const Rational& lead = b.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational f = rem[k + db] / lead;
        quo[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline Poly monic(const Poly& p) { return p.is_zero() ? p : p / p.leading(); }

/// Monic greatest common divisor (zero if both inputs are zero).
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

/// True iff the coefficient sequence reads the same in both directions.
/// The zero polynomial counts as palindromic.
inline bool is_palindromic(const Poly& p) {
    auto cs = p.coeffs();
    return std::equal(cs.begin(), cs.begin() + cs.size() / 2, cs.rbegin());
}

inline std::string to_string(const Poly& p, char var = 'x') {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        const Rational& c = p[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (i == 0)
            out += to_string(mag);
        else if (mag != 1)
            out += is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace gammacheb
