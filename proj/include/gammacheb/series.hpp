#pragma once

#include "gammacheb/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gammacheb {

/**
 * Power series in u known modulo u^order.
 *
 * Binary operations work modulo the smaller of the two orders, so a result is
 * never claimed to be more precise than its least precise operand.
 */
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : c_(order) {
        if (order == 0) throw std::invalid_argument("series order must be positive");
    }
    TruncatedSeries(std::size_t order, const Poly& p) : TruncatedSeries(order) {
        for (std::size_t i = 0; i < order; ++i) c_[i] = p[i];
    }

    static TruncatedSeries constant(std::size_t order, const Rational& v) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }

    std::size_t order() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_.at(i); }
    Rational& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Same series known to a lower precision.
    TruncatedSeries truncated(std::size_t order) const {
        if (order > c_.size()) throw std::invalid_argument("cannot raise the order of a truncated series");
        TruncatedSeries s(order);
        std::copy_n(c_.begin(), order, s.c_.begin());
        return s;
    }

    Poly to_poly() const { return Poly(c_); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < s.order(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
        return s;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < s.order(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
        return s;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& k) {
        TruncatedSeries s = a;
        for (auto& v : s.c_) v *= k;
        return s;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries s(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return s;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

inline TruncatedSeries pow(const TruncatedSeries& s, std::size_t k) {
    TruncatedSeries result = TruncatedSeries::constant(s.order(), 1), base = s;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

/// Multiplicative inverse; requires a nonzero constant term.
inline TruncatedSeries inverse(const TruncatedSeries& s) {
    if (s[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
    const std::size_t n = s.order();
    TruncatedSeries r(n);
    r[0] = 1 / s[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += s[i] * r[k - i];
        r[k] = -acc / s[0];
    }
    return r;
}

/// Catalan generating function C(u) = sum_n Cat(n) u^n, computed from the
/// functional equation C = 1 + u C^2 one coefficient at a time.
inline TruncatedSeries catalan_series(std::size_t order) {
    TruncatedSeries c(order);
    c[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        Rational acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc += c[i] * c[n - 1 - i];
        c[n] = acc;
    }
    return c;
}

/// Polynomial outer function: always well defined, whatever the inner constant term.
inline TruncatedSeries series_compose(const Poly& p, const TruncatedSeries& s) {
    TruncatedSeries acc(s.order());
    auto cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * s;
        acc[0] += *it;
    }
    return acc;
}

/// Series outer function: the inner series must have zero constant term,
/// otherwise the infinite composition is not determined by truncations.
inline TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner[0] != 0)
        throw std::domain_error("cannot compose a series into one with nonzero constant term");
    const std::size_t n = std::min(outer.order(), inner.order());
    TruncatedSeries acc(n);
    TruncatedSeries in = inner.truncated(n);
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * in;
        acc[0] += outer[i];
    }
    return acc;
}

}  // namespace gammacheb
