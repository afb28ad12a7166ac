#pragma once

// Exact rational scalars. Everything downstream is built on mpq_class, which
// keeps values canonical (lowest terms, positive denominator) after every
// arithmetic operation.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gammacheb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign on p, decimal digits only).
/// Throws std::invalid_argument on anything else, including q = 0.
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!digits(num, true) || (slash != std::string_view::npos && !digits(den, false)))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Rational r;
    r.get_num() = Integer(n, 10);
    r.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the value is an integer.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace gammacheb
