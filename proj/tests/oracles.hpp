#pragma once

// Reference computations for the tests. Each one takes a different road from
// the library code it checks.

#include "gammacheb/poly.hpp"
#include "gammacheb/rational.hpp"
#include "gammacheb/simplicial.hpp"

#include <cmath>
#include <set>
#include <vector>

namespace oracle {

using gammacheb::Integer;
using gammacheb::Poly;
using gammacheb::Rational;

inline Integer factorial(unsigned long n) {
    Integer r = 1;
    for (unsigned long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binom(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

/// C_n = binom(2n, n) / (n + 1)
inline Integer catalan(unsigned long n) { return binom(2 * n, n) / (n + 1); }

/// Closed form T_n(x) = (n/2) sum_k (-1)^k (n-k-1)! / (k! (n-2k)!) (2x)^{n-2k}, n >= 1.
inline Poly chebyshev_T(unsigned long n) {
    if (n == 0) return Poly::constant(1);
    std::vector<Rational> c(n + 1);
    for (unsigned long k = 0; 2 * k <= n; ++k) {
        Rational v(factorial(n - k - 1), factorial(k) * factorial(n - 2 * k));
        v.canonicalize();
        Rational half_n(static_cast<long>(n), 2);
        half_n.canonicalize();
        v *= half_n;
        Integer p2 = Integer(1) << static_cast<unsigned>(n - 2 * k);
        v *= Rational(p2);
        if (k % 2) v = -v;
        c[n - 2 * k] = v;
    }
    return Poly(c);
}

/// U_n(x) = sum_k (-1)^k binom(n-k, k) (2x)^{n-2k}.
inline Poly chebyshev_U(unsigned long n) {
    std::vector<Rational> c(n + 1);
    for (unsigned long k = 0; 2 * k <= n; ++k) {
        Rational v(binom(n - k, k) * (Integer(1) << static_cast<unsigned>(n - 2 * k)));
        if (k % 2) v = -v;
        c[n - 2 * k] = v;
    }
    return Poly(c);
}

inline double eval(const Poly& p, double x) {
    double acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].get_d();
    return acc;
}

namespace detail {

inline int sign_variations(const Poly& p) {
    int v = 0, last = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int s = sgn(p[i]);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

/// (1 + x)^n p((a + b x) / (1 + x)): its positive roots correspond to roots of p in (a, b).
inline Poly moebius(const Poly& p, const Rational& a, const Rational& b) {
    const std::size_t n = p.size() - 1;
    Poly out;
    const Poly num{a, b}, den{1, 1};
    for (std::size_t i = 0; i <= n; ++i) {
        if (p[i] == 0) continue;
        out += gammacheb::pow(num, i) * gammacheb::pow(den, n - i) * p[i];
    }
    return out;
}

/// Distinct roots of squarefree p in the open interval (a, b), by Descartes bisection.
inline int roots_between(const Poly& p, const Rational& a, const Rational& b) {
    int v = sign_variations(moebius(p, a, b));
    if (v <= 1) return v;
    Rational m = (a + b) / 2;
    return roots_between(p, a, m) + (p(m) == 0 ? 1 : 0) + roots_between(p, m, b);
}

}  // namespace detail

/// Number of distinct real roots, by bisection with Descartes' rule of signs.
inline int distinct_real_roots(const Poly& p) {
    Poly sf = p;
    Poly d = gammacheb::derivative(p);
    if (!d.is_zero()) sf = gammacheb::divmod(p, gammacheb::gcd(p, d)).first;
    if (sf.size() <= 1) return 0;
    // Cauchy bound, rounded up to an integer
    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < sf.size(); ++i) bound = std::max(bound, Rational(abs(sf[i] / sf.leading())));
    bound += 1;
    Integer b = bound.get_num() / bound.get_den() + 1;
    return detail::roots_between(sf, Rational(-b), Rational(b));
}

inline bool real_rooted(const Poly& p) {
    Poly d = gammacheb::derivative(p);
    if (d.is_zero()) return true;
    Poly sf = gammacheb::divmod(p, gammacheb::gcd(p, d)).first;
    return distinct_real_roots(p) == static_cast<int>(sf.size() - 1);
}

/// f-vector by testing every vertex subset against every facet.
inline std::vector<std::size_t> fvector(const gammacheb::SimplicialComplex& k) {
    std::set<int> verts;
    for (const auto& f : k.facets()) verts.insert(f.begin(), f.end());
    std::vector<int> vs(verts.begin(), verts.end());
    std::vector<std::size_t> f(vs.size() + 1, 0);
    for (unsigned long mask = 0; mask < (1ul << vs.size()); ++mask) {
        std::vector<int> face;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (mask >> i & 1) face.push_back(vs[i]);
        for (const auto& facet : k.facets()) {
            std::set<int> fs(facet.begin(), facet.end());
            bool inside = true;
            for (int v : face) inside = inside && fs.count(v);
            if (inside) {
                ++f[face.size()];
                break;
            }
        }
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

}  // namespace oracle
