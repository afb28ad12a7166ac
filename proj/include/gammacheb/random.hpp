#pragma once

// Seeded instance generators for the randomized sweeps.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. Bounded integers are drawn by rejection sampling here instead of
// std::uniform_int_distribution, whose algorithm varies between standard
// libraries, so a seed names the same instances everywhere.

#include "gammacheb/poly.hpp"
#include "gammacheb/reciprocal.hpp"
#include "gammacheb/simplicial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gammacheb {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do x = eng_();
        while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

    long nonzero(long lo, long hi) {
        long v;
        do v = uniform(lo, hi);
        while (v == 0);
        return v;
    }

private:
    std::mt19937_64 eng_;
};

/// Reciprocal h of degree exactly d (h_0 != 0), d even in [2 * min_half, 2 * max_half],
/// coefficients in [-bound, bound].
inline ReciprocalPoly random_reciprocal(Rng& rng, long min_half, long max_half, long bound = 9) {
    const long half = rng.uniform(min_half, max_half);
    std::vector<Rational> h(static_cast<std::size_t>(2 * half + 1));
    for (long k = 0; k <= half; ++k) {
        long v = k == 0 ? rng.nonzero(-bound, bound) : rng.uniform(-bound, bound);
        h[static_cast<std::size_t>(k)] = v;
        h[static_cast<std::size_t>(2 * half - k)] = v;
    }
    return ReciprocalPoly::from_coeffs(std::move(h));
}

/// Nonzero polynomial of degree <= max_degree with integer coefficients in [-bound, bound].
inline Poly random_poly(Rng& rng, long max_degree, long bound = 9) {
    const long deg = rng.uniform(0, max_degree);
    std::vector<Rational> cs(static_cast<std::size_t>(deg + 1));
    for (long i = 0; i < deg; ++i) cs[static_cast<std::size_t>(i)] = rng.uniform(-bound, bound);
    cs.back() = rng.nonzero(-bound, bound);
    return Poly(std::move(cs));
}

/// Chebyshev coefficients a_0..a_r, r in [1, max_r], with a_r != 0.
inline std::vector<Rational> random_cheb_tuple(Rng& rng, long max_r, long bound = 9) {
    const long r = rng.uniform(1, max_r);
    std::vector<Rational> a(static_cast<std::size_t>(r + 1));
    for (long j = 0; j < r; ++j) a[static_cast<std::size_t>(j)] = rng.uniform(-bound, bound);
    a.back() = rng.nonzero(-bound, bound);
    return a;
}

/// Between 1 and 5 random nonempty facets on at most max_vertices vertices.
inline SimplicialComplex random_complex(Rng& rng, int max_vertices = 6) {
    const long nv = rng.uniform(1, max_vertices);
    const long nf = rng.uniform(1, 5);
    std::vector<Face> facets;
    for (long f = 0; f < nf; ++f) {
        Face face;
        while (face.empty())
            for (long v = 0; v < nv; ++v)
                if (rng.uniform(0, 1)) face.push_back(static_cast<int>(v));
        facets.push_back(std::move(face));
    }
    return SimplicialComplex(std::move(facets));
}

}  // namespace gammacheb
