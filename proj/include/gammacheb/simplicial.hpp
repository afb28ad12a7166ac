#pragma once

// Abstract simplicial complexes, edge-stellar (Tchebyshev) triangulation,
// f- and F-polynomials, and the Chebyshev transforms acting on them.

#include "gammacheb/chebyshev.hpp"
#include "gammacheb/gamma.hpp"
#include "gammacheb/poly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gammacheb {

using Face = std::vector<int>;  // sorted, distinct vertex labels
using Edge = std::pair<int, int>;

/**
 * Simplicial complex given by its facets.
 *
 * Facets are kept sorted and inclusion-maximal. The complex with no facets is
 * the empty complex; the complex whose only facet is the empty face is {∅}.
 * Fresh vertex labels for subdivision come from next_vertex(), which starts
 * above every label in use.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    SimplicialComplex(std::initializer_list<Face> facets) : SimplicialComplex(std::vector<Face>(facets)) {}

    explicit SimplicialComplex(std::vector<Face> facets) {
        for (auto& f : facets) {
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw std::invalid_argument("facet lists a vertex twice");
        }
        std::sort(facets.begin(), facets.end(), size_then_lex);
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        // Larger faces come last, so a face is dropped if any later one contains it.
        std::vector<Face> kept;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            bool covered = false;
            for (std::size_t j = i + 1; j < facets.size() && !covered; ++j)
                covered = facets[j].size() > facets[i].size() &&
                          std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end());
            if (!covered) kept.push_back(std::move(facets[i]));
        }
        *this = trusted(std::move(kept), 0);
    }

    const std::vector<Face>& facets() const { return facets_; }
    int next_vertex() const { return next_; }
    bool is_empty() const { return facets_.empty(); }

    /// Largest facet size minus one; {∅} has dimension -1. Throws for the empty complex.
    int dimension() const {
        if (facets_.empty()) throw std::domain_error("the empty complex has no dimension");
        std::size_t m = 0;
        for (const auto& f : facets_) m = std::max(m, f.size());
        return static_cast<int>(m) - 1;
    }

    bool has_face(const Face& face) const {
        return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
            return std::includes(f.begin(), f.end(), face.begin(), face.end());
        });
    }

    /// All faces of each size, indexed by size (index 0 holds the empty face).
    std::vector<std::vector<Face>> faces_by_size() const {
        std::vector<std::vector<Face>> out;
        if (facets_.empty()) return out;
        out.resize(static_cast<std::size_t>(dimension() + 2));
        for (const auto& f : facets_) {
            if (f.size() >= 31) throw std::length_error("facet too large to enumerate");
            const unsigned long limit = 1ul << f.size();
            for (unsigned long mask = 0; mask < limit; ++mask) {
                Face sub;
                for (std::size_t b = 0; b < f.size(); ++b)
                    if (mask >> b & 1) sub.push_back(f[b]);
                out[sub.size()].push_back(std::move(sub));
            }
        }
        for (auto& level : out) {
            std::sort(level.begin(), level.end());
            level.erase(std::unique(level.begin(), level.end()), level.end());
        }
        return out;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (const auto& f : facets_)
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = i + 1; j < f.size(); ++j) out.emplace_back(f[i], f[j]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.facets_ == b.facets_; }

    /// Takes facets that are already distinct and inclusion-maximal.
    static SimplicialComplex trusted(std::vector<Face> facets, int next_vertex) {
        SimplicialComplex k;
        std::sort(facets.begin(), facets.end());
        int next = next_vertex;
        for (const auto& f : facets)
            if (!f.empty()) next = std::max(next, f.back() + 1);
        k.facets_ = std::move(facets);
        k.next_ = next;
        return k;
    }

private:
    static bool size_then_lex(const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }

    std::vector<Face> facets_;
    int next_ = 0;
};

/// (f_{-1}, f_0, ..., f_dim); empty for the empty complex.
struct FVector {
    std::vector<std::size_t> counts;
    friend bool operator==(const FVector&, const FVector&) = default;
};

inline FVector faces(const SimplicialComplex& k) {
    FVector fv;
    for (const auto& level : k.faces_by_size()) fv.counts.push_back(level.size());
    return fv;
}

/// f_K(t) = sum_{i>=0} f_{i-1} t^i, so the constant term counts the empty face.
inline Poly f_polynomial(const SimplicialComplex& k) {
    std::vector<Rational> cs;
    for (auto c : faces(k).counts) cs.emplace_back(static_cast<unsigned long>(c));
    return Poly(std::move(cs));
}

inline long euler_characteristic(const SimplicialComplex& k) {
    auto counts = faces(k).counts;
    long chi = 0;
    for (std::size_t i = 1; i < counts.size(); ++i)
        chi += (i % 2 == 1 ? 1 : -1) * static_cast<long>(counts[i]);
    return chi;
}

/// F_K(x) = f_K((x - 1) / 2).
inline Poly F_polynomial(const SimplicialComplex& k) {
    return compose(f_polynomial(k), Poly{Rational(-1, 2), Rational(1, 2)});
}

/// Inverse of the F substitution: f(t) = F(2t + 1).
inline Poly f_from_F(const Poly& F) { return compose(F, Poly{1, 2}); }

/**
 * Stellar subdivision of edge {u, v}: a fresh midpoint w replaces every face
 * F containing the edge by (F - u) + w and (F - v) + w.
 */
inline SimplicialComplex stellar_subdivide_edge(const SimplicialComplex& k, Edge e) {
    auto [u, v] = e;
    if (u > v) std::swap(u, v);
    if (u == v || !k.has_face({u, v}))
        throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not in the complex");
    const int w = k.next_vertex();
    std::vector<Face> out;
    out.reserve(k.facets().size() + 8);
    for (const auto& f : k.facets()) {
        bool has_u = std::binary_search(f.begin(), f.end(), u);
        bool has_v = std::binary_search(f.begin(), f.end(), v);
        if (!(has_u && has_v)) {
            out.push_back(f);
            continue;
        }
        for (int drop : {u, v}) {
            Face g;
            g.reserve(f.size());
            for (int x : f)
                if (x != drop) g.push_back(x);
            g.push_back(w);  // w exceeds every existing label
            out.push_back(std::move(g));
        }
    }
    return SimplicialComplex::trusted(std::move(out), w + 1);
}

/**
 * Subdivides every original edge once, in the given order (default: sorted).
 * Edges created along the way are never subdivided.
 */
inline SimplicialComplex tchebyshev_triangulation(const SimplicialComplex& k,
                                                  const std::optional<std::vector<Edge>>& edge_order = std::nullopt) {
    std::vector<Edge> original = k.edges();
    std::vector<Edge> order = original;
    if (edge_order) {
        order.clear();
        for (auto [a, b] : *edge_order) order.emplace_back(std::min(a, b), std::max(a, b));
        std::vector<Edge> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != original)
            throw std::invalid_argument("edge order must be a permutation of the original edges");
    }
    SimplicialComplex cur = k;
    for (const auto& e : order) cur = stellar_subdivide_edge(cur, e);
    return cur;
}

/// F = sum a_k x^k  ->  sum a_k T_k(x).
inline Poly T_transform(const Poly& p) { return from_cheb_basis({p.coeffs().begin(), p.coeffs().end()}, ChebKind::First); }

/// F = sum a_k x^k  ->  sum_{k>=1} a_k U_{k-1}(x); the constant term is dropped.
inline Poly U_transform(const Poly& p) {
    if (p.size() <= 1) return {};
    return from_cheb_basis({p.coeffs().begin() + 1, p.coeffs().end()}, ChebKind::Second);
}

inline bool verify_T_transform(const SimplicialComplex& k) {
    return T_transform(F_polynomial(k)) == F_polynomial(tchebyshev_triangulation(k));
}

struct UTransformReport {
    Poly U_of_F;           // U(F_K)
    Poly F_second_kind;    // 2 U(F_K), the F-polynomial the second-kind triangulation must have
    Poly f_second_kind;    // the same, converted back with t -> 2t + 1
    bool derivative_identity = false;  // d/dx T(F) == U(x F'(x))
};

/// Second-kind transform data. The check that always applies is
/// T(F)' = U(x F'), which is T_n' = n U_{n-1} summed against F.
inline UTransformReport u_transform_report(const SimplicialComplex& k) {
    Poly F = F_polynomial(k);
    UTransformReport r;
    r.U_of_F = U_transform(F);
    r.F_second_kind = r.U_of_F * Rational(2);
    r.f_second_kind = f_from_F(r.F_second_kind);
    r.derivative_identity = derivative(T_transform(F)) == U_transform(Poly::x() * derivative(F));
    return r;
}

inline bool verify_U_transform(const SimplicialComplex& k) { return u_transform_report(k).derivative_identity; }

/// True iff every ordering of the original edges gives the same f-vector.
/// Exhaustive, so limited to 8 edges.
inline bool order_independence_check(const SimplicialComplex& k) {
    std::vector<Edge> order = k.edges();
    if (order.size() > 8) throw std::invalid_argument("order_independence_check supports at most 8 edges");
    const FVector reference = faces(tchebyshev_triangulation(k, order));
    while (std::next_permutation(order.begin(), order.end()))
        if (faces(tchebyshev_triangulation(k, order)) != reference) return false;
    return true;
}

/// Faces of dimension <= r, for -1 <= r <= dim K.
inline SimplicialComplex skeleton(const SimplicialComplex& k, int r) {
    if (k.is_empty()) throw std::invalid_argument("skeleton of the empty complex");
    if (r < -1 || r > k.dimension()) throw std::invalid_argument("skeleton rank out of range");
    const std::size_t size = static_cast<std::size_t>(r + 1);
    std::vector<Face> out;
    for (const auto& f : k.facets()) {
        if (f.size() <= size) {
            out.push_back(f);
            continue;
        }
        std::vector<bool> pick(f.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
        do {
            Face g;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (pick[i]) g.push_back(f[i]);
            out.push_back(std::move(g));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return SimplicialComplex(std::move(out));
}

struct GammaSubdivisionReport {
    bool valid = false;  // false only for the empty complex
    std::size_t d = 0;
    int skeleton_dim = -1;
    std::vector<Rational> h;  // h_0 .. h_d
    GammaVector gamma;
    Poly lhs;  // (2u + 2)^{d/2} gamma(1 / (2u + 2))
    Poly rhs;  // F-polynomial of the Tchebyshev triangulation of the skeleton
    bool agree = false;
};

/**
 * Builds h from K by reading c_j = [t^j] F_K(t) and setting h_{d/2} = c_0,
 * h_{d/2-j} = c_j / 2 with d/2 = deg F_K, then compares the linearly modified
 * reversed gamma polynomial with the F-polynomial of the Tchebyshev
 * triangulation of the d/2-skeleton. d/2 = dim K + 1 always exceeds dim K,
 * so the skeleton is K itself; skeleton_dim records the rank actually used.
 */
inline GammaSubdivisionReport verify_gamma_subdivision(const SimplicialComplex& k) {
    GammaSubdivisionReport rep;
    Poly F = F_polynomial(k);
    if (F.is_zero()) return rep;
    const std::size_t half = *F.degree();
    rep.valid = true;
    rep.d = 2 * half;
    rep.h.assign(rep.d + 1, Rational(0));
    for (std::size_t j = 0; j <= half; ++j) {
        Rational v = j == 0 ? F[0] : Rational(F[j] / 2);
        rep.h[half - j] = v;
        rep.h[half + j] = v;
    }
    rep.gamma = gamma_by_peeling(ReciprocalPoly::from_coeffs(rep.h));
    for (std::size_t i = 0; i <= half; ++i)
        if (rep.gamma.entries[i] != 0) rep.lhs += pow(Poly{2, 2}, half - i) * rep.gamma.entries[i];
    rep.skeleton_dim = std::min(static_cast<int>(half), k.dimension());
    rep.rhs = F_polynomial(tchebyshev_triangulation(skeleton(k, rep.skeleton_dim)));
    rep.agree = rep.lhs == rep.rhs;
    return rep;
}

/// The full n-simplex on vertices 0..n.
inline SimplicialComplex simplex(int n) {
    if (n < 0) throw std::invalid_argument("simplex dimension must be >= 0");
    Face f;
    for (int i = 0; i <= n; ++i) f.push_back(i);
    return SimplicialComplex({f});
}

/// Boundary of the n-simplex: the n + 1 faces of size n on vertices 0..n.
inline SimplicialComplex simplex_boundary(int n) {
    if (n < 1) throw std::invalid_argument("simplex_boundary needs n >= 1");
    std::vector<Face> out;
    for (int skip = 0; skip <= n; ++skip) {
        Face f;
        for (int i = 0; i <= n; ++i)
            if (i != skip) f.push_back(i);
        out.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(out));
}

/// Boundary of the n-dimensional cross polytope: vertex i is +e_i, vertex n + i
/// is -e_i, and a facet picks one vertex from each antipodal pair.
inline SimplicialComplex cross_polytope_boundary(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("cross_polytope_boundary needs 1 <= n <= 20");
    std::vector<Face> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Face f;
        for (int i = 0; i < n; ++i) f.push_back((mask >> i & 1) ? n + i : i);
        out.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(out));
}

/// Order complex of the poset of nonempty faces. Face j in (size, lex) order
/// becomes vertex j.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    std::map<Face, int> label;
    int next = 0;
    for (const auto& level : k.faces_by_size()) {
        for (const auto& f : level)
            if (!f.empty()) label.emplace(f, next++);
    }
    std::vector<Face> out;
    for (const auto& facet : k.facets()) {
        if (facet.empty()) continue;
        Face perm = facet;
        do {
            Face chain, prefix;
            for (int v : perm) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(label.at(prefix));
            }
            std::sort(chain.begin(), chain.end());
            out.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex::trusted(std::move(out), next);
}

/// Join with two points a, b: every facet F becomes F + a and F + b.
inline SimplicialComplex suspension(const SimplicialComplex& k) {
    const int a = k.next_vertex(), b = a + 1;
    std::vector<Face> out;
    for (const auto& f : k.facets()) {
        for (int apex : {a, b}) {
            Face g = f;
            g.push_back(apex);
            out.push_back(std::move(g));
        }
    }
    return SimplicialComplex::trusted(std::move(out), b + 1);
}

}  // namespace gammacheb
