// Walks through the main pipelines on small inputs and prints the results.

#include "gammacheb/gammacheb.hpp"

#include <iostream>

using namespace gammacheb;

int main() {
    // h = (1 + t)^2 (1 + t + t^2)
    ReciprocalPoly h = ReciprocalPoly::from_coeffs({1, 3, 4, 3, 1});
    GammaVector g = gamma_by_peeling(h);
    std::cout << "h(t)     = " << to_string(h.poly(), 't') << "\n";
    std::cout << "gamma(u) = " << to_string(g.to_poly(), 'u') << "\n";
    std::cout << "routes agree: " << std::boolalpha
              << (g == gamma_by_catalan(h) && g == gamma_by_cheb(h)) << "\n";
    std::cout << "g(s)     = " << to_string(g_from_palindromic(h), 's') << "\n";
    std::cout << "h real-rooted: " << is_real_rooted(h.poly())
              << ", gamma real-rooted: " << is_real_rooted(g.to_poly()) << "\n\n";

    // Tchebyshev triangulation of the boundary of a triangle
    SimplicialComplex k = simplex_boundary(2);
    SimplicialComplex t = tchebyshev_triangulation(k);
    std::cout << "F(boundary)   = " << to_string(F_polynomial(k)) << "\n";
    std::cout << "F(triangulated) = " << to_string(F_polynomial(t)) << "\n";
    std::cout << "T(F) matches: " << verify_T_transform(k) << "\n\n";

    for (std::size_t n = 0; n <= 4; ++n)
        std::cout << "Psi(T_" << n << ") = " << to_string(tcheb_ce_index(n)) << "\n";

    CharacterClass cls = decompose_characters(char_image(ReciprocalPoly::from_coeffs({1, 2, 3, 2, 1})));
    std::cout << "\n1 + 2t + 3t^2 + 2t^3 + t^4 ->";
    for (auto it = cls.multiplicities.rbegin(); it != cls.multiplicities.rend(); ++it)
        std::cout << " " << to_string(it->second) << "*chi_" << it->first;
    std::cout << "\n";
}
