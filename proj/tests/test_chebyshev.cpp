#include "gammacheb/chebyshev.hpp"
#include "gammacheb/random.hpp"
#include "oracles.hpp"

#include "printers.hpp"

#include <cmath>

using namespace gammacheb;

TEST_CASE("chebyshev recursions", "[chebyshev]") {
    CHECK(cheb_T(0) == Poly{1});
    CHECK(cheb_T(1) == Poly{0, 1});
    CHECK(cheb_T(2) == Poly{-1, 0, 2});
    CHECK(cheb_T(3) == Poly{0, -3, 0, 4});
    CHECK(cheb_U(0) == Poly{1});
    CHECK(cheb_U(2) == Poly{-1, 0, 4});
    for (unsigned long n = 0; n <= 30; ++n) {
        INFO("n = " << n);
        CHECK(cheb_T(n) == oracle::chebyshev_T(n));
        CHECK(cheb_U(n) == oracle::chebyshev_U(n));
    }
}

TEST_CASE("T_n(cos theta) = cos(n theta)", "[chebyshev]") {
    for (unsigned n = 0; n <= 12; ++n)
        for (double th : {0.1, 0.7, 1.3, 2.9}) CHECK(oracle::eval(cheb_T(n), std::cos(th)) == Catch::Approx(std::cos(n * th)).margin(1e-9));
}

TEST_CASE("monic chebyshev", "[chebyshev]") {
    CHECK(monic_cheb_T(2) == Poly{-2, 0, 1});
    CHECK(monic_cheb_T(3) == Poly{0, -3, 0, 1});
    for (std::size_t j = 1; j <= 10; ++j) CHECK(monic_cheb_T(j).leading() == 1);
}

TEST_CASE("basis matrices", "[chebyshev]") {
    using D = BasisMatrix::Direction;
    CHECK(basis_matrix(1, D::ChebToMonomial).entries == identity_matrix(2));
    Matrix c2m = basis_matrix(2, D::ChebToMonomial).entries;
    CHECK(c2m[0][2] == -1);
    CHECK(c2m[1][2] == 0);
    CHECK(c2m[2][2] == 2);
    for (std::size_t n = 0; n <= 12; ++n) {
        Matrix a = basis_matrix(n, D::MonomialToCheb).entries, b = basis_matrix(n, D::ChebToMonomial).entries;
        CHECK(a * b == identity_matrix(n + 1));
        CHECK(b * a == identity_matrix(n + 1));
    }
}

TEST_CASE("basis conversion", "[chebyshev]") {
    CHECK(to_cheb_basis(Poly{-1, 0, 2}, ChebKind::First) == std::vector<Rational>{0, 0, 1});
    CHECK(to_cheb_basis(Poly{0, 0, 1}, ChebKind::First) == std::vector<Rational>{Rational(1, 2), 0, Rational(1, 2)});
    CHECK(to_cheb_basis(Poly{1}, ChebKind::Second) == std::vector<Rational>{1});
    Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        Poly p = random_poly(rng, 15);
        for (ChebKind k : {ChebKind::First, ChebKind::Second}) CHECK(from_cheb_basis(to_cheb_basis(p, k), k) == p);
    }
}

TEST_CASE("g from palindromic h", "[chebyshev]") {
    CHECK(g_from_palindromic(Poly{1, 1, 1}) == Poly{1, 1});
    CHECK(g_from_palindromic(Poly{1, 2, 1}) == Poly{2, 1});
    CHECK(g_from_palindromic(Poly{1, 0, 0, 0, 1}) == Poly{-2, 0, 1});
    CHECK(g_from_palindromic(Poly{1}) == Poly{1});
    CHECK_THROWS_AS(g_from_palindromic(Poly{1, 1}), std::invalid_argument);
    CHECK(verify_palindromic_identity(ReciprocalPoly(Poly{1})));
    CHECK_FALSE(palindromic_identity_holds(ReciprocalPoly(Poly{1, 1, 1}), Poly{2, 1}));
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        ReciprocalPoly h = random_reciprocal(rng, 0, 20);
        CHECK(verify_palindromic_identity(h));
        CHECK(g_from_palindromic(h).degree() == h.half());
    }
}

TEST_CASE("odd reciprocal reduction", "[chebyshev]") {
    CHECK(reduce_odd_reciprocal(Poly{1, 1}).poly() == Poly{1});
    CHECK(reduce_odd_reciprocal(Poly{1, 2, 2, 1}).poly() == Poly{1, 1, 1});
    CHECK(reduce_odd_reciprocal(Poly{1, 1, 1, 1}).poly() == Poly{1, 0, 1});
    CHECK_THROWS_AS(reduce_odd_reciprocal(Poly{1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(reduce_odd_reciprocal(Poly{1, 2, 1, 5}), std::invalid_argument);
}

TEST_CASE("reciprocal validation", "[chebyshev]") {
    CHECK_THROWS_AS(ReciprocalPoly(Poly{1, 2, 1, 5}), std::invalid_argument);
    CHECK_THROWS_AS(ReciprocalPoly(Poly{}), std::invalid_argument);
    ReciprocalPoly h(Poly{0, 1, 0}, 2);
    CHECK(h.degree() == 2);
    CHECK(h.half() == 1);
}
