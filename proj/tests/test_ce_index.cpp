#include "gammacheb/ce_index.hpp"
#include "gammacheb/random.hpp"
#include "gammacheb/realroot.hpp"
#include "oracles.hpp"

#include "printers.hpp"

using namespace gammacheb;

namespace {

CePoly random_ce(Rng& rng) {
    CePoly p;
    const long terms = rng.uniform(1, 4);
    for (long i = 0; i < terms; ++i) {
        std::string w;
        const long len = rng.uniform(0, 4);
        for (long j = 0; j < len; ++j) w += rng.uniform(0, 1) ? 'c' : 'e';
        p += CePoly::word(w, rng.nonzero(-5, 5));
    }
    return p;
}

}  // namespace

TEST_CASE("ce words", "[ce]") {
    CHECK_THROWS_AS(CePoly::word("cd"), std::invalid_argument);
    CHECK((CePoly::c() * CePoly::e()).terms().begin()->first == "ce");
    CHECK((CePoly::c() - CePoly::c()).is_zero());
    CHECK(to_string(CePoly{}) == "0");
    CHECK(to_string(CePoly::word("ee", -1) + CePoly::word("", 3)) == "3 − ee");
    CHECK(to_string(CePoly::word("c", Rational(-1, 2))) == "−1/2·c");
}

TEST_CASE("ce arithmetic laws", "[ce]") {
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        CePoly a = random_ce(rng), b = random_ce(rng), c = random_ce(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("ce-index of the Tchebyshev posets", "[ce]") {
    CHECK(tcheb_ce_index(0) == CePoly::one());
    CHECK(tcheb_ce_index(1) == CePoly::c());
    CHECK(to_string(tcheb_ce_index(2)) == "2·cc − ee");
    CHECK(to_string(tcheb_ce_index(3)) == "4·ccc − 2·cee − eec");
    for (std::size_t n = 0; n <= 15; ++n) {
        INFO("n = " << n);
        CePoly psi = tcheb_ce_index(n);
        for (const auto& [w, k] : psi.terms()) CHECK(w.size() == n);
        CHECK(specialize(psi, Poly::x(), Poly{1}) == oracle::chebyshev_T(n));
    }
}

TEST_CASE("A_m and R_k", "[ce]") {
    CHECK(reciprocal_cheb_A(0) == Poly{1});
    CHECK(reciprocal_cheb_A(1) == Poly{1});
    CHECK(reciprocal_cheb_A(2) == Poly{2, 0, -1});
    for (std::size_t m = 0; m <= 25; ++m) {
        // x^m T_m(1/x)
        Poly t = oracle::chebyshev_T(m);
        std::vector<Rational> rev(m + 1);
        for (std::size_t i = 0; i <= m; ++i) rev[m - i] = t[i];
        CHECK(reciprocal_cheb_A(m) == Poly(rev));
    }
    CHECK(offset_R(0).is_zero());
    CHECK(offset_R(1) == Poly{Rational(1, 2)});
    CHECK(offset_R(2) == Poly{Rational(1, 2)});
    CHECK(offset_R(3) == Poly{Rational(1, 2), 0, Rational(-1, 2)});
}

TEST_CASE("c -> 1, e -> x specialization", "[ce]") {
    OffsetComparison c0 = compare_specialization_offset(0);
    CHECK(c0.S == Poly{1});
    CHECK(c0.A_minus_S.is_zero());
    OffsetComparison c1 = compare_specialization_offset(1);
    CHECK(c1.S == Poly{1});
    CHECK(c1.A_minus_S.is_zero());
    // the specialization coincides with A_n everywhere tested
    for (std::size_t n = 0; n <= 20; ++n) CHECK(compare_specialization_offset(n).A_minus_S.is_zero());
}

TEST_CASE("gamma to descent substitution", "[ce]") {
    CHECK(gamtopdes_substitution_check(ReciprocalPoly::from_coeffs({1, 2, 1})));
    CHECK(gamtopdes_substitution_check(ReciprocalPoly::from_coeffs({1, 1, 1})));
    CHECK_FALSE(gamtopdes_printed_variant_holds(ReciprocalPoly::from_coeffs({1, 1, 1})));
    Rng rng(13);
    for (int i = 0; i < 50; ++i) CHECK(gamtopdes_substitution_check(random_reciprocal(rng, 1, 6)));
}
