#pragma once

#include "gammacheb/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gammacheb {

/// Raised when two computations that must agree by construction do not.
/// Seeing one of these means a bug, not bad input.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

/**
 * A polynomial h together with a formal degree d such that h_k = h_{d-k} for
 * all 0 <= k <= d.
 *
 * The formal degree is carried explicitly because it may exceed the actual
 * degree: 2t is reciprocal of formal degree 2, with h_0 = h_2 = 0.
 */
class ReciprocalPoly {
public:
    ReciprocalPoly(Poly h, std::size_t d) : h_(std::move(h)), d_(d) {
        if (h_.size() > d_ + 1)
            throw std::invalid_argument("polynomial exceeds its declared degree " + std::to_string(d_));
        for (std::size_t k = 0; k <= d_ / 2; ++k)
            if (h_[k] != h_[d_ - k])
                throw std::invalid_argument("not reciprocal: h_" + std::to_string(k) + " != h_" +
                                            std::to_string(d_ - k));
    }

    /// Formal degree taken from the actual degree; the zero polynomial is rejected.
    explicit ReciprocalPoly(Poly h) : ReciprocalPoly(h, checked_degree(h)) {}

    /// Formal degree is coeffs.size() - 1, so trailing zeros are meaningful here.
    static ReciprocalPoly from_coeffs(std::vector<Rational> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
        std::size_t d = coeffs.size() - 1;
        return ReciprocalPoly(Poly(std::move(coeffs)), d);
    }

    const Poly& poly() const { return h_; }
    std::size_t degree() const { return d_; }
    bool even() const { return d_ % 2 == 0; }
    const Rational& operator[](std::size_t k) const { return h_[k]; }

    /// d/2; throws for odd formal degree.
    std::size_t half() const {
        if (!even()) throw std::invalid_argument("reciprocal polynomial has odd degree " + std::to_string(d_));
        return d_ / 2;
    }

private:
    static std::size_t checked_degree(const Poly& h) {
        if (h.is_zero()) throw std::invalid_argument("zero polynomial has no reciprocal degree");
        return *h.degree();
    }

    Poly h_;
    std::size_t d_;
};

}  // namespace gammacheb
