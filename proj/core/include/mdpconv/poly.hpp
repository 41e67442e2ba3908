#pragma once

#include <vector>

#include "mdpconv/field.hpp"

namespace mdpconv {

// Univariate polynomial in the delay operator D over a Field.  Trailing zero
// coefficients are trimmed; the zero polynomial has an empty coefficient
// list and degree -1.
class Poly {
  public:
    explicit Poly(const Field& f) : field_(&f) {}
    Poly(const Field& f, std::vector<Elt> coeffs)
        : field_(&f), c_(std::move(coeffs)) {
        trim();
    }

    const Field& field() const { return *field_; }
    const std::vector<Elt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Elt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elt leading() const { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const Field* field_;
    std::vector<Elt> c_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Elt c);
// Multiply by D^s.
Poly poly_shift(const Poly& a, std::size_t s);
// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& a);
// Monic gcd by Euclid; throws InvalidArgumentError when both are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace mdpconv
