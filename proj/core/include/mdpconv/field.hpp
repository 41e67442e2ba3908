#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mdpconv/errors.hpp"

namespace mdpconv {

// An element of F_{q^k} identified by its canonical index.
//
// Canonical encoding: an element is a length-k vector of F_q coefficients in
// the polynomial basis {1, v, ..., v^{k-1}} of the extension modulus; each
// F_q coefficient is a length-e vector of integers in [0,p) in the polynomial
// basis {1, u, ..., u^{e-1}} of the base modulus.  The index is the
// little-endian base-p expansion of the flattened coefficient vector, so
// indices 0 .. q^k-1 enumerate the field bijectively and index arithmetic is
// stable across implementations.
using Elt = std::uint64_t;

// A single integer coefficient in [0, p).
using Coef = std::uint32_t;

namespace detail {
struct FieldImpl;
}

// Exact arithmetic in a two-level finite-field tower
//
//     F_p  ⊂  F_q = F_p[u]/(base_modulus)  ⊂  F_{q^k} = F_q[v]/(ext_modulus)
//
// with the Frobenius map a -> a^q, truncated norms, conjugation, and
// conjugacy-class enumeration.  Everything is immutable after construction;
// all operations are pure functions, safe to share across threads.
//
// Fields up to 2^16 elements carry discrete-log and (below 2^11) full
// add/mul tables; larger fields (up to the 2^48 budget) fall back to
// coefficient arithmetic.
class Field {
  public:
    static constexpr std::uint64_t kSizeBudget = 1ULL << 48;

    // Deterministic construction: picks the smallest-index monic irreducible
    // modulus at each level (sequential search, Rabin irreducibility test).
    // Throws NotPrimeError, InvalidArgumentError (degree 0), SizeBudgetError.
    Field(std::uint32_t p, std::uint32_t base_degree, std::uint32_t ext_degree);

    // Explicit moduli, e.g. parsed from a descriptor.  Both moduli are
    // checked to be monic and irreducible over their base.
    Field(std::uint32_t p, std::uint32_t base_degree, std::uint32_t ext_degree,
          std::vector<Coef> base_modulus,
          std::vector<std::vector<Coef>> ext_modulus);

    ~Field();
    Field(Field&&) noexcept;
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    std::uint32_t p() const;
    std::uint32_t base_degree() const;  // e, with q = p^e
    std::uint32_t ext_degree() const;   // k, field size q^k
    std::uint64_t q() const;
    std::uint64_t size() const;

    // Monic modulus of degree e over F_p, as a length-(e+1) coefficient list.
    const std::vector<Coef>& base_modulus() const;
    // Monic modulus of degree k over F_q; each coefficient is a length-e list.
    const std::vector<std::vector<Coef>>& ext_modulus() const;

    bool same_field(const Field& other) const;

    Elt zero() const { return 0; }
    Elt one() const { return 1; }

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;  // throws DivisionByZeroError on 0
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

    // a^exponent for any non-negative exponent.  For nonzero bases the
    // exponent is reduced mod q^k - 1; 0^0 = 1, 0^n = 0 for n > 0.
    Elt pow(Elt a, std::uint64_t exponent) const;

    // Frobenius automorphism a -> a^q.  Applying it ext_degree() times is
    // the identity.
    Elt frobenius(Elt a) const;

    // Truncated norm N_i(a) = a^((q^i - 1)/(q - 1)), with N_0(a) = 1 for
    // every a (including 0) and N_i(0) = 0 for i >= 1.  Satisfies
    // N_{i+1}(a) = frobenius(N_i(a)) * a.
    Elt norm(std::uint64_t i, Elt a) const;

    // beta-conjugate of a: frobenius(beta) * a * beta^{-1}.  beta must be
    // nonzero (throws InvalidArgumentError).
    Elt conjugate(Elt a, Elt beta) const;

    // Multiplicative order of a nonzero element.
    std::uint64_t mul_order(Elt a) const;

    // The element of smallest canonical index whose multiplicative order is
    // q^k - 1.  Deterministic.  Throws BudgetExceededError when q^k - 1
    // cannot be factored by trial division within budget.
    Elt primitive_element() const;

    // Conjugacy classes {C_0, C_{g^0}, ..., C_{g^{q-2}}} (g the canonical
    // primitive element), each sorted by element index, computed by
    // exhaustive conjugation.  The class of 0 comes first and is a
    // singleton; every other class has (q^k - 1)/(q - 1) elements.
    std::vector<std::vector<Elt>> conjugacy_partition(
        std::uint64_t element_budget = 1000000) const;

    // Canonical nested coefficient encoding (k vectors of e integers each).
    std::vector<std::vector<Coef>> coeffs(Elt a) const;
    Elt from_coeffs(const std::vector<std::vector<Coef>>& c) const;

    // --- base-field (F_q) layer, used by constructions that pick scalars
    //     from F_q.  Base elements are indices in [0, q). ---
    Elt embed_base(std::uint64_t base_elt) const;  // identity on indices
    std::uint64_t base_add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t base_mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t base_pow(std::uint64_t a, std::uint64_t exponent) const;
    // Element of F_{q^k} with the given F_q coefficient vector (length k)
    // in the basis {1, v, ..., v^{k-1}}.
    Elt from_base_vector(const std::vector<std::uint64_t>& coeffs) const;
    // Inverse of from_base_vector.
    std::vector<std::uint64_t> to_base_vector(Elt a) const;

  private:
    std::unique_ptr<const detail::FieldImpl> impl_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Deterministic field construction (canonical moduli); the artifact-level
// entry point.
FieldPtr build_field(std::uint32_t p, std::uint32_t base_degree,
                     std::uint32_t ext_degree);

// Splits a prime power q = p^e; throws NotPrimeError when q is not one.
struct PrimePower {
    std::uint32_t p;
    std::uint32_t e;
};
PrimePower factor_prime_power(std::uint64_t q);

// Trial-division primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

// Distinct prime factors by trial division.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

}  // namespace mdpconv
