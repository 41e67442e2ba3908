#include "mdpconv/poly.hpp"

namespace mdpconv {

namespace {
void check_same_field(const Poly& a, const Poly& b) {
    if (!a.field().same_field(b.field())) throw FieldMismatchError();
}
}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& f = a.field();
    std::vector<Elt> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& f = a.field();
    std::vector<Elt> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elt> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        Elt v = a.coeffs()[i];
        if (v == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            Elt w = b.coeffs()[j];
            if (w != 0) c[i + j] = f.add(c[i + j], f.mul(v, w));
        }
    }
    return Poly(f, std::move(c));
}

Poly poly_scale(const Poly& a, Elt s) {
    const Field& f = a.field();
    std::vector<Elt> c(a.coeffs());
    for (Elt& v : c) v = f.mul(v, s);
    return Poly(f, std::move(c));
}

Poly poly_shift(const Poly& a, std::size_t s) {
    if (a.is_zero()) return a;
    std::vector<Elt> c(a.coeffs().size() + s, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i + s] = a.coeffs()[i];
    return Poly(a.field(), std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    const Field& f = a.field();
    std::vector<Elt> rem(a.coeffs());
    std::vector<Elt> quo;
    Elt lead_inv = f.inv(b.leading());
    std::size_t db = b.coeffs().size();
    while (rem.size() >= db) {
        std::size_t shift = rem.size() - db;
        Elt c = f.mul(rem.back(), lead_inv);
        if (quo.size() < shift + 1) quo.resize(shift + 1, 0);
        quo[shift] = f.add(quo[shift], c);
        for (std::size_t i = 0; i < db; ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b.coeffs()[i]));
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.size() < db) break;
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly poly_monic(const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, a.field().inv(a.leading()));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (a.is_zero() && b.is_zero())
        throw InvalidArgumentError("gcd of two zero polynomials");
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = poly_divmod(r0, r1).second;
        r0 = r1;
        r1 = r2;
    }
    return poly_monic(r0);
}

}  // namespace mdpconv
