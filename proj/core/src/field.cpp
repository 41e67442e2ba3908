#include "mdpconv/field.hpp"

#include <algorithm>
#include <cstring>

namespace mdpconv {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

// (sum_{t<i} q^t mod m, q^i mod m) by binary splitting.
std::pair<std::uint64_t, std::uint64_t> geometric_mod(std::uint64_t q,
                                                      std::uint64_t i,
                                                      std::uint64_t m) {
    if (m == 1) return {0, 0};
    if (i == 0) return {0, 1 % m};
    if (i % 2 == 0) {
        auto [s, qp] = geometric_mod(q, i / 2, m);
        std::uint64_t s2 = (s + mulmod(qp, s, m)) % m;
        return {s2, mulmod(qp, qp, m)};
    }
    auto [s, qp] = geometric_mod(q, i - 1, m);
    std::uint64_t s2 = (mulmod(q % m, s, m) + 1) % m;
    return {s2, mulmod(qp, q % m, m)};
}

// ---------------------------------------------------------------------------
// Arithmetic layers.  Each layer works on elements packed as canonical
// indices (std::uint64_t) and exposes the same operation set, so the same
// polynomial machinery (reduction, Euclid, irreducibility) runs at every
// level of the tower.
// ---------------------------------------------------------------------------

struct PrimeLayer {
    std::uint64_t p = 0;

    std::uint64_t size() const { return p; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return add(a, neg(b));
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return mulmod(a, b, p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p, base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw DivisionByZeroError();
        return pow(a, p - 2);
    }
};

// S[x]/(f) for a monic irreducible f of degree `deg` over the sub-layer S.
template <class Sub>
struct ExtLayer {
    const Sub* sub = nullptr;
    std::uint32_t deg = 0;
    std::vector<std::uint64_t> mod_low;  // low coefficients of f, length deg
    std::uint64_t size_ = 0;
    // x^(deg+i) mod f for i = 0..deg-2, as coefficient rows of length deg.
    std::vector<std::vector<std::uint64_t>> red;

    void init(const Sub* s, std::uint32_t d, std::vector<std::uint64_t> low) {
        sub = s;
        deg = d;
        mod_low = std::move(low);
        size_ = 1;
        for (std::uint32_t i = 0; i < deg; ++i) size_ *= sub->size();
        // x^deg = -mod_low; higher powers by repeated multiplication by x.
        std::vector<std::uint64_t> cur(deg);
        for (std::uint32_t i = 0; i < deg; ++i) cur[i] = sub->neg(mod_low[i]);
        red.clear();
        red.push_back(cur);
        for (std::uint32_t i = 1; i + 1 < deg; ++i) {
            std::vector<std::uint64_t> nxt(deg, 0);
            std::uint64_t carry = cur[deg - 1];
            for (std::uint32_t t = deg - 1; t > 0; --t) nxt[t] = cur[t - 1];
            nxt[0] = 0;
            if (carry != 0)
                for (std::uint32_t t = 0; t < deg; ++t)
                    nxt[t] = sub->add(nxt[t], sub->mul(carry, red[0][t]));
            red.push_back(nxt);
            cur = nxt;
        }
    }

    std::uint64_t size() const { return size_; }

    void unpack(std::uint64_t a, std::uint64_t* out) const {
        std::uint64_t b = sub->size();
        for (std::uint32_t i = 0; i < deg; ++i) {
            out[i] = a % b;
            a /= b;
        }
    }
    std::uint64_t pack(const std::uint64_t* in) const {
        std::uint64_t b = sub->size(), r = 0;
        for (std::uint32_t i = deg; i-- > 0;) r = r * b + in[i];
        return r;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t xa[64], xb[64];
        unpack(a, xa);
        unpack(b, xb);
        for (std::uint32_t i = 0; i < deg; ++i) xa[i] = sub->add(xa[i], xb[i]);
        return pack(xa);
    }
    std::uint64_t neg(std::uint64_t a) const {
        std::uint64_t xa[64];
        unpack(a, xa);
        for (std::uint32_t i = 0; i < deg; ++i) xa[i] = sub->neg(xa[i]);
        return pack(xa);
    }
    std::uint64_t sub_op(std::uint64_t a, std::uint64_t b) const {
        return add(a, neg(b));
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t xa[64], xb[64], prod[127];
        unpack(a, xa);
        unpack(b, xb);
        std::uint32_t plen = 2 * deg - 1;
        for (std::uint32_t i = 0; i < plen; ++i) prod[i] = 0;
        for (std::uint32_t i = 0; i < deg; ++i) {
            if (xa[i] == 0) continue;
            for (std::uint32_t j = 0; j < deg; ++j) {
                if (xb[j] == 0) continue;
                prod[i + j] = sub->add(prod[i + j], sub->mul(xa[i], xb[j]));
            }
        }
        for (std::uint32_t i = plen; i-- > deg;) {
            std::uint64_t c = prod[i];
            if (c == 0) continue;
            const auto& row = red[i - deg];
            for (std::uint32_t t = 0; t < deg; ++t)
                if (row[t] != 0)
                    prod[t] = sub->add(prod[t], sub->mul(c, row[t]));
        }
        return pack(prod);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // Extended Euclid on a (as a polynomial over the sub-layer) and f.
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw DivisionByZeroError();
        using Poly = std::vector<std::uint64_t>;
        auto trim = [](Poly& v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
        };
        Poly r0(mod_low);
        r0.push_back(1);  // f
        Poly r1(deg);
        unpack(a, r1.data());
        trim(r1);
        Poly t0{}, t1{1};
        while (!r1.empty()) {
            // divide r0 by r1
            Poly quo;
            Poly rem = r0;
            std::uint64_t lead_inv = sub->inv(r1.back());
            while (rem.size() >= r1.size() && !rem.empty()) {
                std::size_t shift = rem.size() - r1.size();
                std::uint64_t c = sub->mul(rem.back(), lead_inv);
                if (quo.size() < shift + 1) quo.resize(shift + 1, 0);
                quo[shift] = sub->add(quo[shift], c);
                for (std::size_t i = 0; i < r1.size(); ++i)
                    rem[shift + i] =
                        sub->sub(rem[shift + i], sub->mul(c, r1[i]));
                trim(rem);
                if (rem.empty()) break;
            }
            // t2 = t0 - quo * t1
            Poly t2 = t0;
            if (!quo.empty() && !t1.empty()) {
                Poly prod(quo.size() + t1.size() - 1, 0);
                for (std::size_t i = 0; i < quo.size(); ++i)
                    for (std::size_t j = 0; j < t1.size(); ++j)
                        prod[i + j] =
                            sub->add(prod[i + j], sub->mul(quo[i], t1[j]));
                if (t2.size() < prod.size()) t2.resize(prod.size(), 0);
                for (std::size_t i = 0; i < prod.size(); ++i)
                    t2[i] = sub->sub(t2[i], prod[i]);
                trim(t2);
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 is the gcd: a nonzero constant (f irreducible, a != 0).
        std::uint64_t scale = sub->inv(r0[0]);
        std::uint64_t out[64];
        for (std::uint32_t i = 0; i < deg; ++i)
            out[i] = i < t0.size() ? sub->mul(t0[i], scale) : 0;
        return pack(out);
    }
};

// ---------------------------------------------------------------------------
// Polynomials over a layer, for irreducibility testing and modulus search.
// ---------------------------------------------------------------------------

template <class L>
using LPoly = std::vector<std::uint64_t>;

template <class L>
void lp_trim(LPoly<L>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

template <class L>
LPoly<L> lp_mulmod(const L& ring, const LPoly<L>& a, const LPoly<L>& b,
                   const LPoly<L>& f) {
    if (a.empty() || b.empty()) return {};
    LPoly<L> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                prod[i + j] = ring.add(prod[i + j], ring.mul(a[i], b[j]));
    }
    // reduce mod monic f
    std::size_t d = f.size() - 1;
    for (std::size_t i = prod.size(); i-- > d;) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t t = 0; t < d; ++t)
            if (f[t] != 0)
                prod[i - d + t] =
                    ring.add(prod[i - d + t], ring.neg(ring.mul(c, f[t])));
    }
    prod.resize(std::min(prod.size(), d));
    lp_trim<L>(prod);
    return prod;
}

template <class L>
LPoly<L> lp_powmod(const L& ring, LPoly<L> base, std::uint64_t e,
                   const LPoly<L>& f) {
    LPoly<L> r{1};
    while (e > 0) {
        if (e & 1) r = lp_mulmod(ring, r, base, f);
        base = lp_mulmod(ring, base, base, f);
        e >>= 1;
    }
    return r;
}

template <class L>
LPoly<L> lp_gcd(const L& ring, LPoly<L> a, LPoly<L> b) {
    lp_trim<L>(a);
    lp_trim<L>(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = ring.inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::size_t shift = a.size() - b.size();
            std::uint64_t c = ring.mul(a.back(), lead_inv);
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] =
                    ring.add(a[shift + i], ring.neg(ring.mul(c, b[i])));
            lp_trim<L>(a);
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin's deterministic criterion: monic f of degree d is irreducible over
// the field of size B iff x^(B^d) = x (mod f) and for every prime r | d,
// gcd(x^(B^(d/r)) - x, f) = 1.
template <class L>
bool lp_is_irreducible(const L& ring, const LPoly<L>& f) {
    std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    std::uint64_t B = ring.size();
    LPoly<L> x{0, 1};
    // exponent B^d never overflows: B^d is the extension size, <= 2^48.
    std::uint64_t bd = 1;
    for (std::size_t i = 0; i < d; ++i) bd *= B;
    LPoly<L> xp = lp_powmod(ring, x, bd, f);
    LPoly<L> diff = xp;
    if (diff.empty()) diff.resize(2, 0);
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ring.add(diff[1], ring.neg(1));
    lp_trim<L>(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t r : distinct_prime_factors(d)) {
        std::uint64_t br = 1;
        for (std::size_t i = 0; i < d / r; ++i) br *= B;
        LPoly<L> xr = lp_powmod(ring, x, br, f);
        LPoly<L> g = xr;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ring.add(g[1], ring.neg(1));
        lp_trim<L>(g);
        g = lp_gcd(ring, g, f);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

// Smallest-index monic irreducible of the given degree: enumerate the low
// coefficient vectors in canonical index order and return the first hit.
template <class L>
LPoly<L> first_irreducible(const L& ring, std::uint32_t degree) {
    std::uint64_t B = ring.size();
    for (std::uint64_t idx = 0;; ++idx) {
        LPoly<L> f(degree + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < degree; ++i) {
            f[i] = v % B;
            v /= B;
        }
        if (v != 0)
            throw InvalidArgumentError("no irreducible polynomial found");
        f[degree] = 1;
        if (lp_is_irreducible(ring, f)) return f;
    }
}

constexpr std::uint64_t kFullTableLimit = 1ULL << 11;  // dense add/mul tables
constexpr std::uint64_t kLogTableLimit = 1ULL << 16;   // discrete-log tables

}  // namespace

namespace detail {

struct FieldImpl {
    std::uint32_t p = 0, e = 0, k = 0;
    std::uint64_t q = 0, size = 0;
    PrimeLayer prime;
    ExtLayer<PrimeLayer> base;
    ExtLayer<ExtLayer<PrimeLayer>> top;
    std::vector<Coef> base_modulus_pub;
    std::vector<std::vector<Coef>> ext_modulus_pub;

    // acceleration tables
    bool has_full = false;
    std::vector<std::uint32_t> add_tab, mul_tab;
    bool has_log = false;
    std::vector<Elt> exp_tab;            // size-1 entries
    std::vector<std::uint32_t> log_tab;  // log_tab[0] unused
    Elt primitive = 0;
    std::vector<std::uint64_t> order_factors;  // distinct primes of size-1

    Elt gen_mul(Elt a, Elt b) const { return top.mul(a, b); }

    Elt mul(Elt a, Elt b) const {
        if (has_full) return mul_tab[a * size + b];
        if (has_log) {
            if (a == 0 || b == 0) return 0;
            std::uint64_t l = log_tab[a] + log_tab[b];
            if (l >= size - 1) l -= size - 1;
            return exp_tab[l];
        }
        return top.mul(a, b);
    }
    Elt add(Elt a, Elt b) const {
        if (has_full) return add_tab[a * size + b];
        return top.add(a, b);
    }
    Elt neg(Elt a) const { return top.neg(a); }
    Elt inv(Elt a) const {
        if (a == 0) throw DivisionByZeroError();
        if (has_log) {
            std::uint64_t l = log_tab[a];
            return exp_tab[l == 0 ? 0 : size - 1 - l];
        }
        return top.inv(a);
    }
    Elt pow(Elt a, std::uint64_t exp) const {
        if (a == 0) return exp == 0 ? 1 : 0;
        std::uint64_t m = size - 1;
        std::uint64_t r = m == 0 ? 0 : exp % m;
        if (has_log) {
            return exp_tab[mulmod(log_tab[a], r, m == 0 ? 1 : m)];
        }
        std::uint64_t res = 1, bse = a;
        while (r > 0) {
            if (r & 1) res = mul(res, bse);
            bse = mul(bse, bse);
            r >>= 1;
        }
        return res;
    }
    Elt frobenius(Elt a) const { return pow(a, q); }
};

}  // namespace detail

using detail::FieldImpl;

namespace {

void init_layers(FieldImpl& im, std::uint32_t p, std::uint32_t e,
                 std::uint32_t k, const std::vector<Coef>* base_mod,
                 const std::vector<std::vector<Coef>>* ext_mod) {
    if (!is_prime(p)) throw NotPrimeError(p);
    if (e == 0 || k == 0)
        throw InvalidArgumentError("extension degrees must be >= 1");
    // size budget check without overflow
    std::uint64_t sz = 1;
    for (std::uint32_t i = 0; i < e * k; ++i) {
        if (sz > Field::kSizeBudget / p)
            throw SizeBudgetError("field size exceeds 2^48 budget");
        sz *= p;
    }
    im.p = p;
    im.e = e;
    im.k = k;
    im.size = sz;
    im.prime.p = p;

    std::vector<std::uint64_t> base_low;
    if (base_mod != nullptr) {
        const auto& bm = *base_mod;
        if (bm.size() != e + 1)
            throw InvalidArgumentError("base modulus must have degree e");
        if (bm.back() != 1)
            throw InvalidArgumentError("base modulus must be monic");
        for (Coef c : bm)
            if (c >= p)
                throw InvalidArgumentError("base modulus coefficient >= p");
        base_low.assign(bm.begin(), bm.end() - 1);
        LPoly<PrimeLayer> f(bm.begin(), bm.end());
        if (!lp_is_irreducible(im.prime, f))
            throw InvalidArgumentError("base modulus is not irreducible");
        im.base_modulus_pub = bm;
    } else {
        auto f = first_irreducible(im.prime, e);
        base_low.assign(f.begin(), f.end() - 1);
        im.base_modulus_pub.assign(f.begin(), f.end());
    }
    im.base.init(&im.prime, e, base_low);
    im.q = im.base.size();

    std::vector<std::uint64_t> ext_low;
    if (ext_mod != nullptr) {
        const auto& xm = *ext_mod;
        if (xm.size() != k + 1)
            throw InvalidArgumentError("extension modulus must have degree k");
        std::vector<std::uint64_t> packed(xm.size());
        for (std::size_t i = 0; i < xm.size(); ++i) {
            if (xm[i].size() != e)
                throw InvalidArgumentError(
                    "extension modulus coefficient has wrong length");
            std::uint64_t digits[64];
            for (std::uint32_t t = 0; t < e; ++t) {
                if (xm[i][t] >= p)
                    throw InvalidArgumentError(
                        "extension modulus coefficient >= p");
                digits[t] = xm[i][t];
            }
            packed[i] = im.base.pack(digits);
        }
        if (packed.back() != 1)
            throw InvalidArgumentError("extension modulus must be monic");
        ext_low.assign(packed.begin(), packed.end() - 1);
        LPoly<ExtLayer<PrimeLayer>> f(packed.begin(), packed.end());
        if (!lp_is_irreducible(im.base, f))
            throw InvalidArgumentError("extension modulus is not irreducible");
        im.ext_modulus_pub = xm;
    } else {
        auto f = first_irreducible(im.base, k);
        ext_low.assign(f.begin(), f.end() - 1);
        im.ext_modulus_pub.resize(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::uint64_t digits[64];
            im.base.unpack(f[i], digits);
            im.ext_modulus_pub[i].resize(e);
            for (std::uint32_t t = 0; t < e; ++t)
                im.ext_modulus_pub[i][t] = static_cast<Coef>(digits[t]);
        }
    }
    im.top.init(&im.base, k, ext_low);
}

Elt find_primitive(const FieldImpl& im) {
    std::uint64_t m = im.size - 1;
    if (m == 0) throw InvalidArgumentError("field has no nonzero elements");
    std::vector<std::uint64_t> factors = distinct_prime_factors(m);
    for (Elt a = 1; a < im.size; ++a) {
        bool ok = true;
        for (std::uint64_t r : factors) {
            // order check uses the generic path: tables may not exist yet
            std::uint64_t ex = m / r;
            if (im.top.pow(a, ex) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return a;
    }
    throw InvalidArgumentError("no primitive element found");
}

void build_tables(FieldImpl& im) {
    if (im.size > kLogTableLimit) return;
    im.order_factors = distinct_prime_factors(im.size - 1 == 0 ? 1 : im.size - 1);
    im.primitive = find_primitive(im);
    std::uint64_t m = im.size - 1;
    im.exp_tab.resize(m);
    im.log_tab.assign(im.size, 0);
    Elt cur = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        im.exp_tab[i] = cur;
        im.log_tab[cur] = static_cast<std::uint32_t>(i);
        cur = im.top.mul(cur, im.primitive);
    }
    im.has_log = true;
    if (im.size <= kFullTableLimit) {
        im.add_tab.resize(im.size * im.size);
        im.mul_tab.resize(im.size * im.size);
        for (Elt a = 0; a < im.size; ++a)
            for (Elt b = 0; b < im.size; ++b) {
                im.add_tab[a * im.size + b] =
                    static_cast<std::uint32_t>(im.top.add(a, b));
                im.mul_tab[a * im.size + b] =
                    static_cast<std::uint32_t>(im.top.mul(a, b));
            }
        im.has_full = true;
    }
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t base_degree,
             std::uint32_t ext_degree) {
    auto im = std::make_unique<FieldImpl>();
    init_layers(*im, p, base_degree, ext_degree, nullptr, nullptr);
    build_tables(*im);
    impl_ = std::move(im);
}

Field::Field(std::uint32_t p, std::uint32_t base_degree,
             std::uint32_t ext_degree, std::vector<Coef> base_modulus,
             std::vector<std::vector<Coef>> ext_modulus) {
    auto im = std::make_unique<FieldImpl>();
    init_layers(*im, p, base_degree, ext_degree, &base_modulus, &ext_modulus);
    build_tables(*im);
    impl_ = std::move(im);
}

Field::~Field() = default;
Field::Field(Field&&) noexcept = default;

std::uint32_t Field::p() const { return impl_->p; }
std::uint32_t Field::base_degree() const { return impl_->e; }
std::uint32_t Field::ext_degree() const { return impl_->k; }
std::uint64_t Field::q() const { return impl_->q; }
std::uint64_t Field::size() const { return impl_->size; }
const std::vector<Coef>& Field::base_modulus() const {
    return impl_->base_modulus_pub;
}
const std::vector<std::vector<Coef>>& Field::ext_modulus() const {
    return impl_->ext_modulus_pub;
}

bool Field::same_field(const Field& other) const {
    if (this == &other) return true;
    return impl_->p == other.impl_->p && impl_->e == other.impl_->e &&
           impl_->k == other.impl_->k &&
           impl_->base_modulus_pub == other.impl_->base_modulus_pub &&
           impl_->ext_modulus_pub == other.impl_->ext_modulus_pub;
}

Elt Field::add(Elt a, Elt b) const { return impl_->add(a, b); }
Elt Field::sub(Elt a, Elt b) const { return impl_->add(a, impl_->neg(b)); }
Elt Field::neg(Elt a) const { return impl_->neg(a); }
Elt Field::mul(Elt a, Elt b) const { return impl_->mul(a, b); }
Elt Field::inv(Elt a) const { return impl_->inv(a); }
Elt Field::pow(Elt a, std::uint64_t exponent) const {
    return impl_->pow(a, exponent);
}
Elt Field::frobenius(Elt a) const { return impl_->frobenius(a); }

Elt Field::norm(std::uint64_t i, Elt a) const {
    if (i == 0) return 1;
    if (a == 0) return 0;
    std::uint64_t m = impl_->size - 1;
    if (m == 0) return 1;
    auto [s, qp] = geometric_mod(impl_->q, i, m);
    (void)qp;
    return impl_->pow(a, s);
}

Elt Field::conjugate(Elt a, Elt beta) const {
    if (beta == 0) throw InvalidArgumentError("conjugator must be nonzero");
    return impl_->mul(impl_->mul(impl_->frobenius(beta), a),
                      impl_->inv(beta));
}

std::uint64_t Field::mul_order(Elt a) const {
    if (a == 0) throw DivisionByZeroError("order of zero is undefined");
    std::uint64_t m = impl_->size - 1;
    if (m == 0) return 1;
    std::uint64_t ord = m;
    for (std::uint64_t r : distinct_prime_factors(m)) {
        while (ord % r == 0 && impl_->pow(a, ord / r) == 1) ord /= r;
    }
    return ord;
}

Elt Field::primitive_element() const {
    if (impl_->has_log) return impl_->primitive;
    return find_primitive(*impl_);
}

std::vector<std::vector<Elt>> Field::conjugacy_partition(
    std::uint64_t element_budget) const {
    const FieldImpl& im = *impl_;
    if (im.size > element_budget)
        throw BudgetExceededError("conjugacy enumeration", element_budget,
                                  im.size);
    std::vector<std::vector<Elt>> classes;
    classes.push_back({0});
    Elt gamma = primitive_element();
    std::vector<bool> mark(im.size, false);
    Elt rep = 1;  // gamma^0
    for (std::uint64_t i = 0; i + 1 < im.q; ++i) {
        std::fill(mark.begin(), mark.end(), false);
        for (Elt beta = 1; beta < im.size; ++beta) {
            Elt c = im.mul(im.mul(im.frobenius(beta), rep), im.inv(beta));
            mark[c] = true;
        }
        std::vector<Elt> cls;
        for (Elt x = 0; x < im.size; ++x)
            if (mark[x]) cls.push_back(x);
        classes.push_back(std::move(cls));
        rep = im.mul(rep, gamma);
    }
    return classes;
}

std::vector<std::vector<Coef>> Field::coeffs(Elt a) const {
    const FieldImpl& im = *impl_;
    if (a >= im.size) throw InvalidArgumentError("element index out of range");
    std::vector<std::vector<Coef>> out(im.k, std::vector<Coef>(im.e));
    std::uint64_t top_digits[64];
    im.top.unpack(a, top_digits);
    for (std::uint32_t i = 0; i < im.k; ++i) {
        std::uint64_t base_digits[64];
        im.base.unpack(top_digits[i], base_digits);
        for (std::uint32_t t = 0; t < im.e; ++t)
            out[i][t] = static_cast<Coef>(base_digits[t]);
    }
    return out;
}

Elt Field::from_coeffs(const std::vector<std::vector<Coef>>& c) const {
    const FieldImpl& im = *impl_;
    if (c.size() != im.k)
        throw InvalidArgumentError("coefficient vector has wrong length");
    std::uint64_t top_digits[64];
    for (std::uint32_t i = 0; i < im.k; ++i) {
        if (c[i].size() != im.e)
            throw InvalidArgumentError("coefficient vector has wrong length");
        std::uint64_t base_digits[64];
        for (std::uint32_t t = 0; t < im.e; ++t) {
            if (c[i][t] >= im.p)
                throw InvalidArgumentError("coefficient not reduced mod p");
            base_digits[t] = c[i][t];
        }
        top_digits[i] = im.base.pack(base_digits);
    }
    return im.top.pack(top_digits);
}

Elt Field::embed_base(std::uint64_t base_elt) const {
    if (base_elt >= impl_->q)
        throw InvalidArgumentError("base element index out of range");
    return base_elt;
}

std::uint64_t Field::base_add(std::uint64_t a, std::uint64_t b) const {
    return impl_->base.add(a, b);
}
std::uint64_t Field::base_mul(std::uint64_t a, std::uint64_t b) const {
    return impl_->base.mul(a, b);
}
std::uint64_t Field::base_pow(std::uint64_t a, std::uint64_t exponent) const {
    if (a == 0) return exponent == 0 ? 1 : 0;
    std::uint64_t m = impl_->q - 1;
    return impl_->base.pow(a, m == 0 ? 0 : exponent % m);
}

Elt Field::from_base_vector(const std::vector<std::uint64_t>& coeffs) const {
    const FieldImpl& im = *impl_;
    if (coeffs.size() != im.k)
        throw InvalidArgumentError("base vector has wrong length");
    std::uint64_t digits[64];
    for (std::uint32_t i = 0; i < im.k; ++i) {
        if (coeffs[i] >= im.q)
            throw InvalidArgumentError("base element index out of range");
        digits[i] = coeffs[i];
    }
    return im.top.pack(digits);
}

std::vector<std::uint64_t> Field::to_base_vector(Elt a) const {
    const FieldImpl& im = *impl_;
    if (a >= im.size) throw InvalidArgumentError("element index out of range");
    std::uint64_t digits[64];
    im.top.unpack(a, digits);
    return std::vector<std::uint64_t>(digits, digits + im.k);
}

FieldPtr build_field(std::uint32_t p, std::uint32_t base_degree,
                     std::uint32_t ext_degree) {
    return std::make_shared<Field>(p, base_degree, ext_degree);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

PrimePower factor_prime_power(std::uint64_t qv) {
    if (qv < 2) throw NotPrimeError(qv);
    auto factors = distinct_prime_factors(qv);
    if (factors.size() != 1) throw NotPrimeError(qv);
    std::uint64_t p = factors[0];
    std::uint32_t e = 0;
    while (qv > 1) {
        qv /= p;
        ++e;
    }
    return {static_cast<std::uint32_t>(p), e};
}

}  // namespace mdpconv
