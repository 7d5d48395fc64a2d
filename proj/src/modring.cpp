#include "supercong/modring.hpp"

#include <limits>
#include <string>

namespace supercong {

namespace detail {

u64 powmod(u64 base, u64 exp, u64 n) noexcept {
    if (n == 1) return 0;
    u64 result = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return result;
}

}  // namespace detail

bool is_prime_u64(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Jim Sinclair's base set: deterministic for n < 2^64.
    for (u64 base : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 a = base % n;
        if (a == 0) continue;
        u64 x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ContextPtr make_context(u64 p, unsigned e) {
    return std::make_shared<const PrimeContext>(PrimeContext::Token{}, p, e);
}

PrimeContext::PrimeContext(Token, u64 p, unsigned e) : p_(p), e_(e) {
    if (e < 1 || e > 3) throw Error(ErrorKind::BadExponent, "exponent must be 1, 2 or 3, got " + std::to_string(e));
    if (p % 2 == 0 || !is_prime_u64(p)) throw Error(ErrorKind::CompositeModulus, std::to_string(p) + " is not an odd prime");
    if (p > kMaxPrime) throw Error(ErrorKind::ModulusTooLarge, "p exceeds " + std::to_string(kMaxPrime));
    unsigned __int128 full = 1;
    for (unsigned i = 0; i < e; ++i) full *= p;
    if (full >= (static_cast<unsigned __int128>(1) << 62)) throw Error(ErrorKind::ModulusTooLarge, "p^e does not fit in 62 bits");

    p_powers_[0] = 1;
    for (unsigned i = 1; i < 3; ++i) p_powers_[i] = p_powers_[i - 1] * p;
    modulus_ = p_powers_[e - 1] * p;
    for (unsigned i = e; i < 3; ++i) p_powers_[i] = 0;

    non_residue_ = 2;
    while (detail::powmod(non_residue_, (p - 1) / 2, p) != p - 1) ++non_residue_;

    const u64 limit = 6 * p - 6;
    factorials_.resize(limit + 1);
    factorials_[0] = {1, 0, false};
    for (u64 k = 1; k <= limit; ++k) factorials_[k] = vmul(factorials_[k - 1], valued(k));

    // One inversion at the top, then walk down multiplying by stripped k.
    inv_fact_units_.resize(limit + 1);
    inv_fact_units_[limit] = inverse(factorials_[limit].unit);
    for (u64 k = limit; k >= 1; --k) inv_fact_units_[k - 1] = mul(inv_fact_units_[k], valued(k).unit);
}

u64 PrimeContext::inverse(u64 a) const {
    a %= modulus_;
    if (a % p_ == 0) throw Error(ErrorKind::NotInvertible, std::to_string(a) + " is divisible by " + std::to_string(p_));
    // Extended Euclid on signed 128-bit to avoid overflow.
    __int128 t = 0, new_t = 1;
    __int128 r = modulus_, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += modulus_;
    return static_cast<u64>(t);
}

u64 PrimeContext::from_signed(std::int64_t v) const noexcept {
    if (v >= 0) return static_cast<u64>(v) % modulus_;
    u64 mag = static_cast<u64>(-(v + 1)) + 1;
    return neg(mag % modulus_);
}

Residue PrimeContext::residue(u64 value) const { return {*this, value}; }
Residue PrimeContext::zero() const { return {*this, 0}; }
Residue PrimeContext::one() const { return {*this, 1}; }

ValuedResidue PrimeContext::valued(u64 n) const {
    if (n == 0) return ValuedResidue::exact_zero();
    unsigned v = 0;
    while (n % p_ == 0) {
        n /= p_;
        ++v;
    }
    return {n % modulus_, v, false};
}

ValuedResidue PrimeContext::vmul(const ValuedResidue& x, const ValuedResidue& y) const noexcept {
    if (x.zero || y.zero) return ValuedResidue::exact_zero();
    return {mul(x.unit, y.unit), x.valuation + y.valuation, false};
}

ValuedResidue PrimeContext::vdiv(const ValuedResidue& x, const ValuedResidue& y) const {
    if (y.zero) throw Error(ErrorKind::RangeError, "division by exact zero");
    if (x.zero) return x;
    if (y.valuation > x.valuation) throw Error(ErrorKind::RangeError, "quotient is not p-integral");
    return {mul(x.unit, inverse(y.unit)), x.valuation - y.valuation, false};
}

u64 PrimeContext::value_of(const ValuedResidue& v) const noexcept {
    if (v.zero || v.valuation >= e_) return 0;
    return mul(v.unit, p_powers_[v.valuation]);
}

const ValuedResidue& PrimeContext::factorial(u64 n) const {
    if (n > wide_limit()) throw Error(ErrorKind::RangeError, "factorial index " + std::to_string(n) + " beyond table");
    return factorials_[n];
}

u64 PrimeContext::inv_fact_unit(u64 n) const {
    if (n > wide_limit()) throw Error(ErrorKind::RangeError, "factorial index " + std::to_string(n) + " beyond table");
    return inv_fact_units_[n];
}

bool is_p_integral(const Rational& q, u64 p) {
    return mpz_fdiv_ui(q.den().get_mpz_t(), p) != 0;
}

Residue reduce_rational(const Rational& q, const PrimeContext& ctx) {
    if (!is_p_integral(q, ctx.p())) {
        throw Error(ErrorKind::NotPIntegral, q.to_string() + " has denominator divisible by " + std::to_string(ctx.p()));
    }
    // mpz_fdiv_ui returns the non-negative remainder even for negative numerators.
    u64 n = mpz_fdiv_ui(q.num().get_mpz_t(), ctx.modulus());
    u64 d = mpz_fdiv_ui(q.den().get_mpz_t(), ctx.modulus());
    return {ctx, ctx.mul(n, ctx.inverse(d))};
}

Residue mod_inverse(const Residue& r) {
    const PrimeContext& ctx = r.context();
    return {ctx, ctx.inverse(r.value())};
}

int legendre_symbol(const Residue& r) {
    const u64 p = r.context().p();
    const u64 t = r.mod_p();
    if (t == 0) return 0;
    return detail::powmod(t, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<Residue> sqrt_mod_p(const Residue& t) {
    const PrimeContext& ctx = t.context();
    if (ctx.exponent() != 1) throw Error(ErrorKind::BadExponent, "sqrt_mod_p needs exponent 1");
    const u64 p = ctx.p();
    const u64 n = t.value();
    if (n == 0) return ctx.zero();
    if (legendre_symbol(t) != 1) return std::nullopt;

    // Tonelli-Shanks.
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    const u64 z = ctx.non_residue();
    unsigned m = s;
    u64 c = detail::powmod(z, q, p);
    u64 x = detail::powmod(n, (q + 1) / 2, p);
    u64 b = detail::powmod(n, q, p);
    while (b != 1) {
        unsigned i = 0;
        u64 b2 = b;
        while (b2 != 1) {
            b2 = detail::mulmod(b2, b2, p);
            ++i;
        }
        u64 g = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) g = detail::mulmod(g, g, p);
        x = detail::mulmod(x, g, p);
        c = detail::mulmod(g, g, p);
        b = detail::mulmod(b, c, p);
        m = i;
    }
    return ctx.residue(std::min(x, p - x));
}

QuadExt::QuadExt(const PrimeContext& ctx, u64 a0, u64 a1) : ctx_(&ctx), a0_(a0 % ctx.p()), a1_(a1 % ctx.p()) {
    if (ctx.exponent() != 1) throw Error(ErrorKind::BadExponent, "F_p[sqrt(d)] needs exponent 1");
}

QuadExt QuadExt::sqrt_of(const Residue& t) {
    const PrimeContext& ctx = t.context();
    if (auto root = sqrt_mod_p(t)) return QuadExt(*root);
    // t = d * c^2 with t/d a residue, so sqrt(t) = c * sqrt(d).
    Residue ratio = t * mod_inverse(ctx.residue(ctx.non_residue()));
    auto c = sqrt_mod_p(ratio);
    return {ctx, 0, c->value()};
}

Residue QuadExt::norm() const {
    const u64 a0sq = ctx_->mul(a0_, a0_);
    const u64 a1sq = ctx_->mul(a1_, a1_);
    return ctx_->residue(ctx_->sub(a0sq, ctx_->mul(ctx_->non_residue() % ctx_->p(), a1sq)));
}

void QuadExt::check(const QuadExt& x, const QuadExt& y) {
    if (!x.ctx_->same_ring(*y.ctx_)) throw Error(ErrorKind::MixedContext, "elements of different extensions");
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    QuadExt::check(x, y);
    const PrimeContext& c = *x.ctx_;
    return {c, c.add(x.a0_, y.a0_), c.add(x.a1_, y.a1_)};
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    QuadExt::check(x, y);
    const PrimeContext& c = *x.ctx_;
    return {c, c.sub(x.a0_, y.a0_), c.sub(x.a1_, y.a1_)};
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    QuadExt::check(x, y);
    const PrimeContext& c = *x.ctx_;
    const u64 re = c.add(c.mul(x.a0_, y.a0_), c.mul(c.mul(x.a1_, y.a1_), c.non_residue() % c.p()));
    const u64 im = c.add(c.mul(x.a0_, y.a1_), c.mul(x.a1_, y.a0_));
    return {c, re, im};
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    QuadExt::check(x, y);
    return x.a0_ == y.a0_ && x.a1_ == y.a1_;
}

QuadExt quadext_mul(const QuadExt& x, const QuadExt& y) { return x * y; }

}  // namespace supercong
