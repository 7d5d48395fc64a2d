#pragma once

// Exact arithmetic in Z/p^e (e <= 3) with p-adic valuation tracking, plus the
// quadratic extension F_p[sqrt(d)] used for Legendre values at irrational
// square roots.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/rational.hpp"

namespace supercong {

using u64 = std::uint64_t;

namespace detail {

// a, b < n required (so the high word of a*b is below n).
inline u64 mulmod(u64 a, u64 b, u64 n) noexcept {
#if defined(__x86_64__) && defined(__GNUC__)
    u64 lo, hi, q, r;
    asm("mulq %3" : "=a"(lo), "=d"(hi) : "a"(a), "rm"(b) : "cc");
    asm("divq %4" : "=a"(q), "=d"(r) : "a"(lo), "d"(hi), "rm"(n) : "cc");
    (void)q;
    return r;
#else
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % n);
#endif
}

inline u64 addmod(u64 a, u64 b, u64 n) noexcept {
    u64 s = a + b;
    return s >= n ? s - n : s;
}

inline u64 submod(u64 a, u64 b, u64 n) noexcept { return a >= b ? a - b : a + (n - b); }

u64 powmod(u64 base, u64 exp, u64 n) noexcept;

}  // namespace detail

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(u64 n) noexcept;

/// unit * p^valuation, or an exact zero. The unit is a representative in
/// [0, p^e) coprime to p. Valuations are never capped at e; conversion to a
/// plain residue maps valuation >= e to 0.
struct ValuedResidue {
    u64 unit = 1;
    unsigned valuation = 0;
    bool zero = false;

    static constexpr ValuedResidue exact_zero() noexcept { return {0, 0, true}; }

    friend bool operator==(const ValuedResidue&, const ValuedResidue&) = default;
};

class PrimeContext;
class Residue;
using ContextPtr = std::shared_ptr<const PrimeContext>;

/// Builds the context for Z/p^e. Throws CompositeModulus, BadExponent or
/// ModulusTooLarge.
ContextPtr make_context(u64 p, unsigned e);

/// Immutable per-(p, e) state. Shared freely between threads.
///
/// Holds stripped factorials k! = unit * p^v for 0 <= k <= 6p - 6. The first
/// 2p - 1 entries are the canonical fact_table; the tail serves the
/// binomials C(3k,k), C(4k,2k), C(6k,3k) of the family sums.
class PrimeContext {
    struct Token {};

public:
    // Largest accepted p; bounds the factorial tables to ~25M entries.
    static constexpr u64 kMaxPrime = u64{1} << 22;

    PrimeContext(Token, u64 p, unsigned e);
    friend ContextPtr make_context(u64 p, unsigned e);
    PrimeContext(const PrimeContext&) = delete;
    PrimeContext& operator=(const PrimeContext&) = delete;

    u64 p() const noexcept { return p_; }
    unsigned exponent() const noexcept { return e_; }
    u64 modulus() const noexcept { return modulus_; }

    // Raw arithmetic on canonical representatives in [0, modulus).
    u64 add(u64 a, u64 b) const noexcept { return detail::addmod(a, b, modulus_); }
    u64 sub(u64 a, u64 b) const noexcept { return detail::submod(a, b, modulus_); }
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : modulus_ - a; }
    u64 mul(u64 a, u64 b) const noexcept { return detail::mulmod(a, b, modulus_); }
    u64 pow(u64 a, u64 k) const noexcept { return detail::powmod(a, k, modulus_); }
    /// Throws NotInvertible when p | a.
    u64 inverse(u64 a) const;
    u64 from_signed(std::int64_t v) const noexcept;
    /// p^v mod p^e (0 once v >= e).
    u64 p_power(unsigned v) const noexcept { return v < e_ ? p_powers_[v] : 0; }

    Residue residue(u64 value) const;
    Residue zero() const;
    Residue one() const;

    /// Strips every factor p from the positive integer n.
    ValuedResidue valued(u64 n) const;
    ValuedResidue vmul(const ValuedResidue& x, const ValuedResidue& y) const noexcept;
    /// Exact quotient; throws RangeError if y is zero or has larger valuation.
    ValuedResidue vdiv(const ValuedResidue& x, const ValuedResidue& y) const;
    u64 value_of(const ValuedResidue& v) const noexcept;

    /// k! for 0 <= k <= 2p - 2.
    std::span<const ValuedResidue> fact_table() const noexcept {
        return {factorials_.data(), static_cast<std::size_t>(2 * p_ - 1)};
    }
    /// Largest n with n! tabulated (6p - 6, at least 2p - 2).
    u64 wide_limit() const noexcept { return factorials_.size() - 1; }
    const ValuedResidue& factorial(u64 n) const;
    /// Inverse of the unit part of n!, n <= wide_limit().
    u64 inv_fact_unit(u64 n) const;
    /// Inverse of k mod p^e for 1 <= k < p, from the tables.
    u64 inv_small(u64 k) const noexcept {
        return detail::mulmod(factorials_[k - 1].unit, inv_fact_units_[k], modulus_);
    }

    /// Smallest positive quadratic non-residue mod p; fixes F_p[sqrt(d)].
    u64 non_residue() const noexcept { return non_residue_; }

    bool same_ring(const PrimeContext& other) const noexcept {
        return this == &other || (p_ == other.p_ && e_ == other.e_);
    }

private:
    u64 p_;
    unsigned e_;
    u64 modulus_;
    u64 p_powers_[3];
    u64 non_residue_;
    std::vector<ValuedResidue> factorials_;
    std::vector<u64> inv_fact_units_;
};

/// Element of Z/p^e as a canonical integer in [0, p^e). The context must
/// outlive the residue.
class Residue {
public:
    Residue(const PrimeContext& ctx, u64 value) : ctx_(&ctx), value_(value % ctx.modulus()) {}

    u64 value() const noexcept { return value_; }
    const PrimeContext& context() const noexcept { return *ctx_; }
    bool is_zero() const noexcept { return value_ == 0; }
    /// The value reduced mod p.
    u64 mod_p() const noexcept { return value_ % ctx_->p(); }

    Residue operator-() const { return {*ctx_, ctx_->neg(value_)}; }
    friend Residue operator+(const Residue& x, const Residue& y) {
        check(x, y);
        return {*x.ctx_, x.ctx_->add(x.value_, y.value_)};
    }
    friend Residue operator-(const Residue& x, const Residue& y) {
        check(x, y);
        return {*x.ctx_, x.ctx_->sub(x.value_, y.value_)};
    }
    friend Residue operator*(const Residue& x, const Residue& y) {
        check(x, y);
        return {*x.ctx_, x.ctx_->mul(x.value_, y.value_)};
    }
    Residue& operator+=(const Residue& y) { return *this = *this + y; }
    Residue& operator-=(const Residue& y) { return *this = *this - y; }
    Residue& operator*=(const Residue& y) { return *this = *this * y; }

    Residue pow(u64 k) const { return {*ctx_, ctx_->pow(value_, k)}; }

    friend bool operator==(const Residue& x, const Residue& y) {
        check(x, y);
        return x.value_ == y.value_;
    }

private:
    static void check(const Residue& x, const Residue& y) {
        if (!x.ctx_->same_ring(*y.ctx_)) throw Error(ErrorKind::MixedContext, "residues from different rings");
    }

    const PrimeContext* ctx_;
    u64 value_;
};

/// numerator * denominator^-1 mod p^e. Throws NotPIntegral if p | denominator.
Residue reduce_rational(const Rational& q, const PrimeContext& ctx);

/// True iff gcd(q.den, p) = 1.
bool is_p_integral(const Rational& q, u64 p);

/// Throws NotInvertible if p | r.
Residue mod_inverse(const Residue& r);

/// Euler's criterion on r mod p: -1, 0 or 1.
int legendre_symbol(const Residue& r);

/// Square root mod p, the smaller of the two roots. Requires exponent 1.
std::optional<Residue> sqrt_mod_p(const Residue& t);

/// alpha + beta*sqrt(d) in F_p[sqrt(d)], d = ctx.non_residue(). Requires a
/// context with exponent 1.
class QuadExt {
public:
    QuadExt(const PrimeContext& ctx, u64 a0, u64 a1);
    explicit QuadExt(const Residue& r) : QuadExt(r.context(), r.value(), 0) {}

    static QuadExt sqrt_d(const PrimeContext& ctx) { return {ctx, 0, 1}; }
    /// An element whose square is t (lives in F_p when t is a residue).
    static QuadExt sqrt_of(const Residue& t);

    u64 a0() const noexcept { return a0_; }
    u64 a1() const noexcept { return a1_; }
    u64 d() const noexcept { return ctx_->non_residue(); }
    const PrimeContext& context() const noexcept { return *ctx_; }
    bool is_zero() const noexcept { return a0_ == 0 && a1_ == 0; }
    bool in_base_field() const noexcept { return a1_ == 0; }

    /// a0^2 - d*a1^2, multiplicative.
    Residue norm() const;
    QuadExt scaled(u64 c) const {
        c %= ctx_->p();
        return {*ctx_, ctx_->mul(a0_, c), ctx_->mul(a1_, c)};
    }

    QuadExt operator-() const { return {*ctx_, ctx_->neg(a0_), ctx_->neg(a1_)}; }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend bool operator==(const QuadExt& x, const QuadExt& y);

private:
    static void check(const QuadExt& x, const QuadExt& y);

    const PrimeContext* ctx_;
    u64 a0_;
    u64 a1_;
};

QuadExt quadext_mul(const QuadExt& x, const QuadExt& y);

}  // namespace supercong
