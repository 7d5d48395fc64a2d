#include "supercong/legendre.hpp"

#include <string>

#include "supercong/binomtab.hpp"

namespace supercong {

namespace {

void require_degree_below_p(u64 n, const PrimeContext& ctx) {
    if (n >= ctx.p()) {
        throw Error(ErrorKind::NTooLarge, "degree " + std::to_string(n) + " needs a division by p = " + std::to_string(ctx.p()));
    }
}

Residue unit_like(const Residue& x) { return x.context().one(); }
QuadExt unit_like(const QuadExt& x) { return {x.context(), 1, 0}; }

Residue scaled(const Residue& x, u64 c) {
    const PrimeContext& ctx = x.context();
    return ctx.residue(ctx.mul(x.value(), c % ctx.modulus()));
}
QuadExt scaled(const QuadExt& x, u64 c) { return x.scaled(c); }

template <class Elem>
Elem recurrence(u64 n, const Elem& x) {
    const PrimeContext& ctx = x.context();
    require_degree_below_p(n, ctx);
    Elem prev = unit_like(x);
    if (n == 0) return prev;
    Elem cur = x;
    for (u64 j = 1; j < n; ++j) {
        Elem next = scaled(scaled(x * cur, 2 * j + 1) - scaled(prev, j), ctx.inv_small(j + 1));
        prev = cur;
        cur = next;
    }
    return cur;
}

// Coefficient C(n,k) C(n+k,k) as a plain residue.
u64 shifted_coefficient(u64 n, u64 k, const PrimeContext& ctx) {
    return ctx.value_of(ctx.vmul(binom_int_valued(n, k, ctx), binom_int_valued(n + k, k, ctx)));
}

template <class Elem>
Elem shifted(u64 n, const Elem& x) {
    const PrimeContext& ctx = x.context();
    require_degree_below_p(n, ctx);
    const Elem y = scaled(x - unit_like(x), ctx.inv_small(2));
    // Horner in y over k = n..0.
    Elem acc = scaled(unit_like(x), shifted_coefficient(n, n, ctx));
    for (u64 k = n; k-- > 0;) acc = acc * y + scaled(unit_like(x), shifted_coefficient(n, k, ctx));
    return acc;
}

}  // namespace

Residue legendre_eval_recurrence(u64 n, const Residue& x) { return recurrence(n, x); }
QuadExt legendre_eval_recurrence(u64 n, const QuadExt& x) { return recurrence(n, x); }

Residue legendre_eval_shifted(u64 n, const Residue& x) { return shifted(n, x); }
QuadExt legendre_eval_shifted(u64 n, const QuadExt& x) { return shifted(n, x); }

QuadExt legendre_at_sqrt(u64 n, const Residue& t) {
    const PrimeContext& ctx = t.context();
    if (ctx.exponent() != 1) throw Error(ErrorKind::BadExponent, "legendre_at_sqrt works in F_p[sqrt(d)]");
    require_degree_below_p(n, ctx);

    const u64 half = n / 2;
    u64 acc = 0;
    for (u64 k = 0; k <= half; ++k) {
        u64 c = ctx.value_of(ctx.vmul(binom_int_valued(n, k, ctx), binom_int_valued(2 * n - 2 * k, n, ctx)));
        if (k % 2 == 1) c = ctx.neg(c);
        acc = ctx.add(ctx.mul(acc, t.value()), c);
    }
    acc = ctx.mul(acc, ctx.pow(ctx.inv_small(2), n));
    QuadExt value(ctx, acc, 0);
    if (n % 2 == 1) value = value * QuadExt::sqrt_of(t);
    return value;
}

Residue legendre_square_at_sqrt(u64 n, const Residue& x) {
    const PrimeContext& ctx = x.context();
    require_degree_below_p(n, ctx);
    u64 acc = 0;
    for (u64 k = n + 1; k-- > 0;) {
        ValuedResidue c = ctx.vmul(binom_int_valued(n, k, ctx), binom_int_valued(n + k, k, ctx));
        c = ctx.vmul(c, binom_int_valued(2 * k, k, ctx));
        acc = ctx.add(ctx.mul(acc, x.value()), ctx.value_of(c));
    }
    return ctx.residue(acc);
}

RatPoly legendre_exact(unsigned n, unsigned bound) {
    if (n > bound) {
        throw Error(ErrorKind::BoundExceeded, "degree " + std::to_string(n) + " above bound " + std::to_string(bound));
    }
    const RatPoly var = RatPoly::linear(0, 1);
    RatPoly prev = RatPoly::constant(1);
    if (n == 0) return prev;
    RatPoly cur = var;
    for (unsigned j = 1; j < n; ++j) {
        RatPoly next = var * cur * mpq_class(2 * j + 1) - prev * mpq_class(j);
        next *= mpq_class(1, j + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace supercong
