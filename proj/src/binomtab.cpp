#include "supercong/binomtab.hpp"

#include <string>

namespace supercong {

namespace {

void require_k_below_p(u64 k, const PrimeContext& ctx) {
    if (k >= ctx.p()) {
        throw Error(ErrorKind::KTooLarge, "k = " + std::to_string(k) + " must be below p = " + std::to_string(ctx.p()));
    }
}

ValuedResidue binom_from_tables(u64 n, u64 k, const PrimeContext& ctx) {
    const ValuedResidue& top = ctx.factorial(n);
    const ValuedResidue& left = ctx.factorial(k);
    const ValuedResidue& right = ctx.factorial(n - k);
    const u64 unit = ctx.mul(top.unit, ctx.mul(ctx.inv_fact_unit(k), ctx.inv_fact_unit(n - k)));
    return {unit, top.valuation - left.valuation - right.valuation, false};
}

}  // namespace

Residue binom_residue(const Residue& a, u64 k) {
    const PrimeContext& ctx = a.context();
    require_k_below_p(k, ctx);
    u64 prod = 1;
    for (u64 i = 0; i < k; ++i) prod = ctx.mul(prod, ctx.sub(a.value(), i % ctx.modulus()));
    return ctx.residue(ctx.mul(prod, ctx.inv_fact_unit(k)));
}

Residue binom_rational(const Rational& a, u64 k, const PrimeContext& ctx) {
    return binom_residue(reduce_rational(a, ctx), k);
}

Residue central_binom(u64 k, const PrimeContext& ctx) {
    require_k_below_p(k, ctx);
    return ctx.residue(ctx.value_of(binom_from_tables(2 * k, k, ctx)));
}

ValuedResidue binom_int_valued(u64 n, u64 k, const PrimeContext& ctx) {
    if (k > n || n > 2 * ctx.p() - 2) {
        throw Error(ErrorKind::RangeError,
                    "C(" + std::to_string(n) + ", " + std::to_string(k) + ") outside 0 <= k <= n <= 2p-2");
    }
    return binom_from_tables(n, k, ctx);
}

ValuedResidue binom_valued_wide(u64 n, u64 k, const PrimeContext& ctx) {
    if (k > n || n > ctx.wide_limit()) {
        throw Error(ErrorKind::RangeError,
                    "C(" + std::to_string(n) + ", " + std::to_string(k) + ") outside the factorial table");
    }
    return binom_from_tables(n, k, ctx);
}

u64 ap_of(const Rational& a, const PrimeContext& ctx) { return reduce_rational(a, ctx).mod_p(); }

Residue pochhammer(const Residue& a, u64 k) {
    const PrimeContext& ctx = a.context();
    u64 prod = 1;
    u64 term = a.value();
    for (u64 i = 0; i < k; ++i) {
        prod = ctx.mul(prod, term);
        term = ctx.add(term, 1);
    }
    return ctx.residue(prod);
}

}  // namespace supercong
