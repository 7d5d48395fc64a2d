#include "supercong/congruences.hpp"

#include <string>

#include "supercong/binomtab.hpp"
#include "supercong/legendre.hpp"

namespace supercong {

namespace {

constexpr std::array<FamilyInfo, 4> kFamilies{{
    {Family::Cube, "CUBE", -1, 2, 16},
    {Family::TwoThree, "TWO_THREE", -1, 3, 27},
    {Family::TwoFour, "TWO_FOUR", -1, 4, 64},
    {Family::ThreeSix, "THREE_SIX", -1, 6, 432},
}};

constexpr std::array<Family, 4> kFamilyTags{Family::Cube, Family::TwoThree, Family::TwoFour, Family::ThreeSix};

void require_exponent(const PrimeContext& ctx, unsigned e, std::string_view who) {
    if (ctx.exponent() != e) {
        throw Error(ErrorKind::BadExponent,
                    std::string(who) + " runs at exponent " + std::to_string(e) + ", got " + std::to_string(ctx.exponent()));
    }
}

void require_p_above_3(const PrimeContext& ctx, std::string_view who) {
    if (ctx.p() <= 3) throw Error(ErrorKind::PrimeTooSmall, std::string(who) + " requires p > 3");
}

void require_same_ring(const Residue& x, const Residue& y) {
    if (!x.context().same_ring(y.context())) throw Error(ErrorKind::MixedContext, "parameters from different rings");
}

// 1/m mod p^e; ZeroM when p | m.
Residue reciprocal_of_m(const Rational& m, const PrimeContext& ctx) {
    Residue mr = reduce_rational(m, ctx);
    if (mr.mod_p() == 0) throw Error(ErrorKind::ZeroM, "m = " + m.to_string() + " vanishes mod " + std::to_string(ctx.p()));
    return mod_inverse(mr);
}

void flag_small_prime(CheckReport& r) {
    if (r.p == 3) r.notes.emplace_back("p = 3: stated for all odd primes, checked as stated");
}

// Notes the case 1-4x = 0 mod p with 1-4x != 0 mod p^2, where sqrt(1-4x)
// leaves the unramified extension.
void flag_ramified(CheckReport& r, const Residue& x) {
    const Residue t = x.context().one() - x * x.context().residue(4);
    if (t.mod_p() == 0 && !t.is_zero()) r.notes.emplace_back("1-4x = 0 mod p, not mod p^2: ramified square root");
}

unsigned binom_valuation(u64 n, u64 k, const PrimeContext& ctx) {
    return ctx.factorial(n).valuation - ctx.factorial(k).valuation - ctx.factorial(n - k).valuation;
}

// p-adic valuation of N_f(k), read off the factorial table without touching units.
unsigned family_valuation(Family f, u64 k, const PrimeContext& ctx) {
    const unsigned c2 = binom_valuation(2 * k, k, ctx);
    switch (f) {
        case Family::Cube: return 3 * c2;
        case Family::TwoThree: return 2 * c2 + binom_valuation(3 * k, k, ctx);
        case Family::TwoFour: return 2 * c2 + binom_valuation(4 * k, 2 * k, ctx);
        case Family::ThreeSix: return c2 + binom_valuation(3 * k, k, ctx) + binom_valuation(6 * k, 3 * k, ctx);
    }
    return 0;
}

// Valued numerator N_f(k) of a family sum.
ValuedResidue family_numerator(Family f, u64 k, const PrimeContext& ctx) {
    const ValuedResidue c2 = binom_valued_wide(2 * k, k, ctx);
    switch (f) {
        case Family::Cube: return ctx.vmul(ctx.vmul(c2, c2), c2);
        case Family::TwoThree: return ctx.vmul(ctx.vmul(c2, c2), binom_valued_wide(3 * k, k, ctx));
        case Family::TwoFour: return ctx.vmul(ctx.vmul(c2, c2), binom_valued_wide(4 * k, 2 * k, ctx));
        case Family::ThreeSix:
            return ctx.vmul(ctx.vmul(c2, binom_valued_wide(3 * k, k, ctx)), binom_valued_wide(6 * k, 3 * k, ctx));
    }
    return ValuedResidue::exact_zero();
}

}  // namespace

const FamilyInfo& family_info(Family f) { return kFamilies[static_cast<std::size_t>(f)]; }

std::span<const Family> all_families() { return kFamilyTags; }

Family family_from_name(std::string_view name) {
    for (const auto& info : kFamilies) {
        if (info.name == name) return info.tag;
    }
    throw Error(ErrorKind::ParseError, "unknown family '" + std::string(name) + "'");
}

// --- sums -------------------------------------------------------------------

Residue core_sum(const Residue& a, const Residue& x) {
    require_same_ring(a, x);
    const PrimeContext& ctx = a.context();
    const u64 minus_one_minus_a = ctx.sub(ctx.neg(a.value()), 1);
    // pair_k = C(a,k) C(-1-a,k), updated by (a-k+1)(-1-a-k+1)/k^2.
    u64 pair = 1;
    u64 xpow = 1;
    u64 sum = 1;
    for (u64 k = 1; k < ctx.p(); ++k) {
        const u64 inv_k = ctx.inv_small(k);
        pair = ctx.mul(pair, ctx.mul(ctx.sub(a.value(), k - 1), ctx.sub(minus_one_minus_a, k - 1)));
        pair = ctx.mul(pair, ctx.mul(inv_k, inv_k));
        xpow = ctx.mul(xpow, x.value());
        sum = ctx.add(sum, ctx.mul(central_binom(k, ctx).value(), ctx.mul(pair, xpow)));
    }
    return ctx.residue(sum);
}

Residue core_sum(const Rational& a, const Rational& x, const PrimeContext& ctx) {
    return core_sum(reduce_rational(a, ctx), reduce_rational(x, ctx));
}

Residue core_sum_by_terms(const Rational& a, const Rational& x, const PrimeContext& ctx) {
    const Rational b = -Rational(1) - a;
    const Residue xr = reduce_rational(x, ctx);
    Residue sum = ctx.zero();
    for (u64 k = 0; k < ctx.p(); ++k) {
        sum += central_binom(k, ctx) * binom_rational(a, k, ctx) * binom_rational(b, k, ctx) * xr.pow(k);
    }
    return sum;
}

Residue plain_sum(const Residue& a, const Residue& x) {
    require_same_ring(a, x);
    const PrimeContext& ctx = a.context();
    const u64 minus_one_minus_a = ctx.sub(ctx.neg(a.value()), 1);
    u64 term = 1;
    u64 sum = 1;
    for (u64 k = 1; k < ctx.p(); ++k) {
        const u64 inv_k = ctx.inv_small(k);
        term = ctx.mul(term, ctx.mul(ctx.sub(a.value(), k - 1), ctx.sub(minus_one_minus_a, k - 1)));
        term = ctx.mul(term, ctx.mul(ctx.mul(inv_k, inv_k), x.value()));
        sum = ctx.add(sum, term);
    }
    return ctx.residue(sum);
}

Residue plain_sum(const Rational& a, const Rational& x, const PrimeContext& ctx) {
    return plain_sum(reduce_rational(a, ctx), reduce_rational(x, ctx));
}

Residue family_sum(Family f, const Residue& x) {
    const PrimeContext& ctx = x.context();
    u64 xpow = 1;
    u64 sum = 0;
    for (u64 k = 0; k < ctx.p(); ++k) {
        if (k > 0) xpow = ctx.mul(xpow, x.value());
        if (family_valuation(f, k, ctx) >= ctx.exponent()) continue;
        const ValuedResidue n = family_numerator(f, k, ctx);
        if (n.zero || n.valuation >= ctx.exponent()) continue;
        sum = ctx.add(sum, ctx.mul(ctx.value_of(n), xpow));
    }
    return ctx.residue(sum);
}

Residue family_sum(Family f, const Rational& x, const PrimeContext& ctx) {
    return family_sum(f, reduce_rational(x, ctx));
}

// --- checkers ---------------------------------------------------------------

CheckReport check_theorem_2_1(const Rational& a, const Rational& x, const PrimeContext& ctx) {
    require_exponent(ctx, 1, "thm2.1");
    const Residue xr = reduce_rational(x, ctx);
    const u64 ap = ap_of(a, ctx);
    const u64 s = core_sum(reduce_rational(a, ctx), xr).value();
    const u64 direct = legendre_square_at_sqrt(ap, -xr).value();
    const u64 mirror = legendre_square_at_sqrt(ctx.p() - 1 - ap, -xr).value();

    CheckReport r{.theorem = "thm2.1", .p = ctx.p(), .e = 1, .params = {{"a", a}, {"x", x}}};
    r.hypothesis_holds = true;
    r.conclusion_holds = s == direct && direct == mirror;
    r.residues = {{"core_sum", s}, {"legendre_sq", direct}, {"legendre_sq_mirror", mirror}};
    flag_small_prime(r);
    return r.finalize();
}

CheckReport check_theorem_2_2(const Rational& a, const Rational& x, const PrimeContext& ctx) {
    require_exponent(ctx, 2, "thm2.2");
    const Residue ar = reduce_rational(a, ctx);
    const Residue xr = reduce_rational(x, ctx);
    const Residue plain = plain_sum(ar, xr);
    const u64 lhs = (plain * plain).value();
    const u64 rhs = core_sum(ar, xr * (ctx.one() - xr)).value();

    CheckReport r{.theorem = "thm2.2", .p = ctx.p(), .e = 2, .params = {{"a", a}, {"x", x}}};
    r.hypothesis_holds = true;
    r.conclusion_holds = lhs == rhs;
    r.residues = {{"plain_sum_sq", lhs}, {"core_sum", rhs}};
    flag_small_prime(r);
    return r.finalize();
}

CheckReport check_theorem_2_3(const Rational& a, const Rational& m, const PrimeContext& ctx) {
    require_exponent(ctx, 2, "thm2.3");
    const Residue x = reciprocal_of_m(m, ctx);
    const Residue s = core_sum(reduce_rational(a, ctx), x);

    CheckReport r{.theorem = "thm2.3", .p = ctx.p(), .e = 2, .params = {{"a", a}, {"m", m}}};
    r.hypothesis_holds = s.mod_p() == 0;
    r.conclusion_holds = s.is_zero();
    r.residues = {{"S", s.value()}};
    flag_small_prime(r);
    flag_ramified(r, x);
    return r.finalize();
}

std::array<CheckReport, 4> check_corollary_2_2(const Rational& m, const PrimeContext& ctx) {
    require_exponent(ctx, 2, "cor2.2");
    const Residue x = reciprocal_of_m(m, ctx);
    std::array<CheckReport, 4> out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Family f = kFamilyTags[i];
        const Residue s = family_sum(f, x);
        CheckReport& r = out[i];
        r = CheckReport{.theorem = "cor2.2", .variant = std::string(family_info(f).name), .p = ctx.p(), .e = 2,
                        .params = {{"m", m}}};
        r.hypothesis_holds = s.mod_p() == 0;
        r.conclusion_holds = s.is_zero();
        r.residues = {{"S", s.value()}};
        flag_small_prime(r);
        flag_ramified(r, x * x.context().residue(family_info(f).scale));
        r.finalize();
    }
    return out;
}

CheckReport check_theorem_2_4(Part part, const Rational& u, const PrimeContext& ctx) {
    require_exponent(ctx, 2, "thm2.4");
    const Residue ur = reduce_rational(u, ctx);
    const Residue one = ctx.one();
    Residue hyp_arg = one;
    Residue concl_arg = one;
    Family family = Family::TwoThree;
    if (part == Part::I) {
        const Residue w = one - ctx.residue(4) * ur;
        const Residue z = one - ctx.residue(16) * ur;
        if (w.mod_p() == 0 || z.mod_p() == 0) {
            throw Error(ErrorKind::ExcludedU, "u = " + u.to_string() + " is 1/4 or 1/16 mod " + std::to_string(ctx.p()));
        }
        hyp_arg = ur * ur * mod_inverse(w.pow(3));
        concl_arg = -ur * mod_inverse(z.pow(3));
    } else {
        family = Family::TwoFour;
        const Residue w = one + ctx.residue(3) * ur;
        const Residue z = one + ctx.residue(27) * ur;
        if (w.mod_p() == 0 || z.mod_p() == 0) {
            throw Error(ErrorKind::ExcludedU, "u = " + u.to_string() + " is -1/3 or -1/27 mod " + std::to_string(ctx.p()));
        }
        hyp_arg = ur.pow(3) * mod_inverse(w.pow(4));
        concl_arg = ur * mod_inverse(z.pow(4));
    }
    const u64 hyp_sum = family_sum(family, hyp_arg).mod_p();
    const Residue concl_sum = family_sum(family, concl_arg);

    CheckReport r{.theorem = part == Part::I ? "thm2.4i" : "thm2.4ii", .p = ctx.p(), .e = 2, .params = {{"u", u}}};
    r.hypothesis_holds = hyp_sum == 0;
    r.conclusion_holds = concl_sum.is_zero();
    r.residues = {{"hyp_sum_mod_p", hyp_sum}, {"concl_sum", concl_sum.value()}};
    flag_small_prime(r);
    return r.finalize();
}

std::array<CheckReport, 3> check_eq_1_2(const PrimeContext& ctx) {
    require_exponent(ctx, 2, "eq1.2");
    require_p_above_3(ctx, "eq1.2");
    const u64 p = ctx.p();
    struct Case {
        Family family;
        std::int64_t m;
        bool applies;
    };
    const std::array<Case, 3> cases{{
        {Family::TwoThree, 108, p % 3 == 2},
        {Family::TwoFour, 256, p % 8 == 5 || p % 8 == 7},
        {Family::ThreeSix, 1728, p % 4 == 3},
    }};
    std::array<CheckReport, 3> out;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const Case& c = cases[i];
        CheckReport& r = out[i];
        r = CheckReport{.theorem = "eq1.2", .variant = std::string(family_info(c.family).name), .p = p, .e = 2,
                        .params = {{"x", Rational(1, c.m)}}};
        r.hypothesis_holds = c.applies;
        if (c.applies) {
            const Residue s = family_sum(c.family, Rational(1, c.m), ctx);
            r.conclusion_holds = s.is_zero();
            r.residues = {{"S", s.value()}};
        }
        r.finalize();
    }
    return out;
}

std::pair<CheckReport, CheckReport> check_corollary_2_3(const PrimeContext& ctx) {
    require_exponent(ctx, 2, "cor2.3");
    require_p_above_3(ctx, "cor2.3");
    const u64 p = ctx.p();
    auto run = [&](std::int64_t m, std::string variant, bool applies) {
        CheckReport r{.theorem = "cor2.3", .variant = std::move(variant), .p = p, .e = 2,
                      .params = {{"x", Rational(1, m)}}};
        r.hypothesis_holds = applies;
        if (applies) {
            const Residue s = family_sum(Family::TwoThree, Rational(1, m), ctx);
            r.conclusion_holds = s.is_zero();
            r.residues = {{"S", s.value()}};
        }
        return r.finalize();
    };
    return {run(1458, "1458", p % 6 == 5), run(3375, "3375", p % 15 == 11 || p % 15 == 14)};
}

CheckReport check_identity_1_3(const Rational& m, const PrimeContext& ctx) {
    require_exponent(ctx, 2, "eq1.3");
    require_p_above_3(ctx, "eq1.3");
    const Residue x = reciprocal_of_m(m, ctx);
    const u64 lhs = family_sum(Family::Cube, x).value();
    // 1 + 4x' = 1 - 64/m at x' = -16/m.
    const u64 rhs = legendre_square_at_sqrt((ctx.p() - 1) / 2, -(ctx.residue(16) * x)).value();

    CheckReport r{.theorem = "eq1.3", .p = ctx.p(), .e = 2, .params = {{"m", m}}};
    r.hypothesis_holds = true;
    r.conclusion_holds = lhs == rhs;
    r.residues = {{"family_sum", lhs}, {"legendre_sq", rhs}};
    return r.finalize();
}

CheckReport explore_remark_2_3(const PrimeContext& ctx) {
    require_exponent(ctx, 3, "remark2.3");
    if (ctx.p() % 6 != 5) {
        throw Error(ErrorKind::WrongResidueClass, std::to_string(ctx.p()) + " is not 5 mod 6");
    }
    const Residue s = family_sum(Family::TwoThree, Rational(1, 1458), ctx);
    CheckReport r{.theorem = "remark2.3", .p = ctx.p(), .e = 3, .params = {{"x", Rational(1, 1458)}}};
    r.hypothesis_holds = true;
    r.conclusion_holds = s.is_zero();
    r.residues = {{"S", s.value()}};
    r.notes.emplace_back("conjecture: recorded, not asserted");
    return r.finalize();
}

}  // namespace supercong
