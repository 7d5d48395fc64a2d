#include <random>

#include <gtest/gtest.h>

#include "supercong/modring.hpp"

namespace supercong {
namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::ParseError;
}

TEST(PrimeContext, ModulusAndFactorialTable) {
    auto ctx = make_context(5, 2);
    EXPECT_EQ(ctx->modulus(), 25u);
    const auto table = ctx->fact_table();
    ASSERT_EQ(table.size(), 9u);
    EXPECT_EQ(table[4], (ValuedResidue{24, 0, false}));
    EXPECT_EQ(table[5], (ValuedResidue{24, 1, false}));
    // 8! = 40320 = 8064 * 5
    EXPECT_EQ(table[8].valuation, 1u);
    EXPECT_EQ(table[8].unit, 8064u % 25u);
}

TEST(PrimeContext, RejectsBadInput) {
    EXPECT_EQ(kind_of([] { make_context(9, 2); }), ErrorKind::CompositeModulus);
    EXPECT_EQ(kind_of([] { make_context(2, 2); }), ErrorKind::CompositeModulus);
    EXPECT_EQ(kind_of([] { make_context(7, 0); }), ErrorKind::BadExponent);
    EXPECT_EQ(kind_of([] { make_context(7, 4); }), ErrorKind::BadExponent);
    EXPECT_EQ(kind_of([] { make_context(4194319, 1); }), ErrorKind::ModulusTooLarge);
    EXPECT_EQ(kind_of([] { make_context(4194301, 3); }), ErrorKind::ModulusTooLarge);
    EXPECT_EQ(make_context(4194301, 2)->modulus(), 4194301ull * 4194301ull);
}

TEST(PrimeContext, FactorialRecurrenceUnderValuedProduct) {
    for (u64 p : {3u, 5u, 7u, 31u, 101u}) {
        for (unsigned e = 1; e <= 3; ++e) {
            auto ctx = make_context(p, e);
            const auto table = ctx->fact_table();
            for (u64 k = 1; k < table.size(); ++k) {
                EXPECT_EQ(table[k], ctx->vmul(table[k - 1], ctx->valued(k))) << "p=" << p << " e=" << e << " k=" << k;
            }
            EXPECT_EQ(ctx->wide_limit(), 6 * p - 6);
        }
    }
}

TEST(PrimeContext, InverseFactorialUnits) {
    auto ctx = make_context(13, 3);
    for (u64 n = 0; n <= ctx->wide_limit(); ++n) {
        EXPECT_EQ(ctx->mul(ctx->factorial(n).unit, ctx->inv_fact_unit(n)), 1u) << n;
    }
    for (u64 k = 1; k < 13; ++k) EXPECT_EQ(ctx->mul(k, ctx->inv_small(k)), 1u);
}

TEST(PrimeContext, ValuedConversions) {
    auto ctx = make_context(5, 2);
    EXPECT_EQ(ctx->valued(70), (ValuedResidue{14, 1, false}));
    EXPECT_EQ(ctx->value_of(ctx->valued(70)), 70u % 25u);
    EXPECT_EQ(ctx->value_of(ctx->valued(125)), 0u);
    EXPECT_EQ(ctx->value_of(ValuedResidue::exact_zero()), 0u);
    EXPECT_EQ(ctx->vdiv(ctx->valued(70), ctx->valued(5)), ctx->valued(14));
    EXPECT_EQ(kind_of([&] { ctx->vdiv(ctx->valued(7), ctx->valued(5)); }), ErrorKind::RangeError);
}

TEST(ReduceRational, KnownValues) {
    auto c49 = make_context(7, 2);
    EXPECT_EQ(reduce_rational(Rational(-1, 2), *c49).value(), 24u);
    auto c25 = make_context(5, 2);
    EXPECT_EQ(reduce_rational(Rational(3), *c25).value(), 3u);
    EXPECT_EQ(kind_of([&] { reduce_rational(Rational(1, 5), *c25); }), ErrorKind::NotPIntegral);
    EXPECT_EQ(reduce_rational(Rational(-26), *c25).value(), 24u);
}

TEST(ReduceRational, IsRingHomomorphism) {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<int> num(-10000, 10000);
    std::uniform_int_distribution<int> den(1, 500);
    for (u64 p : {3u, 11u, 97u, 1009u}) {
        for (unsigned e = 1; e <= 3; ++e) {
            auto ctx = make_context(p, e);
            for (int i = 0; i < 200; ++i) {
                Rational q1(num(rng), den(rng));
                Rational q2(num(rng), den(rng));
                if (!is_p_integral(q1, p) || !is_p_integral(q2, p)) continue;
                EXPECT_EQ(reduce_rational(q1 * q2, *ctx), reduce_rational(q1, *ctx) * reduce_rational(q2, *ctx));
                EXPECT_EQ(reduce_rational(q1 + q2, *ctx), reduce_rational(q1, *ctx) + reduce_rational(q2, *ctx));
            }
        }
    }
}

TEST(ModInverse, KnownValues) {
    auto c49 = make_context(7, 2);
    EXPECT_EQ(mod_inverse(c49->residue(2)).value(), 25u);
    EXPECT_EQ(mod_inverse(c49->one()).value(), 1u);
    auto c25 = make_context(5, 2);
    EXPECT_EQ(kind_of([&] { mod_inverse(c25->residue(5)); }), ErrorKind::NotInvertible);
    EXPECT_EQ(kind_of([&] { mod_inverse(c25->zero()); }), ErrorKind::NotInvertible);
}

TEST(ModInverse, IsInvolution) {
    std::mt19937_64 rng(7);
    for (u64 p : {5u, 101u, 65521u}) {
        for (unsigned e = 1; e <= 3; ++e) {
            auto ctx = make_context(p, e);
            std::uniform_int_distribution<u64> pick(1, ctx->modulus() - 1);
            for (int i = 0; i < 300; ++i) {
                const Residue r = ctx->residue(pick(rng));
                if (r.mod_p() == 0) continue;
                EXPECT_EQ(mod_inverse(mod_inverse(r)), r);
                EXPECT_EQ((mod_inverse(r) * r).value(), 1u);
            }
        }
    }
}

TEST(Residue, MixedContextRejected) {
    auto a = make_context(7, 2);
    auto b = make_context(7, 1);
    auto c = make_context(7, 2);
    EXPECT_EQ(kind_of([&] { (void)(a->one() + b->one()); }), ErrorKind::MixedContext);
    EXPECT_EQ((a->one() + c->one()).value(), 2u);
}

TEST(Primality, AgreesWithTrialDivision) {
    auto slow = [](u64 n) {
        if (n < 2) return false;
        for (u64 d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    };
    for (u64 n = 0; n < 20000; ++n) EXPECT_EQ(is_prime_u64(n), slow(n)) << n;
    EXPECT_TRUE(is_prime_u64(18446744073709551557ull));
    EXPECT_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(LegendreSymbol, KnownValues) {
    auto ctx = make_context(7, 1);
    EXPECT_EQ(legendre_symbol(ctx->residue(2)), 1);
    EXPECT_EQ(legendre_symbol(ctx->residue(3)), -1);
    EXPECT_EQ(legendre_symbol(ctx->residue(0)), 0);
}

TEST(SqrtModP, KnownValues) {
    auto ctx = make_context(7, 1);
    ASSERT_TRUE(sqrt_mod_p(ctx->residue(2)).has_value());
    EXPECT_EQ(sqrt_mod_p(ctx->residue(2))->value(), 3u);
    EXPECT_EQ(sqrt_mod_p(ctx->residue(0))->value(), 0u);
    EXPECT_FALSE(sqrt_mod_p(ctx->residue(3)).has_value());
    auto wrong = make_context(7, 2);
    EXPECT_EQ(kind_of([&] { sqrt_mod_p(wrong->residue(2)); }), ErrorKind::BadExponent);
}

TEST(SqrtModP, RootsSquareBackAndAreMinimal) {
    for (u64 p : {3u, 5u, 13u, 17u, 41u, 97u, 257u, 65537u, 1000003u}) {
        auto ctx = make_context(p, 1);
        const u64 step = p > 2000 ? p / 997 : 1;
        for (u64 t = 0; t < p; t += step) {
            const Residue r = ctx->residue(t);
            auto s = sqrt_mod_p(r);
            EXPECT_EQ(s.has_value(), legendre_symbol(r) >= 0) << p << " " << t;
            if (s) {
                EXPECT_EQ(*s * *s, r);
                EXPECT_LE(s->value(), p - s->value());
            }
        }
    }
}

TEST(QuadExt, KnownValues) {
    auto ctx = make_context(7, 1);
    ASSERT_EQ(ctx->non_residue(), 3u);
    const QuadExt root = QuadExt::sqrt_d(*ctx);
    EXPECT_EQ(quadext_mul(root, root), QuadExt(*ctx, 3, 0));
    const QuadExt x(*ctx, 5, 6);
    EXPECT_EQ(quadext_mul(QuadExt(*ctx, 1, 0), x), x);
    const QuadExt y(*ctx, 1, 1);
    EXPECT_EQ(quadext_mul(y, y), QuadExt(*ctx, 4, 2));
}

TEST(QuadExt, RingLawsAndNorm) {
    std::mt19937_64 rng(99);
    for (u64 p : {3u, 7u, 23u, 10007u}) {
        auto ctx = make_context(p, 1);
        std::uniform_int_distribution<u64> pick(0, p - 1);
        auto any = [&] { return QuadExt(*ctx, pick(rng), pick(rng)); };
        for (int i = 0; i < 200; ++i) {
            const QuadExt x = any(), y = any(), z = any();
            EXPECT_EQ(x * y, y * x);
            EXPECT_EQ((x * y) * z, x * (y * z));
            EXPECT_EQ(x * (y + z), x * y + x * z);
            EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
        }
    }
}

TEST(QuadExt, SqrtOfSquaresToArgument) {
    for (u64 p : {5u, 11u, 19u}) {
        auto ctx = make_context(p, 1);
        for (u64 t = 0; t < p; ++t) {
            const QuadExt s = QuadExt::sqrt_of(ctx->residue(t));
            EXPECT_EQ(s * s, QuadExt(ctx->residue(t)));
            EXPECT_EQ(s.in_base_field(), legendre_symbol(ctx->residue(t)) >= 0);
        }
    }
}

TEST(QuadExt, Misuse) {
    auto c7 = make_context(7, 1);
    auto c11 = make_context(11, 1);
    auto c49 = make_context(7, 2);
    EXPECT_EQ(kind_of([&] { (void)(QuadExt::sqrt_d(*c7) * QuadExt::sqrt_d(*c11)); }), ErrorKind::MixedContext);
    EXPECT_EQ(kind_of([&] { QuadExt(*c49, 1, 1); }), ErrorKind::BadExponent);
}

}  // namespace
}  // namespace supercong
