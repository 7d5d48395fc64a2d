#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "supercong/binomtab.hpp"
#include "supercong/congruences.hpp"
#include "supercong/legendre.hpp"

namespace supercong {
namespace {

Rational random_p_integral(std::mt19937_64& rng, u64 p) {
    std::uniform_int_distribution<int> num(-200, 200);
    std::uniform_int_distribution<int> den(1, 24);
    for (;;) {
        Rational q(num(rng), den(rng));
        if (is_p_integral(q, p)) return q;
    }
}

bool has_note(const CheckReport& r, std::string_view needle) {
    return std::ranges::any_of(r.notes, [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

TEST(Families, Dictionary) {
    EXPECT_EQ(family_info(Family::Cube).a(), Rational(-1, 2));
    EXPECT_EQ(family_info(Family::TwoThree).scale, 27u);
    EXPECT_EQ(family_info(Family::TwoFour).a(), Rational(-1, 4));
    EXPECT_EQ(family_info(Family::ThreeSix).scale, 432u);
    EXPECT_EQ(family_from_name("THREE_SIX"), Family::ThreeSix);
    EXPECT_THROW(family_from_name("cube"), Error);
    EXPECT_EQ(all_families().size(), 4u);
}

TEST(CoreSum, KnownValues) {
    auto c25 = make_context(5, 2);
    EXPECT_EQ(core_sum(Rational(7, 3), Rational(0), *c25).value(), 1u);
    EXPECT_EQ(core_sum(Rational(0), Rational(11, 2), *c25).value(), 1u);
    EXPECT_EQ(core_sum(Rational(-1, 3), Rational(1, 4), *c25).value(), 0u);
    EXPECT_EQ(core_sum(Rational(-1, 2), Rational(1, 64), *c25).value(), 9u);
    EXPECT_THROW(core_sum(Rational(1, 5), Rational(1), *c25), Error);
    EXPECT_THROW(core_sum(Rational(1), Rational(2, 5), *c25), Error);
}

TEST(CoreSum, IncrementalMatchesTermByTerm) {
    std::mt19937_64 rng(101);
    for (u64 p : {3u, 5u, 11u, 53u, 211u}) {
        for (unsigned e = 1; e <= 3; ++e) {
            auto ctx = make_context(p, e);
            for (int i = 0; i < 20; ++i) {
                const Rational a = random_p_integral(rng, p);
                const Rational x = random_p_integral(rng, p);
                EXPECT_EQ(core_sum(a, x, *ctx), core_sum_by_terms(a, x, *ctx)) << "p=" << p << " a=" << a << " x=" << x;
            }
        }
    }
}

TEST(CoreSum, UpperHalfTermsVanishModPSquared) {
    std::mt19937_64 rng(102);
    for (u64 p : {5u, 13u, 41u}) {
        auto ctx = make_context(p, 2);
        for (int i = 0; i < 20; ++i) {
            const Rational a = random_p_integral(rng, p);
            const Residue x = reduce_rational(random_p_integral(rng, p), *ctx);
            for (u64 k = (p + 1) / 2; k < p; ++k) {
                const Residue term = central_binom(k, *ctx) * binom_rational(a, k, *ctx) *
                                     binom_rational(Rational(-1) - a, k, *ctx) * x.pow(k);
                EXPECT_TRUE(term.is_zero()) << "p=" << p << " a=" << a << " k=" << k;
            }
        }
    }
}

TEST(PlainSum, KnownValues) {
    auto c7 = make_context(7, 1);
    EXPECT_EQ(plain_sum(Rational(3, 4), Rational(0), *c7).value(), 1u);
    EXPECT_EQ(plain_sum(Rational(0), Rational(5), *c7).value(), 1u);
    EXPECT_EQ(plain_sum(Rational(-1, 2), Rational(1), *c7).value(), 6u);
}

TEST(FamilySum, KnownValues) {
    auto c25 = make_context(5, 2);
    for (Family f : all_families()) EXPECT_EQ(family_sum(f, Rational(0), *c25).value(), 1u);
    EXPECT_EQ(family_sum(Family::TwoThree, Rational(1, 108), *c25).value(), 0u);
    EXPECT_EQ(family_sum(Family::TwoFour, Rational(1, 256), *c25).value(), 0u);
}

TEST(FamilySum, AgreesWithCoreSumThroughDictionary) {
    std::mt19937_64 rng(103);
    for (u64 p : {3u, 5u, 7u, 19u, 97u, 331u}) {
        for (unsigned e = 1; e <= 3; ++e) {
            auto ctx = make_context(p, e);
            for (int i = 0; i < 10; ++i) {
                const Rational x = random_p_integral(rng, p);
                for (Family f : all_families()) {
                    const FamilyInfo& info = family_info(f);
                    if (!is_p_integral(info.a(), p)) continue;
                    const Rational scaled = x * Rational(static_cast<std::int64_t>(info.scale));
                    EXPECT_EQ(family_sum(f, x, *ctx), core_sum(info.a(), scaled, *ctx))
                        << info.name << " p=" << p << " e=" << e << " x=" << x;
                }
            }
        }
    }
}

TEST(TripleCongruence, Examples) {
    auto c7 = make_context(7, 1);
    const CheckReport trivial = check_theorem_2_1(Rational(0), Rational(3, 2), *c7);
    EXPECT_EQ(trivial.status, Status::Verified);
    EXPECT_EQ(check_theorem_2_1(Rational(-1, 2), Rational(1, 4), *c7).status, Status::Verified);
    EXPECT_THROW(check_theorem_2_1(Rational(0), Rational(1), *make_context(7, 2)), Error);
}

TEST(TripleCongruence, RandomRationals) {
    std::mt19937_64 rng(104);
    for (u64 p : {3u, 5u, 29u, 89u, 97u}) {
        auto ctx = make_context(p, 1);
        for (int i = 0; i < 40; ++i) {
            const CheckReport r = check_theorem_2_1(random_p_integral(rng, p), random_p_integral(rng, p), *ctx);
            EXPECT_EQ(r.status, Status::Verified) << to_json(r).dump();
        }
    }
}

TEST(LegendreZeros, ZeroSumForcesLegendreZeros) {
    for (u64 p : {5u, 7u, 13u, 23u}) {
        auto ctx = make_context(p, 1);
        for (u64 a = 0; a < p; ++a) {
            for (u64 x = 0; x < p; ++x) {
                const Residue s = core_sum(ctx->residue(a), ctx->residue(x));
                if (!s.is_zero()) continue;
                const Residue t = ctx->one() - ctx->residue(4) * ctx->residue(x);
                EXPECT_TRUE(legendre_at_sqrt(a, t).is_zero()) << "p=" << p << " a=" << a << " x=" << x;
                EXPECT_TRUE(legendre_at_sqrt(p - 1 - a, t).is_zero());
            }
        }
    }
}

TEST(SquaredPlainSum, Examples) {
    auto c11 = make_context(11, 2);
    EXPECT_EQ(check_theorem_2_2(Rational(5, 2), Rational(0), *c11).status, Status::Verified);
    const CheckReport r = check_theorem_2_2(Rational(-1, 4), Rational(3), *c11);
    EXPECT_EQ(r.status, Status::Verified);
    ASSERT_EQ(r.residues.size(), 2u);
    EXPECT_EQ(r.residues[0].second, 60u);
    EXPECT_EQ(r.residues[1].second, 60u);
    EXPECT_EQ(check_theorem_2_2(Rational(2, 3), Rational(5, 7), *make_context(13, 2)).residues[0].second, 146u);
    EXPECT_EQ(check_theorem_2_2(Rational(-1, 3), Rational(1, 2), *make_context(7, 2)).status, Status::Verified);
}

TEST(ZeroModPLifts, Examples) {
    auto c25 = make_context(5, 2);
    // The core-sum form of the 108 family modulus is m = 108 / 27 = 4.
    const CheckReport r = check_theorem_2_3(Rational(-1, 3), Rational(4), *c25);
    EXPECT_TRUE(r.hypothesis_holds);
    EXPECT_TRUE(r.conclusion_holds);
    EXPECT_EQ(r.status, Status::Verified);
    const CheckReport v = check_theorem_2_3(Rational(0), Rational(3), *c25);
    EXPECT_EQ(v.status, Status::Vacuous);
    EXPECT_EQ(v.residues[0].second, 1u);
    const CheckReport literal = check_theorem_2_3(Rational(-1, 3), Rational(108), *c25);
    EXPECT_EQ(literal.status, Status::Vacuous);
    EXPECT_EQ(literal.residues[0].second, 23u);
    try {
        check_theorem_2_3(Rational(1), Rational(10), *c25);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroM);
    }
}

TEST(ZeroModPLifts, ExhaustiveSmallPrimes) {
    for (u64 p = 5; p <= 31; p += 2) {
        if (!is_prime_u64(p)) continue;
        auto ctx = make_context(p, 2);
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(p); ++a) {
            for (std::int64_t m = 1; m < static_cast<std::int64_t>(p); ++m) {
                const CheckReport r = check_theorem_2_3(Rational(a), Rational(m), *ctx);
                EXPECT_NE(r.status, Status::Failed) << to_json(r).dump();
            }
        }
    }
}

// 1 - 4/m = -3 is divisible by 3 but not 9: sqrt(1 - 4/m) is ramified and
// the implication breaks. S = 1 - 4 + 0 = -3.
TEST(ZeroModPLifts, RamifiedCounterexampleAtThree) {
    auto ctx = make_context(3, 2);
    const CheckReport r = check_theorem_2_3(Rational(1), Rational(1), *ctx);
    EXPECT_EQ(r.status, Status::Failed);
    EXPECT_EQ(r.residues[0].second, 6u);
    EXPECT_TRUE(has_note(r, "ramified"));
    EXPECT_TRUE(has_note(r, "p = 3"));
}

TEST(FamilyLifts, RamifiedFailuresAreFlagged) {
    // m = 1 at p = 7: 1 - 64 = -63 = -9 * 7.
    const auto cube = check_corollary_2_2(Rational(1), *make_context(7, 2));
    EXPECT_EQ(cube[0].variant, "CUBE");
    EXPECT_EQ(cube[0].status, Status::Failed);
    EXPECT_EQ(cube[0].residues[0].second, 42u);
    EXPECT_TRUE(has_note(cube[0], "ramified"));

    for (u64 p = 5; p <= 41; p += 2) {
        if (!is_prime_u64(p)) continue;
        auto ctx = make_context(p, 2);
        for (std::int64_t m = 1; m < static_cast<std::int64_t>(p); ++m) {
            for (const CheckReport& r : check_corollary_2_2(Rational(m), *ctx)) {
                if (r.status == Status::Failed) EXPECT_TRUE(has_note(r, "ramified")) << to_json(r).dump();
            }
        }
    }
}

TEST(TransformedFamilies, Examples) {
    for (u64 p : {5u, 11u, 17u, 23u, 29u}) {
        const CheckReport r = check_theorem_2_4(Part::I, Rational(-1, 2), *make_context(p, 2));
        EXPECT_TRUE(r.hypothesis_holds) << p;
        EXPECT_EQ(r.status, Status::Verified) << p;
    }
    EXPECT_EQ(check_theorem_2_4(Part::I, Rational(0), *make_context(7, 2)).status, Status::Vacuous);
    EXPECT_EQ(check_theorem_2_4(Part::II, Rational(0), *make_context(7, 2)).status, Status::Vacuous);
    try {
        check_theorem_2_4(Part::I, Rational(2), *make_context(7, 2));  // 1/4 = 2 mod 7
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ExcludedU);
    }
    try {
        check_theorem_2_4(Part::II, Rational(2), *make_context(7, 2));  // -1/3 = 2 mod 7
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ExcludedU);
    }
}

TEST(Moduli1458And3375, Examples) {
    const auto [a5, b5] = check_corollary_2_3(*make_context(5, 2));
    EXPECT_EQ(a5.status, Status::Verified);
    EXPECT_EQ(b5.status, Status::Vacuous);
    const auto [a7, b7] = check_corollary_2_3(*make_context(7, 2));
    EXPECT_EQ(a7.status, Status::Vacuous);
    EXPECT_EQ(b7.status, Status::Vacuous);
    const auto [a11, b11] = check_corollary_2_3(*make_context(11, 2));
    EXPECT_EQ(a11.status, Status::Verified);
    EXPECT_EQ(b11.status, Status::Verified);
    EXPECT_THROW(check_corollary_2_3(*make_context(3, 2)), Error);
}

TEST(ClassicalModuli, ResidueClasses) {
    const auto at5 = check_eq_1_2(*make_context(5, 2));  // 5 = 2 mod 3, 5 mod 8, 1 mod 4
    EXPECT_EQ(at5[0].status, Status::Verified);
    EXPECT_EQ(at5[1].status, Status::Verified);
    EXPECT_EQ(at5[2].status, Status::Vacuous);
    const auto at7 = check_eq_1_2(*make_context(7, 2));  // 7 = 1 mod 3, 7 mod 8, 3 mod 4
    EXPECT_EQ(at7[0].status, Status::Vacuous);
    EXPECT_EQ(at7[1].status, Status::Verified);
    EXPECT_EQ(at7[2].status, Status::Verified);
}

TEST(CubeLegendreSquare, Examples) {
    EXPECT_EQ(check_identity_1_3(Rational(64), *make_context(7, 2)).status, Status::Verified);
    EXPECT_EQ(check_identity_1_3(Rational(1), *make_context(5, 2)).status, Status::Verified);
    EXPECT_THROW(check_identity_1_3(Rational(1), *make_context(3, 2)), Error);
    EXPECT_THROW(check_identity_1_3(Rational(7), *make_context(7, 2)), Error);
}

TEST(CubicConjecture, RecordsResidueModPCubed) {
    const CheckReport r5 = explore_remark_2_3(*make_context(5, 3));
    EXPECT_EQ(r5.e, 3u);
    EXPECT_EQ(r5.residues[0].second, 0u);
    EXPECT_EQ(r5.status, Status::Verified);
    EXPECT_EQ(explore_remark_2_3(*make_context(11, 3)).residues[0].second, 0u);
    try {
        explore_remark_2_3(*make_context(7, 3));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WrongResidueClass);
    }
}

TEST(Checkers, ExponentGuards) {
    auto c1 = make_context(7, 1);
    EXPECT_THROW(check_theorem_2_2(Rational(1), Rational(1), *c1), Error);
    EXPECT_THROW(check_theorem_2_3(Rational(1), Rational(1), *c1), Error);
    EXPECT_THROW(explore_remark_2_3(*make_context(5, 2)), Error);
}

}  // namespace
}  // namespace supercong
