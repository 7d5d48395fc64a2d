#include <gtest/gtest.h>

#include "supercong/oracle.hpp"

namespace supercong::oracle {
namespace {

TEST(PairConvolution, SmallCases) {
    const auto [s0, t0] = lemma_2_2_sides(0);
    EXPECT_EQ(s0, RatPoly::constant(1));
    EXPECT_EQ(t0, RatPoly::constant(1));
    const auto [s1, t1] = lemma_2_2_sides(1);
    const RatPoly minus_two_a_a1({0, -2, -2});
    EXPECT_EQ(s1, minus_two_a_a1);
    EXPECT_EQ(t1, minus_two_a_a1);
    const auto [s5, t5] = lemma_2_2_sides(5);
    EXPECT_EQ(s5, t5);
    EXPECT_EQ(s5.degree(), 10);
}

TEST(PairConvolution, AllSidesUpToForty) {
    for (unsigned n = 0; n <= 40; ++n) {
        const auto [s, t] = lemma_2_2_sides(n);
        EXPECT_EQ(s, t) << n;
    }
    EXPECT_THROW(lemma_2_2_sides(41), Error);
    EXPECT_NO_THROW(lemma_2_2_sides(41, 41));
}

TEST(RecurrenceCertificate, CertificateHolds) {
    for (unsigned n = 2; n <= 40; ++n) {
        EXPECT_TRUE(zeilberger_certificate_check(n, 1)) << n;
        EXPECT_TRUE(zeilberger_certificate_check(n, 2)) << n;
    }
    EXPECT_THROW(zeilberger_certificate_check(1, 1), Error);
    EXPECT_THROW(zeilberger_certificate_check(41, 1), Error);
    EXPECT_THROW(zeilberger_certificate_check(3, 3), Error);
}

TEST(RecurrenceCertificate, DetectsAPerturbedSequence) {
    // The certificate is not vacuous: side 1 shifted by one index fails it.
    const auto [s3, t3] = lemma_2_2_sides(3);
    const auto [s4, t4] = lemma_2_2_sides(4);
    EXPECT_NE(s3 * mpq_class(27), s4);
}

TEST(LegendreSquareExpansion, ExactUpToThirty) {
    for (unsigned n = 0; n <= 30; ++n) EXPECT_TRUE(lemma_2_1_exact_check(n)) << n;
    EXPECT_THROW(lemma_2_1_exact_check(31), Error);
}

TEST(BinomialDictionary, ExactUpToTwoHundred) {
    for (unsigned k = 0; k <= 200; ++k) EXPECT_TRUE(identity_1_7_check(k)) << k;
    EXPECT_THROW(identity_1_7_check(201), Error);
}

TEST(BinomPoly, Values) {
    const RatPoly c3 = binom_poly(3);
    EXPECT_EQ(c3.evaluate(mpq_class(5)), mpq_class(10));
    EXPECT_EQ(c3.evaluate(mpq_class(-1, 2)), mpq_class(-5, 16));
}

TEST(ExactReduceSum, KnownValues) {
    auto c25 = make_context(5, 2);
    EXPECT_EQ(exact_reduce_sum(Rational(3, 7), Rational(0), *c25, SumTarget::core()).value(), 1u);
    EXPECT_EQ(exact_reduce_sum(Rational(-1, 2), Rational(1, 64), *c25, SumTarget::core()),
              core_sum(Rational(-1, 2), Rational(1, 64), *c25));
    EXPECT_EQ(exact_reduce_sum(Rational(0), Rational(1, 108), *c25, SumTarget::of(Family::TwoThree)).value(), 0u);
    EXPECT_THROW(exact_reduce_sum(Rational(1, 5), Rational(1), *c25, SumTarget::core()), Error);
    EXPECT_THROW(exact_reduce_sum(Rational(1), Rational(1), *make_context(521, 1), SumTarget::core()), Error);
}

TEST(ReduceEquivalence, SmallPrimes) {
    const EquivalenceResult r = reduce_equivalence(23);
    EXPECT_FALSE(r.first_mismatch.has_value()) << *r.first_mismatch;
    EXPECT_GT(r.cases, 1000u);
    EXPECT_EQ(equivalence_grid_a().size(), 10u);
    EXPECT_EQ(equivalence_grid_x().size(), 10u);
}

}  // namespace
}  // namespace supercong::oracle
