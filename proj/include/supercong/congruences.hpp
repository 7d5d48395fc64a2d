#pragma once

// Truncated sums over k = 0..p-1 and the theorem checkers built on them.
//
//   core_sum(a, x)   = sum C(2k,k) C(a,k) C(-1-a,k) x^k
//   plain_sum(a, x)  = sum C(a,k) C(-1-a,k) x^k
//   family_sum(f, x) = sum N_f(k) x^k, N_f an integer product of binomials
//
// Checkers return CheckReport records; they never throw for a false
// conclusion, only for inadmissible parameters.

#include <array>
#include <span>
#include <string_view>
#include <utility>

#include "supercong/modring.hpp"
#include "supercong/rational.hpp"
#include "supercong/report.hpp"

namespace supercong {

enum class Family { Cube, TwoThree, TwoFour, ThreeSix };

struct FamilyInfo {
    Family tag;
    std::string_view name;
    std::int64_t a_num;  // a_f = a_num / a_den
    std::int64_t a_den;
    u64 scale;           // N_f(k) = C(2k,k) C(a_f,k) C(-1-a_f,k) scale^k

    Rational a() const { return {a_num, a_den}; }
};

const FamilyInfo& family_info(Family f);
std::span<const Family> all_families();
/// Accepts the tags CUBE, TWO_THREE, TWO_FOUR, THREE_SIX.
Family family_from_name(std::string_view name);

Residue core_sum(const Rational& a, const Rational& x, const PrimeContext& ctx);
/// Incremental evaluation from already reduced parameters.
Residue core_sum(const Residue& a, const Residue& x);
/// Term-by-term evaluation through binom_rational; same value as core_sum,
/// kept as an independent path for cross-checks.
Residue core_sum_by_terms(const Rational& a, const Rational& x, const PrimeContext& ctx);

Residue plain_sum(const Rational& a, const Rational& x, const PrimeContext& ctx);
Residue plain_sum(const Residue& a, const Residue& x);

/// Built from integer binomial numerators with full valuation tracking,
/// independently of core_sum.
Residue family_sum(Family f, const Rational& x, const PrimeContext& ctx);
Residue family_sum(Family f, const Residue& x);

// --- checkers -------------------------------------------------------------
// Exponent requirements: thm2.1 needs e = 1; thm2.2, thm2.3, thm2.4, cor2.2,
// cor2.3, eq1.2 and eq1.3 need e = 2; remark2.3 needs e = 3.

/// core_sum(a,x) == P_<a>(sqrt(1-4x))^2 == P_{p-1-<a>}(sqrt(1-4x))^2 mod p.
CheckReport check_theorem_2_1(const Rational& a, const Rational& x, const PrimeContext& ctx);

/// plain_sum(a,x)^2 == core_sum(a, x(1-x)) mod p^2.
CheckReport check_theorem_2_2(const Rational& a, const Rational& x, const PrimeContext& ctx);

/// S = core_sum(a, 1/m): S == 0 mod p implies S == 0 mod p^2. Throws ZeroM.
CheckReport check_theorem_2_3(const Rational& a, const Rational& m, const PrimeContext& ctx);

/// The same implication for the four families at x = 1/m. Throws ZeroM.
std::array<CheckReport, 4> check_corollary_2_2(const Rational& m, const PrimeContext& ctx);

enum class Part { I, II };

/// Part I: family TWO_THREE, hypothesis at u^2/(1-4u)^3 mod p, conclusion at
/// -u/(1-16u)^3 mod p^2. Part II: TWO_FOUR at u^3/(1+3u)^4 and u/(1+27u)^4.
/// Throws ExcludedU when a denominator vanishes mod p.
CheckReport check_theorem_2_4(Part part, const Rational& u, const PrimeContext& ctx);

/// The three sums at 1/108, 1/256, 1/1728 in their residue classes of p.
/// Requires p > 3.
std::array<CheckReport, 3> check_eq_1_2(const PrimeContext& ctx);

/// The 1458-sum for p == 5 mod 6 and the 15^3-sum for p == 11, 14 mod 15.
/// Requires p > 3.
std::pair<CheckReport, CheckReport> check_corollary_2_3(const PrimeContext& ctx);

/// family_sum(CUBE, 1/m) == P_{(p-1)/2}(sqrt(1-64/m))^2 mod p^2. Requires p > 3.
CheckReport check_identity_1_3(const Rational& m, const PrimeContext& ctx);

/// Records family_sum(TWO_THREE, 1/1458) mod p^3 for p == 5 mod 6. Throws
/// WrongResidueClass for other primes.
CheckReport explore_remark_2_3(const PrimeContext& ctx);

}  // namespace supercong
