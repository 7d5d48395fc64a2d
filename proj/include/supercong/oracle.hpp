#pragma once

// Ground truth in exact rational arithmetic. Nothing here touches the
// modular pipeline except the final reduction of an exact rational, which
// uses GMP's own inversion rather than PrimeContext.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "supercong/congruences.hpp"
#include "supercong/modring.hpp"
#include "supercong/ratpoly.hpp"

namespace supercong::oracle {

/// C(a, k) = a(a-1)...(a-k+1)/k! as a polynomial in a.
RatPoly binom_poly(unsigned k);

/// Both sides of
///   sum_k C(a,k)C(-1-a,k)C(a,n-k)C(-1-a,n-k)
///     = sum_k C(2k,k)C(a,k)C(-1-a,k)C(k,n-k)(-1)^(n-k)
/// as exact polynomials in a.
std::pair<RatPoly, RatPoly> lemma_2_2_sides(unsigned n, unsigned bound = 40);

/// Checks n^3 S(n) = (2n-1)(n^2-n-2a(a+1)) S(n-1) + (n-1)(2a+n)(2a+2-n) S(n-2)
/// in Q[a] for side 1 or 2. Requires 2 <= n <= bound.
bool zeilberger_certificate_check(unsigned n, int side, unsigned bound = 40);

/// P_n(y)^2 with y^2 = 1+4x, expanded in x, against
/// sum_k C(n,k)C(n+k,k)C(2k,k) x^k.
bool lemma_2_1_exact_check(unsigned n, unsigned bound = 30);

/// The four binomial dictionaries
///   C(-1/2,k)^2 = C(2k,k)^2/16^k,         C(-1/3,k)C(-2/3,k) = C(2k,k)C(3k,k)/27^k,
///   C(-1/4,k)C(-3/4,k) = C(2k,k)C(4k,2k)/64^k, C(-1/6,k)C(-5/6,k) = C(3k,k)C(6k,3k)/432^k
/// at a single k, exactly.
bool identity_1_7_check(unsigned k, unsigned bound = 200);

struct SumTarget {
    enum class Kind { Core, Plain, Family };
    Kind kind = Kind::Core;
    Family family = Family::Cube;

    static SumTarget core() { return {Kind::Core, Family::Cube}; }
    static SumTarget plain() { return {Kind::Plain, Family::Cube}; }
    static SumTarget of(Family f) { return {Kind::Family, f}; }
};

/// The truncated sum over k = 0..p-1 as one exact rational. For family
/// targets `a` is ignored. Throws BoundExceeded when p > p_bound.
mpq_class exact_sum(const Rational& a, const Rational& x, u64 p, SumTarget which, u64 p_bound = 512);

/// Reduces an exact rational mod p^e. Throws NotPIntegral.
Residue reduce_exact(const mpq_class& q, const PrimeContext& ctx);

/// exact_sum followed by reduce_exact.
Residue exact_reduce_sum(const Rational& a, const Rational& x, const PrimeContext& ctx, SumTarget which,
                         u64 p_bound = 512);

/// The fixed 10 x 10 grid of (a, x) used by the equivalence sweep.
const std::vector<Rational>& equivalence_grid_a();
const std::vector<Rational>& equivalence_grid_x();

struct EquivalenceResult {
    std::size_t cases = 0;
    std::optional<std::string> first_mismatch;
};

/// For every odd prime p <= p_max, e in {1,2,3} and grid point with p-integral
/// entries, compares core_sum, plain_sum and the four family_sum values with
/// exact_reduce_sum. Stops at the first mismatch.
EquivalenceResult reduce_equivalence(u64 p_max);

}  // namespace supercong::oracle
