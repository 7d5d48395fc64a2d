#pragma once

// Binomial coefficients over Z/p^e: rational upper argument with k < p, and
// integer arguments read off the stripped factorial tables.

#include <cstdint>

#include "supercong/modring.hpp"
#include "supercong/rational.hpp"

namespace supercong {

/// C(a, k) = a(a-1)...(a-k+1)/k! mod p^e for 0 <= k <= p-1.
/// Throws NotPIntegral or KTooLarge.
Residue binom_rational(const Rational& a, u64 k, const PrimeContext& ctx);

/// Same, with a already reduced.
Residue binom_residue(const Residue& a, u64 k);

/// C(2k, k) mod p^e for 0 <= k <= p-1, including its p-factor when k > (p-1)/2.
Residue central_binom(u64 k, const PrimeContext& ctx);

/// C(n, k) with exact valuation, 0 <= k <= n <= 2p-2. Throws RangeError.
ValuedResidue binom_int_valued(u64 n, u64 k, const PrimeContext& ctx);

/// C(n, k) with exact valuation for n up to ctx.wide_limit() (6p-6). Used by
/// the family sums, whose numerators reach C(6k, 3k).
ValuedResidue binom_valued_wide(u64 n, u64 k, const PrimeContext& ctx);

/// <a>_p: the representative of a mod p in [0, p-1]. Throws NotPIntegral.
u64 ap_of(const Rational& a, const PrimeContext& ctx);

/// Rising factorial (a)_k = a(a+1)...(a+k-1) mod p^e; any k >= 0.
Residue pochhammer(const Residue& a, u64 k);

}  // namespace supercong
