#pragma once

// Legendre polynomials P_n evaluated mod p (and mod p^e where the formula
// allows it), including values at square roots living in F_p[sqrt(d)].

#include <cstdint>

#include "supercong/modring.hpp"
#include "supercong/ratpoly.hpp"

namespace supercong {

/// P_n(x) via (j+1)P_{j+1} = (2j+1)x P_j - j P_{j-1}. Requires n <= p-1 so
/// every divisor is a unit; throws NTooLarge otherwise.
Residue legendre_eval_recurrence(u64 n, const Residue& x);
QuadExt legendre_eval_recurrence(u64 n, const QuadExt& x);

/// P_n(x) = sum_k C(n,k) C(n+k,k) ((x-1)/2)^k.
Residue legendre_eval_shifted(u64 n, const Residue& x);
QuadExt legendre_eval_shifted(u64 n, const QuadExt& x);

/// P_n(sqrt(t)) in F_p[sqrt(d)] from the even/odd split
///   P_n(y) = 2^-n y^(n mod 2) sum_{k<=n/2} C(n,k)(-1)^k C(2n-2k,n) (y^2)^(n/2-k).
/// Needs an exponent-1 context.
QuadExt legendre_at_sqrt(u64 n, const Residue& t);

/// P_n(sqrt(1+4x))^2 = sum_{k<=n} C(n,k) C(n+k,k) C(2k,k) x^k, valid mod p^e
/// for any e since the identity is exact over Z.
Residue legendre_square_at_sqrt(u64 n, const Residue& x);

/// Exact coefficients of P_n in Q[x]. Throws BoundExceeded when n > bound.
RatPoly legendre_exact(unsigned n, unsigned bound = 64);

}  // namespace supercong
