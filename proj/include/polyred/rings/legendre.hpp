#pragma once

#include "polyred/rings/integer.hpp"
#include "polyred/rings/quadint.hpp"

namespace polyred {

/// Rational Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
int legendre(const Integer& a, std::uint64_t p);

/// Legendre symbol over Z[tau]: +1 iff alpha is a nonzero square mod pi,
/// 0 if pi | alpha, -1 otherwise. Computed by Euler's criterion in D/(pi).
/// Throws OddCharRequired when pi is an associate of 2.
int legendre_tau(const QuadInt& alpha, const QuadInt& pi);

}  // namespace polyred
