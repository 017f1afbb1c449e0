#include "polyred/rings/legendre.hpp"

#include "polyred/error.hpp"
#include "polyred/rings/ring.hpp"

namespace polyred {

int legendre(const Integer& a, std::uint64_t p) {
  if (p == 2 || !is_prime_u64(p)) {
    throw Error(ErrorKind::OddCharRequired, "legendre needs an odd prime, got " + std::to_string(p));
  }
  std::uint64_t r = mod_u64(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre_tau(const QuadInt& alpha, const QuadInt& pi) {
  Ring k = Ring::tau_residue(pi);
  if (k.characteristic() == 2) {
    throw Error(ErrorKind::OddCharRequired, pi.to_string() + " lies over 2");
  }
  return k.quadratic_character(k.reduce(alpha));
}

}  // namespace polyred
