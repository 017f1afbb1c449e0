#include "polyred/rings/integer.hpp"

#include <stdexcept>

namespace polyred {

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

std::uint64_t mod_u64(const Integer& a, std::uint64_t m) {
  return mod_floor(a, Integer(m)).convert_to<std::uint64_t>();
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // extended Euclid on signed 64-bit values; moduli here are far below 2^62
  long long r0 = static_cast<long long>(m), r1 = static_cast<long long>(a % m);
  long long s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::domain_error("element is not invertible modulo m");
  long long mm = static_cast<long long>(m);
  return static_cast<std::uint64_t>(((s0 % mm) + mm) % mm);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  unsigned __int128 result = 1 % m, b = base % m;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::string to_string(const Integer& a) { return a.str(); }

long long to_ll(const Integer& a) { return a.convert_to<long long>(); }

}  // namespace polyred
