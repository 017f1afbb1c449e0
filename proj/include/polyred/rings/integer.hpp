#pragma once

// Arbitrary-precision rational integers and the handful of elementary
// number-theoretic helpers the rest of the library leans on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace polyred {

using Integer = boost::multiprecision::cpp_int;

/// Least non-negative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);
std::uint64_t mod_u64(const Integer& a, std::uint64_t m);

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);

/// Floor of the square root of a non-negative integer.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// Deterministic primality test (trial division; inputs here are small).
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

/// Modular inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

std::string to_string(const Integer& a);
long long to_ll(const Integer& a);

}  // namespace polyred
