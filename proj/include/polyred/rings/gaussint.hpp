#pragma once

#include "polyred/rings/integer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyred {

/// Gaussian integer a + b*i.
class GaussInt {
 public:
  GaussInt() = default;
  GaussInt(Integer a, Integer b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

  static GaussInt i() { return GaussInt(0, 1); }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  GaussInt operator-() const { return GaussInt(-a_, -b_); }
  GaussInt& operator+=(const GaussInt& o);
  GaussInt& operator-=(const GaussInt& o);
  GaussInt& operator*=(const GaussInt& o);
  friend GaussInt operator+(GaussInt x, const GaussInt& y) { return x += y; }
  friend GaussInt operator-(GaussInt x, const GaussInt& y) { return x -= y; }
  friend GaussInt operator*(GaussInt x, const GaussInt& y) { return x *= y; }
  friend bool operator==(const GaussInt& x, const GaussInt& y) = default;

  GaussInt conj() const { return GaussInt(a_, -b_); }
  Integer norm() const { return a_ * a_ + b_ * b_; }
  std::optional<GaussInt> divide_exact(const GaussInt& w) const;
  GaussInt pow(unsigned e) const;

  /// "a+b*i" text form.
  std::string to_string() const;

 private:
  Integer a_{0};
  Integer b_{0};
};

bool gauss_associates(const GaussInt& z, const GaussInt& w);

/// An ideal of Z[i] in one of the two shapes the Moebius construction uses:
/// m*Z[i] ("full:m") or the principal ideal (b + c*i) ("principal:b,c").
struct GaussIdeal {
  enum class Shape { Full, Principal };
  Shape shape;
  std::int64_t b;  // m for Full
  std::int64_t c;  // unused (0) for Full

  static GaussIdeal full(std::int64_t m) { return {Shape::Full, m, 0}; }
  static GaussIdeal principal(std::int64_t b, std::int64_t c) { return {Shape::Principal, b, c}; }

  /// Order of Z[i]/J: m^2 for Full(m), b^2 + c^2 for Principal(b, c).
  std::uint64_t residue_order() const;
  /// m for Full(m); b^2 + c^2 for Principal(b, c).
  std::uint64_t rational_modulus() const;
  bool contains(const GaussInt& z) const;
  GaussInt generator() const;
  std::string to_string() const;
  friend bool operator==(const GaussIdeal&, const GaussIdeal&) = default;
};

/// All x in [0, m) with x^2 = -1 (mod m), ascending.
std::vector<std::int64_t> gauss_solve_ihat(std::int64_t m);

/// The unique positive coprime (b, c) with m = b^2 + c^2 and b = -ihat*c (mod m).
/// Throws NoPair when ihat^2 != -1 (mod m) or no such pair exists.
std::pair<std::int64_t, std::int64_t> gauss_pair_from_ihat(std::int64_t m, std::int64_t ihat);

/// True when complex conjugation maps J onto itself.
bool gauss_ideal_self_conjugate(const GaussIdeal& J);

}  // namespace polyred
