#pragma once

#include "polyred/rings/integer.hpp"

#include <optional>
#include <string>

namespace polyred {

/// Element a + b*tau of the golden-ratio ring Z[tau], with tau^2 = tau + 1.
class QuadInt {
 public:
  QuadInt() = default;
  QuadInt(Integer a, Integer b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

  static QuadInt tau() { return QuadInt(0, 1); }
  /// sqrt(5) = 2*tau - 1.
  static QuadInt sqrt5() { return QuadInt(-1, 2); }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QuadInt operator-() const { return QuadInt(-a_, -b_); }
  QuadInt& operator+=(const QuadInt& o);
  QuadInt& operator-=(const QuadInt& o);
  QuadInt& operator*=(const QuadInt& o);

  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
  friend bool operator==(const QuadInt& x, const QuadInt& y) = default;

  /// Sign of the real number a + b*tau (tau the positive root).
  int sign() const;
  double approx() const;

  /// Exact quotient when w divides *this in Z[tau].
  std::optional<QuadInt> divide_exact(const QuadInt& w) const;

  /// Integer powers; negative exponents are only valid for units.
  QuadInt pow(long long e) const;

  /// Text form "a+b*t" (e.g. "-2-5*t", "3", "t").
  std::string to_string() const;

 private:
  Integer a_{0};
  Integer b_{0};
};

/// (a + b*tau)' = (a + b) - b*tau.
QuadInt tau_conj(const QuadInt& z);
/// N(z) = z z' = a^2 + ab - b^2.
Integer tau_norm(const QuadInt& z);
bool tau_is_unit(const QuadInt& z);
bool tau_associates(const QuadInt& z, const QuadInt& w);
QuadInt tau_unit_inverse(const QuadInt& u);

/// A square root in Z[tau], when one exists (either sign may be returned;
/// the root with positive real value is preferred).
std::optional<QuadInt> tau_sqrt(const QuadInt& z);

/// True when z / w is a square in Q(sqrt5) (w != 0).
bool tau_same_square_class(const QuadInt& z, const QuadInt& w);

enum class TauPrimeKind { Ramified, Inert, Split };

struct TauPrimeClass {
  TauPrimeKind kind;
  std::uint64_t residue_order;
  std::uint64_t residue_char;
};

const char* to_string(TauPrimeKind kind);

/// Classifies a prime of Z[tau] by the shape of its norm; throws NotPrime.
TauPrimeClass tau_classify_prime(const QuadInt& pi);

/// A prime a + b*tau of norm +-q for a rational prime q = +-1 mod 5 (search
/// over small b; deterministic).
QuadInt tau_split_prime_over(std::uint64_t q);

}  // namespace polyred
