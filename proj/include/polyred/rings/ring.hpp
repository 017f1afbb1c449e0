#pragma once

// Finite coefficient rings Z_m or Z_m[x]/(x^2 - c1*x - c0), with elements
// stored as canonical indices a + b*m (0 <= a, b < m).

#include "polyred/rings/gaussint.hpp"
#include "polyred/rings/integer.hpp"
#include "polyred/rings/quadint.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace polyred {

class Ring {
 public:
  using Elem = std::uint32_t;

  enum class Kind { IntegersMod, PrimeField, QuadField, TauResidue, GaussResidue };

  static Ring integers_mod(std::uint32_t d);
  static Ring prime_field(std::uint32_t p);
  /// GF(p^2) modelled as Z[tau]/(p) with basis {1, tau}; requires p = +-2 mod 5.
  static Ring quad_field(std::uint32_t p);
  /// D/(pi) for a prime pi of Z[tau]; throws NotPrime.
  static Ring tau_residue(const QuadInt& pi);
  /// Z[i]/J; throws BadIdeal when gcd(b, c) != 1 or m < 2.
  static Ring gauss_residue(const GaussIdeal& J);

  Kind kind() const { return kind_; }
  const std::string& description() const { return description_; }
  std::uint64_t order() const { return order_; }
  std::uint32_t modulus() const { return m_; }
  int degree() const { return degree_; }
  bool is_field() const { return is_field_; }
  /// Additive order of 1 (= m).
  std::uint32_t characteristic() const { return m_; }
  std::optional<Elem> tau_image() const { return tau_image_; }
  std::optional<Elem> i_image() const { return i_image_; }
  /// Bytes needed for one element in a packed encoding.
  std::size_t elem_bytes() const { return elem_bytes_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % m_; }
  Elem from_int(long long v) const;
  Elem from_int(const Integer& v) const;
  /// a + b*x, reduced.
  Elem make(long long a, long long b) const;
  std::uint32_t coord0(Elem x) const { return x % m_; }
  std::uint32_t coord1(Elem x) const { return x / m_; }

  Elem add(Elem x, Elem y) const {
    return add_tab_.empty() ? add_slow(x, y) : add_tab_[static_cast<std::size_t>(x) * order_ + y];
  }
  Elem mul(Elem x, Elem y) const {
    return mul_tab_.empty() ? mul_slow(x, y) : mul_tab_[static_cast<std::size_t>(x) * order_ + y];
  }
  Elem neg(Elem x) const;
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  Elem pow(Elem x, const Integer& e) const;
  bool is_unit(Elem x) const { return inverse(x).has_value(); }
  std::optional<Elem> inverse(Elem x) const;
  std::vector<Elem> units() const;

  /// Images of domain elements; NoEmbedding when the domain does not map in.
  Elem reduce(const QuadInt& z) const;
  Elem reduce(const GaussInt& z) const;
  bool accepts_tau() const { return tau_image_.has_value(); }

  /// Quadratic character (+1, 0, -1) by Euler's criterion; finite fields of
  /// odd characteristic only (OddCharRequired / NotApplicable otherwise).
  int quadratic_character(Elem x) const;

  /// Human-readable element: "3" or "2+5*t" / "2+5*i".
  std::string format(Elem x) const;

  bool same_structure(const Ring& o) const {
    return m_ == o.m_ && degree_ == o.degree_ && c0_ == o.c0_ && c1_ == o.c1_;
  }

 private:
  Ring(Kind kind, std::string description, std::uint32_t m, int degree, std::uint32_t c1,
       std::uint32_t c0);
  Elem add_slow(Elem x, Elem y) const;
  Elem mul_slow(Elem x, Elem y) const;
  void build_tables();

  Kind kind_;
  std::string description_;
  std::uint32_t m_;
  int degree_;
  std::uint32_t c1_ = 0;  // x^2 = c1*x + c0
  std::uint32_t c0_ = 0;
  std::uint64_t order_;
  bool is_field_ = false;
  std::size_t elem_bytes_ = 1;
  char generator_symbol_ = 'x';
  std::optional<Elem> tau_image_;
  std::optional<Elem> i_image_;
  std::vector<Elem> add_tab_;
  std::vector<Elem> mul_tab_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr share(Ring r) { return std::make_shared<const Ring>(std::move(r)); }

const char* to_string(Ring::Kind kind);

}  // namespace polyred
