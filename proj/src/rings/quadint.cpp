#include "polyred/rings/quadint.hpp"

#include "polyred/error.hpp"

#include <cmath>

namespace polyred {

QuadInt& QuadInt::operator+=(const QuadInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& o) {
  // (a + b t)(c + d t) = ac + bd + (ad + bc + bd) t
  Integer bd = b_ * o.b_;
  Integer na = a_ * o.a_ + bd;
  Integer nb = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

int QuadInt::sign() const {
  // a + b t = ((2a + b) + b sqrt5) / 2
  Integer x = 2 * a_ + b_;
  const Integer& y = b_;
  int sx = x.sign(), sy = y.sign();
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  Integer lhs = x * x, rhs = 5 * y * y;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sx : sy;
}

double QuadInt::approx() const {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  return a_.convert_to<double>() + b_.convert_to<double>() * t;
}

std::optional<QuadInt> QuadInt::divide_exact(const QuadInt& w) const {
  Integer n = tau_norm(w);
  if (n == 0) return std::nullopt;
  QuadInt num = *this * tau_conj(w);
  if (num.a_ % n != 0 || num.b_ % n != 0) return std::nullopt;
  return QuadInt(num.a_ / n, num.b_ / n);
}

QuadInt QuadInt::pow(long long e) const {
  QuadInt base = *this;
  if (e < 0) {
    base = tau_unit_inverse(*this);
    e = -e;
  }
  QuadInt result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string QuadInt::to_string() const {
  if (b_ == 0) return a_.str();
  std::string bpart;
  if (b_ == 1) {
    bpart = "t";
  } else if (b_ == -1) {
    bpart = "-t";
  } else {
    bpart = b_.str() + "*t";
  }
  if (a_ == 0) return bpart;
  if (b_ > 0) return a_.str() + "+" + bpart;
  return a_.str() + bpart;
}

QuadInt tau_conj(const QuadInt& z) { return QuadInt(z.a() + z.b(), -z.b()); }

Integer tau_norm(const QuadInt& z) {
  return z.a() * z.a() + z.a() * z.b() - z.b() * z.b();
}

bool tau_is_unit(const QuadInt& z) {
  Integer n = tau_norm(z);
  return n == 1 || n == -1;
}

QuadInt tau_unit_inverse(const QuadInt& u) {
  Integer n = tau_norm(u);
  if (n == 1) return tau_conj(u);
  if (n == -1) return -tau_conj(u);
  throw std::domain_error("inverse of a non-unit in Z[tau]");
}

bool tau_associates(const QuadInt& z, const QuadInt& w) {
  if (z.is_zero() || w.is_zero()) return z.is_zero() && w.is_zero();
  if (abs(tau_norm(z)) != abs(tau_norm(w))) return false;
  auto q = z.divide_exact(w);
  return q && tau_is_unit(*q);
}

std::optional<QuadInt> tau_sqrt(const QuadInt& z) {
  // (c + d t)^2 = (c^2 + d^2) + (2cd + d^2) t
  if (z.is_zero()) return QuadInt(0);
  if (z.a() < 0) return std::nullopt;
  Integer bound = isqrt(z.a());
  for (Integer d = -bound; d <= bound; ++d) {
    Integer c2 = z.a() - d * d;
    if (!is_perfect_square(c2)) continue;
    Integer c = isqrt(c2);
    for (int s : {1, -1}) {
      QuadInt r(s * c, d);
      if (r * r == z) return r.sign() < 0 ? -r : r;
    }
  }
  return std::nullopt;
}

bool tau_same_square_class(const QuadInt& z, const QuadInt& w) {
  if (w.is_zero() || z.is_zero()) return z.is_zero() && w.is_zero();
  // z/w is a square in Q(sqrt5) iff z*w is a square in Z[tau] (integrally closed)
  return tau_sqrt(z * w).has_value();
}

const char* to_string(TauPrimeKind kind) {
  switch (kind) {
    case TauPrimeKind::Ramified: return "Ramified";
    case TauPrimeKind::Inert: return "Inert";
    case TauPrimeKind::Split: return "Split";
  }
  return "?";
}

TauPrimeClass tau_classify_prime(const QuadInt& pi) {
  Integer n = abs(tau_norm(pi));
  if (n == 5) return {TauPrimeKind::Ramified, 5, 5};
  if (is_prime(n)) {
    auto r = static_cast<int>(n % 5);
    if (r == 1 || r == 4) {
      auto q = n.convert_to<std::uint64_t>();
      return {TauPrimeKind::Split, q, q};
    }
  }
  if (is_perfect_square(n)) {
    Integer p = isqrt(n);
    auto r = static_cast<int>(p % 5);
    if (is_prime(p) && (r == 2 || r == 3)) {
      return {TauPrimeKind::Inert, n.convert_to<std::uint64_t>(),
              p.convert_to<std::uint64_t>()};
    }
  }
  throw Error(ErrorKind::NotPrime, pi.to_string() + " has norm " + tau_norm(pi).str());
}

QuadInt tau_split_prime_over(std::uint64_t q) {
  auto r = q % 5;
  if (!is_prime_u64(q) || (r != 1 && r != 4)) {
    throw Error(ErrorKind::NotPrime, std::to_string(q) + " does not split in Z[tau]");
  }
  // a^2 + ab - b^2 = +-q always has a solution with small |a|, b > 0
  for (long long b = 1;; ++b) {
    for (long long a = -3 * b - 2; a <= 3 * b + 2; ++a) {
      Integer n = abs(tau_norm(QuadInt(a, b)));
      if (n == q) return QuadInt(a, b);
    }
  }
}

}  // namespace polyred
