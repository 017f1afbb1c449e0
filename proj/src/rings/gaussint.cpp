#include "polyred/rings/gaussint.hpp"

#include "polyred/error.hpp"

#include <numeric>

namespace polyred {

GaussInt& GaussInt::operator+=(const GaussInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GaussInt& GaussInt::operator-=(const GaussInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GaussInt& GaussInt::operator*=(const GaussInt& o) {
  Integer na = a_ * o.a_ - b_ * o.b_;
  Integer nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::optional<GaussInt> GaussInt::divide_exact(const GaussInt& w) const {
  Integer n = w.norm();
  if (n == 0) return std::nullopt;
  GaussInt num = *this * w.conj();
  if (num.a_ % n != 0 || num.b_ % n != 0) return std::nullopt;
  return GaussInt(num.a_ / n, num.b_ / n);
}

GaussInt GaussInt::pow(unsigned e) const {
  GaussInt base = *this, result(1);
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

std::string GaussInt::to_string() const {
  if (b_ == 0) return a_.str();
  std::string bpart = b_ == 1 ? "i" : b_ == -1 ? "-i" : b_.str() + "*i";
  if (a_ == 0) return bpart;
  return a_.str() + (b_ > 0 ? "+" : "") + bpart;
}

bool gauss_associates(const GaussInt& z, const GaussInt& w) {
  GaussInt u = w;
  for (int k = 0; k < 4; ++k) {
    if (u == z) return true;
    u *= GaussInt::i();
  }
  return false;
}

std::uint64_t GaussIdeal::residue_order() const {
  if (shape == Shape::Full) return static_cast<std::uint64_t>(b * b);
  return static_cast<std::uint64_t>(b * b + c * c);
}

std::uint64_t GaussIdeal::rational_modulus() const {
  if (shape == Shape::Full) return static_cast<std::uint64_t>(b);
  return static_cast<std::uint64_t>(b * b + c * c);
}

bool GaussIdeal::contains(const GaussInt& z) const {
  if (shape == Shape::Full) return z.a() % b == 0 && z.b() % b == 0;
  return z.divide_exact(generator()).has_value();
}

GaussInt GaussIdeal::generator() const {
  if (shape == Shape::Full) return GaussInt(b);
  return GaussInt(b, c);
}

std::string GaussIdeal::to_string() const {
  if (shape == Shape::Full) return "full:" + std::to_string(b);
  return "principal:" + std::to_string(b) + "," + std::to_string(c);
}

std::vector<std::int64_t> gauss_solve_ihat(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < m; ++x) {
    if ((x * x + 1) % m == 0) out.push_back(x);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> gauss_pair_from_ihat(std::int64_t m, std::int64_t ihat) {
  if (m < 2 || ((ihat % m) * (ihat % m) + 1) % m != 0) {
    throw Error(ErrorKind::NoPair, std::to_string(ihat) + "^2 != -1 mod " + std::to_string(m));
  }
  for (std::int64_t c = 1; c * c < m; ++c) {
    std::int64_t b2 = m - c * c;
    auto b = static_cast<std::int64_t>(isqrt(Integer(b2)));
    if (b <= 0 || b * b != b2 || std::gcd(b, c) != 1) continue;
    std::int64_t rhs = ((-ihat * c) % m + m) % m;
    if (b % m == rhs) return {b, c};
  }
  throw Error(ErrorKind::NoPair, "no coprime pair for m=" + std::to_string(m));
}

bool gauss_ideal_self_conjugate(const GaussIdeal& J) {
  if (J.shape == GaussIdeal::Shape::Full) return true;
  GaussInt g = J.generator();
  return gauss_associates(g.conj(), g);
}

}  // namespace polyred
