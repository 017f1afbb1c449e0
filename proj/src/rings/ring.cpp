#include "polyred/rings/ring.hpp"

#include "polyred/error.hpp"

#include <numeric>

namespace polyred {

namespace {

constexpr std::uint64_t kTableLimit = 512;

std::uint32_t umod(long long v, std::uint32_t m) {
  long long r = v % static_cast<long long>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

}  // namespace

const char* to_string(Ring::Kind kind) {
  switch (kind) {
    case Ring::Kind::IntegersMod: return "IntegersMod";
    case Ring::Kind::PrimeField: return "PrimeField";
    case Ring::Kind::QuadField: return "QuadField";
    case Ring::Kind::TauResidue: return "TauResidue";
    case Ring::Kind::GaussResidue: return "GaussResidue";
  }
  return "?";
}

Ring::Ring(Kind kind, std::string description, std::uint32_t m, int degree, std::uint32_t c1,
           std::uint32_t c0)
    : kind_(kind), description_(std::move(description)), m_(m), degree_(degree), c1_(c1), c0_(c0) {
  if (m < 2) throw Error(ErrorKind::Unsupported, "ring modulus must be at least 2");
  order_ = degree == 1 ? m : static_cast<std::uint64_t>(m) * m;
  if (order_ > 0xffffffffull) throw Error(ErrorKind::Unsupported, "ring too large");
  elem_bytes_ = order_ <= 256 ? 1 : order_ <= 65536 ? 2 : 4;
  is_field_ = is_prime_u64(m);
  if (is_field_ && degree == 2) {
    // irreducible iff x^2 - c1 x - c0 has no root mod m
    for (std::uint64_t x = 0; x < m; ++x) {
      if ((x * x + (m - c1) * x + (m - c0)) % m == 0) {
        is_field_ = false;
        break;
      }
    }
  }
  build_tables();
}

void Ring::build_tables() {
  if (order_ > kTableLimit) return;
  add_tab_.resize(order_ * order_);
  mul_tab_.resize(order_ * order_);
  for (Elem x = 0; x < order_; ++x) {
    for (Elem y = 0; y < order_; ++y) {
      add_tab_[x * order_ + y] = add_slow(x, y);
      mul_tab_[x * order_ + y] = mul_slow(x, y);
    }
  }
}

Ring Ring::integers_mod(std::uint32_t d) {
  return Ring(Kind::IntegersMod, "Z_" + std::to_string(d), d, 1, 0, 0);
}

Ring Ring::prime_field(std::uint32_t p) {
  if (!is_prime_u64(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  return Ring(Kind::PrimeField, "GF(" + std::to_string(p) + ")", p, 1, 0, 0);
}

Ring Ring::quad_field(std::uint32_t p) {
  if (!is_prime_u64(p) || (p % 5 != 2 && p % 5 != 3)) {
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not inert in Z[tau]");
  }
  Ring r(Kind::QuadField, "GF(" + std::to_string(p) + "^2)", p, 2, 1, 1);
  r.generator_symbol_ = 't';
  r.tau_image_ = r.make(0, 1);
  return r;
}

Ring Ring::tau_residue(const QuadInt& pi) {
  TauPrimeClass cls = tau_classify_prime(pi);
  std::string desc = "Z[t]/(" + pi.to_string() + ")";
  if (cls.kind == TauPrimeKind::Inert) {
    auto p = static_cast<std::uint32_t>(cls.residue_char);
    Ring r(Kind::TauResidue, desc, p, 2, 1, 1);
    r.generator_symbol_ = 't';
    r.tau_image_ = r.make(0, 1);
    return r;
  }
  auto q = static_cast<std::uint32_t>(cls.residue_order);
  Ring r(Kind::TauResidue, desc, q, 1, 0, 0);
  // a + b*tau = 0  =>  tau = -a / b
  std::uint64_t a = mod_u64(pi.a(), q), b = mod_u64(pi.b(), q);
  std::uint64_t t = ((q - a) % q) * inverse_mod(b, q) % q;
  r.tau_image_ = static_cast<Elem>(t);
  return r;
}

Ring Ring::gauss_residue(const GaussIdeal& J) {
  if (J.shape == GaussIdeal::Shape::Full) {
    if (J.b < 2) throw Error(ErrorKind::BadIdeal, "full ideal needs m >= 2");
    auto m = static_cast<std::uint32_t>(J.b);
    Ring r(Kind::GaussResidue, "Z[i]/(" + J.to_string() + ")", m, 2, 0, m - 1);
    r.generator_symbol_ = 'i';
    r.i_image_ = r.make(0, 1);
    return r;
  }
  if (std::gcd(J.b, J.c) != 1) throw Error(ErrorKind::BadIdeal, J.to_string() + " has gcd != 1");
  auto m = static_cast<std::uint32_t>(J.rational_modulus());
  if (m < 2) throw Error(ErrorKind::BadIdeal, J.to_string() + " is the unit ideal");
  // b + c*ihat = 0 (mod m), i.e. b = -ihat*c
  std::uint64_t c = umod(J.c, m), b = umod(J.b, m);
  std::uint64_t ihat = ((m - b) % m) * inverse_mod(c, m) % m;
  Ring r(Kind::GaussResidue, "Z[i]/(" + J.to_string() + ")", m, 1, 0, 0);
  r.i_image_ = static_cast<Elem>(ihat);
  return r;
}

Ring::Elem Ring::from_int(long long v) const { return umod(v, m_); }

Ring::Elem Ring::from_int(const Integer& v) const {
  return static_cast<Elem>(mod_u64(v, m_));
}

Ring::Elem Ring::make(long long a, long long b) const {
  if (degree_ == 1) {
    return umod(a, m_);  // b ignored
  }
  return umod(a, m_) + umod(b, m_) * m_;
}

Ring::Elem Ring::add_slow(Elem x, Elem y) const {
  if (degree_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(x) + y) % m_);
  std::uint32_t a = (x % m_ + y % m_) % m_;
  std::uint32_t b = (x / m_ + y / m_) % m_;
  return a + b * m_;
}

Ring::Elem Ring::mul_slow(Elem x, Elem y) const {
  const std::uint64_t m = m_;
  if (degree_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % m);
  std::uint64_t a = x % m, b = x / m, c = y % m, d = y / m;
  std::uint64_t bd = b * d % m;
  std::uint64_t r0 = (a * c + bd * c0_) % m;
  std::uint64_t r1 = (a * d + b * c + bd * c1_) % m;
  return static_cast<Elem>(r0 + r1 * m);
}

Ring::Elem Ring::neg(Elem x) const {
  if (degree_ == 1) return x == 0 ? 0 : m_ - x;
  std::uint32_t a = x % m_, b = x / m_;
  return (a == 0 ? 0 : m_ - a) + (b == 0 ? 0 : m_ - b) * m_;
}

Ring::Elem Ring::pow(Elem x, const Integer& e) const {
  if (e < 0) {
    auto inv = inverse(x);
    if (!inv) throw std::domain_error("negative power of a non-unit");
    return pow(*inv, -e);
  }
  Elem result = one(), base = x;
  Integer k = e;
  while (k > 0) {
    if (bit_test(k, 0)) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Ring::Elem> Ring::inverse(Elem x) const {
  if (degree_ == 1) {
    if (std::gcd(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(m_)) != 1) {
      return std::nullopt;
    }
    return static_cast<Elem>(inverse_mod(x, m_));
  }
  // (a + b x)(a' + b' x) = 1 ; solve via the norm form when it is a unit
  // norm N = a^2 + c1 a b - c0 b^2 (conjugate a + c1 b - b x)
  const long long m = m_;
  long long a = x % m_, b = x / m_;
  long long conj_a = (a + static_cast<long long>(c1_) * b) % m;
  long long conj_b = (m - b) % m;
  long long n = (a * conj_a % m + m - (static_cast<long long>(c0_) * b % m) * b % m) % m;
  // check: x * conj = n (a scalar)
  if (std::gcd(n, m) != 1) return std::nullopt;
  long long ninv = static_cast<long long>(inverse_mod(static_cast<std::uint64_t>(n), m_));
  return make(conj_a * ninv % m, conj_b * ninv % m);
}

std::vector<Ring::Elem> Ring::units() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < order_; ++x) {
    if (is_unit(x)) out.push_back(x);
  }
  return out;
}

Ring::Elem Ring::reduce(const QuadInt& z) const {
  if (z.is_rational()) return from_int(z.a());
  if (!tau_image_) {
    throw Error(ErrorKind::NoEmbedding, z.to_string() + " has no image in " + description_);
  }
  return add(from_int(z.a()), mul(from_int(z.b()), *tau_image_));
}

Ring::Elem Ring::reduce(const GaussInt& z) const {
  if (z.b() == 0) return from_int(z.a());
  if (!i_image_) {
    throw Error(ErrorKind::NoEmbedding, z.to_string() + " has no image in " + description_);
  }
  return add(from_int(z.a()), mul(from_int(z.b()), *i_image_));
}

int Ring::quadratic_character(Elem x) const {
  if (!is_field_) throw Error(ErrorKind::NotApplicable, description_ + " is not a field");
  if (m_ == 2) throw Error(ErrorKind::OddCharRequired, description_);
  if (x == 0) return 0;
  Elem e = pow(x, Integer((order_ - 1) / 2));
  return e == one() ? 1 : -1;
}

std::string Ring::format(Elem x) const {
  if (degree_ == 1) return std::to_string(x);
  std::uint32_t a = x % m_, b = x / m_;
  if (b == 0) return std::to_string(a);
  std::string bpart = (b == 1 ? std::string() : std::to_string(b) + "*") + generator_symbol_;
  if (a == 0) return bpart;
  return std::to_string(a) + "+" + bpart;
}

}  // namespace polyred
