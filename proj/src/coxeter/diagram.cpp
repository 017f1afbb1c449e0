#include "polyred/coxeter/diagram.hpp"

#include "polyred/error.hpp"
#include "polyred/rings/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace polyred {

namespace {

const QuadInt kTau2 = QuadInt(1, 1);
const QuadInt kTauM2 = QuadInt(2, -1);  // tau^-2

bool valid_period(int p) { return p == kInfinitePeriod || (p >= 2 && p <= 6); }

std::string period_text(int p) { return p == kInfinitePeriod ? "oo" : std::to_string(p); }

// x == r * y
bool is_multiple(const QuadInt& x, const QuadInt& y, const QuadInt& r) { return x == r * y; }

bool either_way(const QuadInt& x, const QuadInt& y, const QuadInt& r) {
  return is_multiple(x, y, r) || is_multiple(y, x, r);
}

// Multiplicity for the branch (l, r) with period p, or nullopt if the
// labels do not fit any allowed basic system.
std::optional<int> branch_multiplicity(int p, const QuadInt& l, const QuadInt& r) {
  switch (p) {
    case 2: return 0;
    case 3: return l == r ? std::optional<int>(1) : std::nullopt;
    case 4: return either_way(l, r, QuadInt(2)) ? std::optional<int>(1) : std::nullopt;
    case 6: return either_way(l, r, QuadInt(3)) ? std::optional<int>(1) : std::nullopt;
    case 5: return either_way(l, r, kTau2) ? std::optional<int>(1) : std::nullopt;
    case kInfinitePeriod:
      if (l == r) return 2;
      if (either_way(l, r, QuadInt(4))) return 1;
      return std::nullopt;
    default: return std::nullopt;
  }
}

Integer content(const std::vector<QuadInt>& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(gcd(g, x.a()), x.b());
  return abs(g);
}

std::vector<QuadInt> remove_content(std::vector<QuadInt> v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) x = QuadInt(x.a() / g, x.b() / g);
  return v;
}

Integer weight(const std::vector<QuadInt>& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x.a()) + abs(x.b());
  return s;
}

// Unit content, then the unit-square multiple tau^(2k) of smallest
// coefficient weight (ties keep the smaller |k|, then k > 0).
std::vector<QuadInt> canonical_labels(std::vector<QuadInt> v) {
  v = remove_content(std::move(v));
  bool tau = std::any_of(v.begin(), v.end(), [](const QuadInt& x) { return !x.is_rational(); });
  if (!tau) return v;
  std::vector<QuadInt> best = v;
  Integer best_w = weight(v);
  for (int k = 1; k <= 8; ++k) {
    for (int s : {1, -1}) {
      QuadInt u = QuadInt::tau().pow(2LL * k * s);
      std::vector<QuadInt> w = v;
      for (auto& x : w) x *= u;
      Integer wt = weight(w);
      if (wt < best_w) {
        best_w = wt;
        best = w;
      }
    }
  }
  return best;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

int parse_period(const std::string& tok) {
  if (tok == "oo" || tok == "inf" || tok == "∞") return kInfinitePeriod;
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit) || tok.size() > 2)
    throw Error(ErrorKind::BadSymbol, "bad period '" + tok + "'");
  int p = std::stoi(tok);
  if (!valid_period(p)) throw Error(ErrorKind::BadSymbol, "unsupported period " + tok);
  return p;
}

// Ratio label(i+1)/label(i) as numerator / denominator.
struct Ratio {
  QuadInt num;
  Integer den;
  int multiplicity;
};

std::vector<Ratio> ratio_choices(int p) {
  switch (p) {
    case 2: return {{QuadInt(1), 1, 0}};
    case 3: return {{QuadInt(1), 1, 1}};
    case 4: return {{QuadInt(2), 1, 1}, {QuadInt(1), 2, 1}};
    case 6: return {{QuadInt(3), 1, 1}, {QuadInt(1), 3, 1}};
    case 5: return {{kTau2, 1, 1}, {kTauM2, 1, 1}};
    default: return {{QuadInt(4), 1, 1}, {QuadInt(1), 4, 1}, {QuadInt(1), 1, 2}};
  }
}

std::vector<QuadInt> labels_from_ratios(const std::vector<Ratio>& rs) {
  std::vector<QuadInt> num{QuadInt(1)};
  std::vector<Integer> den{1};
  for (const auto& r : rs) {
    num.push_back(num.back() * r.num);
    den.push_back(den.back() * r.den);
  }
  Integer l = 1;
  for (const auto& d : den) l = l / gcd(l, d) * d;
  std::vector<QuadInt> out;
  for (std::size_t i = 0; i < num.size(); ++i) out.push_back(num[i] * QuadInt(l / den[i]));
  return canonical_labels(std::move(out));
}

}  // namespace

Diagram Diagram::make(std::vector<int> periods, std::vector<QuadInt> labels) {
  if (labels.size() != periods.size() + 1)
    throw Error(ErrorKind::LabelViolation, "expected " + std::to_string(periods.size() + 1) +
                                               " labels, got " + std::to_string(labels.size()));
  for (const auto& l : labels)
    if (l.sign() <= 0)
      throw Error(ErrorKind::LabelViolation, "label " + l.to_string() + " is not positive");
  labels = remove_content(std::move(labels));
  Diagram d;
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (!valid_period(periods[i]))
      throw Error(ErrorKind::BadSymbol, "unsupported period " + std::to_string(periods[i]));
    auto m = branch_multiplicity(periods[i], labels[i], labels[i + 1]);
    if (!m)
      throw Error(ErrorKind::LabelViolation,
                  "labels " + labels[i].to_string() + ", " + labels[i + 1].to_string() +
                      " do not fit a branch of period " + period_text(periods[i]));
    d.branches_.push_back({periods[i], *m});
  }
  d.labels_ = std::move(labels);
  return d;
}

Diagram Diagram::with_default_labels(std::vector<int> periods) {
  std::vector<Ratio> rs;
  bool raised = false;  // last period-5 step went up by tau^2
  for (int p : periods) {
    if (!valid_period(p)) throw Error(ErrorKind::BadSymbol, "unsupported period " + std::to_string(p));
    auto choices = ratio_choices(p);
    if (p == 5) {
      rs.push_back(raised ? choices[1] : choices[0]);
      raised = !raised;
    } else {
      rs.push_back(choices[0]);
    }
  }
  return make(std::move(periods), labels_from_ratios(rs));
}

std::vector<int> Diagram::periods() const {
  std::vector<int> out;
  for (const auto& b : branches_) out.push_back(b.period);
  return out;
}

int Diagram::period(int i, int j) const {
  if (i > j) std::swap(i, j);
  return j == i + 1 ? branches_[i].period : 2;
}

int Diagram::multiplicity(int i, int j) const {
  if (i > j) std::swap(i, j);
  return j == i + 1 ? branches_[i].multiplicity : 0;
}

bool Diagram::over_tau() const {
  return std::any_of(labels_.begin(), labels_.end(), [](const QuadInt& x) { return !x.is_rational(); }) ||
         std::any_of(branches_.begin(), branches_.end(), [](const Branch& b) { return b.period == 5; });
}

std::string Diagram::symbol() const {
  std::string s = "[";
  for (std::size_t i = 0; i < branches_.size(); ++i)
    s += (i ? "," : "") + period_text(branches_[i].period);
  return s + "]";
}

std::string Diagram::to_string() const {
  std::string s = symbol() + " labels=";
  for (std::size_t i = 0; i < labels_.size(); ++i) s += (i ? "," : "") + labels_[i].to_string();
  return s;
}

nlohmann::json Diagram::to_json() const {
  nlohmann::json j;
  j["symbol"] = symbol();
  j["rank"] = rank();
  j["labels"] = nlohmann::json::array();
  for (const auto& l : labels_) j["labels"].push_back(l.to_string());
  j["branches"] = nlohmann::json::array();
  for (const auto& b : branches_)
    j["branches"].push_back({{"period", period_text(b.period)}, {"multiplicity", b.multiplicity}});
  return j;
}

Diagram parse_symbol(std::string_view text) {
  std::string s = trim(text);
  auto open = s.find('[');
  auto close = s.find(']');
  if (open != 0 || close == std::string::npos)
    throw Error(ErrorKind::BadSymbol, "expected '[p1,p2,...]' in '" + s + "'");
  std::vector<int> periods;
  std::string body = s.substr(1, close - 1);
  if (!trim(body).empty())
    for (const auto& tok : split(body, ',')) periods.push_back(parse_period(tok));

  std::string rest = trim(std::string_view(s).substr(close + 1));
  if (!rest.empty() && (rest[0] == ';' || rest[0] == ',')) rest = trim(rest.substr(1));
  if (rest.empty()) return Diagram::with_default_labels(std::move(periods));
  if (rest.rfind("labels=", 0) != 0)
    throw Error(ErrorKind::BadSymbol, "unexpected trailing text '" + rest + "'");
  std::vector<QuadInt> labels;
  for (const auto& tok : split(rest.substr(7), ',')) {
    try {
      labels.push_back(parse_quadint(tok));
    } catch (const Error& e) {
      throw Error(ErrorKind::BadSymbol, "bad label '" + tok + "': " + e.what());
    }
  }
  return Diagram::make(std::move(periods), std::move(labels));
}

std::vector<Diagram> basic_system_variants(const Diagram& d) {
  const auto periods = d.periods();
  std::vector<std::vector<Ratio>> choices;
  for (int p : periods) choices.push_back(ratio_choices(p));
  std::vector<Diagram> out;
  std::set<std::string> seen;
  std::vector<std::size_t> idx(periods.size(), 0);
  while (true) {
    std::vector<Ratio> rs;
    for (std::size_t i = 0; i < idx.size(); ++i) rs.push_back(choices[i][idx[i]]);
    Diagram v = Diagram::make(periods, labels_from_ratios(rs));
    if (seen.insert(v.to_string()).second) out.push_back(std::move(v));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

CartanData cartan_data(const Diagram& d) {
  const int n = d.rank();
  const auto& l = d.labels();
  CartanData c{QMatrix(n), QMatrix(n)};
  for (int i = 0; i < n; ++i) {
    c.M(i, i) = QuadInt(-2);
    c.B2(i, i) = QuadInt(2) * l[i];
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      QuadInt lam(d.multiplicity(i, j));
      if (lam.is_zero()) continue;
      bool j_bigger = (l[j] - l[i]).sign() > 0;
      c.B2(i, j) = -(lam * (j_bigger ? l[j] : l[i]));
      if (j_bigger) {
        auto ratio = l[j].divide_exact(l[i]);
        if (!ratio) throw Error(ErrorKind::LabelViolation, "label ratio is not integral");
        c.M(i, j) = lam * *ratio;
      } else {
        c.M(i, j) = lam;
      }
    }
  }
  return c;
}

QuadInt determinant(const QMatrix& m) {
  const int n = m.dim();
  if (n == 0) return QuadInt(1);
  QMatrix a = m;
  QuadInt prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k).is_zero()) {
      int r = k + 1;
      while (r < n && a(r, k).is_zero()) ++r;
      if (r == n) return QuadInt(0);
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        QuadInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = *v.divide_exact(prev);
      }
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

QuadInt discriminant(const Diagram& d) {
  QuadInt v = determinant(cartan_data(d).B2);
  if (d.rank() % 2 == 1) v *= QuadInt(2);
  if (v.is_zero()) return v;
  Integer g = gcd(abs(v.a()), abs(v.b()));
  Integer s2 = 1;
  for (Integer f = 2; f * f <= g; ++f) {
    while (g % (f * f) == 0) {
      g /= f * f;
      s2 *= f * f;
    }
  }
  return QuadInt(v.a() / s2, v.b() / s2);
}

bool same_square_class(const QuadInt& x, const QuadInt& y, bool over_tau) {
  if (over_tau || !x.is_rational() || !y.is_rational()) return tau_same_square_class(x, y);
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  Integer p = x.a() * y.a();
  return p > 0 && is_perfect_square(p);
}

std::vector<QMatrix> reflection_generators(const Diagram& d) {
  const int n = d.rank();
  CartanData c = cartan_data(d);
  std::vector<QMatrix> out;
  for (int i = 0; i < n; ++i) {
    QMatrix r = QMatrix::identity(n);
    for (int j = 0; j < n; ++j) r(i, j) += c.M(i, j);
    out.push_back(std::move(r));
  }
  return out;
}

Matrix reduce_matrix(const QMatrix& m, const Ring& ring) {
  Matrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(i, j) = ring.reduce(m(i, j));
  return out;
}

bool ReducedGenerators::any_collapsed() const {
  return std::any_of(collapsed.begin(), collapsed.end(), [](bool b) { return b; });
}

ReducedGenerators reduce_generators(const std::vector<QMatrix>& gens, const Ring& ring) {
  ReducedGenerators out;
  for (const auto& g : gens) {
    out.mats.push_back(reduce_matrix(g, ring));
    out.collapsed.push_back(is_identity(ring, out.mats.back()));
  }
  return out;
}

std::vector<Matrix> reflection_generators_mod(const CartanData& c, const Ring& ring) {
  Matrix m = reduce_matrix(c.M, ring);
  const int n = m.n;
  std::vector<Matrix> out;
  for (int i = 0; i < n; ++i) {
    Matrix r = identity(ring, n);
    for (int j = 0; j < n; ++j) r(i, j) = ring.add(r(i, j), m(i, j));
    out.push_back(std::move(r));
  }
  return out;
}

bool is_generic(const Diagram& d, std::uint64_t p) {
  if (d.over_tau())
    throw Error(ErrorKind::NotApplicable, "genericity is not defined for Z[tau] diagrams");
  if (p >= 5) return true;
  if (p != 3) return false;
  for (const auto& b : d.branches())
    if (b.period == 6) return false;
  return true;
}

SpecialPrimeFlags special_prime_flags(const Diagram& d, const Ring& ring) {
  SpecialPrimeFlags f;
  f.char2 = ring.characteristic() % 2 == 0;
  f.divides_disc = ring.reduce(discriminant(d)) == ring.zero();
  return f;
}

}  // namespace polyred
