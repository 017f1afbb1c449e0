#include "polyred/groupkit/group.hpp"

#include "polyred/error.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <set>

namespace polyred {

namespace {

void mul_raw(const Ring& ring, int n, const Ring::Elem* x, const Ring::Elem* y, Ring::Elem* out) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Ring::Elem acc = 0;
      for (int k = 0; k < n; ++k) acc = ring.add(acc, ring.mul(x[i * n + k], y[k * n + j]));
      out[i * n + j] = acc;
    }
  }
}

}  // namespace

MatrixGroup::MatrixGroup(RingPtr ring, int n, std::vector<Matrix> gens,
                         std::vector<Ring::Elem> scalars, std::uint64_t budget)
    : ring_(std::move(ring)),
      n_(n),
      gens_(std::move(gens)),
      scalars_(std::move(scalars)),
      budget_(budget),
      store_(static_cast<std::size_t>(n) * n * ring_->elem_bytes()) {}

MatrixGroup MatrixGroup::closure(RingPtr ring, std::vector<Matrix> gens, std::uint64_t budget) {
  Ring::Elem one = ring->one();
  return closure_mod_scalars(std::move(ring), std::move(gens), {one}, budget);
}

MatrixGroup MatrixGroup::closure_mod_scalars(RingPtr ring, std::vector<Matrix> gens,
                                             std::vector<Ring::Elem> scalars,
                                             std::uint64_t budget) {
  if (gens.empty()) throw Error(ErrorKind::Unsupported, "closure needs the dimension from a generator");
  int n = gens.front().n;
  std::sort(scalars.begin(), scalars.end());
  scalars.erase(std::unique(scalars.begin(), scalars.end()), scalars.end());
  MatrixGroup g(std::move(ring), n, std::move(gens), std::move(scalars), budget);
  g.run(budget);
  return g;
}

void MatrixGroup::encode_into(const Ring::Elem* entries, std::uint8_t* out) const {
  const std::size_t cnt = static_cast<std::size_t>(n_) * n_;
  switch (ring_->elem_bytes()) {
    case 1:
      for (std::size_t i = 0; i < cnt; ++i) out[i] = static_cast<std::uint8_t>(entries[i]);
      break;
    case 2:
      for (std::size_t i = 0; i < cnt; ++i) {
        out[2 * i] = static_cast<std::uint8_t>(entries[i] >> 8);
        out[2 * i + 1] = static_cast<std::uint8_t>(entries[i]);
      }
      break;
    default:
      for (std::size_t i = 0; i < cnt; ++i)
        for (int b = 0; b < 4; ++b) out[4 * i + b] = static_cast<std::uint8_t>(entries[i] >> (24 - 8 * b));
  }
}

void MatrixGroup::canonical_into(const Ring::Elem* entries, std::uint8_t* out, std::uint8_t* tmp,
                                 Ring::Elem* scaled) const {
  encode_into(entries, out);
  if (scalars_.size() <= 1) return;
  const std::size_t cnt = static_cast<std::size_t>(n_) * n_;
  const std::size_t w = store_.width();
  for (Ring::Elem s : scalars_) {
    if (s == ring_->one()) continue;
    for (std::size_t i = 0; i < cnt; ++i) scaled[i] = ring_->mul(s, entries[i]);
    encode_into(scaled, tmp);
    if (std::memcmp(tmp, out, w) < 0) std::memcpy(out, tmp, w);
  }
}

std::vector<std::uint8_t> MatrixGroup::encode(const Matrix& m) const {
  std::vector<std::uint8_t> out(store_.width()), tmp(store_.width());
  std::vector<Ring::Elem> scaled(m.e.size());
  canonical_into(m.e.data(), out.data(), tmp.data(), scaled.data());
  return out;
}

Matrix MatrixGroup::decode(const std::uint8_t* bytes) const {
  Matrix m(n_);
  const std::size_t b = ring_->elem_bytes();
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    Ring::Elem v = 0;
    for (std::size_t k = 0; k < b; ++k) v = (v << 8) | bytes[i * b + k];
    m.e[i] = v;
  }
  return m;
}

bool MatrixGroup::contains(const Matrix& m) const {
  if (m.n != n_) return false;
  return store_.contains(encode(m).data());
}

void MatrixGroup::run(std::uint64_t budget) {
  const Ring& ring = *ring_;
  const std::size_t cnt = static_cast<std::size_t>(n_) * n_;
  const std::size_t w = store_.width();
  std::vector<std::uint8_t> key(w), tmp(w);
  std::vector<Ring::Elem> scaled(cnt), cur(cnt), prod(cnt);

  auto add = [&](const Ring::Elem* entries) {
    canonical_into(entries, key.data(), tmp.data(), scaled.data());
    if (store_.insert(key.data()).second && store_.size() > budget)
      throw BudgetExceeded(budget, store_.size());
  };

  Matrix id = identity(ring, n_);
  add(id.e.data());
  level_end_.push_back(store_.size());
  std::size_t level_start = 0;
  while (level_start < store_.size()) {
    std::size_t level_stop = store_.size();
    for (std::size_t idx = level_start; idx < level_stop; ++idx) {
      Matrix m = decode(store_.at(idx));
      std::copy(m.e.begin(), m.e.end(), cur.begin());
      for (const auto& g : gens_) {
        mul_raw(ring, n_, cur.data(), g.e.data(), prod.data());
        add(prod.data());
      }
    }
    if (store_.size() > level_stop) level_end_.push_back(store_.size());
    level_start = level_stop;
  }
}

unsigned MatrixGroup::depth(std::size_t idx) const {
  auto it = std::upper_bound(level_end_.begin(), level_end_.end(), idx);
  return static_cast<unsigned>(it - level_end_.begin());
}

std::vector<std::uint32_t> MatrixGroup::canonical_order() const {
  std::vector<std::uint32_t> out(store_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(i);
  const std::size_t w = store_.width();
  std::size_t start = 0;
  for (std::size_t end : level_end_) {
    std::sort(out.begin() + static_cast<long>(start), out.begin() + static_cast<long>(end),
              [&](std::uint32_t a, std::uint32_t b) {
                return std::memcmp(store_.at(a), store_.at(b), w) < 0;
              });
    start = end;
  }
  return out;
}

bool MatrixGroup::same_class(const Matrix& a, const Matrix& b) const { return encode(a) == encode(b); }

bool MatrixGroup::is_identity_class(const Matrix& g) const {
  return same_class(g, identity(*ring_, n_));
}

std::uint64_t MatrixGroup::element_order(const Matrix& g) const {
  Matrix p = g;
  for (std::uint64_t k = 1;; ++k) {
    if (is_identity_class(p)) return k;
    if (k > order()) throw Error(ErrorKind::Unsupported, "element does not lie in a finite group");
    p = multiply(*ring_, p, g);
  }
}

nlohmann::json MatrixGroup::summary_json() const {
  nlohmann::json j;
  j["ring"] = ring_->description();
  j["dimension"] = n_;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : gens_) j["generators"].push_back(format(*ring_, g));
  j["order"] = order();
  j["scalar_group_order"] = scalars_.size();
  j["budget"] = budget_;
  j["budget_status"] = "complete";
  return j;
}

void MatrixGroup::write_elements(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Unsupported, "cannot open " + path);
  for (std::size_t i = 0; i < store_.size(); ++i)
    out.write(reinterpret_cast<const char*>(store_.at(i)), static_cast<std::streamsize>(store_.width()));
}

std::uint64_t element_order(const Ring& ring, const Matrix& g) {
  Matrix p = g;
  for (std::uint64_t k = 1;; ++k) {
    if (is_identity(ring, p)) return k;
    if (k > 100'000'000) throw Error(ErrorKind::Unsupported, "element order search did not terminate");
    p = multiply(ring, p, g);
  }
}

MatrixGroup subgroup(const MatrixGroup& G, const std::vector<int>& indices) {
  std::vector<Matrix> gens;
  for (int i : indices) gens.push_back(G.generators().at(static_cast<std::size_t>(i)));
  if (gens.empty()) gens.push_back(identity(G.ring(), G.dim()));
  return MatrixGroup::closure_mod_scalars(G.ring_ptr(), std::move(gens), G.scalars(), G.budget());
}

MatrixGroup intersect(const MatrixGroup& A, const MatrixGroup& B) {
  if (A.dim() != B.dim() || !A.ring().same_structure(B.ring()) || A.scalars() != B.scalars())
    throw Error(ErrorKind::Unsupported, "intersect needs groups over the same ring and scalars");
  const MatrixGroup& small = A.order() <= B.order() ? A : B;
  const MatrixGroup& large = A.order() <= B.order() ? B : A;
  std::vector<std::uint32_t> members;
  for (std::size_t i = 0; i < small.order(); ++i)
    if (large.store().contains(small.store().at(i))) members.push_back(static_cast<std::uint32_t>(i));

  // greedy generating set: add any member not yet generated
  std::vector<Matrix> gens{identity(A.ring(), A.dim())};
  MatrixGroup H = MatrixGroup::closure_mod_scalars(A.ring_ptr(), gens, A.scalars(), A.budget());
  for (std::uint32_t i : members) {
    if (H.order() == members.size()) break;
    if (H.store().contains(small.store().at(i))) continue;
    gens.push_back(small.element(i));
    H = MatrixGroup::closure_mod_scalars(A.ring_ptr(), gens, A.scalars(), A.budget());
  }
  if (H.order() != members.size())
    throw Error(ErrorKind::Unsupported, "intersection is not closed");
  for (std::size_t i = 0; i < H.order(); ++i)
    if (!small.store().contains(H.store().at(i)) || !large.store().contains(H.store().at(i)))
      throw Error(ErrorKind::Unsupported, "intersection is not closed");
  return H;
}

std::vector<Ring::Elem> scalars_in(const MatrixGroup& linear) {
  std::vector<Ring::Elem> out;
  const Ring& ring = linear.ring();
  for (Ring::Elem s : ring.units()) {
    Matrix m = scale(ring, s, identity(ring, linear.dim()));
    if (linear.contains(m)) out.push_back(s);
  }
  return out;
}

MatrixGroup projectivize(RingPtr ring, std::vector<Matrix> gens, std::uint64_t budget) {
  MatrixGroup linear = MatrixGroup::closure(ring, gens, budget);
  return MatrixGroup::closure_mod_scalars(std::move(ring), std::move(gens), scalars_in(linear), budget);
}

std::vector<Vec> orbit(const Ring& ring, const Vec& v, const std::vector<Matrix>& gens, Action side) {
  std::vector<Vec> out{v};
  std::set<Vec> seen{v};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Vec w = side == Action::Column ? apply(ring, g, out[i]) : apply_row(ring, out[i], g);
      if (seen.insert(w).second) out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<Matrix> induced_quotient_action(const Ring& field, const std::vector<Matrix>& gens,
                                            const NullSpace& radical) {
  // reduce v modulo rad so that it vanishes on the free coordinates
  auto reduce = [&](Vec v) {
    for (std::size_t k = 0; k < radical.basis.size(); ++k) {
      Ring::Elem c = v[radical.free[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = field.sub(v[j], field.mul(c, radical.basis[k][j]));
    }
    return v;
  };
  const int q = static_cast<int>(radical.pivots.size());
  std::vector<Matrix> out;
  for (const auto& g : gens) {
    for (const auto& r : radical.basis) {
      Vec img = reduce(apply(field, g, r));
      if (std::any_of(img.begin(), img.end(), [](Ring::Elem x) { return x != 0; }))
        throw Error(ErrorKind::NotInvariant, "radical is not invariant under a generator");
    }
    Matrix h(q);
    for (int c = 0; c < q; ++c) {
      Vec col(static_cast<std::size_t>(g.n), 0);
      col[radical.pivots[c]] = field.one();
      Vec img = reduce(apply(field, g, col));
      for (int r = 0; r < q; ++r) h(r, c) = img[radical.pivots[r]];
    }
    out.push_back(std::move(h));
  }
  return out;
}

RadicalQuotient quotient_by_radical_action(RingPtr field, const std::vector<Matrix>& gens,
                                           const NullSpace& radical,
                                           std::optional<Integer> group_order,
                                           std::uint64_t budget) {
  std::vector<Matrix> induced = induced_quotient_action(*field, gens, radical);
  MatrixGroup linear = MatrixGroup::closure(field, induced, budget);
  std::uint64_t linear_order = linear.order();
  MatrixGroup image = MatrixGroup::closure_mod_scalars(field, induced, scalars_in(linear), budget);
  std::optional<Integer> kernel;
  if (group_order) {
    if (*group_order % image.order() != 0)
      throw Error(ErrorKind::Unsupported, "image order does not divide the group order");
    kernel = *group_order / image.order();
  }
  return RadicalQuotient{std::move(image), linear_order, kernel, std::move(induced)};
}

}  // namespace polyred
