#include "polyred/cgroup/cgroup.hpp"

#include "polyred/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace polyred {

namespace {

std::uint64_t count_common(const MatrixGroup& a, const MatrixGroup& b) {
  const MatrixGroup& small = a.order() <= b.order() ? a : b;
  const MatrixGroup& large = a.order() <= b.order() ? b : a;
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < small.order(); ++i)
    if (large.store().contains(small.store().at(i))) ++n;
  return n;
}

std::vector<int> interval(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<int> from_mask(unsigned mask, int n) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) v.push_back(i);
  return v;
}

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::optional<Matrix> inverse_of(const Ring& ring, const Matrix& g) {
  if (ring.is_field()) return inverse_field(ring, g);
  std::uint64_t k = element_order(ring, g);
  return power(ring, g, k - 1);
}

// Involution pre-check shared by both verifiers.
std::optional<CGroupVerdict> involution_failure(const GeneratorSystem& sys) {
  const Matrix id = identity(sys.ring(), sys.gens().front().n);
  for (int i = 0; i < sys.rank(); ++i) {
    const Matrix& r = sys.gens()[static_cast<std::size_t>(i)];
    if (sys.same_class(r, id) || !sys.same_class(multiply(sys.ring(), r, r), id)) {
      CGroupVerdict v;
      v.reason = "generator " + std::to_string(i) + " is not an involution";
      v.failing_i = {i};
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

GeneratorSystem::GeneratorSystem(RingPtr ring, std::vector<Matrix> gens, std::vector<Ring::Elem> scalars,
                                 std::uint64_t budget)
    : ring_(std::move(ring)), gens_(std::move(gens)), scalars_(std::move(scalars)), budget_(budget) {
  if (scalars_.empty()) scalars_.push_back(ring_->one());
  if (gens_.empty()) throw Error(ErrorKind::Unsupported, "generator system needs generators");
}

const MatrixGroup& GeneratorSystem::subgroup(const std::vector<int>& indices) const {
  auto it = cache_.find(indices);
  if (it != cache_.end()) return it->second;
  std::vector<Matrix> g;
  for (int i : indices) g.push_back(gens_.at(static_cast<std::size_t>(i)));
  if (g.empty()) g.push_back(identity(*ring_, gens_.front().n));
  return cache_.emplace(indices, MatrixGroup::closure_mod_scalars(ring_, std::move(g), scalars_, budget_))
      .first->second;
}

void GeneratorSystem::seed(const std::vector<int>& indices, MatrixGroup group) {
  cache_.insert_or_assign(indices, std::move(group));
}

const MatrixGroup& GeneratorSystem::whole() const { return subgroup(interval(0, rank() - 1)); }

Matrix GeneratorSystem::word(const std::vector<int>& indices) const {
  Matrix m = identity(*ring_, gens_.front().n);
  for (int i : indices) m = multiply(*ring_, m, gens_.at(static_cast<std::size_t>(i)));
  return m;
}

bool GeneratorSystem::same_class(const Matrix& a, const Matrix& b) const {
  for (Ring::Elem s : scalars_)
    if (scale(*ring_, s, a) == b) return true;
  return false;
}

std::uint64_t GeneratorSystem::period(const Matrix& g) const {
  const Matrix id = identity(*ring_, g.n);
  Matrix p = g;
  for (std::uint64_t k = 1; k <= budget_; ++k) {
    if (same_class(p, id)) return k;
    p = multiply(*ring_, p, g);
  }
  throw Error(ErrorKind::Unsupported, "period exceeds the budget");
}

nlohmann::json CGroupVerdict::to_json() const {
  nlohmann::json j;
  j["is_cgroup"] = is_cgroup;
  if (!is_cgroup) {
    j["reason"] = reason;
    j["failing_pair"] = {failing_i, failing_j};
  }
  return j;
}

CGroupVerdict verify_string_cgroup(const GeneratorSystem& sys) {
  if (auto bad = involution_failure(sys)) return *bad;
  const int n = sys.rank();
  std::map<std::pair<int, int>, bool> done;
  CGroupVerdict verdict;
  verdict.is_cgroup = true;
  // returns false and fills the verdict on the first failure
  std::function<bool(int, int)> rec = [&](int lo, int hi) -> bool {
    if (hi - lo + 1 <= 1) return true;
    auto key = std::make_pair(lo, hi);
    if (auto it = done.find(key); it != done.end()) return it->second;
    bool ok = rec(lo + 1, hi) && rec(lo, hi - 1);
    if (ok) {
      auto I = interval(lo, hi - 1), J = interval(lo + 1, hi);
      std::uint64_t common = count_common(sys.subgroup(I), sys.subgroup(J));
      std::uint64_t expect = sys.subgroup(interval(lo + 1, hi - 1)).order();
      if (common != expect) {
        ok = false;
        verdict.is_cgroup = false;
        verdict.failing_i = I;
        verdict.failing_j = J;
        verdict.reason = "intersection of " + set_text(I) + " and " + set_text(J) + " has order " +
                         std::to_string(common) + ", expected " + std::to_string(expect);
      }
    }
    done[key] = ok;
    return ok;
  };
  rec(0, n - 1);
  return verdict;
}

CGroupVerdict verify_string_cgroup_bruteforce(const GeneratorSystem& sys) {
  if (auto bad = involution_failure(sys)) return *bad;
  const int n = sys.rank();
  const unsigned full = (1u << n) - 1;
  for (unsigned a = 0; a <= full; ++a) {
    for (unsigned b = a + 1; b <= full; ++b) {
      if ((a & b) == a || (a & b) == b) continue;
      auto I = from_mask(a, n), J = from_mask(b, n), K = from_mask(a & b, n);
      std::uint64_t common = count_common(sys.subgroup(I), sys.subgroup(J));
      if (common != sys.subgroup(K).order()) {
        CGroupVerdict v;
        v.failing_i = I;
        v.failing_j = J;
        v.reason = "intersection of " + set_text(I) + " and " + set_text(J) + " is larger than " + set_text(K);
        return v;
      }
    }
  }
  CGroupVerdict v;
  v.is_cgroup = true;
  return v;
}

nlohmann::json PolytopeReport::to_json() const {
  nlohmann::json j;
  j["group_symbol"] = group_symbol;
  j["modulus"] = modulus;
  j["is_cgroup"] = is_cgroup;
  j["schlafli"] = schlafli;
  j["f_vector"] = is_cgroup ? nlohmann::json(f_vector) : nlohmann::json(nullptr);
  j["flag_count"] = is_cgroup ? nlohmann::json(flag_count) : nlohmann::json(nullptr);
  j["self_dual"] = self_dual ? nlohmann::json(*self_dual) : nlohmann::json("untested");
  j["group_label"] = group_label.to_json();
  j["notes"] = notes;
  return j;
}

PolytopeReport polytope_report(const GeneratorSystem& sys, const std::string& symbol,
                               const std::string& modulus, const GroupLabel& label, bool allow_non_cgroup) {
  PolytopeReport r;
  r.group_symbol = symbol;
  r.modulus = modulus;
  r.group_label = label;
  CGroupVerdict v = verify_string_cgroup(sys);
  r.is_cgroup = v.is_cgroup;
  const int n = sys.rank();
  for (int j = 1; j < n; ++j) r.schlafli.push_back(sys.period(sys.word({j - 1, j})));
  if (!v.is_cgroup) {
    if (!allow_non_cgroup) throw Error(ErrorKind::NotCGroup, v.reason);
    r.notes["cgroup"] = v.to_json();
    return r;
  }
  const MatrixGroup& G = sys.whole();
  r.flag_count = G.order();
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest;
    for (int j = 0; j < n; ++j)
      if (j != i) rest.push_back(j);
    r.f_vector.push_back(G.order() / sys.subgroup(rest).order());
  }
  return r;
}

std::optional<QMatrix> explicit_duality_map(const Diagram& d) {
  const int n = d.rank();
  auto p = d.periods();
  if (!std::equal(p.begin(), p.end(), p.rbegin())) return std::nullopt;
  QMatrix g(n);
  for (int i = 0; i < n; ++i) {
    const QuadInt& li = d.labels()[static_cast<std::size_t>(i)];
    const QuadInt& lj = d.labels()[static_cast<std::size_t>(n - 1 - i)];
    auto ratio = li.divide_exact(lj);
    if (!ratio) return std::nullopt;
    auto c = tau_sqrt(*ratio);
    if (!c || (!d.over_tau() && !c->is_rational())) return std::nullopt;
    g(n - 1 - i, i) = *c;  // column i is c_i b_{n-1-i}
  }
  return g;
}

bool self_dual_check(const GeneratorSystem& sys, const std::vector<Matrix>& candidates, bool search_elements,
                     std::uint64_t search_cap) {
  const int n = sys.rank();
  const Ring& ring = sys.ring();
  std::vector<std::uint64_t> type;
  for (int j = 1; j < n; ++j) type.push_back(sys.period(sys.word({j - 1, j})));
  if (!std::equal(type.begin(), type.end(), type.rbegin())) return false;

  auto dualizes = [&](const Matrix& g) {
    auto inv = inverse_of(ring, g);
    if (!inv) return false;
    for (int i = 0; i < n; ++i) {
      Matrix c = multiply(ring, multiply(ring, g, sys.gens()[static_cast<std::size_t>(i)]), *inv);
      if (!sys.same_class(c, sys.gens()[static_cast<std::size_t>(n - 1 - i)])) return false;
    }
    return true;
  };
  for (const auto& g : candidates)
    if (dualizes(g)) return true;
  if (!search_elements) return false;
  const MatrixGroup& G = sys.whole();
  if (G.order() > search_cap) return false;
  for (std::size_t i = 0; i < G.order(); ++i)
    if (dualizes(G.element(i))) return true;
  return false;
}

nlohmann::json HemiResult::to_json() const {
  nlohmann::json j = report.to_json();
  j["image_order"] = image_order;
  j["kernel_order"] = kernel_order ? nlohmann::json(to_string(*kernel_order)) : nlohmann::json(nullptr);
  j["full_order"] = full_order ? nlohmann::json(*full_order) : nlohmann::json(nullptr);
  j["facet_period"] = facet_period;
  j["vertex_figure_period"] = vertex_figure_period;
  j["radical"] = radical;
  return j;
}

HemiResult hemi_quotient_pipeline(const Diagram& d, const Ring& field_in, const std::string& modulus,
                                  std::uint64_t full_budget) {
  RingPtr field = share(field_in);
  auto dom = reflection_generators(d);
  auto red = reduce_generators(dom, *field);
  Matrix b2 = reduce_matrix(cartan_data(d).B2, *field);
  NullSpace radical = null_space(*field, b2);
  if (radical.basis.size() != 1)
    throw Error(ErrorKind::NotCorankOne, "radical has dimension " + std::to_string(radical.basis.size()));

  HemiResult out;
  out.radical = radical.basis.front();
  nlohmann::json notes;
  std::optional<Integer> full;
  try {
    MatrixGroup G = MatrixGroup::closure(field, red.mats, full_budget);
    out.full_order = G.order();
    full = Integer(G.order());
    FormAnalysis fa = analyze_form(b2, *field);
    std::vector<int> spinor;
    try {
      for (int i = 0; i < d.rank(); ++i) {
        Vec e(static_cast<std::size_t>(d.rank()), 0);
        e[static_cast<std::size_t>(i)] = field->one();
        spinor.push_back(spinor_class(e, b2, *field));
      }
    } catch (const Error&) {
      spinor.clear();
    }
    notes["full_group"] = {{"order", G.order()},
                           {"label", identify_group(*full, *field, d.rank(), fa, spinor).to_string()}};
  } catch (const BudgetExceeded& e) {
    notes["full_group"] = {{"budget_status", "BudgetExceeded"},
                           {"budget", e.budget()},
                           {"partial_count", e.partial_count()}};
  }

  RadicalQuotient q = quotient_by_radical_action(field, red.mats, radical, full);
  out.image_order = q.image.order();
  out.kernel_order = q.kernel_order;
  GeneratorSystem sys(field, q.induced, q.image.scalars());
  GroupLabel label = identify_linear_fractional(Integer(q.image.order()), field->characteristic());
  out.report = polytope_report(sys, d.symbol(), modulus, label, true);
  if (d.rank() >= 4) {
    out.facet_period = sys.period(sys.word({0, 1, 2}));
    out.vertex_figure_period = sys.period(sys.word({1, 2, 3}));
  }
  std::vector<Matrix> candidates;
  if (auto g = explicit_duality_map(d)) {
    try {
      candidates = induced_quotient_action(*field, {reduce_matrix(*g, *field)}, radical);
    } catch (const Error&) {
    }
  }
  if (out.report.is_cgroup) out.report.self_dual = self_dual_check(sys, candidates);
  notes["linear_image_order"] = q.linear_order;
  notes["scalar_group_order"] = q.image.scalars().size();
  out.report.notes.update(notes);
  return out;
}

const char* to_string(RotationKind k) {
  return k == RotationKind::Chiral ? "chiral" : "directly_regular";
}

nlohmann::json RotationVerdict::to_json() const {
  nlohmann::json j;
  j["intersection_ok"] = intersection_ok;
  j["kind"] = to_string(kind);
  j["periods"] = periods;
  if (!witness.empty()) j["witness"] = witness;
  j["checks"] = checks;
  return j;
}

std::vector<Matrix> rho_images(const GeneratorSystem& sys) {
  const Ring& ring = sys.ring();
  const auto& s = sys.gens();
  std::vector<Matrix> out;
  auto inv = inverse_of(ring, s[0]);
  if (!inv) throw Error(ErrorKind::Unsupported, "sigma_1 is not invertible");
  out.push_back(*inv);
  out.push_back(multiply(ring, multiply(ring, s[0], s[0]), s[1]));
  for (std::size_t j = 2; j < s.size(); ++j) out.push_back(s[j]);
  return out;
}

bool extends_to_automorphism(const GeneratorSystem& sys, const std::vector<Matrix>& images) {
  const MatrixGroup& G = sys.whole();
  const Ring& ring = sys.ring();
  const auto& s = sys.gens();
  for (const auto& m : images)
    if (!G.contains(m)) return false;
  auto index_of = [&](const Matrix& m) { return *G.store().find(G.encode(m).data()); };
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> todo;
  auto id = index_of(identity(ring, s.front().n));
  seen.insert((std::uint64_t(id) << 32) | id);
  todo.emplace_back(id, id);
  for (std::size_t k = 0; k < todo.size(); ++k) {
    Matrix a = G.element(todo[k].first), b = G.element(todo[k].second);
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto x = index_of(multiply(ring, a, s[i]));
      auto y = index_of(multiply(ring, b, images[i]));
      if (seen.insert((std::uint64_t(x) << 32) | y).second) {
        todo.emplace_back(x, y);
        if (todo.size() > G.order()) return false;
      }
    }
  }
  if (todo.size() != G.order()) return false;
  // bijective: the images generate G
  MatrixGroup H = MatrixGroup::closure_mod_scalars(sys.ring_ptr(), images, sys.scalars(), sys.budget());
  return H.order() == G.order();
}

RotationVerdict verify_rotation_group(const GeneratorSystem& sys, const std::vector<std::uint64_t>& periods,
                                      const std::vector<std::pair<std::string, std::vector<Matrix>>>& extra) {
  const int k = sys.rank();
  if (k != 2 && k != 3) throw Error(ErrorKind::Unsupported, "rotation groups of rank 3 or 4 only");
  if (static_cast<int>(periods.size()) != k) throw Error(ErrorKind::Unsupported, "one period per generator");
  const Ring& ring = sys.ring();
  const Matrix id = identity(ring, sys.gens().front().n);
  RotationVerdict v;
  for (int i = 0; i < k; ++i) {
    const Matrix& s = sys.gens()[static_cast<std::size_t>(i)];
    if (!sys.same_class(power(ring, s, periods[static_cast<std::size_t>(i)]), id))
      throw Error(ErrorKind::RelationFailure, "sigma_" + std::to_string(i + 1) + "^" +
                                                  std::to_string(periods[static_cast<std::size_t>(i)]) + " != 1");
    v.periods.push_back(sys.period(s));
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      Matrix w = sys.word(interval(a, b));
      if (!sys.same_class(multiply(ring, w, w), id))
        throw Error(ErrorKind::RelationFailure,
                    "(sigma_" + std::to_string(a + 1) + "..sigma_" + std::to_string(b + 1) + ")^2 != 1");
    }
  }

  auto check = [&](const std::string& name, const std::vector<int>& I, const std::vector<int>& J,
                   const std::vector<int>& K) {
    bool ok = count_common(sys.subgroup(I), sys.subgroup(J)) == sys.subgroup(K).order();
    v.checks[name] = ok;
    return ok;
  };
  v.intersection_ok = check("<s1>^<s2>=1", {0}, {1}, {});
  if (k == 3) {
    v.intersection_ok &= check("<s2>^<s3>=1", {1}, {2}, {});
    v.intersection_ok &= check("<s1,s2>^<s2,s3>=<s2>", {0, 1}, {1, 2}, {1});
  }

  std::vector<Matrix> rho = rho_images(sys);
  bool regular = extends_to_automorphism(sys, rho);
  v.kind = regular ? RotationKind::DirectlyRegular : RotationKind::Chiral;
  if (regular) {
    v.witness = "graph_subgroup";
    for (const auto& [name, imgs] : extra) {
      bool match = imgs.size() == rho.size();
      for (std::size_t i = 0; match && i < rho.size(); ++i) match = sys.same_class(imgs[i], rho[i]);
      if (match) {
        v.witness = name;
        break;
      }
    }
  }
  return v;
}

}  // namespace polyred
