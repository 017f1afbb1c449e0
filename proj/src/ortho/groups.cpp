#include "polyred/ortho/groups.hpp"

#include "polyred/error.hpp"
#include "polyred/rings/legendre.hpp"

#include <algorithm>

namespace polyred {

const char* to_string(LabelKind k) {
  switch (k) {
    case LabelKind::O: return "O";
    case LabelKind::O1: return "O1";
    case LabelKind::O2: return "O2";
    case LabelKind::OHat: return "OHat";
    case LabelKind::OHat1: return "OHat1";
    case LabelKind::Spherical: return "Spherical";
    case LabelKind::LinearFractional: return "LinearFractional";
    case LabelKind::Unidentified: return "Unidentified";
  }
  return "?";
}

bool is_orthogonal_kind(LabelKind k) {
  return k == LabelKind::O || k == LabelKind::O1 || k == LabelKind::O2;
}

std::string GroupLabel::to_string() const {
  switch (kind) {
    case LabelKind::O:
    case LabelKind::O1:
    case LabelKind::O2:
      if (n % 2 == 1)
        return std::string(polyred::to_string(kind)) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
      return std::string(polyred::to_string(kind)) + "(" + std::to_string(n) + "," + std::to_string(q) +
             "," + std::to_string(epsilon) + ")";
    case LabelKind::OHat:
    case LabelKind::OHat1:
      return std::string(polyred::to_string(kind)) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
    case LabelKind::Spherical:
    case LabelKind::LinearFractional:
      return name;
    case LabelKind::Unidentified:
      return "Unidentified";
  }
  return "?";
}

nlohmann::json GroupLabel::to_json() const {
  nlohmann::json j;
  j["label"] = to_string();
  j["kind"] = polyred::to_string(kind);
  if (is_orthogonal_kind(kind) || kind == LabelKind::OHat || kind == LabelKind::OHat1) {
    j["n"] = n;
    j["q"] = q;
    if (is_orthogonal_kind(kind)) j["epsilon"] = epsilon;
  }
  j["predicted_order"] = polyred::to_string(predicted_order);
  j["candidates"] = candidates;
  return j;
}

Integer order_formula(LabelKind kind, int n, std::uint64_t q_, int epsilon) {
  const Integer q = q_;
  auto full = [&](int dim, int eps) -> Integer {
    switch (dim) {
      case 1: return 2;
      case 2: return 2 * (q - eps);
      case 3: return 2 * q * (q * q - 1);
      case 4: return 2 * q * q * (q * q - eps) * (q * q - 1);
      default: throw Error(ErrorKind::Unsupported, "no order formula in dimension " + std::to_string(dim));
    }
  };
  if (is_orthogonal_kind(kind) && (n == 2 || n == 4) && epsilon != 1 && epsilon != -1)
    throw Error(ErrorKind::Unsupported, "even dimension needs epsilon = +-1");
  switch (kind) {
    case LabelKind::O: return full(n, epsilon);
    case LabelKind::O1:
    case LabelKind::O2:
      if (n < 2) break;
      return full(n, epsilon) / 2;
    case LabelKind::OHat:
      if (n != 4) break;
      return q * q * q * full(3, 0);
    case LabelKind::OHat1:
      if (n != 4) break;
      return q * q * q * full(3, 0) / 2;
    default: break;
  }
  throw Error(ErrorKind::Unsupported, std::string("no order formula for ") + to_string(kind) + " in dimension " +
                                          std::to_string(n));
}

namespace {

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::vector<std::pair<std::string, Integer>> spherical_types(int rank) {
  std::vector<std::pair<std::string, Integer>> out;
  if (rank < 1) return out;
  out.emplace_back("S" + std::to_string(rank + 1), factorial(rank + 1));
  if (rank >= 2) out.emplace_back("B" + std::to_string(rank), (Integer(1) << rank) * factorial(rank));
  if (rank >= 4) out.emplace_back("D" + std::to_string(rank), (Integer(1) << (rank - 1)) * factorial(rank));
  if (rank == 3) out.emplace_back("H3", 120);
  if (rank == 4) {
    out.emplace_back("F4", 1152);
    out.emplace_back("H4", 14400);
  }
  if (rank == 6) out.emplace_back("E6", 51840);
  if (rank == 7) out.emplace_back("E7", 2903040);
  if (rank == 8) out.emplace_back("E8", 696729600);
  return out;
}

Integer psl2_order(std::uint64_t q) {
  Integer Q = q;
  return Q * (Q * Q - 1) / (q % 2 == 1 ? 2 : 1);
}

GroupLabel identify_group(const Integer& order, const Ring& field, int n,
                          const std::optional<FormAnalysis>& fa, const std::vector<int>& spinor) {
  std::vector<GroupLabel> matches;
  const std::uint64_t q = field.order();
  const bool char2 = field.characteristic() % 2 == 0;
  auto try_label = [&](LabelKind kind, int dim, int eps) {
    Integer ord;
    try {
      ord = order_formula(kind, dim, q, eps);
    } catch (const Error&) {
      return;
    }
    if (ord != order) return;
    GroupLabel l;
    l.kind = kind;
    l.n = dim;
    l.q = q;
    l.epsilon = eps;
    l.predicted_order = ord;
    matches.push_back(l);
  };

  if (field.is_field()) {
    bool all_square = std::all_of(spinor.begin(), spinor.end(), [](int c) { return c > 0; });
    bool all_nonsquare = !spinor.empty() && std::all_of(spinor.begin(), spinor.end(), [](int c) { return c < 0; });
    LabelKind half = all_nonsquare ? LabelKind::O2 : LabelKind::O1;
    bool half_ok = all_square || all_nonsquare;
    if (char2 || (fa && !fa->singular())) {
      std::vector<int> eps;
      if (n % 2 == 1) eps = {0};
      else if (char2) eps = {-1, 1};
      else eps = {*fa->epsilon};
      for (int e : eps) {
        try_label(LabelKind::O, n, e);
        if (half_ok) try_label(half, n, e);
      }
    }
    if (fa && fa->corank() == 1 && n == 4) {
      if (half_ok) try_label(LabelKind::OHat1, n, 0);
      try_label(LabelKind::OHat, n, 0);
    }
  }
  for (const auto& [name, ord] : spherical_types(n)) {
    if (ord != order) continue;
    GroupLabel l;
    l.kind = LabelKind::Spherical;
    l.n = n;
    l.name = name;
    l.predicted_order = ord;
    matches.push_back(l);
  }
  if (matches.empty()) {
    GroupLabel l;
    l.n = n;
    l.q = q;
    l.predicted_order = order;
    return l;
  }
  GroupLabel best = matches.front();
  for (const auto& m : matches) best.candidates.push_back(m.to_string());
  return best;
}

GroupLabel identify_group(const MatrixGroup& G, const Diagram& d) {
  const Ring& field = G.ring();
  std::optional<FormAnalysis> fa;
  std::vector<int> spinor;
  if (field.is_field() && field.characteristic() % 2 == 1 && G.dim() == d.rank()) {
    Matrix b2 = reduce_matrix(cartan_data(d).B2, field);
    fa = analyze_form(b2, field);
    try {
      for (int i = 0; i < d.rank(); ++i) {
        Vec e(static_cast<std::size_t>(d.rank()), 0);
        e[static_cast<std::size_t>(i)] = field.one();
        spinor.push_back(spinor_class(e, b2, field));
      }
    } catch (const Error&) {
      spinor.clear();
    }
  }
  return identify_group(Integer(G.order()), field, G.dim(), fa, spinor);
}

GroupLabel identify_linear_fractional(const Integer& order, std::uint64_t p) {
  GroupLabel best;
  best.predicted_order = order;
  for (std::uint64_t r : {p, p * p}) {
    if (psl2_order(r) != order) continue;
    std::string name = "PSL2(" + std::to_string(r) + ")";
    if (best.kind == LabelKind::Unidentified) {
      best.kind = LabelKind::LinearFractional;
      best.name = name;
      best.q = r;
    }
    best.candidates.push_back(name);
  }
  return best;
}

int epsilon_353(const QuadInt& pi) {
  const QuadInt delta(-2, -5);
  TauPrimeClass cls = tau_classify_prime(pi);
  if (cls.residue_char == 2) throw Error(ErrorKind::OddCharRequired, "pi is an associate of 2");
  if (tau_associates(pi, delta))
    throw Error(ErrorKind::DiscriminantPrime, pi.to_string() + " divides the discriminant");
  switch (cls.kind) {
    case TauPrimeKind::Ramified: {
      // delta = 3 mod sqrt5
      Integer d = mod_floor(delta.a() + delta.b() * 3, Integer(5));
      return legendre(d, 5);
    }
    case TauPrimeKind::Inert:
      return legendre(Integer(cls.residue_char), 11);
    case TauPrimeKind::Split: {
      Integer v = pi.b() * (5 * pi.a() - 2 * pi.b());
      return legendre(v, cls.residue_char);
    }
  }
  return 0;
}

int epsilon_conjugate_product(std::uint64_t q) {
  if (q == 11 || !is_prime_u64(q) || (q % 5 != 1 && q % 5 != 4))
    throw Error(ErrorKind::NotApplicable, "q must be a prime = +-1 mod 5 other than 11");
  return legendre(Integer(q), 11);
}

IntersectionPrediction predict_intersection(const IntersectionInputs& in) {
  if (!in.generic || !in.square_inner_label)
    throw Error(ErrorKind::HypothesisNotMet, "needs a generic prime and a square inner label");
  auto orth = [](LabelKind k) { return is_orthogonal_kind(k); };
  const bool both_o = in.g0 == LabelKind::O && in.gn1 == LabelKind::O;
  const bool some_o1 = in.g0 == LabelKind::O1 || in.gn1 == LabelKind::O1;

  if (!in.v0_singular && !in.vn1_singular && !in.v0n1_singular && orth(in.g0) && orth(in.gn1)) {
    if (both_o) return {PredictedIntersection::O, "(a)(ii)"};
    if (some_o1) return {PredictedIntersection::O1, "(a)(iii)"};
  }
  if (!in.v_singular && !in.v0_singular && !in.vn1_singular && in.v0n1_singular && orth(in.g0) &&
      orth(in.gn1)) {
    if (both_o) return {PredictedIntersection::OHat, "(b)(ii)"};
    if (some_o1) return {PredictedIntersection::OHat1, "(b)(iii)"};
  }
  if (!in.v_singular && !in.v0n1_singular && (in.v0_singular || in.vn1_singular) && orth(in.g0n1)) {
    if (in.g0n1 != LabelKind::O1 || in.g == LabelKind::O1) return {PredictedIntersection::G0n1, "(c)"};
  }
  throw Error(ErrorKind::HypothesisNotMet, "no clause of the subspace criterion applies");
}

}  // namespace polyred
