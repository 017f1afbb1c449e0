#pragma once

// Orthogonal and spherical group orders, group identification, the [3,5,3]
// epsilon formulas and the intersection predictor.

#include "polyred/coxeter/diagram.hpp"
#include "polyred/groupkit/group.hpp"
#include "polyred/ortho/form.hpp"
#include "polyred/rings/integer.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace polyred {

enum class LabelKind { O, O1, O2, OHat, OHat1, Spherical, LinearFractional, Unidentified };

const char* to_string(LabelKind k);

struct GroupLabel {
  LabelKind kind = LabelKind::Unidentified;
  int n = 0;
  std::uint64_t q = 0;
  int epsilon = 0;
  std::string name;  // spherical / linear fractional name
  Integer predicted_order = 0;
  std::vector<std::string> candidates;

  /// "O(4,4,-1)", "O1(4,11,-1)", "OHat1(4,11)", "H4", "PSL2(11)", "Unidentified".
  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// Orders of O, O1, O2 (n = 1..4), OHat and OHat1 (n = 4, corank 1).
/// Throws Unsupported for other combinations.
Integer order_formula(LabelKind kind, int n, std::uint64_t q, int epsilon = 0);

/// Spherical Coxeter types of the given rank with their orders: "S{n+1}"
/// (A_n), B_n, D_n, E6-E8, F4, H3, H4.
std::vector<std::pair<std::string, Integer>> spherical_types(int rank);

/// |PSL_2(q)| = q(q^2-1)/gcd(2, q-1).
Integer psl2_order(std::uint64_t q);

/// Identification by order. `fa` is the form analysis when available,
/// `spinor` the quadratic characters of the generating roots (empty when
/// unknown). Orthogonal candidates win over spherical ones on a nonsingular
/// form; all matches are listed in `candidates`.
GroupLabel identify_group(const Integer& order, const Ring& field, int n,
                          const std::optional<FormAnalysis>& fa, const std::vector<int>& spinor);

/// Convenience wrapper for reflection groups built from a diagram.
GroupLabel identify_group(const MatrixGroup& G, const Diagram& d);

/// Linear fractional candidates PSL_2(r) for r = p, p^2 (p = characteristic).
GroupLabel identify_linear_fractional(const Integer& order, std::uint64_t characteristic);

/// epsilon = (delta / pi) for [3,5,3], by congruence / rational Legendre symbols.
/// Errors: OddCharRequired (pi ~ 2), DiscriminantPrime (pi ~ delta), NotPrime.
int epsilon_353(const QuadInt& pi);

/// (q/11): -1 when both primes over q give the same epsilon, +1 when opposite.
int epsilon_conjugate_product(std::uint64_t q);

struct IntersectionInputs {
  bool generic = true;
  bool square_inner_label = true;  // a square among labels of nodes 1..n-2
  bool v_singular = false;
  bool v0_singular = false;
  bool vn1_singular = false;
  bool v0n1_singular = false;
  LabelKind g = LabelKind::Unidentified;
  LabelKind g0 = LabelKind::Unidentified;
  LabelKind gn1 = LabelKind::Unidentified;
  LabelKind g0n1 = LabelKind::Unidentified;
};

enum class PredictedIntersection { O, O1, OHat, OHat1, G0n1 };

struct IntersectionPrediction {
  PredictedIntersection what;
  std::string clause;  // "(a)(ii)", ...
};

/// Errors: HypothesisNotMet.
IntersectionPrediction predict_intersection(const IntersectionInputs& in);

bool is_orthogonal_kind(LabelKind k);

}  // namespace polyred
