#pragma once

// String C-group certification, polytope reports, self-duality, the
// singular-prime hemi-quotient and rotation-group (chirality) checks.

#include "polyred/coxeter/diagram.hpp"
#include "polyred/groupkit/group.hpp"
#include "polyred/ortho/groups.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyred {

/// Distinguished generators together with the scalar convention and budget
/// used for every closure built from them.
class GeneratorSystem {
 public:
  GeneratorSystem(RingPtr ring, std::vector<Matrix> gens, std::vector<Ring::Elem> scalars = {},
                  std::uint64_t budget = kDefaultBudget);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<Matrix>& gens() const { return gens_; }
  const std::vector<Ring::Elem>& scalars() const { return scalars_; }
  std::uint64_t budget() const { return budget_; }
  int rank() const { return static_cast<int>(gens_.size()); }

  /// Closure of the generators in `indices` (memoized).
  const MatrixGroup& subgroup(const std::vector<int>& indices) const;
  const MatrixGroup& whole() const;
  /// Hand over an already built closure of `indices` (same generators,
  /// same scalars).
  void seed(const std::vector<int>& indices, MatrixGroup group);
  /// Product of the listed generators, left to right.
  Matrix word(const std::vector<int>& indices) const;
  std::uint64_t period(const Matrix& g) const;
  bool same_class(const Matrix& a, const Matrix& b) const;

 private:
  RingPtr ring_;
  std::vector<Matrix> gens_;
  std::vector<Ring::Elem> scalars_;
  std::uint64_t budget_;
  mutable std::map<std::vector<int>, MatrixGroup> cache_;
};

struct CGroupVerdict {
  bool is_cgroup = false;
  std::vector<int> failing_i;  // first failing pair (I, J)
  std::vector<int> failing_j;
  std::string reason;
  nlohmann::json to_json() const;
};

/// Inductive criterion: G is a string C-group iff G_0 and G_{n-1} are and
/// G_0 cap G_{n-1} = G_{0,n-1}.
CGroupVerdict verify_string_cgroup(const GeneratorSystem& sys);
/// Intersection condition checked over all pairs (I, J).
CGroupVerdict verify_string_cgroup_bruteforce(const GeneratorSystem& sys);

struct PolytopeReport {
  std::string group_symbol;
  std::string modulus;
  bool is_cgroup = false;
  std::vector<std::uint64_t> schlafli;
  std::vector<std::uint64_t> f_vector;
  std::uint64_t flag_count = 0;
  std::optional<bool> self_dual;  // unset = untested
  GroupLabel group_label;
  nlohmann::json notes = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// Schlafli periods, f-vector from subgroup indices and flag count; throws
/// NotCGroup unless `allow_non_cgroup`, in which case only the verdict,
/// periods and diagnostics are filled in.
PolytopeReport polytope_report(const GeneratorSystem& sys, const std::string& symbol,
                               const std::string& modulus, const GroupLabel& label,
                               bool allow_non_cgroup = false);

/// The map b_i -> c_i b_{n-1-i} with c_i^2 = l_i / l_{n-1-i}, when it exists
/// over the diagram's domain (palindromic diagrams only).
std::optional<QMatrix> explicit_duality_map(const Diagram& d);

/// True iff some candidate matrix (or, failing that, some element of the
/// enumerated group) conjugates r_i to r_{n-1-i} for every i.
bool self_dual_check(const GeneratorSystem& sys, const std::vector<Matrix>& candidates,
                     bool search_elements = true, std::uint64_t search_cap = 2'000'000);

struct HemiResult {
  PolytopeReport report;
  std::uint64_t image_order = 0;
  std::optional<Integer> kernel_order;
  std::optional<std::uint64_t> full_order;  // unset when the full closure exceeded its budget
  std::uint64_t facet_period = 0;           // period of r0 r1 r2 in the image
  std::uint64_t vertex_figure_period = 0;   // period of r1 r2 r3 in the image
  std::vector<Ring::Elem> radical;
  nlohmann::json to_json() const;
};

/// Reduce d modulo pi (pi | disc), pass to V/rad modulo scalars and certify
/// the image. Errors: NotCorankOne.
HemiResult hemi_quotient_pipeline(const Diagram& d, const Ring& field, const std::string& modulus,
                                  std::uint64_t full_budget = kDefaultBudget);

enum class RotationKind { Chiral, DirectlyRegular };
const char* to_string(RotationKind k);

struct RotationVerdict {
  bool intersection_ok = false;
  RotationKind kind = RotationKind::Chiral;
  std::vector<std::uint64_t> periods;  // actual periods of the sigma_i
  std::string witness;                 // how rho was realized, when it exists
  nlohmann::json checks = nlohmann::json::object();
  nlohmann::json to_json() const;
};

/// Images of the generators under rho: sigma_1^-1, sigma_1^2 sigma_2,
/// sigma_j for j >= 3.
std::vector<Matrix> rho_images(const GeneratorSystem& sys);

/// True iff sigma_i -> images[i] extends to an automorphism of the generated
/// group (graph subgroup of G x G has order |G| and the images generate G).
bool extends_to_automorphism(const GeneratorSystem& sys, const std::vector<Matrix>& images);

/// Rank 3 or 4 rotation generators sigma_1.. with the given periods.
/// `extra_witnesses` are optional maps (e.g. ring conjugation) tried first.
/// Errors: RelationFailure.
RotationVerdict verify_rotation_group(
    const GeneratorSystem& sys, const std::vector<std::uint64_t>& periods,
    const std::vector<std::pair<std::string, std::vector<Matrix>>>& extra_witnesses = {});

}  // namespace polyred
