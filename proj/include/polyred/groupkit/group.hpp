#pragma once

// Finite matrix groups enumerated by breadth-first closure, optionally
// modulo a subgroup of scalar matrices.

#include "polyred/groupkit/store.hpp"
#include "polyred/rings/integer.hpp"
#include "polyred/rings/matrix.hpp"
#include "polyred/rings/ring.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyred {

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

class MatrixGroup {
 public:
  /// Linear closure of gens; throws BudgetExceeded past `budget` elements.
  static MatrixGroup closure(RingPtr ring, std::vector<Matrix> gens,
                             std::uint64_t budget = kDefaultBudget);
  /// Closure modulo the scalar subgroup {s*I : s in scalars}; each element is
  /// stored as the least encoding in its scalar class. `scalars` must be a
  /// multiplicative group containing 1.
  static MatrixGroup closure_mod_scalars(RingPtr ring, std::vector<Matrix> gens,
                                         std::vector<Ring::Elem> scalars,
                                         std::uint64_t budget = kDefaultBudget);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  int dim() const { return n_; }
  const std::vector<Matrix>& generators() const { return gens_; }
  std::uint64_t order() const { return store_.size(); }
  std::uint64_t budget() const { return budget_; }
  bool projective() const { return scalars_.size() > 1; }
  const std::vector<Ring::Elem>& scalars() const { return scalars_; }

  /// Canonical encoding (least over the scalar class).
  std::vector<std::uint8_t> encode(const Matrix& m) const;
  Matrix decode(const std::uint8_t* bytes) const;
  Matrix element(std::size_t idx) const { return decode(store_.at(idx)); }
  bool contains(const Matrix& m) const;
  const ElementStore& store() const { return store_; }
  /// BFS depth of each element index.
  unsigned depth(std::size_t idx) const;
  /// Element indices sorted by (depth, encoding).
  std::vector<std::uint32_t> canonical_order() const;

  /// Least k >= 1 with g^k in the scalar subgroup (identity when linear).
  std::uint64_t element_order(const Matrix& g) const;
  bool same_class(const Matrix& a, const Matrix& b) const;
  bool is_identity_class(const Matrix& g) const;

  nlohmann::json summary_json() const;
  /// Concatenated canonical encodings, in insertion order.
  void write_elements(const std::string& path) const;

 private:
  MatrixGroup(RingPtr ring, int n, std::vector<Matrix> gens, std::vector<Ring::Elem> scalars,
              std::uint64_t budget);
  void encode_into(const Ring::Elem* entries, std::uint8_t* out) const;
  void canonical_into(const Ring::Elem* entries, std::uint8_t* out, std::uint8_t* tmp,
                      Ring::Elem* scaled) const;
  void run(std::uint64_t budget);

  RingPtr ring_;
  int n_;
  std::vector<Matrix> gens_;
  std::vector<Ring::Elem> scalars_;
  std::uint64_t budget_;
  ElementStore store_;
  std::vector<std::size_t> level_end_;  // store index where each depth ends
};

/// Element order in the linear group (least k with g^k = I).
std::uint64_t element_order(const Ring& ring, const Matrix& g);

/// Closure of the generators with the given indices, in G's ring and scalar
/// convention.
MatrixGroup subgroup(const MatrixGroup& G, const std::vector<int>& indices);

/// Set intersection, returned as a group generated greedily from its members
/// and checked to stay inside both operands.
MatrixGroup intersect(const MatrixGroup& A, const MatrixGroup& B);

/// Scalars s with s*I in the enumerated linear group.
std::vector<Ring::Elem> scalars_in(const MatrixGroup& linear);

/// Closure modulo all scalar matrices contained in the generated group.
MatrixGroup projectivize(RingPtr ring, std::vector<Matrix> gens,
                         std::uint64_t budget = kDefaultBudget);

enum class Action { Column, Row };

/// Orbit of v under the generated group, in BFS order.
std::vector<Vec> orbit(const Ring& ring, const Vec& v, const std::vector<Matrix>& gens,
                       Action side = Action::Column);

struct RadicalQuotient {
  MatrixGroup image;             // projective image on V/rad
  std::uint64_t linear_order;    // before identifying scalars
  std::optional<Integer> kernel_order;
  std::vector<Matrix> induced;   // induced generators on V/rad
};

/// Action of gens on V/rad, expressed on the complement coordinates of the
/// radical basis; throws NotInvariant when some generator moves the radical.
std::vector<Matrix> induced_quotient_action(const Ring& field, const std::vector<Matrix>& gens,
                                            const NullSpace& radical);

/// Induced action on V/rad followed by identification of scalars. kernel
/// order is |G| / |image| when |G| is supplied.
RadicalQuotient quotient_by_radical_action(RingPtr field, const std::vector<Matrix>& gens,
                                           const NullSpace& radical,
                                           std::optional<Integer> group_order = std::nullopt,
                                           std::uint64_t budget = kDefaultBudget);

}  // namespace polyred
