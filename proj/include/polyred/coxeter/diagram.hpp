#pragma once

// String Coxeter diagrams with node labels 2t_i^2, their Cartan data and
// reflection generators over Z or Z[tau].

#include "polyred/rings/dense_matrix.hpp"
#include "polyred/rings/matrix.hpp"
#include "polyred/rings/quadint.hpp"
#include "polyred/rings/ring.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace polyred {

using QMatrix = DenseMatrix<QuadInt>;

/// Period 0 stands for infinity.
inline constexpr int kInfinitePeriod = 0;

struct Branch {
  int period = 3;
  int multiplicity = 1;  // lambda; 2 only for a doubled infinite branch
  bool infinite() const { return period == kInfinitePeriod; }
  friend bool operator==(const Branch&, const Branch&) = default;
};

class Diagram {
 public:
  /// Validates labels against the allowed branch ratios; throws
  /// LabelViolation. Multiplicities are inferred from the labels.
  static Diagram make(std::vector<int> periods, std::vector<QuadInt> labels);
  /// Default labelling for the given periods (ratios ascending; period 5
  /// alternates tau^2 and tau^-2 so labels stay within two classes).
  static Diagram with_default_labels(std::vector<int> periods);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<QuadInt>& labels() const { return labels_; }
  const std::vector<Branch>& branches() const { return branches_; }
  std::vector<int> periods() const;
  /// Period between nodes i and j (2 when not adjacent).
  int period(int i, int j) const;
  int multiplicity(int i, int j) const;
  /// True when some label or branch needs Z[tau].
  bool over_tau() const;

  /// "[3,5,3]" (or "[3,oo,3]").
  std::string symbol() const;
  /// "[3,5,3] labels=1,1,1+t,1+t".
  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<QuadInt> labels_;
  std::vector<Branch> branches_;
};

/// "[p1,p2,...]" with "oo" for infinity and optional " labels=l0,l1,...".
/// Errors: BadSymbol, LabelViolation.
Diagram parse_symbol(std::string_view text);

/// All diagrams reachable by inverting branch ratios and toggling infinite
/// branches between ratio 4 and doubled form, canonically rescaled.
std::vector<Diagram> basic_system_variants(const Diagram& d);

struct CartanData {
  QMatrix M;   // Cartan integers, m_ii = -2
  QMatrix B2;  // twice the Gram matrix
};

CartanData cartan_data(const Diagram& d);

/// Bareiss determinant over Z[tau].
QuadInt determinant(const QMatrix& m);

/// Square-class representative of det(B2) (times 2 in odd rank), with square
/// integer factors removed.
QuadInt discriminant(const Diagram& d);
/// Equality of square classes: over Q for rational values, over Q(sqrt5)
/// otherwise.
bool same_square_class(const QuadInt& x, const QuadInt& y, bool over_tau);

/// r_i(b_j) = b_j + m_ij b_i, acting on columns.
std::vector<QMatrix> reflection_generators(const Diagram& d);

Matrix reduce_matrix(const QMatrix& m, const Ring& ring);

struct ReducedGenerators {
  std::vector<Matrix> mats;
  std::vector<bool> collapsed;  // generator became the identity
  bool any_collapsed() const;
};

/// Entrywise image in ring; NoEmbedding when tau has no image.
ReducedGenerators reduce_generators(const std::vector<QMatrix>& gens, const Ring& ring);
/// Generators built directly from M reduced into ring.
std::vector<Matrix> reflection_generators_mod(const CartanData& c, const Ring& ring);

/// Crystallographic genericity at a rational prime; NotApplicable over Z[tau].
bool is_generic(const Diagram& d, std::uint64_t p);

struct SpecialPrimeFlags {
  bool char2 = false;
  bool divides_disc = false;
};
SpecialPrimeFlags special_prime_flags(const Diagram& d, const Ring& ring);

}  // namespace polyred
