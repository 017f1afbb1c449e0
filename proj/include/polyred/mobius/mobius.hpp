#pragma once

// Rotation groups of type [4,4,3] acting by Moebius transformations over
// Z[i], reduced modulo Gaussian ideals.

#include "polyred/cgroup/cgroup.hpp"
#include "polyred/rings/dense_matrix.hpp"
#include "polyred/rings/gaussint.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace polyred {

using GMatrix = DenseMatrix<GaussInt>;

/// s1 = [[-i,0],[0,1]], s2 = [[-i,i],[0,1]], s3 = [[1,-1],[1,0]].
std::vector<GMatrix> mobius_generators_443();

/// [[1, -(b+ci)], [0, 1]], the image of (s1^-1 s2)^b (s1 s2^-1)^c.
GMatrix toroidal_relation_matrix(std::int64_t b, std::int64_t c);

Matrix reduce_gauss_matrix(const GMatrix& m, const Ring& ring);

/// Smallest nonzero b+ci in J with b > 0, c >= 0; ties go to the larger b.
std::pair<std::int64_t, std::int64_t> facet_parameters(const GaussIdeal& J);

/// Entrywise i -> -i on Z_m[i]; only defined for Full(m).
Matrix ring_conjugate(const Ring& ring, const Matrix& m);

struct MobiusReport {
  std::string type_symbol = "[4,4,3]";
  GaussIdeal ideal = GaussIdeal::full(2);
  std::string ring;
  std::uint64_t ring_order = 0;
  std::pair<std::int64_t, std::int64_t> facet{0, 0};
  std::pair<std::int64_t, std::int64_t> mirror{0, 0};
  std::uint64_t projective_order = 0;
  std::uint64_t scalar_group_order = 0;
  RotationVerdict rotation;
  std::string rotation_group_label;
  std::vector<std::string> label_candidates;

  nlohmann::json to_json() const;
};

/// Order-matched PSL2 / PGL2 labels for q in {m, m^2}.
std::pair<std::string, std::vector<std::string>> mobius_group_label(std::uint64_t order, std::uint64_t m);

/// Reduce, projectivize and classify. `gens` overrides the built-in [4,4,3]
/// generators (rank-4 rotation groups only).
MobiusReport build_mobius_polytope(const GaussIdeal& J, std::uint64_t budget = kDefaultBudget,
                                   const std::vector<GMatrix>& gens = {});

}  // namespace polyred
