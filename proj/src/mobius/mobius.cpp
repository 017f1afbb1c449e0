#include "polyred/mobius/mobius.hpp"

#include "polyred/error.hpp"
#include "polyred/ortho/groups.hpp"

namespace polyred {

std::vector<GMatrix> mobius_generators_443() {
  const GaussInt i = GaussInt::i(), one(1), zero(0);
  return {GMatrix(2, {-i, zero, zero, one}), GMatrix(2, {-i, i, zero, one}), GMatrix(2, {one, -one, one, zero})};
}

GMatrix toroidal_relation_matrix(std::int64_t b, std::int64_t c) {
  return GMatrix(2, {GaussInt(1), -GaussInt(b, c), GaussInt(0), GaussInt(1)});
}

Matrix reduce_gauss_matrix(const GMatrix& m, const Ring& ring) {
  Matrix out(m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) out(r, c) = ring.reduce(m(r, c));
  return out;
}

std::pair<std::int64_t, std::int64_t> facet_parameters(const GaussIdeal& J) {
  const std::int64_t bound = to_ll(isqrt(J.generator().norm())) + 1;
  std::pair<std::int64_t, std::int64_t> best{0, 0};
  std::int64_t best_norm = -1;
  for (std::int64_t b = 1; b <= bound; ++b) {
    for (std::int64_t c = 0; c <= bound; ++c) {
      if (!J.contains(GaussInt(b, c))) continue;
      std::int64_t n = b * b + c * c;
      if (best_norm < 0 || n < best_norm || (n == best_norm && b > best.first)) {
        best = {b, c};
        best_norm = n;
      }
    }
  }
  return best;
}

Matrix ring_conjugate(const Ring& ring, const Matrix& m) {
  if (ring.kind() != Ring::Kind::GaussResidue || ring.degree() != 2)
    throw Error(ErrorKind::NotApplicable, "conjugation needs Z_m[i]");
  Matrix out(m.n);
  for (std::size_t k = 0; k < m.e.size(); ++k)
    out.e[k] = ring.make(ring.coord0(m.e[k]), -static_cast<long long>(ring.coord1(m.e[k])));
  return out;
}

std::pair<std::string, std::vector<std::string>> mobius_group_label(std::uint64_t order, std::uint64_t m) {
  std::vector<std::string> hits;
  for (std::uint64_t q : {m * m, m}) {
    if (!is_prime(Integer(q)) && !(q == m * m && is_prime(Integer(m)))) continue;
    Integer psl = psl2_order(q);
    if (psl == order) hits.push_back("PSL2(" + std::to_string(q) + ")");
    if (q % 2 == 1 && psl * 2 == order) hits.push_back("PGL2(" + std::to_string(q) + ")");
  }
  if (hits.empty()) return {"Unidentified", hits};
  return {hits.front(), hits};
}

nlohmann::json MobiusReport::to_json() const {
  auto pair_text = [](const std::pair<std::int64_t, std::int64_t>& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  };
  nlohmann::json j;
  j["type_symbol"] = type_symbol;
  j["ideal"] = ideal.to_string();
  j["ring"] = ring;
  j["ring_order"] = ring_order;
  j["facet"] = pair_text(facet);
  j["mirror_facet"] = pair_text(mirror);
  j["projective_order"] = projective_order;
  j["scalar_group_order"] = scalar_group_order;
  j["kind"] = to_string(rotation.kind);
  j["rotation"] = rotation.to_json();
  j["rotation_group_label"] = rotation_group_label;
  j["label_candidates"] = label_candidates;
  return j;
}

MobiusReport build_mobius_polytope(const GaussIdeal& J, std::uint64_t budget, const std::vector<GMatrix>& gens) {
  RingPtr ring = share(Ring::gauss_residue(J));
  if (ring->order() < 3) throw Error(ErrorKind::BadIdeal, "residue ring too small");
  const auto& source = gens.empty() ? mobius_generators_443() : gens;
  std::vector<Matrix> red;
  for (const auto& g : source) red.push_back(reduce_gauss_matrix(g, *ring));

  MatrixGroup G = projectivize(ring, red, budget);
  GeneratorSystem sys(ring, red, G.scalars(), budget);

  MobiusReport r;
  r.ideal = J;
  r.ring = ring->description();
  r.ring_order = ring->order();
  r.facet = facet_parameters(J);
  r.mirror = {r.facet.second, r.facet.first};
  r.projective_order = G.order();
  r.scalar_group_order = G.scalars().size();

  std::vector<std::pair<std::string, std::vector<Matrix>>> witnesses;
  if (J.shape == GaussIdeal::Shape::Full) {
    std::vector<Matrix> conj;
    for (const auto& m : red) conj.push_back(ring_conjugate(*ring, m));
    witnesses.emplace_back("ring_conjugation", conj);
  }
  r.rotation = verify_rotation_group(sys, {4, 4, 3}, witnesses);
  auto [label, candidates] = mobius_group_label(G.order(), J.rational_modulus());
  r.rotation_group_label = label;
  r.label_candidates = candidates;
  return r;
}

}  // namespace polyred
