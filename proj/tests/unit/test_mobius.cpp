#include "doctest.h"

#include "polyred/error.hpp"
#include "polyred/mobius/mobius.hpp"

#include <algorithm>
#include <optional>
#include <random>

using namespace polyred;

namespace {

GaussInt g(const GaussInt& z) { return z; }
GaussInt g(int v) { return GaussInt(v); }

template <class A, class B, class C, class D>
GMatrix gm(const A& a, const B& b, const C& c, const D& d) {
  return GMatrix(2, {g(a), g(b), g(c), g(d)});
}

}  // namespace

TEST_CASE("generators over Z[i]") {
  const GaussInt i = GaussInt::i();
  auto s = mobius_generators_443();
  REQUIRE(s.size() == 3);
  CHECK(s[0] == gm(-i, 0, 0, 1));
  CHECK(s[1] == gm(-i, i, 0, 1));
  CHECK(s[2] == gm(1, -1, 1, 0));
  CHECK(s[2].pow(3) == gm(-1, 0, 0, -1));
  CHECK(s[0].pow(4) == GMatrix::identity(2));
  CHECK(s[1].pow(4) == GMatrix::identity(2));
  // (s1 s2)^2, (s2 s3)^2 and (s1 s2 s3)^2 are scalar
  for (const GMatrix& w : {s[0] * s[1], s[1] * s[2], s[0] * s[1] * s[2]}) {
    GMatrix sq = w * w;
    CHECK(sq(0, 1) == GaussInt(0));
    CHECK(sq(1, 0) == GaussInt(0));
    CHECK(sq(0, 0) == sq(1, 1));
  }
}

TEST_CASE("toroidal relation matrix") {
  const GaussInt i = GaussInt::i();
  CHECK(toroidal_relation_matrix(1, 0) == gm(1, -1, 0, 1));
  CHECK(toroidal_relation_matrix(0, 1) == gm(1, -i, 0, 1));
  auto s = mobius_generators_443();
  GMatrix s1inv = gm(i, 0, 0, 1), s2inv = gm(i, 1, 0, 1);
  REQUIRE(s[0] * s1inv == GMatrix::identity(2));
  REQUIRE(s[1] * s2inv == GMatrix::identity(2));
  for (unsigned b = 0; b <= 4; ++b)
    for (unsigned c = 0; c <= 4; ++c)
      CHECK((s1inv * s[1]).pow(b) * (s[0] * s2inv).pow(c) == toroidal_relation_matrix(b, c));
}

TEST_CASE("facet parameters") {
  CHECK(facet_parameters(GaussIdeal::full(3)) == std::make_pair<std::int64_t, std::int64_t>(3, 0));
  CHECK(facet_parameters(GaussIdeal::principal(1, 8)) == std::make_pair<std::int64_t, std::int64_t>(1, 8));
  CHECK(facet_parameters(GaussIdeal::principal(4, 7)) == std::make_pair<std::int64_t, std::int64_t>(4, 7));
  CHECK(facet_parameters(GaussIdeal::principal(1, 4)) == std::make_pair<std::int64_t, std::int64_t>(1, 4));
  CHECK(facet_parameters(GaussIdeal::principal(1, 2)) == std::make_pair<std::int64_t, std::int64_t>(1, 2));
}

TEST_CASE("Moebius polytopes") {
  auto full3 = build_mobius_polytope(GaussIdeal::full(3));
  CHECK(full3.projective_order == 360);
  CHECK(full3.rotation.kind == RotationKind::DirectlyRegular);
  CHECK(full3.rotation.witness == "ring_conjugation");
  CHECK(full3.rotation.intersection_ok);
  CHECK(full3.facet == std::make_pair<std::int64_t, std::int64_t>(3, 0));
  CHECK(full3.rotation_group_label == "PSL2(9)");

  auto p14 = build_mobius_polytope(GaussIdeal::principal(1, 4));
  CHECK(p14.projective_order == 2448);
  CHECK(p14.rotation.kind == RotationKind::Chiral);
  CHECK(p14.rotation_group_label == "PSL2(17)");
  CHECK(p14.mirror == std::make_pair<std::int64_t, std::int64_t>(4, 1));

  auto p12 = build_mobius_polytope(GaussIdeal::principal(1, 2));
  CHECK(p12.facet == std::make_pair<std::int64_t, std::int64_t>(1, 2));
  CHECK(p12.rotation.periods == std::vector<std::uint64_t>{4, 4, 3});
  // {4,4}_(1,2) is itself a chiral map, so no reflection can exist
  CHECK(p12.rotation.kind == RotationKind::Chiral);
  CHECK(p12.projective_order == 120);

  auto j = p14.to_json();
  CHECK(j["kind"] == "chiral");
  CHECK(j["facet"] == "(1,4)");

  std::vector<GMatrix> wrong = mobius_generators_443();
  wrong[2] = gm(1, 1, 0, 1);
  bool threw = false;
  try {
    build_mobius_polytope(GaussIdeal::full(3), kDefaultBudget, wrong);
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::RelationFailure;
  }
  CHECK(threw);
}

TEST_CASE("property: toroidal relation collapses exactly on the ideal") {
  std::mt19937 rng(443);
  for (int trial = 0; trial < 40; ++trial) {
    GaussIdeal J = rng() % 2 ? GaussIdeal::full(2 + rng() % 9) : GaussIdeal::principal(1 + rng() % 3, 1 + rng() % 6);
    Ring ring = [&] {
      try {
        return Ring::gauss_residue(J);
      } catch (const Error&) {
        J = GaussIdeal::principal(1, 2);
        return Ring::gauss_residue(J);
      }
    }();
    const Matrix id = identity(ring, 2);
    for (std::int64_t b = -6; b <= 6; ++b) {
      for (std::int64_t c = -6; c <= 6; ++c) {
        bool collapses = reduce_gauss_matrix(toroidal_relation_matrix(b, c), ring) == id;
        CHECK(collapses == J.contains(GaussInt(b, c)));
      }
    }
  }
}

TEST_CASE("property: facet parameters are minimal") {
  for (std::int64_t b = 1; b <= 6; ++b) {
    for (std::int64_t c = 0; c <= 6; ++c) {
      GaussIdeal J = c == 0 ? GaussIdeal::full(b + 1) : GaussIdeal::principal(b, c);
      std::optional<Ring> maybe;
      try {
        maybe = Ring::gauss_residue(J);
      } catch (const Error&) {
        continue;
      }
      const Ring& ring = *maybe;
      auto [fb, fc] = facet_parameters(J);
      const Matrix id = identity(ring, 2);
      CHECK(reduce_gauss_matrix(toroidal_relation_matrix(fb, fc), ring) == id);
      const std::int64_t n = fb * fb + fc * fc, r = fb + fc;
      for (std::int64_t x = -r; x <= r; ++x)
        for (std::int64_t y = -r; y <= r; ++y)
          if ((x || y) && x * x + y * y < n) CHECK_FALSE(J.contains(GaussInt(x, y)));
    }
  }
}

TEST_CASE("property: Full(m) is directly regular and orders ignore generator order") {
  for (std::int64_t m : {3, 4, 5, 7}) {
    auto r = build_mobius_polytope(GaussIdeal::full(m));
    CHECK(r.rotation.kind == RotationKind::DirectlyRegular);
    CHECK(r.rotation.witness == "ring_conjugation");
    CHECK(r.rotation.periods == std::vector<std::uint64_t>{4, 4, 3});

    RingPtr ring = share(Ring::gauss_residue(GaussIdeal::full(m)));
    std::vector<Matrix> red;
    for (const auto& g : mobius_generators_443()) red.push_back(reduce_gauss_matrix(g, *ring));
    std::vector<Matrix> perm = red;
    std::reverse(perm.begin(), perm.end());
    CHECK(projectivize(ring, perm).order() == r.projective_order);
  }
}
