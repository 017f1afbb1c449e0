#include "doctest.h"

#include "polyred/coxeter/diagram.hpp"
#include "polyred/error.hpp"
#include "polyred/groupkit/group.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace polyred;

namespace {

const QuadInt kDelta(-2, -5);

std::vector<Matrix> reduced(const char* symbol, const Ring& ring) {
  return reduce_generators(reflection_generators(parse_symbol(symbol)), ring).mats;
}

// naive oracle: closure by repeated products over a std::set
std::set<std::vector<Ring::Elem>> naive_closure(const Ring& ring, const std::vector<Matrix>& gens) {
  std::set<std::vector<Ring::Elem>> seen;
  std::vector<Matrix> todo{identity(ring, gens.front().n)};
  seen.insert(todo.front().e);
  while (!todo.empty()) {
    Matrix m = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Matrix p = multiply(ring, g, m);
      if (seen.insert(p.e).second) todo.push_back(p);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("element store") {
  ElementStore s(3);
  std::uint8_t a[3] = {1, 2, 3}, b[3] = {1, 2, 4};
  CHECK(s.insert(a).second);
  CHECK_FALSE(s.insert(a).second);
  CHECK(s.insert(b).first == 1);
  CHECK(*s.find(b) == 1);
  for (int i = 0; i < 5000; ++i) {
    std::uint8_t k[3] = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(i >> 8), 9};
    s.insert(k);
  }
  CHECK(s.size() == 5002);
  CHECK(s.contains(a));
}

TEST_CASE("closure orders") {
  RingPtr gf4 = share(Ring::quad_field(2));
  CHECK(MatrixGroup::closure(gf4, reduced("[3,5,3]", *gf4)).order() == 8160);
  RingPtr f5 = share(Ring::tau_residue(QuadInt::sqrt5()));
  MatrixGroup g5 = MatrixGroup::closure(f5, reduced("[3,5,3]", *f5));
  CHECK(g5.order() == 15600);
  RingPtr f7 = share(Ring::prime_field(7));
  CHECK(MatrixGroup::closure(f7, reduced("[3,3]", *f7)).order() == 24);
  for (const Ring& r : {Ring::quad_field(2), Ring::tau_residue(QuadInt::sqrt5()), Ring::tau_residue(kDelta),
                        Ring::quad_field(3), Ring::tau_residue(QuadInt(-7, 5))}) {
    RingPtr p = share(r);
    auto gens = reduced("[3,5,3]", *p);
    gens.pop_back();
    CHECK(MatrixGroup::closure(p, gens).order() == 120);
  }
}

TEST_CASE("budget") {
  RingPtr f5 = share(Ring::tau_residue(QuadInt::sqrt5()));
  try {
    MatrixGroup::closure(f5, reduced("[3,5,3]", *f5), 1000);
    FAIL("no budget error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == 1000);
    CHECK(e.partial_count() == 1001);
  }
}

TEST_CASE("element orders") {
  RingPtr f5 = share(Ring::tau_residue(QuadInt::sqrt5()));
  auto g = reduced("[3,5,3]", *f5);
  MatrixGroup G = MatrixGroup::closure(f5, g);
  Matrix r012 = multiply(*f5, multiply(*f5, g[0], g[1]), g[2]);
  CHECK(G.element_order(r012) == 10);
  CHECK(element_order(*f5, identity(*f5, 4)) == 1);
  RingPtr gf4 = share(Ring::quad_field(2));
  auto h = reduced("[3,5,3]", *gf4);
  CHECK(element_order(*gf4, multiply(*gf4, multiply(*gf4, h[0], h[1]), h[2])) == 10);
}

TEST_CASE("subgroups and intersections") {
  RingPtr f5 = share(Ring::tau_residue(QuadInt::sqrt5()));
  MatrixGroup G = MatrixGroup::closure(f5, reduced("[3,5,3]", *f5));
  CHECK(subgroup(G, {}).order() == 1);
  CHECK(subgroup(G, {1, 2, 3}).order() == 120);
  CHECK(subgroup(G, {0, 1}).order() == 6);
  MatrixGroup A = subgroup(G, {0, 1, 2}), B = subgroup(G, {1, 2, 3});
  CHECK(intersect(A, B).order() == 10);
  CHECK(intersect(A, A).order() == A.order());

  RingPtr f5p = share(Ring::prime_field(5));
  MatrixGroup H = MatrixGroup::closure(f5p, reduced("[6,3,6]", *f5p));
  MatrixGroup H0 = subgroup(H, {1, 2, 3}), H3 = subgroup(H, {0, 1, 2});
  CHECK(intersect(H0, H3).order() != subgroup(H, {1, 2}).order());
}

TEST_CASE("orbits") {
  RingPtr gf4 = share(Ring::quad_field(2));
  auto g = reduced("[3,5,3]", *gf4);
  std::vector<Matrix> g012(g.begin(), g.begin() + 3);
  Vec mu0{gf4->one(), 0, 0, 0};
  CHECK(orbit(*gf4, mu0, g012, Action::Row).size() == 12);
  CHECK(orbit(*gf4, Vec(4, 0), g).size() == 1);
  auto full = orbit(*gf4, mu0, g, Action::Row);
  CHECK(8160 % full.size() == 0);
  for (const Ring& r : {Ring::tau_residue(QuadInt::sqrt5()), Ring::tau_residue(kDelta), Ring::quad_field(3)}) {
    auto gens = reduced("[3,5,3]", r);
    gens.pop_back();
    CHECK(orbit(r, Vec{r.one(), 0, 0, 0}, gens, Action::Row).size() == 12);
  }
}

TEST_CASE("projectivize") {
  RingPtr f7 = share(Ring::prime_field(7));
  Matrix minus = scale(*f7, f7->from_int(-1), identity(*f7, 2));
  CHECK(projectivize(f7, {minus}).order() == 1);
  Matrix a(2), b(2);
  a.e = {1, 1, 0, 1};
  b.e = {1, 0, 1, 1};
  MatrixGroup sl = MatrixGroup::closure(f7, {a, b});
  CHECK(sl.order() == 336);
  CHECK(scalars_in(sl).size() == 2);
  CHECK(projectivize(f7, {a, b}).order() == 168);
}

TEST_CASE("radical quotient") {
  RingPtr f11 = share(Ring::tau_residue(kDelta));
  Diagram d = parse_symbol("[3,5,3]");
  auto gens = reduced("[3,5,3]", *f11);
  Matrix b2 = reduce_matrix(cartan_data(d).B2, *f11);
  NullSpace rad = null_space(*f11, b2);
  REQUIRE(rad.basis.size() == 1);
  CHECK(rad.basis[0] == Vec{7, 3, 2, 1});
  auto q = quotient_by_radical_action(f11, gens, rad, Integer(1756920));
  CHECK(q.image.order() == 660);
  CHECK(*q.kernel_order == 2662);
  Matrix z = multiply(*f11, multiply(*f11, q.induced[0], q.induced[1]), q.induced[2]);
  CHECK(q.image.element_order(z) == 5);

  RingPtr f19 = share(Ring::tau_residue(QuadInt(-3, -7)));
  auto hgens = reduced("[5,3,5]", *f19);
  NullSpace hrad = null_space(*f19, reduce_matrix(cartan_data(parse_symbol("[5,3,5]")).B2, *f19));
  REQUIRE(hrad.basis.size() == 1);
  CHECK(quotient_by_radical_action(f19, hgens, hrad).image.order() == 3420);

  RingPtr f7 = share(Ring::prime_field(7));
  auto sgens = reduced("[3,3]", *f7);
  NullSpace none = null_space(*f7, reduce_matrix(cartan_data(parse_symbol("[3,3]")).B2, *f7));
  CHECK(none.basis.empty());
  CHECK(quotient_by_radical_action(f7, sgens, none).image.order() == 24);

  NullSpace bogus{{Vec{1, 0, 0}}, {0}, {1, 2}};
  CHECK_THROWS_AS(induced_quotient_action(*f7, sgens, bogus), Error);
}

TEST_CASE("full closure at delta matches the quotient") {
  RingPtr f11 = share(Ring::tau_residue(kDelta));
  MatrixGroup G = MatrixGroup::closure(f11, reduced("[3,5,3]", *f11));
  CHECK(G.order() == 1756920);
}

TEST_CASE("property: closure agrees with a naive oracle and Lagrange holds") {
  std::mt19937 rng(17);
  const char* symbols[] = {"[3,3]", "[4,3]", "[3,oo]", "[6,3]", "[4]", "[3,5]", "[5]"};
  std::vector<Ring> rings{Ring::prime_field(3), Ring::prime_field(5), Ring::integers_mod(4),
                          Ring::prime_field(7)};
  std::vector<Ring> tau_rings{Ring::quad_field(2), Ring::tau_residue(QuadInt::sqrt5()),
                              Ring::tau_residue(kDelta)};
  for (int k = 0; k < 24; ++k) {
    const char* sym = symbols[k % 7];
    Diagram d = parse_symbol(sym);
    RingPtr ring = share(d.over_tau() ? tau_rings[static_cast<std::size_t>(k) % 3]
                                      : rings[static_cast<std::size_t>(k) % 4]);
    auto gens = reduce_generators(reflection_generators(d), *ring).mats;
    MatrixGroup G = MatrixGroup::closure(ring, gens);
    auto oracle = naive_closure(*ring, gens);
    CHECK(G.order() == oracle.size());
    for (std::size_t i = 0; i < G.order(); ++i) CHECK(oracle.count(G.element(i).e) == 1);

    // Lagrange for subgroups and orbits
    for (std::size_t i = 0; i < gens.size(); ++i) {
      MatrixGroup H = subgroup(G, {static_cast<int>(i)});
      CHECK(G.order() % H.order() == 0);
    }
    Vec v(static_cast<std::size_t>(gens.front().n), 0);
    std::uniform_int_distribution<Ring::Elem> e(0, static_cast<Ring::Elem>(ring->order() - 1));
    for (auto& x : v) x = e(rng);
    CHECK(G.order() % orbit(*ring, v, gens).size() == 0);

    // form preservation on every element
    Matrix b2 = reduce_matrix(cartan_data(d).B2, *ring);
    for (std::size_t i = 0; i < G.order(); ++i) CHECK(congruent(*ring, G.element(i), b2) == b2);

    // permuted generators give the same set and the same canonical order
    auto perm = gens;
    std::shuffle(perm.begin(), perm.end(), rng);
    MatrixGroup P = MatrixGroup::closure(ring, perm);
    REQUIRE(P.order() == G.order());
    auto go = G.canonical_order(), po = P.canonical_order();
    for (std::size_t i = 0; i < G.order(); ++i) {
      CHECK(P.contains(G.element(i)));
      CHECK(G.element(go[i]) == P.element(po[i]));
    }
  }
}

TEST_CASE("property: intersections are commutative subsets") {
  RingPtr f5 = share(Ring::tau_residue(QuadInt::sqrt5()));
  MatrixGroup G = MatrixGroup::closure(f5, reduced("[3,5,3]", *f5));
  std::vector<std::vector<int>> sets{{0, 1}, {1, 2}, {0, 2}, {1, 2, 3}, {0, 1, 2}, {0, 3}, {2, 3}};
  for (const auto& I : sets) {
    for (const auto& J : sets) {
      MatrixGroup A = subgroup(G, I), B = subgroup(G, J);
      MatrixGroup AB = intersect(A, B), BA = intersect(B, A);
      CHECK(AB.order() == BA.order());
      for (std::size_t i = 0; i < AB.order(); ++i) {
        CHECK(A.contains(AB.element(i)));
        CHECK(B.contains(AB.element(i)));
        CHECK(BA.contains(AB.element(i)));
      }
      CHECK(A.order() % AB.order() == 0);
    }
  }
}
