#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gk/errors.hpp"
#include "gk/surgery.hpp"
#include "oracles.hpp"

using namespace gk;

namespace {

Diagram theta() {
  return build_diagram(2, {{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 4}, {2, 5}});
}

Diagram theta_twisted() {
  // same pairing, one rotation transposed
  return build_diagram(2, {{1, 0, 2}, {3, 4, 5}}, {{0, 3}, {1, 4}, {2, 5}});
}

Diagram dumbbell() {
  return build_diagram(2, {{0, 1, 2}, {3, 4, 5}}, {{0, 1}, {2, 5}, {3, 4}});
}

Diagram k4() {
  return build_diagram(4, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}},
                       {{0, 3}, {1, 6}, {2, 9}, {4, 7}, {5, 10}, {8, 11}});
}

Diagram doubled_cycle() {
  return build_diagram(4, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}},
                       {{0, 3}, {1, 4}, {2, 9}, {5, 6}, {7, 10}, {8, 11}});
}

}  // namespace

TEST_CASE("vertex form is antisymmetric with the weight on the oriented triple") {
  VertexForm f{5};
  CHECK(f.evaluate(0, 1, 2) == 5);
  CHECK(f.evaluate(1, 0, 2) == -5);
  CHECK(f.evaluate(2, 0, 1) == 5);
  CHECK(f.evaluate(0, 0, 1) == 0);
  CHECK(f.evaluate(2, 2, 2) == 0);
}

TEST_CASE("theta contraction values") {
  SurgeryGraph s22 = make_surgery_graph(theta(), {2, 2});
  CHECK(contract(s22, theta()) == Rational(24));  // 3! * 2^2 per component
  CHECK(contract_full(s22, theta()) == Rational(48));

  SurgeryGraph s11 = make_surgery_graph(theta(), {1, 1});
  CHECK(contract(s11, theta()) == Rational(6));  // |Aut_e Theta| alone
  CHECK(contract_full(s11, theta()) == Rational(12));
}

TEST_CASE("contraction errors") {
  SurgeryGraph s = make_surgery_graph(theta(), {2, 2});
  CHECK_THROWS_AS(contract(s, k4()), DegreeMismatch);
  CHECK_THROWS_AS(contract(s, dumbbell()), TadpoleTest);
  CHECK_THROWS_AS(make_surgery_graph(theta(), {2}), Error);
  CHECK_THROWS_AS(make_surgery_graph(theta(), {2, 0}), Error);
}

TEST_CASE("non-isomorphic pairs contract to zero") {
  SurgeryGraph s = make_surgery_graph(doubled_cycle(), {2, 2, 2, 2});
  CHECK(contract(s, k4()) == Rational(0));
  CHECK(contract_full(s, k4()) == Rational(0));

  SurgeryGraph sk = make_surgery_graph(k4(), {2, 2, 2, 2});
  CHECK(contract_full(sk, doubled_cycle()) == Rational(0));
}

TEST_CASE("AS equivariance of the pairing") {
  SurgeryGraph s = make_surgery_graph(theta(), {2, 2});
  CHECK(contract_full(s, theta_twisted()) == Rational(-48));

  std::mt19937 rng(13);
  for (const CanonicalClass& cls : enumerate_diagrams(4, false)) {
    if (cls.as_zero) continue;
    SurgeryGraph sg = make_surgery_graph(cls.canonical_form, {2, 2, 2, 2});
    Rational base = contract_full(sg, cls.canonical_form);
    Diagram twisted = cls.canonical_form;
    std::swap(twisted.rotations[0][0], twisted.rotations[0][1]);
    Diagram rebuilt = build_diagram(twisted.vertex_count, twisted.rotations,
                                    [&] {
                                      std::vector<std::pair<int, int>> e;
                                      for (int h = 0; h < twisted.half_edge_count(); ++h)
                                        if (h < twisted.pairing[h])
                                          e.emplace_back(h, twisted.pairing[h]);
                                      return e;
                                    }());
    CHECK(contract_full(sg, rebuilt) == -base);
  }
}

TEST_CASE("pairing recovers the automorphism order") {
  for (int degree : {2, 4}) {
    for (const CanonicalClass& cls : enumerate_diagrams(degree, false)) {
      if (cls.as_zero) continue;
      std::vector<long long> weights(degree, 3);
      SurgeryGraph s = make_surgery_graph(cls.canonical_form, weights);
      Rational expected =
          Rational(static_cast<long>(automorphisms(cls.canonical_form).aut_order)) *
          Rational(pow_integer(3, degree));
      CHECK(contract_full(s, cls.canonical_form) == expected);
    }
  }
}

TEST_CASE("weight multiplicativity") {
  SurgeryGraph s = make_surgery_graph(theta(), {2, 2});
  Rational base = contract_full(s, theta());
  for (long long c : {2, 3, 5}) {
    SurgeryGraph scaled = make_surgery_graph(theta(), {2 * c, 2});
    CHECK(contract_full(scaled, theta()) == base * static_cast<long>(c));
  }
}

TEST_CASE("zeta on the theta surgeries") {
  ASpaceBasis b = a_space_basis(2);
  CHECK(zeta_evaluate(make_surgery_graph(theta(), {2, 2}), b) ==
        std::vector<Rational>{Rational(4)});
  CHECK(zeta_evaluate(make_surgery_graph(theta(), {4, 4}), b) ==
        std::vector<Rational>{Rational(16)});

  // tadpole shape: the map is zero by definition
  CHECK(zeta_evaluate(make_surgery_graph(dumbbell(), {2, 2}), b) ==
        std::vector<Rational>{Rational(0)});
}

TEST_CASE("zeta with unit doubling equals the projected class, degree <= 4") {
  for (int degree : {2, 4}) {
    ASpaceBasis b = a_space_basis(degree);
    Rational factor = Rational(pow_integer(2, degree));
    for (const CanonicalClass& cls : enumerate_diagrams(degree, false)) {
      if (cls.as_zero) continue;
      std::vector<long long> weights(degree, 2);
      SurgeryGraph s = make_surgery_graph(cls.canonical_form, weights);
      DiagramVector v;
      v.add_diagram(cls.canonical_form, 1);
      std::vector<Rational> expected = reduce(v, b);
      for (Rational& c : expected) c *= factor;
      CHECK(zeta_evaluate(s, b) == expected);
    }
  }
}

TEST_CASE("zeta degree mismatch") {
  ASpaceBasis b = a_space_basis(4);
  CHECK_THROWS_AS(zeta_evaluate(make_surgery_graph(theta(), {2, 2}), b),
                  DegreeMismatch);
}
