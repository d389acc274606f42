#pragma once

#include <vector>

#include "gk/a_space.hpp"
#include "gk/diagram.hpp"
#include "gk/rational.hpp"

namespace gk {

// A diagram reinterpreted as clasper-bundle surgery data: each vertex is a
// handlebody whose three handles are the three rotation slots of the shape,
// each edge links one handle pair, and each vertex carries a positive integer
// weight (the mapping degree of its parameter-sphere map; the geometric
// construction realizes weights 2 and 4, other values are a formal linear
// extrapolation). The link sign is +1 in the even fiber-parameter case the
// results use; it is exposed for experimentation only.
struct SurgeryGraph {
  Diagram shape;
  std::vector<long long> weights;
  int link_sign = +1;
};

SurgeryGraph make_surgery_graph(Diagram shape, std::vector<long long> weights,
                                int link_sign = +1);

// Antisymmetric trilinear evaluation at a handlebody vertex: `weight` on the
// handle basis triple (0,1,2) in rotation order against the full fundamental
// class, antisymmetric under swapping any two arguments, zero on repeats.
struct VertexForm {
  long long weight = 1;
  long long evaluate(int a, int b, int c) const;
};

// Pairing of the edge-tensor product against the handlebody fundamental
// classes for the identity assignment of test vertices to handlebodies:
// expand each test-edge tensor over the linked handle pairs of s, sum over
// label assignments, and multiply the per-vertex antisymmetric evaluations
// and edge link signs. Equals |Aut_e(shape)| * prod(weights) when the
// identity extends to an orientation-compatible isomorphism test -> shape.
// Throws DegreeMismatch / TadpoleTest.
Rational contract(const SurgeryGraph& s, const Diagram& test);

// Sum of the identity contraction over all bijections of test vertices onto
// handlebodies: |Aut(shape)| * prod(weights) for an orientation-compatible
// isomorphism class, 0 when test is not isomorphic to the shape.
Rational contract_full(const SurgeryGraph& s, const Diagram& test);

// Sum over loop-free test classes of (contract_full / |Aut|) * [class],
// reduced into b; the combinatorial value of the universal class evaluated on
// the surgery bundle. Zero on shapes with a loop. With all weights 2 this is
// 2^(2n) * reduce([shape], b).
std::vector<Rational> zeta_evaluate(const SurgeryGraph& s, const ASpaceBasis& b);

}  // namespace gk
