#include "gk/surgery.hpp"

#include <algorithm>
#include <functional>

#include "gk/errors.hpp"
#include "gk/threads.hpp"

namespace gk {

SurgeryGraph make_surgery_graph(Diagram shape, std::vector<long long> weights,
                                int link_sign) {
  if (static_cast<int>(weights.size()) != shape.vertex_count)
    throw Error("expected one weight per vertex");
  for (long long w : weights)
    if (w < 1) throw Error("vertex weights must be positive");
  if (link_sign != 1 && link_sign != -1) throw Error("link sign must be +1 or -1");
  return SurgeryGraph{std::move(shape), std::move(weights), link_sign};
}

long long VertexForm::evaluate(int a, int b, int c) const {
  if (a == b || b == c || a == c) return 0;
  int inv = (a > b) + (a > c) + (b > c);
  return (inv % 2 == 0) ? weight : -weight;
}

namespace {

struct TestEdge {
  int u, uslot, v, vslot;
};

struct ContractionTables {
  // links[a][b]: slot pairs (at a, at b) of shape edges joining a and b.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> links;
  std::vector<TestEdge> edges;
  int edge_count = 0;
};

ContractionTables build_tables(const SurgeryGraph& s, const Diagram& test) {
  if (test.vertex_count != s.shape.vertex_count)
    throw DegreeMismatch("test degree " + std::to_string(test.vertex_count) +
                         " does not match surgery degree " +
                         std::to_string(s.shape.vertex_count));
  if (has_tadpole(test)) throw TadpoleTest("test diagram has a loop");

  ContractionTables t;
  const int V = s.shape.vertex_count;
  t.links.assign(V, std::vector<std::vector<std::pair<int, int>>>(V));
  for (int h = 0; h < s.shape.half_edge_count(); ++h) {
    int ph = s.shape.pairing[h];
    int a = s.shape.vertex_at[h], b = s.shape.vertex_at[ph];
    if (a == b && h > ph) continue;  // emit shape loops once
    t.links[a][b].emplace_back(s.shape.slot_at[h], s.shape.slot_at[ph]);
    if (a != b) t.links[b][a].emplace_back(s.shape.slot_at[ph], s.shape.slot_at[h]);
  }
  for (int h = 0; h < test.half_edge_count(); ++h) {
    int ph = test.pairing[h];
    if (h > ph) continue;
    t.edges.push_back({test.vertex_at[h], test.slot_at[h], test.vertex_at[ph],
                       test.slot_at[ph]});
  }
  t.edge_count = static_cast<int>(t.edges.size());
  return t;
}

// Sum over label assignments for a fixed vertex assignment sigma.
Integer assignment_sum(const ContractionTables& t, const SurgeryGraph& s,
                       const std::vector<int>& sigma) {
  const int V = static_cast<int>(sigma.size());
  std::vector<std::array<int, 3>> labels(V, {-1, -1, -1});
  std::vector<std::array<char, 3>> used(V, {0, 0, 0});
  Integer total = 0;

  std::function<void(int)> walk = [&](int e) {
    if (e == t.edge_count) {
      Integer product = 1;
      for (int u = 0; u < V; ++u) {
        VertexForm form{s.weights[sigma[u]]};
        product *= static_cast<long>(
            form.evaluate(labels[u][0], labels[u][1], labels[u][2]));
      }
      total += product;
      return;
    }
    const TestEdge& te = t.edges[e];
    for (const auto& [j, l] : t.links[sigma[te.u]][sigma[te.v]]) {
      if (used[te.u][j] || used[te.v][l]) continue;
      used[te.u][j] = used[te.v][l] = 1;
      labels[te.u][te.uslot] = j;
      labels[te.v][te.vslot] = l;
      walk(e + 1);
      used[te.u][j] = used[te.v][l] = 0;
      labels[te.u][te.uslot] = -1;
      labels[te.v][te.vslot] = -1;
    }
  };
  walk(0);

  if (s.link_sign < 0 && t.edge_count % 2 == 1) total = -total;
  return total;
}

}  // namespace

Rational contract(const SurgeryGraph& s, const Diagram& test) {
  ContractionTables t = build_tables(s, test);
  std::vector<int> identity(test.vertex_count);
  for (int i = 0; i < test.vertex_count; ++i) identity[i] = i;
  return Rational(assignment_sum(t, s, identity));
}

Rational contract_full(const SurgeryGraph& s, const Diagram& test) {
  ContractionTables t = build_tables(s, test);
  const int V = test.vertex_count;

  // Group parallel test edges so partial bijections can be pruned against the
  // available link multiplicities.
  std::vector<std::vector<int>> test_mult(V, std::vector<int>(V, 0));
  for (const TestEdge& e : t.edges) {
    ++test_mult[e.u][e.v];
    if (e.u != e.v) ++test_mult[e.v][e.u];
  }

  Integer total = 0;
  std::vector<int> sigma(V, -1);
  std::vector<char> taken(V, 0);
  std::function<void(int)> assign = [&](int u) {
    if (u == V) {
      total += assignment_sum(t, s, sigma);
      return;
    }
    for (int target = 0; target < V; ++target) {
      if (taken[target]) continue;
      bool feasible = true;
      for (int w = 0; w < u && feasible; ++w)
        if (test_mult[u][w] >
            static_cast<int>(t.links[target][sigma[w]].size()))
          feasible = false;
      if (!feasible) continue;
      sigma[u] = target;
      taken[target] = 1;
      assign(u + 1);
      taken[target] = 0;
      sigma[u] = -1;
    }
  };
  assign(0);
  return Rational(total);
}

std::vector<Rational> zeta_evaluate(const SurgeryGraph& s, const ASpaceBasis& b) {
  if (b.degree != s.shape.vertex_count)
    throw DegreeMismatch("basis degree " + std::to_string(b.degree) +
                         " does not match surgery degree " +
                         std::to_string(s.shape.vertex_count));
  if (has_tadpole(s.shape))
    return std::vector<Rational>(b.basis_columns.size(), Rational(0));

  // The AS-nonzero generators are exactly the loop-free classes that survive
  // in the quotient; as_zero test classes contribute nothing either way.
  std::vector<Rational> per_class(b.generators.size(), 0);
  parallel_for(static_cast<int>(b.generators.size()), [&](int i) {
    const Diagram& test = b.generators[i].canonical_form;
    if (b.generators[i].as_zero || has_tadpole(test)) return;
    Rational value = contract_full(s, test);
    if (value != 0)
      value /= Rational(static_cast<long>(automorphisms(test).aut_order));
    per_class[i] = value;
  });

  DiagramVector vec;
  for (int i = 0; i < static_cast<int>(b.generators.size()); ++i)
    vec.add(b.generators[i], per_class[i]);
  return reduce(vec, b);
}

}  // namespace gk
