#include "gk/a_space.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "gk/errors.hpp"

namespace gk {

void DiagramVector::add(const CanonicalClass& cls, const Rational& coeff) {
  if (cls.as_zero || coeff == 0) return;
  auto [it, fresh] = terms_.emplace(cls, 0);
  it->second += coeff;
  it->second.canonicalize();
  if (it->second == 0) terms_.erase(it);
}

void DiagramVector::add_diagram(const Diagram& d, const Rational& coeff) {
  CanonicalizeResult r = canonicalize(d);
  add(r.cls, coeff * r.sign);
}

namespace {

std::array<int, 3> rotate_to_last(const std::array<int, 3>& rot, int h) {
  for (int s = 0; s < 3; ++s)
    if (rot[s] == h) return {rot[(s + 1) % 3], rot[(s + 2) % 3], h};
  throw Error("half-edge not in rotation");
}

std::array<int, 3> rotate_to_first(const std::array<int, 3>& rot, int h) {
  for (int s = 0; s < 3; ++s)
    if (rot[s] == h) return {h, rot[(s + 1) % 3], rot[(s + 2) % 3]};
  throw Error("half-edge not in rotation");
}

std::vector<std::pair<int, int>> edge_list(const Diagram& d) {
  std::vector<std::pair<int, int>> edges;
  for (int h = 0; h < d.half_edge_count(); ++h)
    if (h < d.pairing[h]) edges.emplace_back(h, d.pairing[h]);
  return edges;
}

// The three terms of the IHX relation at the edge (hu, hv) of d. With the
// rotations at the endpoints cycled to (a, b, hu) and (hv, c, d), the
// reconnections are H: (a, c, hu) / (hv, b, d) and X: (a, d, hu) / (hv, b, c);
// cyclic moves are even, so no sign adjustment is needed here.
void add_ihx_terms(DiagramVector& vec, const Diagram& d, int hu, int hv) {
  int u = d.vertex_at[hu], v = d.vertex_at[hv];
  std::array<int, 3> ru = rotate_to_last(d.rotations[u], hu);
  std::array<int, 3> rv = rotate_to_first(d.rotations[v], hv);
  int a = ru[0], b = ru[1], c = rv[1], dd = rv[2];
  auto edges = edge_list(d);

  auto term = [&](std::array<int, 3> rot_u, std::array<int, 3> rot_v, int coeff) {
    std::vector<std::array<int, 3>> rotations = d.rotations;
    rotations[u] = rot_u;
    rotations[v] = rot_v;
    vec.add_diagram(build_diagram(d.vertex_count, rotations, edges), coeff);
  };
  term({a, b, hu}, {hv, c, dd}, +1);   // I
  term({a, c, hu}, {hv, b, dd}, -1);   // H
  term({a, dd, hu}, {hv, b, c}, +1);   // X
}

std::vector<DiagramVector> relations_for_classes(const std::vector<CanonicalClass>& classes) {
  std::vector<DiagramVector> relations;
  for (const CanonicalClass& cls : classes) {
    const Diagram& d = cls.canonical_form;
    auto edges = edge_list(d);
    auto auts = automorphism_half_edge_maps(d);

    // Orbit representatives of edges under the automorphism group.
    std::vector<int> orbit(edges.size());
    std::iota(orbit.begin(), orbit.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (orbit[x] != x) x = orbit[x] = orbit[orbit[x]];
      return x;
    };
    std::map<std::pair<int, int>, int> edge_index;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) edge_index[edges[i]] = i;
    for (const auto& aut : auts)
      for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        int x = aut[edges[i].first], y = aut[edges[i].second];
        int j = edge_index.at({std::min(x, y), std::max(x, y)});
        orbit[find(i)] = find(j);
      }

    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      if (find(i) != i) continue;
      auto [hu, hv] = edges[i];
      if (d.vertex_at[hu] == d.vertex_at[hv]) continue;  // loops carry no IHX
      DiagramVector vec;
      add_ihx_terms(vec, d, hu, hv);
      relations.push_back(std::move(vec));
    }
  }
  return relations;
}

}  // namespace

std::vector<DiagramVector> ihx_relations(int degree, int cap) {
  return relations_for_classes(enumerate_diagrams(degree, false, cap));
}

int ASpaceBasis::generator_index(const CanonicalClass& cls) const {
  auto it = std::lower_bound(
      generators.begin(), generators.end(), cls,
      [](const CanonicalClass& a, const CanonicalClass& b) { return a.code < b.code; });
  if (it != generators.end() && it->code == cls.code)
    return static_cast<int>(it - generators.begin());
  // Tadpole generators are appended after the sorted AS-nonzero block.
  for (int i = 0; i < static_cast<int>(generators.size()); ++i)
    if (generators[i].code == cls.code) return i;
  return -1;
}

ASpaceBasis a_space_basis(int degree, bool include_tadpoles, int cap) {
  std::vector<CanonicalClass> classes = enumerate_diagrams(degree, include_tadpoles, cap);

  ASpaceBasis basis;
  basis.degree = degree;
  for (const CanonicalClass& cls : classes)
    if (!cls.as_zero) basis.generators.push_back(cls);
  int tadpole_start = static_cast<int>(basis.generators.size());
  if (include_tadpoles)
    for (const CanonicalClass& cls : classes)
      if (has_tadpole(cls.canonical_form)) basis.generators.push_back(cls);

  std::vector<CanonicalClass> loop_free;
  for (const CanonicalClass& cls : classes)
    if (!has_tadpole(cls.canonical_form)) loop_free.push_back(cls);
  std::vector<DiagramVector> relations = relations_for_classes(loop_free);

  std::map<std::string, int> column;
  for (int i = 0; i < static_cast<int>(basis.generators.size()); ++i)
    column[basis.generators[i].code] = i;

  int extra = static_cast<int>(basis.generators.size()) - tadpole_start;
  basis.relation_matrix =
      RationalMatrix(static_cast<int>(relations.size()) + extra,
                     static_cast<int>(basis.generators.size()));
  for (int r = 0; r < static_cast<int>(relations.size()); ++r)
    for (const auto& [cls, coeff] : relations[r].terms())
      basis.relation_matrix.set(r, column.at(cls.code), coeff);
  // The loop-swap automorphism of each tadpole class is orientation-odd, so
  // the class equals its own negative: emit 2*[class] = 0.
  for (int i = 0; i < extra; ++i) {
    const CanonicalClass& cls = basis.generators[tadpole_start + i];
    if (!cls.as_zero) throw Error("tadpole class unexpectedly not as_zero");
    basis.relation_matrix.set(static_cast<int>(relations.size()) + i,
                              tadpole_start + i, 2);
  }

  RowReduced rr = row_reduce(basis.relation_matrix);
  basis.reduction = std::move(rr.reduced);
  basis.pivot_columns = std::move(rr.pivot_columns);
  std::vector<char> is_pivot(basis.generators.size(), 0);
  for (int c : basis.pivot_columns) is_pivot[c] = 1;
  for (int c = 0; c < static_cast<int>(basis.generators.size()); ++c)
    if (!is_pivot[c]) basis.basis_columns.push_back(c);
  return basis;
}

std::vector<Rational> reduce(const DiagramVector& v, const ASpaceBasis& b) {
  std::vector<Rational> x(b.generators.size(), 0);
  for (const auto& [cls, coeff] : v.terms()) {
    if (cls.degree() != b.degree)
      throw DegreeMismatch("vector has degree " + std::to_string(cls.degree()) +
                           ", basis has degree " + std::to_string(b.degree));
    int col = b.generator_index(cls);
    if (col < 0) throw Error("class not covered by the generator set");
    x[col] += coeff;
  }
  for (int r = 0; r < static_cast<int>(b.pivot_columns.size()); ++r) {
    int pc = b.pivot_columns[r];
    if (x[pc] == 0) continue;
    Rational f = x[pc];
    auto it = b.reduction.entries.lower_bound({r, 0});
    auto end = b.reduction.entries.lower_bound({r + 1, 0});
    for (; it != end; ++it) x[it->first.second] -= f * it->second;
  }
  std::vector<Rational> coords;
  coords.reserve(b.basis_columns.size());
  for (int c : b.basis_columns) {
    Rational q = x[c];
    q.canonicalize();
    coords.push_back(q);
  }
  return coords;
}

std::vector<Integer> poly_ring_dims(const std::vector<long long>& connected_dims,
                                    int max_degree) {
  if (max_degree < 0 || max_degree % 2 != 0)
    throw DegreeOdd("max degree must be a nonnegative even integer");
  const int N = max_degree / 2;
  std::vector<Integer> series(N + 1, 0);
  series[0] = 1;
  for (int j = 1; j <= static_cast<int>(connected_dims.size()); ++j) {
    long long dim = connected_dims[j - 1];
    if (dim < 0) throw NegativeDim("connected dimension below zero in degree " +
                                   std::to_string(2 * j));
    // Multiply by (1 - x^j)^{-dim}.
    for (long long rep = 0; rep < dim; ++rep)
      for (int t = j; t <= N; ++t) series[t] += series[t - j];
  }
  return series;
}

}  // namespace gk
