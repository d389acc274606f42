#include "gk/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>

#include "gk/errors.hpp"

namespace gk {
namespace {

constexpr int kInf = std::numeric_limits<int>::max();

const std::array<std::array<int, 3>, 6> kPerms = {{{0, 1, 2},
                                                   {0, 2, 1},
                                                   {1, 0, 2},
                                                   {1, 2, 0},
                                                   {2, 0, 1},
                                                   {2, 1, 0}}};
const std::array<int, 6> kPermSign = {+1, -1, -1, +1, +1, -1};

int triple_parity(const std::array<int, 3>& p) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2 == 0) ? +1 : -1;
}

// One partial relabeling during the canonical search: the first `order.size()`
// canonical positions have been assigned an original vertex and a slot order.
struct PlacementState {
  std::vector<int> order;  // position -> original vertex
  std::vector<int> pos;    // original vertex -> position, -1 if unplaced
  std::vector<int> newhe;  // original half-edge -> new id, -1 if undecided
  int sign = 1;            // product of slot-permutation parities so far
};

struct Extension {
  int state = -1;  // index into the frontier, -1 at the root level
  int vertex = 0;
  int perm = 0;
  std::array<int, 3> triple{};
};

struct Analysis {
  std::vector<int> code;
  bool as_zero = false;
  int input_sign = 1;
  long long aut_order = 0;
  long long vertex_action_order = 0;
  long long edge_fixing_order = 0;
  std::vector<PlacementState> placements;
};

// Emits the three code entries produced by placing `u` at position t with slot
// order kPerms[perm]. Partners already placed yield their new id; a partner at
// u itself yields its in-triple position; unplaced partners yield kInf.
std::array<int, 3> placement_triple(const Diagram& d, const std::vector<int>& newhe,
                                    int u, int perm, int t) {
  std::array<int, 3> triple{};
  const auto& sigma = kPerms[perm];
  for (int j = 0; j < 3; ++j) {
    int h = d.rotations[u][sigma[j]];
    int ph = d.pairing[h];
    if (d.vertex_at[ph] == u) {
      int pslot = d.slot_at[ph];
      int j2 = 0;
      while (sigma[j2] != pslot) ++j2;
      triple[j] = 3 * t + j2;
    } else if (newhe[ph] >= 0) {
      triple[j] = newhe[ph];
    } else {
      triple[j] = kInf;
    }
  }
  return triple;
}

PlacementState extend(const Diagram& d, const PlacementState* base, int u, int perm) {
  PlacementState s;
  if (base) {
    s = *base;
  } else {
    s.pos.assign(d.vertex_count, -1);
    s.newhe.assign(d.half_edge_count(), -1);
  }
  int t = static_cast<int>(s.order.size());
  s.order.push_back(u);
  s.pos[u] = t;
  const auto& sigma = kPerms[perm];
  for (int j = 0; j < 3; ++j) s.newhe[d.rotations[u][sigma[j]]] = 3 * t + j;
  s.sign *= kPermSign[perm];
  return s;
}

// Exhaustive minimal-code search. The code of a complete placement lists, for
// each canonical half-edge in order, the new id of its partner when that
// partner is already decided, else kInf; the lexicographically minimal code
// over all placements is the canonical encoding, and the placements achieving
// it are exactly the isomorphisms onto the canonical form.
Analysis analyze(const Diagram& d) {
  const int V = d.vertex_count;

  std::vector<std::vector<int>> neighbors(V);
  for (int h = 0; h < d.half_edge_count(); ++h) {
    int u = d.vertex_at[h], w = d.vertex_at[d.pairing[h]];
    if (u != w) neighbors[u].push_back(w);
  }
  for (auto& ns : neighbors) {
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  }

  std::vector<PlacementState> frontier;
  Analysis out;

  for (int t = 0; t < V; ++t) {
    std::vector<Extension> exts;
    std::array<int, 3> best{kInf, kInf, kInf};
    bool have_best = false;

    auto consider = [&](int state_idx, const std::vector<int>& newhe, int u) {
      for (int p = 0; p < 6; ++p) {
        std::array<int, 3> tr = placement_triple(d, newhe, u, p, t);
        if (!have_best || tr < best) {
          best = tr;
          have_best = true;
          exts.clear();
        }
        if (tr == best) exts.push_back({state_idx, u, p, tr});
      }
    };

    if (t == 0) {
      std::vector<int> empty_newhe(d.half_edge_count(), -1);
      for (int u = 0; u < V; ++u) consider(-1, empty_newhe, u);
    } else {
      for (int si = 0; si < static_cast<int>(frontier.size()); ++si) {
        const PlacementState& s = frontier[si];
        std::vector<char> seen(V, 0);
        for (int placed : s.order)
          for (int w : neighbors[placed])
            if (s.pos[w] < 0 && !seen[w]) {
              seen[w] = 1;
              consider(si, s.newhe, w);
            }
      }
    }

    for (int j = 0; j < 3; ++j) out.code.push_back(best[j]);
    std::vector<PlacementState> next;
    next.reserve(exts.size());
    for (const Extension& e : exts)
      next.push_back(extend(d, e.state < 0 ? nullptr : &frontier[e.state], e.vertex, e.perm));
    frontier = std::move(next);
  }

  bool plus = false, minus = false;
  std::set<std::vector<int>> vertex_maps;
  for (const PlacementState& s : frontier) {
    (s.sign > 0 ? plus : minus) = true;
    vertex_maps.insert(s.pos);
  }
  out.as_zero = plus && minus;
  out.input_sign = out.as_zero ? +1 : frontier.front().sign;
  out.aut_order = static_cast<long long>(frontier.size());
  out.vertex_action_order = static_cast<long long>(vertex_maps.size());
  out.edge_fixing_order = out.aut_order / out.vertex_action_order;
  out.placements = std::move(frontier);
  return out;
}

std::string encode_code(const std::vector<int>& code) {
  std::string s;
  s.reserve(code.size() * 4);
  for (int v : code) {
    auto u = static_cast<uint32_t>(v);
    s.push_back(static_cast<char>((u >> 24) & 0xff));
    s.push_back(static_cast<char>((u >> 16) & 0xff));
    s.push_back(static_cast<char>((u >> 8) & 0xff));
    s.push_back(static_cast<char>(u & 0xff));
  }
  return s;
}

Diagram rebuild_from_code(int vertex_count, const std::vector<int>& code) {
  std::vector<int> pairing(code.size(), -1);
  for (int x = 0; x < static_cast<int>(code.size()); ++x) {
    if (code[x] == kInf) continue;
    pairing[x] = code[x];
    pairing[code[x]] = x;
  }
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < static_cast<int>(pairing.size()); ++x)
    if (pairing[x] > x) edges.emplace_back(x, pairing[x]);
  std::vector<std::array<int, 3>> rotations(vertex_count);
  for (int v = 0; v < vertex_count; ++v) rotations[v] = {3 * v, 3 * v + 1, 3 * v + 2};
  // Re-validating also rebuilds the lookup tables.
  return build_diagram(vertex_count, rotations, edges);
}

}  // namespace

Diagram build_diagram(int vertex_count,
                      const std::vector<std::array<int, 3>>& rotations,
                      const std::vector<std::pair<int, int>>& pairing) {
  if (vertex_count <= 0) throw NonTrivalent("vertex count must be positive");
  if (static_cast<int>(rotations.size()) != vertex_count)
    throw NonTrivalent("expected one rotation triple per vertex");
  const int H = 3 * vertex_count;

  Diagram d;
  d.vertex_count = vertex_count;
  d.rotations = rotations;
  d.vertex_at.assign(H, -1);
  d.slot_at.assign(H, -1);
  for (int v = 0; v < vertex_count; ++v)
    for (int j = 0; j < 3; ++j) {
      int h = rotations[v][j];
      if (h < 0 || h >= H)
        throw NonTrivalent("half-edge id " + std::to_string(h) + " out of range");
      if (d.vertex_at[h] >= 0)
        throw NonTrivalent("half-edge id " + std::to_string(h) + " used twice");
      d.vertex_at[h] = v;
      d.slot_at[h] = j;
    }

  d.pairing.assign(H, -1);
  for (auto [a, b] : pairing) {
    if (a < 0 || a >= H || b < 0 || b >= H)
      throw BadPairing("edge endpoint out of range");
    if (a == b) throw BadPairing("pairing has a fixed point at " + std::to_string(a));
    if (d.pairing[a] >= 0 || d.pairing[b] >= 0)
      throw BadPairing("half-edge paired twice");
    d.pairing[a] = b;
    d.pairing[b] = a;
  }
  for (int h = 0; h < H; ++h)
    if (d.pairing[h] < 0) throw BadPairing("half-edge " + std::to_string(h) + " unpaired");

  // Connectivity over the vertex set.
  std::vector<char> visited(vertex_count, 0);
  std::vector<int> stack = {0};
  visited[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int j = 0; j < 3; ++j) {
      int w = d.vertex_at[d.pairing[d.rotations[v][j]]];
      if (!visited[w]) {
        visited[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != vertex_count) throw Disconnected("diagram is not connected");
  return d;
}

bool has_tadpole(const Diagram& d) {
  for (int h = 0; h < d.half_edge_count(); ++h)
    if (d.vertex_at[d.pairing[h]] == d.vertex_at[h]) return true;
  return false;
}

CanonicalizeResult canonicalize(const Diagram& d) {
  Analysis a = analyze(d);
  CanonicalizeResult r;
  r.cls.canonical_form = rebuild_from_code(d.vertex_count, a.code);
  r.cls.as_zero = a.as_zero;
  r.cls.code = encode_code(a.code);
  r.sign = a.input_sign;
  return r;
}

AutInfo automorphisms(const Diagram& d) {
  Analysis a = analyze(d);
  return AutInfo{a.aut_order, a.edge_fixing_order, a.vertex_action_order};
}

std::vector<std::vector<int>> automorphism_half_edge_maps(const Diagram& d) {
  Analysis a = analyze(d);
  const int H = d.half_edge_count();
  // Each placement is an isomorphism onto the canonical form; composing with
  // the inverse of the first yields the automorphism group of d itself.
  std::vector<int> inv0(H);
  for (int h = 0; h < H; ++h) inv0[a.placements.front().newhe[h]] = h;
  std::vector<std::vector<int>> maps;
  maps.reserve(a.placements.size());
  for (const PlacementState& s : a.placements) {
    std::vector<int> m(H);
    for (int h = 0; h < H; ++h) m[h] = inv0[s.newhe[h]];
    maps.push_back(std::move(m));
  }
  return maps;
}

std::pair<Diagram, int> apply_relabeling(
    const Diagram& d, const std::vector<int>& vertex_perm,
    const std::vector<std::array<int, 3>>& slot_perms) {
  const int V = d.vertex_count;
  std::vector<int> newid(d.half_edge_count(), -1);
  std::vector<std::array<int, 3>> rotations(V);
  int sign = 1;
  for (int v = 0; v < V; ++v) {
    int nv = vertex_perm[v];
    for (int j = 0; j < 3; ++j) {
      int h = d.rotations[v][slot_perms[v][j]];
      newid[h] = 3 * nv + j;
      rotations[nv][j] = 3 * nv + j;
    }
    sign *= triple_parity(slot_perms[v]);
  }
  std::vector<std::pair<int, int>> edges;
  for (int h = 0; h < d.half_edge_count(); ++h)
    if (h < d.pairing[h]) edges.emplace_back(newid[h], newid[d.pairing[h]]);
  return {build_diagram(V, rotations, edges), sign};
}

}  // namespace gk
