#include "gk/enumerate.hpp"

#include <map>
#include <string>

#include "gk/errors.hpp"

namespace gk {
namespace {

struct Generator {
  int vertex_count;
  bool allow_tadpoles;
  std::vector<int> pairing;        // -1 while unmatched
  std::vector<int> matched_count;  // per vertex
  std::map<std::string, CanonicalClass> found;

  explicit Generator(int vertex_count, bool allow_tadpoles)
      : vertex_count(vertex_count),
        allow_tadpoles(allow_tadpoles),
        pairing(3 * vertex_count, -1),
        matched_count(vertex_count, 0) {}

  bool touched(int v) const { return matched_count[v] > 0; }

  int lowest_open_touched_half_edge() const {
    for (int h = 0; h < static_cast<int>(pairing.size()); ++h)
      if (pairing[h] < 0 && touched(h / 3)) return h;
    return -1;
  }

  void match(int a, int b) {
    pairing[a] = b;
    pairing[b] = a;
    ++matched_count[a / 3];
    ++matched_count[b / 3];
  }

  void unmatch(int a, int b) {
    pairing[a] = -1;
    pairing[b] = -1;
    --matched_count[a / 3];
    --matched_count[b / 3];
  }

  void emit_leaf() {
    std::vector<std::array<int, 3>> rotations(vertex_count);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < vertex_count; ++v) rotations[v] = {3 * v, 3 * v + 1, 3 * v + 2};
    for (int h = 0; h < static_cast<int>(pairing.size()); ++h)
      if (h < pairing[h]) edges.emplace_back(h, pairing[h]);
    CanonicalizeResult r = canonicalize(build_diagram(vertex_count, rotations, edges));
    found.emplace(r.cls.code, std::move(r.cls));
  }

  void dfs() {
    int h = lowest_open_touched_half_edge();
    if (h < 0) {
      bool matches_made = matched_count[0] > 0;
      if (!matches_made) {
        h = 0;  // root: vertex 0 starts the unique component
      } else {
        for (int v = 0; v < vertex_count; ++v)
          if (!touched(v)) return;  // component closed early: disconnected
        emit_leaf();
        return;
      }
    }
    const int v = h / 3;

    // Same-vertex partner (a loop); open slots at v are interchangeable.
    if (allow_tadpoles) {
      for (int c = 3 * v; c < 3 * v + 3; ++c)
        if (c != h && pairing[c] < 0) {
          match(h, c);
          dfs();
          unmatch(h, c);
          break;
        }
    }

    // One representative open slot per touched vertex; all fresh vertices are
    // interchangeable, so a single fresh representative suffices.
    bool fresh_done = false;
    for (int w = 0; w < vertex_count; ++w) {
      if (w == v) continue;
      if (!touched(w)) {
        if (fresh_done) continue;
        fresh_done = true;
      }
      for (int c = 3 * w; c < 3 * w + 3; ++c)
        if (pairing[c] < 0) {
          match(h, c);
          dfs();
          unmatch(h, c);
          break;
        }
    }
  }
};

}  // namespace

std::vector<CanonicalClass> enumerate_diagrams(int degree, bool allow_tadpoles, int cap) {
  if (degree < 2 || degree % 2 != 0)
    throw DegreeOdd("degree must be a positive even integer, got " + std::to_string(degree));
  if (degree > cap)
    throw DegreeTooLarge("degree " + std::to_string(degree) + " exceeds cap " +
                         std::to_string(cap));
  Generator gen(degree, allow_tadpoles);
  gen.dfs();
  std::vector<CanonicalClass> classes;
  classes.reserve(gen.found.size());
  for (auto& [code, cls] : gen.found) classes.push_back(std::move(cls));
  return classes;
}

}  // namespace gk
