#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace gk {

// Connected trivalent multigraph with orientation data.
//
// A diagram of degree 2n has vertex_count = 2n vertices and 3n edges. Half-edge
// identifiers are the integers 0..3*vertex_count-1. Each vertex carries an
// ordered triple of its incident half-edges (the rotation); reordering a
// rotation by an odd permutation negates the diagram class. The pairing is a
// fixed-point-free involution on half-edges whose orbits are the edges. Loops
// (both half-edges of an edge at one vertex) are representable and flagged by
// has_tadpole().
struct Diagram {
  int vertex_count = 0;
  std::vector<std::array<int, 3>> rotations;
  std::vector<int> pairing;

  int half_edge_count() const { return 3 * vertex_count; }
  int degree() const { return vertex_count; }

  // Lookup tables, filled by build_diagram.
  std::vector<int> vertex_at;  // half-edge -> vertex
  std::vector<int> slot_at;    // half-edge -> position in its rotation
};

// Validates and assembles a Diagram.
// Throws NonTrivalent if the rotations are not a partition of 0..3V-1 into
// triples, BadPairing if `pairing` is not a fixed-point-free involution on
// exactly that half-edge set, Disconnected if the multigraph is disconnected.
Diagram build_diagram(int vertex_count,
                      const std::vector<std::array<int, 3>>& rotations,
                      const std::vector<std::pair<int, int>>& pairing);

bool has_tadpole(const Diagram& d);

// A diagram class under relabeling, in the deterministic normal labeling:
// vertex v owns half-edges 3v, 3v+1, 3v+2 and its rotation is (3v,3v+1,3v+2).
// as_zero is true when some automorphism acts on the orientation by -1, which
// makes the class vanish once antisymmetry is imposed.
struct CanonicalClass {
  Diagram canonical_form;
  bool as_zero = false;
  std::string code;  // canonical encoding; equal codes <=> isomorphic diagrams

  int degree() const { return canonical_form.vertex_count; }
  bool operator==(const CanonicalClass& o) const { return code == o.code; }
  bool operator<(const CanonicalClass& o) const { return code < o.code; }
};

struct CanonicalizeResult {
  CanonicalClass cls;
  int sign;  // +1 or -1; +1 by convention when cls.as_zero
};

// Deterministic canonical representative plus the orientation sign relating
// the input to it. For any relabeling pi, canonicalize(pi . d) returns the
// same CanonicalClass, with sign multiplied by the parity of pi's action on
// the rotations (well defined whenever the class is not as_zero).
CanonicalizeResult canonicalize(const Diagram& d);

struct AutInfo {
  long long aut_order = 0;            // |Aut(Gamma)|
  long long edge_fixing_order = 0;    // automorphisms fixing every vertex
  long long vertex_action_order = 0;  // aut_order / edge_fixing_order
};

// Exact automorphism group orders by exhaustive search over the vertex/slot
// placements compatible with the pairing.
AutInfo automorphisms(const Diagram& d);

// Automorphisms of a diagram in normal labeling, each as a half-edge
// permutation (image of half-edge h at index h). Intended for canonical forms.
std::vector<std::vector<int>> automorphism_half_edge_maps(const Diagram& d);

// Applies a relabeling: vertex v goes to vertex_perm[v], and the half-edge at
// slot j of the new rotation of vertex_perm[v] is the old half-edge at slot
// slot_perms[v][j]. Returns the relabeled diagram and the parity of the action
// on rotations (the AS sign of the relabeling).
std::pair<Diagram, int> apply_relabeling(
    const Diagram& d, const std::vector<int>& vertex_perm,
    const std::vector<std::array<int, 3>>& slot_perms);

}  // namespace gk
