#pragma once

#include <vector>

#include "gk/diagram.hpp"

namespace gk {

constexpr int kDefaultDegreeCap = 14;

// Every isomorphism class of connected trivalent diagrams of the given degree,
// exactly once, sorted by canonical code. as_zero classes are included and
// flagged; classes with loops appear only when allow_tadpoles is set.
//
// Generation is exhaustive over fixed-point-free matchings of the 6n
// half-edges, extending the current connected component only and collapsing
// choices that differ by a relabeling fixing the partial matching; leaves are
// deduplicated by canonical form. Throws DegreeOdd / DegreeTooLarge.
std::vector<CanonicalClass> enumerate_diagrams(int degree, bool allow_tadpoles,
                                               int cap = kDefaultDegreeCap);

}  // namespace gk
