#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk/a_space.hpp"
#include "gk/diagram.hpp"
#include "gk/surgery.hpp"

namespace gk {

// Parsed .jgd payload: a diagram, plus surgery weights when the optional
// `weights` directive is present.
struct ParsedJgd {
  Diagram diagram;
  std::optional<std::vector<long long>> weights;
};

// Strict .jgd parser. Grammar (whitespace separated, '#' starts a comment):
//   degree <2n>
//   2n lines:  vertex <i> : <h1> <h2> <h3>
//   3n lines:  edge <ha> <hb>
//   optional:  weights <d1> ... <d2n>
// Half-edge ids are the integers 0..6n-1. Unknown directives are SyntaxError;
// arity, range, duplication, trivalence and connectivity failures are
// SemanticError. Every error carries a source location.
ParsedJgd parse_jgd(const std::string& text);

std::string serialize_diagram(const Diagram& d);
std::string serialize_surgery(const SurgeryGraph& s);

// Display names for the generators of a basis: the unique degree-2 generator
// is "Theta", everything else is g<index>.
std::vector<std::string> generator_names(const ASpaceBasis& b);

// Renders coordinates with respect to b, e.g. "4 * [Theta]" or
// "1/2 * [g0] - 3 * [g2]"; "0" for the zero vector.
std::string format_coords(const std::vector<Rational>& coords, const ASpaceBasis& b);

}  // namespace gk
