#include "gk/io.hpp"

#include <sstream>

#include "gk/errors.hpp"

namespace gk {
namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) &&
             raw[i] != '#')
        ++i;
      tokens.push_back({raw.substr(start, i - start), lineno,
                        static_cast<int>(start) + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

long long parse_int(const Token& t) {
  size_t used = 0;
  long long v;
  try {
    v = std::stoll(t.text, &used);
  } catch (const std::exception&) {
    throw SyntaxError("expected an integer, got '" + t.text + "'", t.line, t.col);
  }
  if (used != t.text.size())
    throw SyntaxError("expected an integer, got '" + t.text + "'", t.line, t.col);
  return v;
}

}  // namespace

ParsedJgd parse_jgd(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw SyntaxError("empty .jgd document", 1, 1);

  const auto& first = lines.front();
  if (first[0].text != "degree")
    throw SyntaxError("expected 'degree' directive first", first[0].line, first[0].col);
  if (first.size() != 2)
    throw SyntaxError("degree takes exactly one value", first[0].line, first[0].col);
  long long degree = parse_int(first[1]);
  if (degree < 2 || degree % 2 != 0)
    throw SemanticError("degree must be a positive even integer", first[1].line);
  const int V = static_cast<int>(degree);
  const int H = 3 * V;
  const int degree_line = first[0].line;

  std::vector<std::array<int, 3>> rotations(V, {-1, -1, -1});
  std::vector<char> vertex_seen(V, 0);
  std::vector<std::pair<int, int>> edges;
  std::optional<std::vector<long long>> weights;

  auto half_edge = [&](const Token& t) {
    long long h = parse_int(t);
    if (h < 0 || h >= H)
      throw SemanticError("half-edge id " + t.text + " out of range 0.." +
                          std::to_string(H - 1), t.line);
    return static_cast<int>(h);
  };

  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& toks = lines[li];
    const Token& head = toks[0];
    if (head.text == "vertex") {
      if (toks.size() != 6 || toks[2].text != ":")
        throw SemanticError("vertex line must read: vertex <i> : <h1> <h2> <h3>",
                            head.line);
      long long v = parse_int(toks[1]);
      if (v < 0 || v >= V)
        throw SemanticError("vertex index " + toks[1].text + " out of range", head.line);
      if (vertex_seen[v])
        throw SemanticError("vertex " + toks[1].text + " declared twice", head.line);
      vertex_seen[v] = 1;
      for (int j = 0; j < 3; ++j) rotations[v][j] = half_edge(toks[3 + j]);
    } else if (head.text == "edge") {
      if (toks.size() != 3)
        throw SemanticError("edge line must read: edge <ha> <hb>", head.line);
      edges.emplace_back(half_edge(toks[1]), half_edge(toks[2]));
    } else if (head.text == "weights") {
      if (weights) throw SemanticError("duplicate weights directive", head.line);
      if (static_cast<int>(toks.size()) != V + 1)
        throw SemanticError("weights must list one value per vertex", head.line);
      std::vector<long long> w;
      for (int i = 1; i <= V; ++i) {
        long long d = parse_int(toks[i]);
        if (d < 1) throw SemanticError("weights must be positive", toks[i].line);
        w.push_back(d);
      }
      weights = std::move(w);
    } else {
      throw SyntaxError("unknown directive '" + head.text + "'", head.line, head.col);
    }
  }

  for (int v = 0; v < V; ++v)
    if (!vertex_seen[v])
      throw SemanticError("vertex " + std::to_string(v) + " missing", degree_line);
  if (static_cast<int>(edges.size()) != H / 2)
    throw SemanticError("expected " + std::to_string(H / 2) + " edge lines, got " +
                        std::to_string(edges.size()), degree_line);

  ParsedJgd out;
  try {
    out.diagram = build_diagram(V, rotations, edges);
  } catch (const Error& e) {
    throw SemanticError(e.what(), degree_line);
  }
  out.weights = std::move(weights);
  return out;
}

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream os;
  os << "degree " << d.vertex_count << "\n";
  for (int v = 0; v < d.vertex_count; ++v)
    os << "vertex " << v << " : " << d.rotations[v][0] << " " << d.rotations[v][1]
       << " " << d.rotations[v][2] << "\n";
  for (int h = 0; h < d.half_edge_count(); ++h)
    if (h < d.pairing[h]) os << "edge " << h << " " << d.pairing[h] << "\n";
  return os.str();
}

std::string serialize_surgery(const SurgeryGraph& s) {
  std::ostringstream os;
  os << serialize_diagram(s.shape) << "weights";
  for (long long w : s.weights) os << " " << w;
  os << "\n";
  return os.str();
}

std::vector<std::string> generator_names(const ASpaceBasis& b) {
  std::vector<std::string> names;
  for (int i = 0; i < static_cast<int>(b.generators.size()); ++i) {
    const CanonicalClass& cls = b.generators[i];
    if (b.degree == 2 && !cls.as_zero && !has_tadpole(cls.canonical_form))
      names.push_back("Theta");
    else
      names.push_back("g" + std::to_string(i));
  }
  return names;
}

std::string format_coords(const std::vector<Rational>& coords, const ASpaceBasis& b) {
  std::vector<std::string> names = generator_names(b);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    Rational c = coords[i];
    c.canonicalize();
    if (first) {
      os << to_string(c);
      first = false;
    } else if (c < 0) {
      os << " - " << to_string(Rational(-c));
    } else {
      os << " + " << to_string(c);
    }
    os << " * [" << names[b.basis_columns[i]] << "]";
  }
  if (first) return "0";
  return os.str();
}

}  // namespace gk
