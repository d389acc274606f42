#include "gk/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "gk/a_space.hpp"
#include "gk/char_constants.hpp"
#include "gk/diagram.hpp"
#include "gk/enumerate.hpp"
#include "gk/errors.hpp"
#include "gk/io.hpp"
#include "gk/surgery.hpp"

namespace gk::cli {
namespace {

constexpr const char* kUsage =
    "usage: gk <subcommand> [options]\n"
    "  enum    -n <2n> [--tadpoles] [--cap <N>]   list diagram classes\n"
    "  dim     -n <2n> [--cap <N>]                dimension of the quotient space\n"
    "  basis   -n <2n> [--cap <N>]                basis and reduction data\n"
    "  reduce  <file.jgd>                         coordinates of a diagram\n"
    "  pair    <surgery.jgd> <test.jgd>           contraction pairings\n"
    "  zeta    <surgery.jgd> [--weights d1,d2,..] evaluate the universal class\n"
    "  const   --k <k>                            framing constants report\n"
    "  lpoly   --k <k>                            Hirzebruch L-polynomial\n"
    "  polydim --dims a1,a2,.. --max <2n>         polynomial algebra dimensions\n"
    "common: [--format text|structured]; GK_THREADS bounds worker parallelism\n";

struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::string> values;
  std::set<std::string> switches;

  bool has(const std::string& k) const {
    return values.count(k) || switches.count(k);
  }
  std::string value(const std::string& k) const { return values.at(k); }
};

const std::set<std::string> kValueFlags = {"-n",     "--cap", "--weights",
                                           "--k",    "--dims", "--max",
                                           "--format"};
const std::set<std::string> kSwitchFlags = {"--tadpoles"};

Args parse_args(const std::vector<std::string>& args, size_t start) {
  Args out;
  for (size_t i = start; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (!a.empty() && a[0] == '-' && a != "-") {
      std::string key = a, inline_value;
      bool has_inline = false;
      if (auto eq = a.find('='); eq != std::string::npos) {
        key = a.substr(0, eq);
        inline_value = a.substr(eq + 1);
        has_inline = true;
      }
      if (kSwitchFlags.count(key)) {
        if (has_inline) throw UsageError(key + " takes no value");
        out.switches.insert(key);
      } else if (kValueFlags.count(key)) {
        if (has_inline) {
          out.values[key] = inline_value;
        } else {
          if (i + 1 >= args.size()) throw UsageError(key + " requires a value");
          out.values[key] = args[++i];
        }
      } else {
        throw UsageError("unknown option '" + a + "'");
      }
    } else {
      out.positional.push_back(a);
    }
  }
  return out;
}

long long parse_ll(const std::string& text, const std::string& what) {
  size_t used = 0;
  long long v;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError(what + " must be an integer, got '" + text + "'");
  }
  if (used != text.size())
    throw UsageError(what + " must be an integer, got '" + text + "'");
  return v;
}

std::vector<long long> parse_ll_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ','))
    out.push_back(parse_ll(item, what));
  if (out.empty()) throw UsageError(what + " list is empty");
  return out;
}

int require_degree(const Args& a) {
  if (!a.values.count("-n")) throw UsageError("missing -n <2n>");
  long long n = parse_ll(a.value("-n"), "-n");
  if (n < 2 || n % 2 != 0) throw UsageError("-n must be a positive even integer");
  return static_cast<int>(n);
}

int cap_from(const Args& a, int degree, std::ostream& err) {
  int cap = kDefaultDegreeCap;
  if (a.values.count("--cap")) {
    cap = static_cast<int>(parse_ll(a.value("--cap"), "--cap"));
    if (cap < 2) throw UsageError("--cap must be at least 2");
  }
  if (degree > kDefaultDegreeCap && degree <= cap)
    err << "warning: degree " << degree
        << " is above the default cap; enumeration cost grows super-exponentially\n";
  return cap;
}

std::string structured_wrap(const std::string& name, const std::string& body) {
  std::ostringstream os;
  os << name << " {\n";
  std::istringstream is(body);
  std::string line;
  while (std::getline(is, line)) os << "  " << line << "\n";
  os << "}\n";
  return os.str();
}

void emit(std::ostream& out, const Args& a, const std::string& name,
          const std::string& body) {
  std::string format = a.values.count("--format") ? a.value("--format") : "text";
  if (format == "text")
    out << body;
  else if (format == "structured")
    out << structured_wrap(name, body);
  else
    throw UsageError("--format must be text or structured");
}

std::string indent_block(const std::string& text, const std::string& pad) {
  std::ostringstream os;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) os << pad << line << "\n";
  return os.str();
}

ParsedJgd read_jgd(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot open '" + path + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_jgd(buffer.str());
}

SurgeryGraph surgery_from(const ParsedJgd& parsed, const Args& a) {
  std::vector<long long> weights;
  if (a.values.count("--weights"))
    weights = parse_ll_list(a.value("--weights"), "--weights");
  else if (parsed.weights)
    weights = *parsed.weights;
  else
    weights.assign(parsed.diagram.vertex_count, 2);  // the 2v_i construction
  if (static_cast<int>(weights.size()) != parsed.diagram.vertex_count)
    throw UsageError("expected " + std::to_string(parsed.diagram.vertex_count) +
                     " weights");
  for (long long w : weights)
    if (w < 1) throw UsageError("weights must be positive");
  return make_surgery_graph(parsed.diagram, weights);
}

std::string jgd_block(const Diagram& d, const std::string& pad) {
  return pad + "jgd {\n" + indent_block(serialize_diagram(d), pad + "  ") + pad + "}\n";
}

int cmd_enum(const Args& a, std::ostream& out, std::ostream& err) {
  int degree = require_degree(a);
  int cap = cap_from(a, degree, err);
  auto classes = enumerate_diagrams(degree, a.has("--tadpoles"), cap);
  std::ostringstream os;
  os << "degree = " << degree << "\n";
  os << "count = " << classes.size() << "\n";
  for (size_t i = 0; i < classes.size(); ++i) {
    const CanonicalClass& cls = classes[i];
    AutInfo aut = automorphisms(cls.canonical_form);
    os << "class " << i << " {\n";
    os << "  as_zero = " << (cls.as_zero ? "true" : "false") << "\n";
    os << "  tadpole = " << (has_tadpole(cls.canonical_form) ? "true" : "false") << "\n";
    os << "  aut = " << aut.aut_order << "\n";
    os << "  aut_e = " << aut.edge_fixing_order << "\n";
    os << "  aut_v = " << aut.vertex_action_order << "\n";
    os << jgd_block(cls.canonical_form, "  ");
    os << "}\n";
  }
  emit(out, a, "enum", os.str());
  return 0;
}

int cmd_dim(const Args& a, std::ostream& out, std::ostream& err) {
  int degree = require_degree(a);
  int cap = cap_from(a, degree, err);
  ASpaceBasis basis = a_space_basis(degree, false, cap);
  emit(out, a, "dim", std::to_string(basis.dimension()) + "\n");
  return 0;
}

int cmd_basis(const Args& a, std::ostream& out, std::ostream& err) {
  int degree = require_degree(a);
  int cap = cap_from(a, degree, err);
  ASpaceBasis basis = a_space_basis(degree, false, cap);
  std::vector<std::string> names = generator_names(basis);

  std::ostringstream os;
  os << "degree = " << degree << "\n";
  os << "dimension = " << basis.dimension() << "\n";
  os << "generators = " << basis.generators.size() << "\n";
  for (size_t i = 0; i < basis.generators.size(); ++i) {
    os << "generator " << i << " {\n";
    os << "  name = " << names[i] << "\n";
    os << jgd_block(basis.generators[i].canonical_form, "  ");
    os << "}\n";
  }
  os << "basis_columns =";
  for (int c : basis.basis_columns) os << " " << c;
  os << "\n";
  os << "reduction {\n";
  for (size_t i = 0; i < basis.generators.size(); ++i) {
    DiagramVector v;
    v.add(basis.generators[i], 1);
    os << "  " << names[i] << " =";
    for (const Rational& c : reduce(v, basis)) os << " " << to_string(c);
    os << "\n";
  }
  os << "}\n";
  emit(out, a, "basis", os.str());
  return 0;
}

int cmd_reduce(const Args& a, std::ostream& out, std::ostream& err) {
  if (a.positional.size() != 2) throw UsageError("reduce takes one .jgd file");
  ParsedJgd parsed = read_jgd(a.positional[1]);
  int cap = cap_from(a, parsed.diagram.vertex_count, err);
  ASpaceBasis basis = a_space_basis(parsed.diagram.vertex_count, false, cap);
  DiagramVector v;
  v.add_diagram(parsed.diagram, 1);
  std::vector<Rational> coords = reduce(v, basis);

  std::ostringstream os;
  os << format_coords(coords, basis) << "\n";
  emit(out, a, "reduce", os.str());
  return 0;
}

int cmd_pair(const Args& a, std::ostream& out, std::ostream&) {
  if (a.positional.size() != 3)
    throw UsageError("pair takes <surgery.jgd> <test.jgd>");
  ParsedJgd sp = read_jgd(a.positional[1]);
  ParsedJgd tp = read_jgd(a.positional[2]);
  if (tp.weights)
    throw SemanticError("test input must not carry a weights directive", 0);
  SurgeryGraph s = surgery_from(sp, a);

  std::ostringstream os;
  os << "contract = " << to_string(contract(s, tp.diagram)) << "\n";
  os << "contract_full = " << to_string(contract_full(s, tp.diagram)) << "\n";
  emit(out, a, "pair", os.str());
  return 0;
}

int cmd_zeta(const Args& a, std::ostream& out, std::ostream& err) {
  if (a.positional.size() != 2) throw UsageError("zeta takes one surgery .jgd file");
  ParsedJgd parsed = read_jgd(a.positional[1]);
  SurgeryGraph s = surgery_from(parsed, a);
  int cap = cap_from(a, s.shape.vertex_count, err);
  ASpaceBasis basis = a_space_basis(s.shape.vertex_count, false, cap);
  std::vector<Rational> coords = zeta_evaluate(s, basis);

  std::ostringstream os;
  os << format_coords(coords, basis) << "\n";
  emit(out, a, "zeta", os.str());
  return 0;
}

int require_k(const Args& a) {
  if (!a.values.count("--k")) throw UsageError("missing --k <k>");
  return static_cast<int>(parse_ll(a.value("--k"), "--k"));
}

int cmd_const(const Args& a, std::ostream& out, std::ostream&) {
  int k = require_k(a);
  if (k < 3) throw UsageError("--k must be at least 3");
  ConstantsReport r = constants_report(k);
  std::ostringstream os;
  os << "k = " << r.k << "\n";
  os << "bernoulli = " << to_string(r.bernoulli) << "\n";
  os << "l_top = " << to_string(r.l_top) << "\n";
  os << "a = " << r.a_parity << "\n";
  os << "p_dep = " << to_string(r.p_dep) << "\n";
  os << "zeta_dep = " << to_string(r.zeta_dep) << "\n";
  os << "correction = " << to_string(r.correction) << "\n";
  emit(out, a, "const", os.str());
  return 0;
}

int cmd_lpoly(const Args& a, std::ostream& out, std::ostream&) {
  int k = require_k(a);
  if (k < 1 || k > 10) throw UsageError("--k must be in 1..10");
  emit(out, a, "lpoly", to_text(l_polynomial(k)) + "\n");
  return 0;
}

int cmd_polydim(const Args& a, std::ostream& out, std::ostream&) {
  if (!a.values.count("--dims")) throw UsageError("missing --dims a1,a2,...");
  if (!a.values.count("--max")) throw UsageError("missing --max <2n>");
  std::vector<long long> dims = parse_ll_list(a.value("--dims"), "--dims");
  long long max = parse_ll(a.value("--max"), "--max");
  if (max < 0 || max % 2 != 0) throw UsageError("--max must be a nonnegative even integer");
  std::vector<Integer> out_dims = poly_ring_dims(dims, static_cast<int>(max));
  std::ostringstream os;
  for (size_t i = 0; i < out_dims.size(); ++i)
    os << (i ? " " : "") << out_dims[i].get_str();
  os << "\n";
  emit(out, a, "polydim", os.str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty()) throw UsageError("missing subcommand");
    const std::string& cmd = args[0];
    Args parsed = parse_args(args, cmd == "reduce" || cmd == "pair" || cmd == "zeta" ? 0 : 1);
    if (cmd == "enum") return cmd_enum(parsed, out, err);
    if (cmd == "dim") return cmd_dim(parsed, out, err);
    if (cmd == "basis") return cmd_basis(parsed, out, err);
    if (cmd == "reduce") return cmd_reduce(parsed, out, err);
    if (cmd == "pair") return cmd_pair(parsed, out, err);
    if (cmd == "zeta") return cmd_zeta(parsed, out, err);
    if (cmd == "const") return cmd_const(parsed, out, err);
    if (cmd == "lpoly") return cmd_lpoly(parsed, out, err);
    if (cmd == "polydim") return cmd_polydim(parsed, out, err);
    throw UsageError("unknown subcommand '" + cmd + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kUsage;
    return 1;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gk::cli
