#include "gk/char_constants.hpp"

#include <sstream>

#include "gk/a_space.hpp"
#include "gk/diagram.hpp"
#include "gk/errors.hpp"

namespace gk {
namespace {

// Modern-convention Bernoulli numbers B_0..B_m (B_1 = -1/2) by the
// binomial-sum recurrence.
std::vector<Rational> bernoulli_modern(int m) {
  std::vector<Rational> B(m + 1);
  B[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * B[j];
    B[n] = -acc / Rational(n + 1);
    B[n].canonicalize();
  }
  return B;
}

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Rational>;

int weight(const Monomial& m) {
  int w = 0;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) w += (i + 1) * m[i];
  return w;
}

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

void add_term(Poly& p, Monomial m, const Rational& c) {
  if (c == 0) return;
  trim(m);
  auto [it, fresh] = p.emplace(std::move(m), 0);
  it->second += c;
  it->second.canonicalize();
  if (it->second == 0) p.erase(it);
}

Poly mul(const Poly& a, const Poly& b, int cap) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (weight(ma) + weight(mb) > cap) continue;
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      add_term(out, std::move(m), ca * cb);
    }
  return out;
}

void add_scaled(Poly& a, const Poly& b, const Rational& s) {
  for (const auto& [m, c] : b) add_term(a, m, c * s);
}

// exp of a polynomial with no constant term, truncated at the weight cap.
Poly exp_truncated(const Poly& f, int cap) {
  Poly out, power;
  out[{}] = 1;
  power[{}] = 1;
  Rational inv_factorial = 1;
  for (int i = 1; i <= cap; ++i) {
    power = mul(power, f, cap);
    if (power.empty()) break;
    inv_factorial /= i;
    add_scaled(out, power, inv_factorial);
  }
  return out;
}

// Coefficients of sqrt(t)/tanh(sqrt(t)) = 1 + t/3 - t^2/45 + 2 t^3/945 - ...
std::vector<Rational> char_series(int cap) {
  std::vector<Rational> q(cap + 1, 0);
  q[0] = 1;
  for (int j = 1; j <= cap; ++j) {
    Rational v = Rational(pow_integer(2, 2 * j)) * bernoulli(j) / Rational(factorial(2 * j));
    q[j] = (j % 2 == 1) ? v : -v;
    q[j].canonicalize();
  }
  return q;
}

// log(1 + u) for the series u = q - 1, as univariate coefficients.
std::vector<Rational> log_series(const std::vector<Rational>& q) {
  int cap = static_cast<int>(q.size()) - 1;
  std::vector<Rational> u(q.begin(), q.end());
  u[0] = 0;
  std::vector<Rational> out(cap + 1, 0), upow(cap + 1, 0);
  upow[0] = 1;
  for (int m = 1; m <= cap; ++m) {
    std::vector<Rational> next(cap + 1, 0);
    for (int i = 0; i <= cap; ++i) {
      if (upow[i] == 0) continue;
      for (int j = 1; i + j <= cap; ++j) next[i + j] += upow[i] * u[j];
    }
    upow = std::move(next);
    Rational s = Rational((m % 2 == 1) ? 1 : -1) / Rational(m);
    for (int i = 0; i <= cap; ++i) out[i] += s * upow[i];
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 1) throw Error("Bernoulli index must be positive");
  return abs(bernoulli_modern(2 * n)[2 * n]);
}

Rational LPolynomial::coefficient(const std::vector<int>& monomial) const {
  Monomial m = monomial;
  trim(m);
  auto it = coefficients.find(m);
  return it == coefficients.end() ? Rational(0) : it->second;
}

LPolynomial l_polynomial(int k) {
  if (k < 1 || k > 10) throw Error("L-polynomial index must be in 1..10");

  std::vector<Rational> c = log_series(char_series(k));

  // Power sums of the formal roots in terms of the elementary symmetric
  // functions e_j = p_j, via Newton's identities.
  std::vector<Poly> s(k + 1);
  for (int j = 1; j <= k; ++j) {
    Poly acc;
    Monomial ej(j, 0);
    ej[j - 1] = 1;
    add_term(acc, ej, Rational((j % 2 == 1) ? j : -j));
    for (int i = 1; i < j; ++i) {
      Poly ei;
      Monomial m(i, 0);
      m[i - 1] = 1;
      ei[m] = Rational((i % 2 == 1) ? 1 : -1);
      add_scaled(acc, mul(ei, s[j - i], k), 1);
    }
    s[j] = std::move(acc);
  }

  Poly log_l;
  for (int j = 1; j <= k; ++j) add_scaled(log_l, s[j], c[j]);
  Poly total = exp_truncated(log_l, k);

  LPolynomial out;
  out.k = k;
  for (const auto& [m, coeff] : total)
    if (weight(m) == k) out.coefficients.emplace(m, coeff);
  return out;
}

Rational l_top_coefficient(int k) {
  if (k < 2) throw Error("l_top_coefficient requires k >= 2");
  Rational v = Rational(pow_integer(2, 2 * k - 2)) *
               Rational(pow_integer(2, 2 * k - 3) - 1) * bernoulli(k - 1) /
               Rational(factorial(2 * k - 2));
  v.canonicalize();
  return v;
}

int a_parity(int n) {
  if (n < 1) throw Error("a_parity requires n >= 1");
  return n % 2 == 0 ? 1 : 2;
}

Rational p_framing_dependence(int k) {
  if (k < 3) throw Error("p_framing_dependence requires k >= 3");
  if (k == 3) return 48;
  return Rational(a_parity(k - 1)) * Rational(factorial(2 * k - 3));
}

Rational zeta2_framing_dependence(int k) {
  if (k < 3) throw Error("zeta2_framing_dependence requires k >= 3");
  if (k == 3) return 1;
  Rational v = Rational(a_parity(k - 1)) * Rational(factorial(2 * k - 3)) / 48;
  v.canonicalize();
  return v;
}

Rational framing_correction(int k) {
  if (k < 3) throw Error("framing_correction requires k >= 3");
  Rational ratio = zeta2_framing_dependence(k) /
                   (l_top_coefficient(k) * p_framing_dependence(k));
  ratio.canonicalize();
  if (k == 3) return ratio;
  Rational closed = Rational(factorial(2 * k - 2)) /
                    (Rational(3) * Rational(pow_integer(2, 2 * k + 2)) *
                     Rational(pow_integer(2, 2 * k - 3) - 1) * bernoulli(k - 1));
  closed.canonicalize();
  if (closed != ratio)
    throw Error("framing correction closed form disagrees with the ratio");
  return closed;
}

std::vector<Rational> delta2_theta() {
  Diagram theta = build_diagram(2, {{0, 1, 2}, {3, 4, 5}},
                                {{0, 3}, {1, 4}, {2, 5}});
  Rational scale = Rational(1, static_cast<long>(automorphisms(theta).aut_order)) *
                   Rational(2, 8) * p_framing_dependence(3);
  ASpaceBasis basis = a_space_basis(2);
  DiagramVector v;
  v.add_diagram(theta, 1);
  std::vector<Rational> coords = reduce(v, basis);
  for (auto& c : coords) {
    c *= scale;
    c.canonicalize();
  }
  return coords;
}

ConstantsReport constants_report(int k) {
  if (k < 3) throw Error("constants_report requires k >= 3");
  ConstantsReport r;
  r.k = k;
  r.bernoulli = bernoulli(k - 1);
  r.l_top = l_top_coefficient(k);
  r.a_parity = a_parity(k - 1);
  r.p_dep = p_framing_dependence(k);
  r.zeta_dep = zeta2_framing_dependence(k);
  r.correction = framing_correction(k);
  Rational check = r.correction * r.l_top * r.p_dep;
  check.canonicalize();
  if (check != r.zeta_dep) throw Error("constants identity violated");
  return r;
}

std::string to_text(const LPolynomial& p) {
  std::ostringstream os;
  os << "L_" << p.k << " =";
  if (p.coefficients.empty()) os << " 0";
  bool first = true;
  for (const auto& [m, c] : p.coefficients) {
    os << (first ? " " : " + ") << to_string(c);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (m[i] == 0) continue;
      os << " * p" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
    first = false;
  }
  return os.str();
}

}  // namespace gk
