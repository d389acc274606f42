#pragma once

#include <map>
#include <string>
#include <vector>

#include "gk/rational.hpp"

namespace gk {

// n-th Bernoulli number in the topologists' positive convention
// (B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...), i.e. |B_2n| of the even-index
// modern convention. This is the convention under which the top coefficient
// formula reproduces L_2 = (7 p_2 - p_1^2)/45.
Rational bernoulli(int n);

// Weight-k term of the multiplicative sequence of sqrt(t)/tanh(sqrt(t)), as an
// exact rational polynomial in the Pontrjagin symbols p_1..p_k. A monomial is
// an exponent vector (entry i-1 is the exponent of p_i, trailing zeros
// trimmed); every stored monomial has weight exactly k, where p_j has weight j.
struct LPolynomial {
  int k = 0;
  std::map<std::vector<int>, Rational> coefficients;

  Rational coefficient(const std::vector<int>& monomial) const;
};

LPolynomial l_polynomial(int k);  // 1 <= k <= 10

// Coefficient of p_{k-1} in L_{k-1}, by the closed form
// 2^(2k-2) (2^(2k-3) - 1) B_{k-1} / (2k-2)!  (k is the fiber-dimension
// parameter; the L-index is k-1). k >= 2.
Rational l_top_coefficient(int k);

// 1 for even n, 2 for odd n.
int a_parity(int n);

// Framing dependence of the relative Pontrjagin number per unit degree:
// 48 for k = 3 (the dimension-5 case picks up the extra factor 8), and
// a_{k-1} (2k-3)! for k >= 4. The two regimes come from separate arguments
// and the general formula does not reproduce the k = 3 value.
Rational p_framing_dependence(int k);

// Framing dependence of the simplest universal class per unit degree,
// multiplying the theta class: 1 for k = 3, a_{k-1} (2k-3)!/48 for k >= 4.
Rational zeta2_framing_dependence(int k);

// Coefficient of the signature defect in the framing-corrected class. For
// every k >= 3 this equals zeta2_framing_dependence / (l_top_coefficient *
// p_framing_dependence); for k >= 4 it also has the closed form
// (2k-2)! / (3 * 2^(2k+2) * (2^(2k-3) - 1) * B_{k-1}).
Rational framing_correction(int k);

// Coordinates (in the degree-2 basis) of the framing-change class of the
// generating bundle: (1/|Aut Theta|) * (2/2^3) * p_framing_dependence(3)
// times the theta class, which evaluates to exactly 1 * [Theta].
std::vector<Rational> delta2_theta();

struct ConstantsReport {
  int k = 0;
  Rational bernoulli;   // B_{k-1}
  Rational l_top;       // top coefficient of p_{k-1} in L_{k-1}
  int a_parity = 0;     // a_{k-1}
  Rational p_dep;
  Rational zeta_dep;
  Rational correction;
};

// All constants for fiber-dimension parameter k >= 3; throws if the defining
// identity correction * l_top * p_dep = zeta_dep fails.
ConstantsReport constants_report(int k);

std::string to_text(const LPolynomial& p);

}  // namespace gk
