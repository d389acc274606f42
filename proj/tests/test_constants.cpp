#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "gk/char_constants.hpp"
#include "gk/errors.hpp"
#include "oracles.hpp"

using namespace gk;

TEST_CASE("bernoulli against the Worpitzky oracle") {
  CHECK(bernoulli(1) == Rational(1, 6));
  CHECK(bernoulli(2) == Rational(1, 30));
  CHECK(bernoulli(3) == Rational(1, 42));
  CHECK(bernoulli(4) == Rational(1, 30));
  for (int n = 1; n <= 12; ++n)
    CHECK(bernoulli(n) == abs(oracles::bernoulli_modern_worpitzky(2 * n)));
}

TEST_CASE("explicit small L-polynomials") {
  LPolynomial l1 = l_polynomial(1);
  CHECK(l1.coefficient({1}) == Rational(1, 3));
  CHECK(l1.coefficients.size() == 1);

  LPolynomial l2 = l_polynomial(2);
  CHECK(l2.coefficient({0, 1}) == Rational(7, 45));
  CHECK(l2.coefficient({2}) == Rational(-1, 45));
  CHECK(l2.coefficients.size() == 2);

  LPolynomial l3 = l_polynomial(3);
  CHECK(l3.coefficient({0, 0, 1}) == Rational(62, 945));
  CHECK(l3.coefficient({1, 1}) == Rational(-13, 945));
  CHECK(l3.coefficient({3}) == Rational(2, 945));
  CHECK(l3.coefficients.size() == 3);
}

TEST_CASE("L-polynomials match the explicit-roots oracle") {
  for (int k = 1; k <= 5; ++k) {
    auto expected = oracles::l_polynomial_by_roots(k);
    LPolynomial got = l_polynomial(k);
    CHECK(got.coefficients.size() == expected.size());
    for (const auto& [mono, coeff] : expected) CHECK(got.coefficient(mono) == coeff);
  }
}

TEST_CASE("every monomial has full weight") {
  for (int k = 1; k <= 8; ++k)
    for (const auto& [m, c] : l_polynomial(k).coefficients) {
      int w = 0;
      for (size_t i = 0; i < m.size(); ++i) w += static_cast<int>(i + 1) * m[i];
      CHECK(w == k);
    }
}

TEST_CASE("multiplicativity under Whitney sum through weight 5") {
  // Bigraded symbols: variables 0..4 are the first factor's p_1..p_5,
  // variables 5..9 the second factor's.
  using Mono = std::vector<int>;
  using Poly = std::map<Mono, Rational>;
  const int cap = 5;

  auto weight = [](const Mono& m) {
    int w = 0;
    for (int i = 0; i < 10; ++i) w += (i % 5 + 1) * m[i];
    return w;
  };
  auto mul = [&](const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Mono m(10, 0);
        for (int i = 0; i < 10; ++i) m[i] = ma[i] + mb[i];
        if (weight(m) > cap) continue;
        auto [it, fresh] = out.emplace(std::move(m), 0);
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    return out;
  };
  auto variable = [](int i) {
    Poly p;
    Mono m(10, 0);
    m[i] = 1;
    p[m] = 1;
    return p;
  };
  auto constant = [](const Rational& c) {
    Poly p;
    if (c != 0) p[Mono(10, 0)] = c;
    return p;
  };
  auto add = [](Poly a, const Poly& b) {
    for (const auto& [m, c] : b) {
      auto [it, fresh] = a.emplace(m, 0);
      it->second += c;
      if (it->second == 0) a.erase(it);
    }
    return a;
  };

  // Whitney: p_j of the sum, with p_0 = 1 on both sides.
  std::vector<Poly> p_sum(cap + 1);
  p_sum[0] = constant(1);
  for (int j = 1; j <= cap; ++j) {
    Poly acc;
    for (int a = 0; a <= j; ++a) {
      Poly lhs = (a == 0) ? constant(1) : variable(a - 1);
      Poly rhs = (j - a == 0) ? constant(1) : variable(5 + j - a - 1);
      acc = add(std::move(acc), mul(lhs, rhs));
    }
    p_sum[j] = std::move(acc);
  }

  auto substitute = [&](const LPolynomial& l, int base) {
    // base = -1: p_j -> p_sum[j]; base = 0 or 5: p_j -> variable(base + j - 1)
    Poly acc;
    for (const auto& [m, c] : l.coefficients) {
      Poly term = constant(c);
      for (size_t j = 0; j < m.size(); ++j)
        for (int rep = 0; rep < m[j]; ++rep)
          term = mul(term, base < 0 ? p_sum[j + 1] : variable(base + static_cast<int>(j)));
      acc = add(std::move(acc), term);
    }
    return acc;
  };

  for (int k = 1; k <= cap; ++k) {
    Poly lhs = substitute(l_polynomial(k), -1);
    Poly rhs;
    for (int a = 0; a <= k; ++a) {
      Poly left = (a == 0) ? constant(1) : substitute(l_polynomial(a), 0);
      Poly right = (k - a == 0) ? constant(1) : substitute(l_polynomial(k - a), 5);
      rhs = add(std::move(rhs), mul(left, right));
    }
    // compare the weight-k parts
    for (const auto& [m, c] : lhs)
      if (weight(m) == k) {
        auto it = rhs.find(m);
        REQUIRE(it != rhs.end());
        CHECK(it->second == c);
      }
    for (const auto& [m, c] : rhs)
      if (weight(m) == k) CHECK(lhs.count(m) == 1);
  }
}

TEST_CASE("top coefficient closed form matches the polynomial") {
  CHECK(l_top_coefficient(2) == Rational(1, 3));
  CHECK(l_top_coefficient(3) == Rational(7, 45));
  CHECK(l_top_coefficient(4) == Rational(62, 945));
  for (int k = 2; k <= 8; ++k) {
    std::vector<int> top(k - 1, 0);
    top[k - 2] = 1;
    CHECK(l_top_coefficient(k) == l_polynomial(k - 1).coefficient(top));
  }
}

TEST_CASE("parity rule") {
  CHECK(a_parity(2) == 1);
  CHECK(a_parity(3) == 2);
  CHECK(a_parity(10) == 1);
}

TEST_CASE("framing dependences") {
  CHECK(p_framing_dependence(3) == Rational(48));
  CHECK(p_framing_dependence(4) == Rational(240));  // 2 * 5!
  CHECK(p_framing_dependence(5) == Rational(5040));  // 1 * 7!

  CHECK(zeta2_framing_dependence(3) == Rational(1));
  CHECK(zeta2_framing_dependence(4) == Rational(5));
  CHECK(zeta2_framing_dependence(5) == Rational(105));
}

TEST_CASE("framing correction") {
  CHECK(framing_correction(3) == Rational(15, 112));
  CHECK(framing_correction(4) == Rational(315, 992));
  for (int k = 3; k <= 10; ++k) {
    Rational check = framing_correction(k) * l_top_coefficient(k) * p_framing_dependence(k);
    check.canonicalize();
    CHECK(check == zeta2_framing_dependence(k));
  }
}

TEST_CASE("delta2 of the generating bundle is the theta class") {
  CHECK(delta2_theta() == std::vector<Rational>{Rational(1)});
}

TEST_CASE("constants reports") {
  ConstantsReport r3 = constants_report(3);
  CHECK(r3.bernoulli == Rational(1, 30));
  CHECK(r3.l_top == Rational(7, 45));
  CHECK(r3.a_parity == 1);
  CHECK(r3.p_dep == Rational(48));
  CHECK(r3.zeta_dep == Rational(1));
  CHECK(r3.correction == Rational(15, 112));

  ConstantsReport r4 = constants_report(4);
  CHECK(r4.bernoulli == Rational(1, 42));
  CHECK(r4.l_top == Rational(62, 945));
  CHECK(r4.a_parity == 2);
  CHECK(r4.p_dep == Rational(240));
  CHECK(r4.zeta_dep == Rational(5));
  CHECK(r4.correction == Rational(315, 992));

  CHECK_THROWS_AS(constants_report(2), Error);
}
