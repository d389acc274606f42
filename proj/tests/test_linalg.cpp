#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gk/rational_matrix.hpp"
#include "oracles.hpp"

using namespace gk;

namespace {

RationalMatrix random_matrix(int rows, int cols, std::mt19937& rng) {
  RationalMatrix m(rows, cols);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, entry(rng));
  return m;
}

std::vector<std::vector<Rational>> dense_of(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> d(m.rows, std::vector<Rational>(m.cols, 0));
  for (const auto& [rc, v] : m.entries) d[rc.first][rc.second] = v;
  return d;
}

RationalMatrix identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

}  // namespace

TEST_CASE("rank of trivial matrices") {
  CHECK(rank_exact(identity(3)) == 3);
  CHECK(rank_exact(RationalMatrix(4, 5)) == 0);
}

TEST_CASE("rank_exact agrees with dense elimination on random matrices") {
  std::mt19937 rng(42);
  for (int i = 0; i < 50; ++i) {
    RationalMatrix m = random_matrix(12, 20, rng);
    CHECK(rank_exact(m) == oracles::dense_rank(dense_of(m)));
  }
}

TEST_CASE("rank is invariant under transpose and permutations") {
  std::mt19937 rng(43);
  for (int i = 0; i < 5; ++i) {
    RationalMatrix m = random_matrix(8, 11, rng);
    int r = rank_exact(m);
    CHECK(rank_exact(m.transposed()) == r);

    std::vector<int> rp(m.rows), cp(m.cols);
    for (int j = 0; j < m.rows; ++j) rp[j] = j;
    for (int j = 0; j < m.cols; ++j) cp[j] = j;
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(rp.begin(), rp.end(), rng);
      std::shuffle(cp.begin(), cp.end(), rng);
      RationalMatrix p(m.rows, m.cols);
      for (const auto& [rc, v] : m.entries) p.set(rp[rc.first], cp[rc.second], v);
      CHECK(rank_exact(p) == r);
    }
  }
}

TEST_CASE("row_reduce basics") {
  RationalMatrix m(2, 2);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(1, 0, 2);
  m.set(1, 1, 4);
  RowReduced rr = row_reduce(m);
  REQUIRE(rr.pivot_columns == std::vector<int>{0});
  CHECK(rr.reduced.at(0, 0) == 1);
  CHECK(rr.reduced.at(0, 1) == 2);

  RowReduced id = row_reduce(identity(4));
  CHECK(id.pivot_columns == std::vector<int>{0, 1, 2, 3});
  CHECK(id.reduced.entries == identity(4).entries);
}

TEST_CASE("row_reduce sends unimodular matrices to the identity") {
  std::mt19937 rng(44);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 10;
    auto dense = dense_of(identity(n));
    for (int step = 0; step < 60; ++step) {
      int a = rng() % n, b = rng() % n;
      if (a == b) continue;
      Rational c = coeff(rng);
      for (int j = 0; j < n; ++j) dense[a][j] += c * dense[b][j];
    }
    RationalMatrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.set(r, c, dense[r][c]);
    RowReduced rr = row_reduce(m);
    CHECK(rr.reduced.entries == identity(n).entries);

    // reduction of any original row through the data is zero
    for (int r = 0; r < n; ++r) {
      std::vector<Rational> x(n, 0);
      for (int c = 0; c < n; ++c) x[c] = m.at(r, c);
      for (size_t pr = 0; pr < rr.pivot_columns.size(); ++pr) {
        Rational f = x[rr.pivot_columns[pr]];
        if (f == 0) continue;
        for (int c = 0; c < n; ++c) x[c] -= f * rr.reduced.at(static_cast<int>(pr), c);
      }
      for (int c = 0; c < n; ++c) CHECK(x[c] == 0);
    }
  }
}

TEST_CASE("rank_modular bounds and agreement") {
  CHECK(rank_modular(identity(3), 1) == 3);
  CHECK(rank_modular(identity(3), 3, true) == 3);

  // designed degeneracy: (p, 1; 0, 0) has rank 1 whatever the prime draw,
  // including the draw that hits p itself
  RationalMatrix m(2, 2);
  m.set(0, 0, Rational(Integer("1073741827")));  // 2^30 + 3, in the sampling window
  m.set(0, 1, 1);
  CHECK(rank_modular(m, 3) == 1);

  std::mt19937 rng(45);
  for (int i = 0; i < 20; ++i) {
    RationalMatrix r = random_matrix(9, 9, rng);
    int exact = rank_exact(r);
    int modular = rank_modular(r, 3);
    CHECK(modular <= exact);
    CHECK(modular == exact);
  }
}

TEST_CASE("denominators are handled exactly") {
  RationalMatrix m(2, 3);
  m.set(0, 0, Rational(1, 2));
  m.set(0, 1, Rational(1, 3));
  m.set(0, 2, Rational(1, 6));
  m.set(1, 0, Rational(3, 2));
  m.set(1, 1, Rational(1, 1));
  m.set(1, 2, Rational(1, 5));
  CHECK(rank_exact(m) == 2);
  CHECK(rank_modular(m, 3) == 2);
}

TEST_CASE("triplet text round trip") {
  std::mt19937 rng(46);
  RationalMatrix m = random_matrix(5, 7, rng);
  m.set(1, 1, Rational(22, 7));
  RationalMatrix back = from_triplet_text(to_triplet_text(m));
  CHECK(back.rows == m.rows);
  CHECK(back.cols == m.cols);
  CHECK(back.entries == m.entries);
}
