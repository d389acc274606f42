#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gk/rational.hpp"

namespace gk {

// Sparse exact rational matrix. Zero entries are never stored; all arithmetic
// is exact on arbitrary-precision integers underneath.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, Rational> entries;

  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows(rows), cols(cols) {}

  void set(int r, int c, const Rational& v);
  Rational at(int r, int c) const;
  RationalMatrix transposed() const;
};

// Rank over the rationals by fraction-free (Bareiss) elimination with pivot
// selection by minimal fill.
int rank_exact(const RationalMatrix& m);

// Maximum rank over `prime_count` random word-size primes that divide no entry
// denominator: a lower bound on the rational rank, equal to it with
// overwhelming probability. With verify set, rank_exact is rerun and its value
// returned. Throws NoValidPrime when no usable prime is found.
int rank_modular(const RationalMatrix& m, int prime_count, bool verify = false);

struct RowReduced {
  RationalMatrix reduced;         // reduced row-echelon form, nonzero rows only
  std::vector<int> pivot_columns;  // one per reduced row, increasing
};

RowReduced row_reduce(const RationalMatrix& m);

// Plain triplet text, one "row col p/q" line per entry. For debugging.
std::string to_triplet_text(const RationalMatrix& m);
RationalMatrix from_triplet_text(const std::string& text);

}  // namespace gk
