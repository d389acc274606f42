#pragma once

#include <map>
#include <vector>

#include "gk/diagram.hpp"
#include "gk/enumerate.hpp"
#include "gk/rational.hpp"
#include "gk/rational_matrix.hpp"

namespace gk {

// Finite formal rational combination of canonical diagram classes. Zero
// coefficients are never stored; as_zero classes are dropped at insertion,
// after their canonicalization sign has been applied.
class DiagramVector {
 public:
  void add(const CanonicalClass& cls, const Rational& coeff);

  // Canonicalizes d and adds sign * coeff times its class.
  void add_diagram(const Diagram& d, const Rational& coeff);

  const std::map<CanonicalClass, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Degree of the stored terms, or -1 when empty.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

 private:
  std::map<CanonicalClass, Rational> terms_;
};

// One IHX relation per (loop-free diagram class, automorphism orbit of
// edges): the vector I - H + X, where H and X reconnect the four outer
// half-edges of the chosen edge, each term canonicalized with its sign.
// Antisymmetry is not emitted as rows; it is absorbed by signed
// canonicalization and the dropping of as_zero terms.
std::vector<DiagramVector> ihx_relations(int degree, int cap = kDefaultDegreeCap);

struct ASpaceBasis {
  int degree = 0;
  std::vector<CanonicalClass> generators;
  RationalMatrix relation_matrix;      // rows: relations, cols: generators
  std::vector<int> basis_columns;      // pivot-free columns = quotient basis
  RationalMatrix reduction;            // reduced row echelon form of the rows
  std::vector<int> pivot_columns;

  long long dimension() const {
    return static_cast<long long>(generators.size()) -
           static_cast<long long>(pivot_columns.size());
  }
  // Column of a class among the generators, or -1.
  int generator_index(const CanonicalClass& cls) const;
};

// Basis of the degree-2n quotient space with reduction data. Generators are
// the AS-nonzero classes; with include_tadpoles, tadpole classes are appended
// as extra columns, each killed by an explicit 2*[class] row coming from its
// odd loop automorphism (so their vanishing is computed, not assumed).
ASpaceBasis a_space_basis(int degree, bool include_tadpoles = false,
                          int cap = kDefaultDegreeCap);

// Coordinates of the image of v in the quotient with respect to b.
// Throws DegreeMismatch when v carries terms of a different degree.
std::vector<Rational> reduce(const DiagramVector& v, const ASpaceBasis& b);

// Graded dimensions of the free commutative polynomial algebra on generators
// with connected_dims[j-1] generators in degree 2j, up to max_degree. Entry i
// of the result is the dimension in degree 2i. Throws NegativeDim.
std::vector<Integer> poly_ring_dims(const std::vector<long long>& connected_dims,
                                    int max_degree);

}  // namespace gk
