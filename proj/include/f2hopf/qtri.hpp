#pragma once

// Quasitriangular structures R in H (x) H, their quantum Killing forms, and
// the dual coquasitriangular functionals H (x) H -> F2.
//
// R = sum R_{mu nu} x^mu (x) x^nu is a TensorSquareElement.  A functional r
// is stored the same way, bit mu*n+nu holding r(x^mu (x) x^nu); on H* this is
// the element sum r(x^mu (x) x^nu) y_mu (x) y_nu.

#include <optional>
#include <string>
#include <vector>

#include "f2hopf/structure.hpp"

namespace f2hopf {

enum class QtKind { trivial, triangular, strict };
std::string to_string(QtKind k);

struct QuasiTriangularStructure {
  TensorSquareElement R, R_inv, Q;
  QtKind klass = QtKind::trivial;
  bool factorisable = false;
};

struct QtClassification {
  QtKind klass = QtKind::trivial;
  bool factorisable = false;
  TensorSquareElement Q;  // R_21 R
};
QtClassification classify_R(const Bialgebra& b, const TensorSquareElement& R);

// Two-sided inverse in A (x) A, if any.
std::optional<TensorSquareElement> tensor_inverse(const AlgebraSC& a, const TensorSquareElement& R);

// Counit conditions, both hexagons, quasi-cocommutativity and invertibility,
// reported in that order.
AxiomReport check_quasitriangular(const Bialgebra& b, const TensorSquareElement& R);

// R12 R13 R23 == R23 R13 R12 in A (x) A (x) A.
bool yang_baxter(const AlgebraSC& a, const TensorSquareElement& R);

// All R over the 2^(n^2) candidates, ascending by bit pattern.
std::vector<QuasiTriangularStructure> enumerate_quasitriangular(const Bialgebra& b, unsigned jobs = 0);
// Same, and also checks R^-1 = (S (x) id) R and (S (x) S) R = R for every
// solution; a mismatch throws std::logic_error.
std::vector<QuasiTriangularStructure> enumerate_quasitriangular(const HopfAlgebra& h, unsigned jobs = 0);

// Functionals checked directly: multiplicativity in each slot, the
// quasi-commutativity identity, the counit conditions and convolution
// invertibility.
AxiomReport check_coquasitriangular(const Bialgebra& b, uint32_t r);
std::vector<uint32_t> enumerate_coquasitriangular(const Bialgebra& b, unsigned jobs = 0);
// Quasitriangular structures of the dual, read back as functionals on h.
std::vector<uint32_t> coquasitriangular_via_dual(const Bialgebra& b, unsigned jobs = 0);

struct QtClassResult {
  std::string algebra;          // catalog label
  std::string coalgebra_type;
  std::size_t class_index = 0;  // into survey(n, algebra).classes
  HopfAlgebra hopf;
  std::vector<QuasiTriangularStructure> structures;
  int nontrivial() const;
};

// Every Hopf class of dimension n with its structures (memoized).
const std::vector<QtClassResult>& qt_survey(int n);
const QtClassResult& qt_result(int n, const std::string& algebra, const std::string& coalgebra_type);
// Nontrivial (H, R) pairs over the Hopf classes of dimension n.
int qt_census(int n);

}  // namespace f2hopf
