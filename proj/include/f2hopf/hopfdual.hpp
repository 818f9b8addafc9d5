#pragma once

// Bialgebra isomorphism classes, the type quiver, dual bialgebras and
// self-duality pairings.

#include <optional>
#include <string>
#include <vector>

#include "f2hopf/coproducts.hpp"

namespace f2hopf {

struct BialgebraClass {
  std::string algebra_label;
  std::string coalgebra_type;
  std::vector<std::size_t> orbit;  // indices into the raw solution list, ascending
  CoalgebraSC representative;      // smallest C in the orbit
  bool hopf = false;
  std::optional<Gf2Mat> antipode;   // of the representative
  std::optional<std::size_t> cop_partner;  // class holding the co-opposite coproduct
};

// Orbits of raw coproducts under the automorphism group of the algebra.
std::vector<BialgebraClass> classify_bialgebras(const AlgebraSC& a, const RawSolutionSet& raw);

namespace reference {
// Partition found by testing every unit-fixing basis change on every pair:
// (a, c_i) ~ (a, c_j) iff some P fixes the product and carries c_i to c_j.
// Affordable for n <= 3 only.
std::vector<std::vector<std::size_t>> classify_pairwise(const AlgebraSC& a, const RawSolutionSet& raw);
}  // namespace reference

struct AlgebraSurvey {
  std::string label;
  AlgebraSC algebra;  // catalog named form
  RawSolutionSet raw;
  std::vector<BialgebraClass> classes;
};

// Raw solutions and classes for every algebra of dimension n, in catalog
// order.  Computed once per process.
const std::vector<AlgebraSurvey>& survey(int n);
const AlgebraSurvey& survey(int n, const std::string& label);

struct ClassRef {
  std::string algebra;  // catalog label
  std::size_t index = 0;  // into survey(n, algebra).classes
  bool operator==(const ClassRef&) const = default;
};
// Class of an arbitrary bialgebra (any basis, any unit position).
ClassRef locate_class(const Bialgebra& b);
// Basis change taking b's algebra onto the catalog named form, unit-normalized first.
Gf2Mat to_named_basis(const AlgebraSC& a);

struct Census {
  int algebras = 0;
  int bialgebras = 0;
  int hopf = 0;
  bool operator==(const Census&) const = default;
};
Census hopf_census(int n);

struct QuiverArrow {
  std::string source, target;
  int multiplicity = 0;
  int hopf_multiplicity = 0;
};

struct QuiverGraph {
  int dimension = 0;
  std::vector<std::string> nodes;
  std::vector<QuiverArrow> arrows;  // sorted by (source, target) in catalog order

  const QuiverArrow* find(const std::string& source, const std::string& target) const;
  int total(bool hopf_only) const;
  std::string to_dot(bool hopf_only = false) const;
};
QuiverGraph build_quiver(int n);

// Dual bialgebra on the dual basis, unit moved to e0.
Bialgebra dual_bialgebra(const Bialgebra& b);
HopfAlgebra dual_hopf(const HopfAlgebra& h);

// True iff P(mu, nu) = <x^mu, x^nu> satisfies <ab,c> = <a(x)b, Delta c>,
// <a,bc> = <Delta a, b(x)c>, <1,.> = eps, <.,1> = eps.  The pairing on
// A(x)A is <a(x)b, c(x)d> = <a,c><b,d>.
bool is_bialgebra_pairing(const Bialgebra& b, const Gf2Mat& P);
// Smallest invertible such P in lexicographic order, if any.
std::optional<Gf2Mat> self_duality_pairing(const Bialgebra& b);
// All invertible self-pairings, lexicographic.
std::vector<Gf2Mat> self_duality_pairings(const Bialgebra& b);

}  // namespace f2hopf
