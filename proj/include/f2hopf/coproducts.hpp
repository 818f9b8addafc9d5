#pragma once

// Every coalgebra making a fixed standard-form algebra into a bialgebra.

#include <optional>
#include <string>
#include <vector>

#include "f2hopf/structure.hpp"

namespace f2hopf {

struct RawSolution {
  CoalgebraSC coalg;
  std::string type;  // label X of the dual algebra, "coalgebra of type X*"
  bool hopf = false;
  std::optional<Gf2Mat> antipode;
};

struct RawSolutionSet {
  std::string algebra_label;
  AlgebraSC algebra;
  std::vector<RawSolution> solutions;  // ascending by (C, eps)

  std::size_t hopf_count() const;
  // Index of a coalgebra in the list, or -1.
  long find(const CoalgebraSC& c) const;
};

// Counit candidates with eps(1) = 1 and eps(ab) = eps(a)eps(b), ascending.
std::vector<uint32_t> enumerate_counits(const AlgebraSC& a);

// Raw bialgebra coproducts on a, annotated with type and antipode.
// jobs = 0 uses the process default.
RawSolutionSet solve_coproducts(const AlgebraSC& a, unsigned jobs = 0);

// Same search without annotations; the coalgebras only.
std::vector<CoalgebraSC> solve_coalgebras(const AlgebraSC& a, unsigned jobs = 0);

// identify_algebra(dualize(c)).
std::string coalgebra_type(const CoalgebraSC& c);

}  // namespace f2hopf
