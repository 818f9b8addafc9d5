#pragma once

// Small matrix representations of an algebra over F2, and the dual and tensor
// product representations a Hopf structure provides.  Matrices act on column
// vectors, so rho(a) rho(b) = rho(ab).

#include <optional>
#include <string>
#include <vector>

#include "f2hopf/structure.hpp"

namespace f2hopf {

constexpr int kMaxRepDim = 4;

struct Representation {
  int k = 0;
  std::vector<Gf2Mat> images;  // images[mu] = rho(x^mu); images of 1 is the identity
  bool operator==(const Representation& o) const { return k == o.k && images == o.images; }
  bool operator<(const Representation& o) const;
};

AxiomReport check_representation(const AlgebraSC& a, const Representation& r);

// Every unital algebra map A -> M_k(F2), k <= 3, in ascending order of the
// packed images (x^1 first).  A must be in standard form.
std::vector<Representation> enumerate_reps(const AlgebraSC& a, int k, unsigned jobs = 0);

// Some P with P r1(x) P^-1 = r2(x) for all x, searched over GL_k.
std::optional<Gf2Mat> find_equivalence(const Representation& r1, const Representation& r2);
// Orbits under simultaneous conjugation, as sorted index lists; the first
// index of each orbit is its representative.
std::vector<std::vector<std::size_t>> rep_equivalence_classes(const std::vector<Representation>& reps);

Representation direct_sum(const Representation& r1, const Representation& r2);
// x^mu -> sum C^mu_{nu rho} r1(x^nu) (x) r2(x^rho), basis e_i (x) f_j at i*k2 + j.
Representation tensor_rep(const HopfAlgebra& h, const Representation& r1, const Representation& r2);
// x^mu -> r(S x^mu)^T.
Representation dual_rep(const HopfAlgebra& h, const Representation& r);
// Left multiplication on A in its own basis.
Representation regular_rep(const AlgebraSC& a);
Representation counit_rep(const Bialgebra& b);
// span(basis) is invariant under every image.
bool is_subrepresentation(const Representation& r, const std::vector<Gf2Vec>& basis);

// Named generators and a decomposition search over their direct sums.
struct NamedRep {
  std::string name;
  Representation rep;
};
// Names of generators whose direct sum (in the listed order, dimensions
// adding up to r.k) is equivalent to r; empty when there is none.
std::vector<std::string> decompose(const Representation& r, const std::vector<NamedRep>& generators);

// d_sl2 on the basis 1,s,x,w: the representations 1, 1bar, 2, 2bar.
std::vector<NamedRep> dsl2_generators();

struct RepCensus {
  int k = 0;
  std::size_t raw = 0;
  std::size_t classes = 0;
  std::size_t sums_of_generators = 0;  // classes equivalent to a direct sum of the generators
};
RepCensus rep_census(const HopfAlgebra& h, int k, const std::vector<NamedRep>& generators, unsigned jobs = 0);

}  // namespace f2hopf
