#pragma once

// Right integrals, the Fourier transform of a finite Hopf algebra and its
// transport along quiver arrows.

#include <optional>
#include <string>
#include <vector>

#include "f2hopf/structure.hpp"

namespace f2hopf {

// Solutions I of (int (x) id) Delta = 1 int, i.e. C^mu_{nu rho} I^nu = I^mu delta_{rho 0}.
LinearSolution right_integral_space(const Bialgebra& b);
// The unique nonzero right integral; throws std::logic_error otherwise.
Gf2Vec right_integral(const HopfAlgebra& h);

struct FourierData {
  std::string source, target;  // algebra labels; target is the coalgebra type
  Gf2Vec integral;
  Gf2Mat F;        // F^{mu nu} = int(x^nu x^mu)
  Gf2Mat F_sharp;  // int(x^mu x^nu)
  Gf2Mat identification;  // row nu = dual basis element y_nu in the target's named basis
  Gf2Mat transport;       // F * identification
};

// Integral, F and F# only.
FourierData fourier_matrices(const HopfAlgebra& h);

// True iff y_nu -> row nu of J is an algebra isomorphism from the dual of c
// onto the catalog named form of `target`.
bool is_dual_identification(const CoalgebraSC& c, const std::string& target, const Gf2Mat& J);
// Lexicographically smallest such J.
Gf2Mat computed_identification(const CoalgebraSC& c);

// Transport with a given identification (throws std::invalid_argument if it
// is not one) or with the computed one.
FourierData fourier_transport(const HopfAlgebra& h, const Gf2Mat& identification);
FourierData fourier_transport(const HopfAlgebra& h);
// Self-dual case in the algebra's own basis: J must carry the dual of the
// coalgebra onto h's algebra exactly as written, not onto the named form.
FourierData self_dual_transport(const HopfAlgebra& h, const Gf2Mat& J);

// The dual Hopf algebra moved onto the target's named basis along J; J^T then
// identifies its dual with the source again.  Going out with F and back with
// the adjoint F# composes to the antipode of h.
struct DualPairTransport {
  HopfAlgebra dual_on_target;
  FourierData forward, backward;
  Gf2Mat backward_adjoint;  // backward.F_sharp * J^T
  Gf2Mat composite;         // forward.transport * backward_adjoint
};
HopfAlgebra dual_on_target(const HopfAlgebra& h, const Gf2Mat& J);
DualPairTransport dual_pair_transport(const HopfAlgebra& h);

struct Holonomy {
  Gf2Mat matrix;
  std::size_t order = 0;
};
// Product of the published arrow transports along a closed or open path of
// n = 4 node labels, in path order.  Throws std::invalid_argument when an
// arrow has no published representative or the path is too short.
Holonomy holonomy(const std::vector<std::string>& path);

}  // namespace f2hopf
