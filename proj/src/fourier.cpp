#include "f2hopf/fourier.hpp"

#include <stdexcept>

#include "f2hopf/coproducts.hpp"
#include "f2hopf/enumerate.hpp"
#include "f2hopf/fixtures.hpp"

namespace f2hopf {

LinearSolution right_integral_space(const Bialgebra& b) {
  const int n = b.n();
  Gf2Mat A(static_cast<std::size_t>(n * n), static_cast<std::size_t>(n));
  for (int mu = 0; mu < n; ++mu)
    for (int rho = 0; rho < n; ++rho) {
      int eq = mu * n + rho;
      for (int nu = 0; nu < n; ++nu)
        if (b.coalg.c(mu, nu, rho)) A.set(eq, nu, !A.get(eq, nu));
      if (rho == 0) A.set(eq, mu, !A.get(eq, mu));
    }
  return solve_linear(A, Gf2Vec(static_cast<std::size_t>(n * n)));
}

Gf2Vec right_integral(const HopfAlgebra& h) {
  auto sol = right_integral_space(h.bi);
  if (sol.nullity() != 1) throw std::logic_error("right integral is not unique up to scale");
  return sol.nullspace.front();
}

FourierData fourier_matrices(const HopfAlgebra& h) {
  const auto& a = h.bi.alg;
  const int n = a.n;
  FourierData d;
  d.source = identify_algebra(a);
  d.target = coalgebra_type(h.bi.coalg);
  d.integral = right_integral(h);
  uint32_t I = static_cast<uint32_t>(d.integral.mask());
  auto in = [&](uint32_t x) { return (__builtin_popcount(x & I) & 1) != 0; };
  d.F = Gf2Mat(n, n);
  d.F_sharp = Gf2Mat(n, n);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      d.F.set(mu, nu, in(a.prod(nu, mu)));
      d.F_sharp.set(mu, nu, in(a.prod(mu, nu)));
    }
  if (!invert(d.F)) throw std::logic_error("Fourier matrix is singular");
  return d;
}

bool is_dual_identification(const CoalgebraSC& c, const std::string& target, const Gf2Mat& J) {
  const int n = c.n;
  if (static_cast<int>(J.rows()) != n || static_cast<int>(J.cols()) != n || !invert(J)) return false;
  const auto& named = AlgebraCatalog::instance().get(n, target).named_form;
  return apply_basis_change(dualize(c), J) == named;
}

Gf2Mat computed_identification(const CoalgebraSC& c) {
  std::string target = coalgebra_type(c);
  std::optional<Gf2Mat> found;
  for_each_invertible(static_cast<std::size_t>(c.n), false, [&](const Gf2Mat& J) {
    if (!found && is_dual_identification(c, target, J)) found = J;
  });
  if (!found) throw std::logic_error("no identification of the dual algebra");
  return *found;
}

FourierData fourier_transport(const HopfAlgebra& h, const Gf2Mat& identification) {
  FourierData d = fourier_matrices(h);
  if (!is_dual_identification(h.bi.coalg, d.target, identification))
    throw std::invalid_argument("fourier_transport: identification is not an algebra isomorphism onto " + d.target);
  d.identification = identification;
  d.transport = d.F * identification;
  return d;
}

FourierData fourier_transport(const HopfAlgebra& h) {
  return fourier_transport(h, computed_identification(h.bi.coalg));
}

FourierData self_dual_transport(const HopfAlgebra& h, const Gf2Mat& J) {
  FourierData d = fourier_matrices(h);
  const int n = h.bi.n();
  if (static_cast<int>(J.rows()) != n || static_cast<int>(J.cols()) != n || !invert(J) ||
      !(apply_basis_change(dualize(h.bi.coalg), J) == h.bi.alg))
    throw std::invalid_argument("self_dual_transport: J does not identify the dual with the algebra");
  d.identification = J;
  d.transport = d.F * J;
  return d;
}

HopfAlgebra dual_on_target(const HopfAlgebra& h, const Gf2Mat& J) {
  Bialgebra dual{dualize(h.bi.coalg), dualize(h.bi.alg)};
  return {apply_basis_change(dual, J), conjugate_antipode(h.s.transpose(), J)};
}

DualPairTransport dual_pair_transport(const HopfAlgebra& h) {
  DualPairTransport r;
  r.forward = fourier_transport(h);
  r.dual_on_target = dual_on_target(h, r.forward.identification);
  r.backward = fourier_transport(r.dual_on_target, r.forward.identification.transpose());
  r.backward_adjoint = r.backward.F_sharp * r.backward.identification;
  r.composite = r.forward.transport * r.backward_adjoint;
  return r;
}

Holonomy holonomy(const std::vector<std::string>& path) {
  if (path.size() < 2) throw std::invalid_argument("holonomy: path needs at least one arrow");
  Holonomy out;
  out.matrix = Gf2Mat::identity(4);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto* row = fixtures::fourier_row(path[i], path[i + 1]);
    if (!row) throw std::invalid_argument("holonomy: no Hopf arrow " + path[i] + " -> " + path[i + 1]);
    auto d = fourier_transport(fixtures::hopf_of(*row), fixtures::identification_of(*row));
    out.matrix = out.matrix * d.transport;
  }
  out.order = multiplicative_order(out.matrix);
  return out;
}

}  // namespace f2hopf
