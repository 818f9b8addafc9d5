#pragma once

// Structure constants of algebras, coalgebras, bialgebras and Hopf algebras
// over F2 in dimension n <= 4.
//
// A rank-3 tensor T with indices (a,b,c) in [0,n)^3 is packed into one
// 64-bit word at bit a*n*n + b*n + c.  For a product this stores V^{ab}_c
// (x^a x^b = sum_c V^{ab}_c x^c); for a coproduct it stores C^a_{bc}
// (Delta x^a = sum C^a_{bc} x^b (x) x^c).
//
// Elements of A are n-bit masks.  Elements of A(x)A are n^2-bit masks with
// x^i (x) x^j at bit i*n+j, and of A(x)A(x)A n^3-bit masks likewise.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f2hopf/gf2.hpp"

namespace f2hopf {

constexpr int kMaxDim = 4;

inline constexpr int tidx(int n, int a, int b, int c) { return (a * n + b) * n + c; }
inline constexpr uint64_t low_mask(int bits) {
  return bits >= 64 ? ~uint64_t{0} : ((uint64_t{1} << bits) - 1);
}

// sum over p in a of (b shifted into block p), i.e. a (x) b with b of width wb.
inline uint64_t outer(uint64_t a, uint64_t b, int wb) {
  uint64_t r = 0;
  while (a) {
    int p = __builtin_ctzll(a);
    a &= a - 1;
    r |= b << (p * wb);
  }
  return r;
}

struct AlgebraSC {
  int n = 0;
  uint64_t V = 0;
  uint32_t eta = 1;

  bool v(int a, int b, int c) const { return (V >> tidx(n, a, b, c)) & 1u; }
  // x^a x^b as an element mask.
  uint32_t prod(int a, int b) const {
    return static_cast<uint32_t>((V >> ((a * n + b) * n)) & low_mask(n));
  }
  uint32_t mul(uint32_t a, uint32_t b) const;
  bool standard() const { return eta == 1; }
  bool commutative() const;
  Gf2Vec eta_vec() const { return Gf2Vec::from_mask(n, eta); }
  bool operator==(const AlgebraSC& o) const { return n == o.n && V == o.V && eta == o.eta; }
  bool operator<(const AlgebraSC& o) const {
    return n != o.n ? n < o.n : V != o.V ? V < o.V : eta < o.eta;
  }
};

struct CoalgebraSC {
  int n = 0;
  uint64_t C = 0;
  uint32_t eps = 1;

  bool c(int a, int b, int d) const { return (C >> tidx(n, a, b, d)) & 1u; }
  // Delta x^a as an n^2-bit mask.
  uint32_t delta(int a) const { return static_cast<uint32_t>((C >> (a * n * n)) & low_mask(n * n)); }
  uint32_t delta_of(uint32_t x) const;
  bool counit(uint32_t x) const { return __builtin_popcount(x & eps) & 1; }
  bool cocommutative() const;
  Gf2Vec eps_vec() const { return Gf2Vec::from_mask(n, eps); }
  bool operator==(const CoalgebraSC& o) const { return n == o.n && C == o.C && eps == o.eps; }
  bool operator<(const CoalgebraSC& o) const {
    return n != o.n ? n < o.n : C != o.C ? C < o.C : eps < o.eps;
  }
};

struct Bialgebra {
  AlgebraSC alg;
  CoalgebraSC coalg;
  int n() const { return alg.n; }
};

struct HopfAlgebra {
  Bialgebra bi;
  Gf2Mat s;  // s(mu,nu) = s^mu_nu, so row mu is S(x^mu)
};

struct TensorSquareElement {
  int n = 0;
  uint32_t coeffs = 0;  // bit mu*n+nu is R_{mu nu}
  bool operator==(const TensorSquareElement& o) const { return n == o.n && coeffs == o.coeffs; }
};

struct AxiomReport {
  bool ok = true;
  std::string axiom;       // name of the first violated axiom
  std::vector<int> index;  // first violated index tuple in lexicographic order
  explicit operator bool() const { return ok; }
  std::string to_string() const;
};

// Element-level helpers.
uint32_t tensor_mul(const AlgebraSC& a, uint32_t s, uint32_t t);             // in A(x)A
uint64_t tensor3_mul(const AlgebraSC& a, uint64_t s, uint64_t t);            // in A(x)A(x)A
uint32_t unit_square(const AlgebraSC& a);                                   // 1(x)1
uint32_t apply_matrix(const Gf2Mat& M, uint32_t x);                         // row vector x times M
uint32_t apply_matrix_tensor(const Gf2Mat& M, const Gf2Mat& N, uint32_t t);  // (M (x) N) t
uint32_t flip_tensor(int n, uint32_t t);                                    // tau: a(x)b -> b(x)a

// Axiom evaluators (word-level); failures carry the first violated tuple.
AxiomReport check_algebra(const AlgebraSC& a);
AxiomReport check_coalgebra(const CoalgebraSC& c);
AxiomReport check_bialgebra(const Bialgebra& b);
// Both antipode identities and all anti-homomorphism identities.
AxiomReport check_antipode(const Bialgebra& b, const Gf2Mat& s);

// Index-loop evaluators written directly from the tensor equations.
namespace reference {
AxiomReport check_algebra(const AlgebraSC& a);
AxiomReport check_coalgebra(const CoalgebraSC& c);
AxiomReport check_bialgebra(const Bialgebra& b);
AxiomReport check_antipode(const Bialgebra& b, const Gf2Mat& s);
}  // namespace reference

// Unique antipode if the bialgebra is Hopf.  Throws std::logic_error if the
// antipode system is consistent but not uniquely solvable.
std::optional<Gf2Mat> solve_antipode(const Bialgebra& b);

AlgebraSC dualize(const CoalgebraSC& c);
CoalgebraSC dualize(const AlgebraSC& a);

enum class Which { product, coproduct };
Bialgebra opposite(const Bialgebra& b, Which which);

TensorSquareElement tensor_square_multiply(const TensorSquareElement& a, const TensorSquareElement& b,
                                           const AlgebraSC& alg);

// Transport of structure along x -> xP (row vectors): the result makes P an
// isomorphism from the input to the output.  Throws if P is singular.
AlgebraSC apply_basis_change(const AlgebraSC& a, const Gf2Mat& P);
CoalgebraSC apply_basis_change(const CoalgebraSC& c, const Gf2Mat& P);
Bialgebra apply_basis_change(const Bialgebra& b, const Gf2Mat& P);
// Antipode transported alongside: P^-1 s P.
Gf2Mat conjugate_antipode(const Gf2Mat& s, const Gf2Mat& P);

// Same transports with P and its inverse given as row masks (hot loops).
uint64_t transport_product(int n, uint64_t V, const uint8_t* P, const uint8_t* Pinv);
uint64_t transport_coproduct(int n, uint64_t C, const uint8_t* P, const uint8_t* Pinv);
void invert_rows(int n, const uint8_t* P, uint8_t* Pinv);

// Basis change that sends a (nonzero) unit combination to e_0: row 0 of the
// completion is eta and later rows are the smallest integers outside the span
// so far; the returned matrix is the inverse of that completion.
Gf2Mat unit_normalizer(int n, uint32_t eta);

}  // namespace f2hopf
