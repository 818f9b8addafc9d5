#include "f2hopf/structure.hpp"

#include <sstream>
#include <stdexcept>

namespace f2hopf {

namespace {

inline bool bit(uint64_t w, int i) { return (w >> i) & 1u; }

AxiomReport fail(std::string axiom, std::vector<int> index) {
  AxiomReport r;
  r.ok = false;
  r.axiom = std::move(axiom);
  r.index = std::move(index);
  return r;
}

// Fast path says "fail": ask the index-loop version for the first tuple.
AxiomReport locate(AxiomReport ref, const char* axiom) {
  if (!ref.ok) return ref;
  return fail(std::string("evaluator disagreement: ") + axiom, {});
}

}  // namespace

std::string AxiomReport::to_string() const {
  if (ok) return "pass";
  std::ostringstream os;
  os << "fail: " << axiom << " at (";
  for (std::size_t i = 0; i < index.size(); ++i) os << (i ? "," : "") << index[i];
  os << ")";
  return os.str();
}

uint32_t AlgebraSC::mul(uint32_t a, uint32_t b) const {
  uint32_t r = 0;
  for (uint32_t x = a; x; x &= x - 1) {
    int i = __builtin_ctz(x);
    for (uint32_t y = b; y; y &= y - 1) r ^= prod(i, __builtin_ctz(y));
  }
  return r;
}

bool AlgebraSC::commutative() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (prod(i, j) != prod(j, i)) return false;
  return true;
}

uint32_t CoalgebraSC::delta_of(uint32_t x) const {
  uint32_t r = 0;
  for (; x; x &= x - 1) r ^= delta(__builtin_ctz(x));
  return r;
}

bool CoalgebraSC::cocommutative() const {
  for (int i = 0; i < n; ++i)
    if (delta(i) != flip_tensor(n, delta(i))) return false;
  return true;
}

uint32_t tensor_mul(const AlgebraSC& a, uint32_t s, uint32_t t) {
  const int n = a.n;
  uint32_t r = 0;
  for (uint32_t x = s; x; x &= x - 1) {
    int p = __builtin_ctz(x), i = p / n, j = p % n;
    for (uint32_t y = t; y; y &= y - 1) {
      int q = __builtin_ctz(y), k = q / n, l = q % n;
      r ^= static_cast<uint32_t>(outer(a.prod(i, k), a.prod(j, l), n));
    }
  }
  return r;
}

uint64_t tensor3_mul(const AlgebraSC& a, uint64_t s, uint64_t t) {
  const int n = a.n;
  uint64_t r = 0;
  for (uint64_t x = s; x; x &= x - 1) {
    int p = __builtin_ctzll(x), i = p / (n * n), j = (p / n) % n, k = p % n;
    for (uint64_t y = t; y; y &= y - 1) {
      int q = __builtin_ctzll(y), i2 = q / (n * n), j2 = (q / n) % n, k2 = q % n;
      r ^= outer(outer(a.prod(i, i2), a.prod(j, j2), n), a.prod(k, k2), n);
    }
  }
  return r;
}

uint32_t unit_square(const AlgebraSC& a) { return static_cast<uint32_t>(outer(a.eta, a.eta, a.n)); }

uint32_t apply_matrix(const Gf2Mat& M, uint32_t x) {
  uint32_t r = 0;
  for (; x; x &= x - 1) r ^= static_cast<uint32_t>(M.row_mask(__builtin_ctz(x)));
  return r;
}

uint32_t apply_matrix_tensor(const Gf2Mat& M, const Gf2Mat& N, uint32_t t) {
  const int n = static_cast<int>(M.rows());
  uint32_t r = 0;
  for (; t; t &= t - 1) {
    int p = __builtin_ctz(t);
    r ^= static_cast<uint32_t>(outer(M.row_mask(p / n), N.row_mask(p % n), n));
  }
  return r;
}

uint32_t flip_tensor(int n, uint32_t t) {
  uint32_t r = 0;
  for (; t; t &= t - 1) {
    int p = __builtin_ctz(t);
    r |= 1u << ((p % n) * n + p / n);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Word-level evaluators.

AxiomReport check_algebra(const AlgebraSC& a) {
  const int n = a.n;
  for (int m = 0; m < n; ++m)
    if (a.mul(a.eta, 1u << m) != (1u << m) || a.mul(1u << m, a.eta) != (1u << m))
      return locate(reference::check_algebra(a), "unit");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (a.mul(a.prod(i, j), 1u << k) != a.mul(1u << i, a.prod(j, k)))
          return locate(reference::check_algebra(a), "associativity");
  return {};
}

namespace {

bool coassociative_at(const CoalgebraSC& c, int m) {
  const int n = c.n;
  uint64_t left = 0, right = 0;
  for (uint32_t t = c.delta(m); t; t &= t - 1) {
    int p = __builtin_ctz(t), a = p / n, b = p % n;
    left ^= outer(c.delta(a), uint64_t{1} << b, n);
    right ^= static_cast<uint64_t>(c.delta(b)) << (a * n * n);
  }
  return left == right;
}

// (eps (x) id) t and (id (x) eps) t for t in A(x)A.
uint32_t eps_left(const CoalgebraSC& c, uint32_t t) {
  uint32_t r = 0;
  for (; t; t &= t - 1) {
    int p = __builtin_ctz(t);
    if ((c.eps >> (p / c.n)) & 1u) r ^= 1u << (p % c.n);
  }
  return r;
}
uint32_t eps_right(const CoalgebraSC& c, uint32_t t) {
  uint32_t r = 0;
  for (; t; t &= t - 1) {
    int p = __builtin_ctz(t);
    if ((c.eps >> (p % c.n)) & 1u) r ^= 1u << (p / c.n);
  }
  return r;
}

}  // namespace

AxiomReport check_coalgebra(const CoalgebraSC& c) {
  for (int m = 0; m < c.n; ++m)
    if (!coassociative_at(c, m)) return locate(reference::check_coalgebra(c), "coassociativity");
  for (int m = 0; m < c.n; ++m)
    if (eps_left(c, c.delta(m)) != (1u << m) || eps_right(c, c.delta(m)) != (1u << m))
      return locate(reference::check_coalgebra(c), "counity");
  return {};
}

AxiomReport check_bialgebra(const Bialgebra& b) {
  const auto& a = b.alg;
  const auto& c = b.coalg;
  if (a.n != c.n) return fail("dimension mismatch", {a.n, c.n});
  if (auto r = check_algebra(a); !r) return r;
  if (auto r = check_coalgebra(c); !r) return r;
  const int n = a.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (c.delta_of(a.prod(i, j)) != tensor_mul(a, c.delta(i), c.delta(j)))
        return locate(reference::check_bialgebra(b), "compatibility");
      if (c.counit(a.prod(i, j)) != (bit(c.eps, i) && bit(c.eps, j)))
        return locate(reference::check_bialgebra(b), "compatibility (counit)");
    }
  if (c.delta_of(a.eta) != unit_square(a) || !c.counit(a.eta))
    return locate(reference::check_bialgebra(b), "unit normalization");
  return {};
}

AxiomReport check_antipode(const Bialgebra& b, const Gf2Mat& s) {
  const auto& a = b.alg;
  const auto& c = b.coalg;
  const int n = a.n;
  if (static_cast<int>(s.rows()) != n || static_cast<int>(s.cols()) != n)
    return fail("antipode shape", {static_cast<int>(s.rows()), static_cast<int>(s.cols())});
  auto S = [&](uint32_t x) { return apply_matrix(s, x); };
  for (int m = 0; m < n; ++m) {
    uint32_t left = 0, right = 0;
    for (uint32_t t = c.delta(m); t; t &= t - 1) {
      int p = __builtin_ctz(t);
      left ^= a.mul(S(1u << (p / n)), 1u << (p % n));
      right ^= a.mul(1u << (p / n), S(1u << (p % n)));
    }
    uint32_t target = bit(c.eps, m) ? a.eta : 0;
    if (left != target || right != target) return locate(reference::check_antipode(b, s), "antipode");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (S(a.prod(i, j)) != a.mul(S(1u << j), S(1u << i)))
        return locate(reference::check_antipode(b, s), "antipode anti-multiplicative");
  if (S(a.eta) != a.eta) return locate(reference::check_antipode(b, s), "antipode unit");
  for (int m = 0; m < n; ++m) {
    if (c.delta_of(S(1u << m)) != flip_tensor(n, apply_matrix_tensor(s, s, c.delta(m))))
      return locate(reference::check_antipode(b, s), "antipode anti-comultiplicative");
    if (c.counit(S(1u << m)) != bit(c.eps, m))
      return locate(reference::check_antipode(b, s), "antipode counit");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Index-loop evaluators.

namespace reference {

AxiomReport check_algebra(const AlgebraSC& a) {
  const int n = a.n;
  auto V = [&](int i, int j, int k) { return a.v(i, j, k); };
  auto eta = [&](int i) { return bit(a.eta, i); };
  for (int m = 0; m < n; ++m)
    for (int r = 0; r < n; ++r) {
      bool l = false, rr = false;
      for (int v = 0; v < n; ++v) {
        l ^= eta(v) && V(v, m, r);
        rr ^= eta(v) && V(m, v, r);
      }
      if (l != (m == r) || rr != (m == r)) return fail("unit", {m, r});
    }
  for (int r = 0; r < n; ++r)
    for (int v = 0; v < n; ++v)
      for (int m = 0; m < n; ++m)
        for (int g = 0; g < n; ++g) {
          bool l = false, rr = false;
          for (int la = 0; la < n; ++la) {
            l ^= V(r, v, la) && V(la, m, g);
            rr ^= V(v, m, la) && V(r, la, g);
          }
          if (l != rr) return fail("associativity", {r, v, m, g});
        }
  return {};
}

AxiomReport check_coalgebra(const CoalgebraSC& c) {
  const int n = c.n;
  auto C = [&](int i, int j, int k) { return c.c(i, j, k); };
  auto eps = [&](int i) { return bit(c.eps, i); };
  for (int m = 0; m < n; ++m)
    for (int al = 0; al < n; ++al)
      for (int be = 0; be < n; ++be)
        for (int g = 0; g < n; ++g) {
          bool l = false, r = false;
          for (int v = 0; v < n; ++v) {
            l ^= C(m, v, g) && C(v, al, be);
            r ^= C(m, al, v) && C(v, be, g);
          }
          if (l != r) return fail("coassociativity", {m, al, be, g});
        }
  for (int m = 0; m < n; ++m)
    for (int r = 0; r < n; ++r) {
      bool l = false, rr = false;
      for (int v = 0; v < n; ++v) {
        l ^= C(m, v, r) && eps(v);
        rr ^= C(m, r, v) && eps(v);
      }
      if (l != (m == r) || rr != (m == r)) return fail("counity", {m, r});
    }
  return {};
}

AxiomReport check_bialgebra(const Bialgebra& b) {
  const auto& a = b.alg;
  const auto& c = b.coalg;
  if (a.n != c.n) return fail("dimension mismatch", {a.n, c.n});
  if (auto r = reference::check_algebra(a); !r) return r;
  if (auto r = reference::check_coalgebra(c); !r) return r;
  const int n = a.n;
  auto V = [&](int i, int j, int k) { return a.v(i, j, k); };
  auto C = [&](int i, int j, int k) { return c.c(i, j, k); };
  auto eps = [&](int i) { return bit(c.eps, i); };
  auto eta = [&](int i) { return bit(a.eta, i); };
  for (int m = 0; m < n; ++m)
    for (int v = 0; v < n; ++v) {
      for (int la = 0; la < n; ++la)
        for (int g = 0; g < n; ++g) {
          bool l = false, r = false;
          for (int ro = 0; ro < n; ++ro) l ^= V(m, v, ro) && C(ro, la, g);
          for (int al = 0; al < n; ++al)
            for (int be = 0; be < n; ++be)
              for (int ro = 0; ro < n; ++ro)
                for (int de = 0; de < n; ++de)
                  r ^= C(m, al, be) && C(v, ro, de) && V(al, ro, la) && V(be, de, g);
          if (l != r) return fail("compatibility", {m, v, la, g});
        }
    }
  for (int m = 0; m < n; ++m)
    for (int v = 0; v < n; ++v) {
      bool l = false;
      for (int ro = 0; ro < n; ++ro) l ^= V(m, v, ro) && eps(ro);
      if (l != (eps(m) && eps(v))) return fail("compatibility (counit)", {m, v});
    }
  for (int v = 0; v < n; ++v)
    for (int ro = 0; ro < n; ++ro) {
      bool l = false;
      for (int m = 0; m < n; ++m) l ^= eta(m) && C(m, v, ro);
      if (l != (eta(v) && eta(ro))) return fail("unit normalization", {v, ro});
    }
  bool e1 = false;
  for (int m = 0; m < n; ++m) e1 ^= eta(m) && eps(m);
  if (!e1) return fail("unit normalization", {});
  return {};
}

AxiomReport check_antipode(const Bialgebra& b, const Gf2Mat& s) {
  const auto& a = b.alg;
  const auto& c = b.coalg;
  const int n = a.n;
  auto V = [&](int i, int j, int k) { return a.v(i, j, k); };
  auto C = [&](int i, int j, int k) { return c.c(i, j, k); };
  auto S = [&](int i, int j) { return s.get(i, j); };
  auto eps = [&](int i) { return bit(c.eps, i); };
  auto eta = [&](int i) { return bit(a.eta, i); };
  for (int m = 0; m < n; ++m)
    for (int be = 0; be < n; ++be) {
      bool l = false, r = false;
      for (int v = 0; v < n; ++v)
        for (int ro = 0; ro < n; ++ro)
          for (int al = 0; al < n; ++al) {
            l ^= C(m, v, ro) && S(v, al) && V(al, ro, be);
            r ^= C(m, v, ro) && S(ro, al) && V(v, al, be);
          }
      bool t = eps(m) && eta(be);
      if (l != t || r != t) return fail("antipode", {m, be});
    }
  for (int m = 0; m < n; ++m)
    for (int v = 0; v < n; ++v)
      for (int la = 0; la < n; ++la) {
        bool l = false, r = false;
        for (int ro = 0; ro < n; ++ro) l ^= V(m, v, ro) && S(ro, la);
        for (int al = 0; al < n; ++al)
          for (int be = 0; be < n; ++be) r ^= S(v, al) && S(m, be) && V(al, be, la);
        if (l != r) return fail("antipode anti-multiplicative", {m, v, la});
      }
  for (int v = 0; v < n; ++v) {
    bool l = false;
    for (int m = 0; m < n; ++m) l ^= eta(m) && S(m, v);
    if (l != eta(v)) return fail("antipode unit", {v});
  }
  for (int m = 0; m < n; ++m)
    for (int al = 0; al < n; ++al)
      for (int be = 0; be < n; ++be) {
        bool l = false, r = false;
        for (int v = 0; v < n; ++v) l ^= S(m, v) && C(v, al, be);
        for (int ta = 0; ta < n; ++ta)
          for (int et = 0; et < n; ++et) r ^= C(m, ta, et) && S(ta, be) && S(et, al);
        if (l != r) return fail("antipode anti-comultiplicative", {m, al, be});
      }
  for (int m = 0; m < n; ++m) {
    bool l = false;
    for (int v = 0; v < n; ++v) l ^= S(m, v) && eps(v);
    if (l != eps(m)) return fail("antipode counit", {m});
  }
  return {};
}

}  // namespace reference

// ---------------------------------------------------------------------------

std::optional<Gf2Mat> solve_antipode(const Bialgebra& b) {
  const auto& a = b.alg;
  const auto& c = b.coalg;
  const int n = a.n;
  // Unknown s^v_al sits at column v*n+al.  Rows 0..n^2-1: m(S (x) id)Delta,
  // rows n^2..2n^2-1: m(id (x) S)Delta, row index m*n+be.
  Gf2Mat A(2 * n * n, n * n);
  Gf2Vec rhs(2 * n * n);
  for (int m = 0; m < n; ++m)
    for (int be = 0; be < n; ++be) {
      int r1 = m * n + be, r2 = n * n + m * n + be;
      for (int v = 0; v < n; ++v)
        for (int ro = 0; ro < n; ++ro) {
          if (!c.c(m, v, ro)) continue;
          for (int al = 0; al < n; ++al) {
            if (a.v(al, ro, be)) A.row(r1).flip(v * n + al);
            if (a.v(v, al, be)) A.row(r2).flip(ro * n + al);
          }
        }
      bool t = bit(c.eps, m) && bit(a.eta, be);
      rhs.set(r1, t);
      rhs.set(r2, t);
    }
  auto sol = solve_linear(A, rhs);
  if (!sol.consistent) return std::nullopt;
  if (sol.nullity() != 0) throw std::logic_error("solve_antipode: antipode system has nonzero nullity");
  Gf2Mat s(n, n);
  for (int v = 0; v < n; ++v)
    for (int al = 0; al < n; ++al)
      if (sol.particular.get(v * n + al)) s.set(v, al);
  return s;
}

AlgebraSC dualize(const CoalgebraSC& c) {
  AlgebraSC a;
  a.n = c.n;
  a.eta = c.eps;
  for (int m = 0; m < c.n; ++m)
    for (int v = 0; v < c.n; ++v)
      for (int r = 0; r < c.n; ++r)
        if (c.c(m, v, r)) a.V |= uint64_t{1} << tidx(c.n, v, r, m);
  return a;
}

CoalgebraSC dualize(const AlgebraSC& a) {
  CoalgebraSC c;
  c.n = a.n;
  c.eps = a.eta;
  for (int v = 0; v < a.n; ++v)
    for (int r = 0; r < a.n; ++r)
      for (int m = 0; m < a.n; ++m)
        if (a.v(v, r, m)) c.C |= uint64_t{1} << tidx(a.n, m, v, r);
  return c;
}

Bialgebra opposite(const Bialgebra& b, Which which) {
  Bialgebra o = b;
  const int n = b.n();
  if (which == Which::product) {
    o.alg.V = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) o.alg.V |= static_cast<uint64_t>(b.alg.prod(j, i)) << ((i * n + j) * n);
  } else {
    o.coalg.C = 0;
    for (int m = 0; m < n; ++m)
      o.coalg.C |= static_cast<uint64_t>(flip_tensor(n, b.coalg.delta(m))) << (m * n * n);
  }
  return o;
}

TensorSquareElement tensor_square_multiply(const TensorSquareElement& a, const TensorSquareElement& b,
                                           const AlgebraSC& alg) {
  if (a.n != b.n || a.n != alg.n) throw std::invalid_argument("tensor_square_multiply: dimension mismatch");
  return {a.n, tensor_mul(alg, a.coeffs, b.coeffs)};
}

void invert_rows(int n, const uint8_t* P, uint8_t* Pinv) {
  uint16_t rows[kMaxDim];
  for (int i = 0; i < n; ++i) rows[i] = static_cast<uint16_t>(P[i] | (1u << (n + i)));
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && !((rows[p] >> c) & 1u)) ++p;
    if (p == n) throw std::invalid_argument("basis change matrix is singular");
    std::swap(rows[p], rows[c]);
    for (int i = 0; i < n; ++i)
      if (i != c && ((rows[i] >> c) & 1u)) rows[i] ^= rows[c];
  }
  for (int i = 0; i < n; ++i) Pinv[i] = static_cast<uint8_t>(rows[i] >> n);
}

namespace {

inline uint32_t apply_rows(const uint8_t* M, uint32_t x) {
  uint32_t r = 0;
  for (; x; x &= x - 1) r ^= M[__builtin_ctz(x)];
  return r;
}

inline uint32_t apply_rows_tensor(int n, const uint8_t* M, uint32_t t) {
  uint32_t r = 0;
  for (; t; t &= t - 1) {
    int p = __builtin_ctz(t);
    r ^= static_cast<uint32_t>(outer(M[p / n], M[p % n], n));
  }
  return r;
}

struct Rows {
  uint8_t P[kMaxDim]{}, Pinv[kMaxDim]{};
};

Rows rows_of(const Gf2Mat& P) {
  const int n = static_cast<int>(P.rows());
  if (n > kMaxDim || P.cols() != P.rows()) throw std::invalid_argument("basis change: bad shape");
  Rows r;
  for (int i = 0; i < n; ++i) r.P[i] = static_cast<uint8_t>(P.row_mask(i));
  invert_rows(n, r.P, r.Pinv);
  return r;
}

uint32_t counit_transport(int n, uint32_t eps, const uint8_t* Pinv) {
  uint32_t e = 0;
  for (int i = 0; i < n; ++i)
    if (__builtin_popcount(Pinv[i] & eps) & 1) e |= 1u << i;
  return e;
}

}  // namespace

uint64_t transport_product(int n, uint64_t V, const uint8_t* P, const uint8_t* Pinv) {
  AlgebraSC a{n, V, 1};
  uint64_t out = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out |= static_cast<uint64_t>(apply_rows(P, a.mul(Pinv[i], Pinv[j]))) << ((i * n + j) * n);
  return out;
}

uint64_t transport_coproduct(int n, uint64_t C, const uint8_t* P, const uint8_t* Pinv) {
  CoalgebraSC c{n, C, 1};
  uint64_t out = 0;
  for (int i = 0; i < n; ++i)
    out |= static_cast<uint64_t>(apply_rows_tensor(n, P, c.delta_of(Pinv[i]))) << (i * n * n);
  return out;
}

AlgebraSC apply_basis_change(const AlgebraSC& a, const Gf2Mat& P) {
  if (static_cast<int>(P.rows()) != a.n) throw std::invalid_argument("apply_basis_change: dimension mismatch");
  Rows r = rows_of(P);
  return {a.n, transport_product(a.n, a.V, r.P, r.Pinv), apply_rows(r.P, a.eta)};
}

CoalgebraSC apply_basis_change(const CoalgebraSC& c, const Gf2Mat& P) {
  if (static_cast<int>(P.rows()) != c.n) throw std::invalid_argument("apply_basis_change: dimension mismatch");
  Rows r = rows_of(P);
  return {c.n, transport_coproduct(c.n, c.C, r.P, r.Pinv), counit_transport(c.n, c.eps, r.Pinv)};
}

Bialgebra apply_basis_change(const Bialgebra& b, const Gf2Mat& P) {
  return {apply_basis_change(b.alg, P), apply_basis_change(b.coalg, P)};
}

Gf2Mat conjugate_antipode(const Gf2Mat& s, const Gf2Mat& P) {
  auto Pinv = invert(P);
  if (!Pinv) throw std::invalid_argument("conjugate_antipode: singular basis change");
  return *Pinv * s * P;
}

Gf2Mat unit_normalizer(int n, uint32_t eta) {
  if (eta == 0 || eta >= (1u << n)) throw std::invalid_argument("unit_normalizer: unit must be a nonzero vector");
  std::vector<uint64_t> rows{eta};
  std::vector<uint8_t> span(1u << n, 0);
  span[0] = span[eta] = 1;
  for (uint32_t v = 1; v < (1u << n) && static_cast<int>(rows.size()) < n; ++v) {
    if (span[v]) continue;
    rows.push_back(v);
    std::vector<uint8_t> s2 = span;
    for (uint32_t u = 0; u < (1u << n); ++u)
      if (span[u]) s2[u ^ v] = 1;
    span = std::move(s2);
  }
  return *invert(Gf2Mat::from_rows(n, rows));
}

}  // namespace f2hopf
