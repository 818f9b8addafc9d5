#include "f2hopf/qtri.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "f2hopf/hopfdual.hpp"
#include "f2hopf/parallel.hpp"

namespace f2hopf {

namespace {

AxiomReport fail(const char* axiom, std::vector<int> index) {
  AxiomReport r;
  r.ok = false;
  r.axiom = axiom;
  r.index = std::move(index);
  return r;
}

bool parity(uint64_t x) { return __builtin_popcountll(x) & 1; }
bool bit(uint64_t x, int i) { return (x >> i) & 1u; }

// Everything about one bialgebra that the R checks reuse.
struct QtContext {
  const Bialgebra& b;
  int n, nn;
  uint32_t one2;  // 1 (x) 1
  uint64_t one1;  // 1 as an n^3 block filler
  std::array<uint32_t, kMaxDim> cop{};  // flip of Delta x^rho

  explicit QtContext(const Bialgebra& bi) : b(bi), n(bi.n()), nn(bi.n() * bi.n()) {
    one2 = unit_square(b.alg);
    one1 = b.alg.eta;
    for (int r = 0; r < n; ++r) cop[r] = flip_tensor(n, b.coalg.delta(r));
  }

  uint64_t r12(uint32_t R) const { return outer(R, one1, n); }
  uint64_t r23(uint32_t R) const { return outer(one1, R, nn); }
  uint64_t r13(uint32_t R) const {
    uint64_t out = 0;
    for (uint32_t t = R; t; t &= t - 1) {
      int p = __builtin_ctz(t);
      out ^= outer(outer(1u << (p / n), one1, n), 1u << (p % n), n);
    }
    return out;
  }

  bool counit(uint32_t R) const {
    uint32_t left = 0, right = 0;
    for (uint32_t t = R; t; t &= t - 1) {
      int p = __builtin_ctz(t), mu = p / n, nu = p % n;
      if (bit(b.coalg.eps, mu)) left ^= 1u << nu;
      if (bit(b.coalg.eps, nu)) right ^= 1u << mu;
    }
    return left == b.alg.eta && right == b.alg.eta;
  }

  // 0 = both hold, 1 = (Delta (x) id) R fails, 2 = (id (x) Delta) R fails.
  int hexagons(uint32_t R) const {
    uint64_t dl = 0, dr = 0;
    for (uint32_t t = R; t; t &= t - 1) {
      int p = __builtin_ctz(t), mu = p / n, nu = p % n;
      dl ^= outer(b.coalg.delta(mu), 1u << nu, n);
      dr ^= outer(1u << mu, b.coalg.delta(nu), nn);
    }
    uint64_t R13 = r13(R);
    if (dl != tensor3_mul(b.alg, R13, r23(R))) return 1;
    if (dr != tensor3_mul(b.alg, R13, r12(R))) return 2;
    return 0;
  }

  // First rho with R Delta x^rho != Delta^cop x^rho R, or -1.
  int quasi_cocommutative(uint32_t R) const {
    for (int r = 0; r < n; ++r)
      if (tensor_mul(b.alg, R, b.coalg.delta(r)) != tensor_mul(b.alg, cop[r], R)) return r;
    return -1;
  }
};

uint32_t inverse_mask(const AlgebraSC& a, uint32_t R) {
  const int nn = a.n * a.n;
  Gf2Mat A(nn, nn);
  for (int k = 0; k < nn; ++k) {
    uint32_t col = tensor_mul(a, R, 1u << k);
    for (int i = 0; i < nn; ++i)
      if (bit(col, i)) A.set(i, k);
  }
  uint32_t one2 = unit_square(a);
  auto sol = solve_linear(A, Gf2Vec::from_mask(nn, one2));
  if (!sol.consistent) return 0;
  uint32_t X = static_cast<uint32_t>(sol.particular.mask());
  if (tensor_mul(a, X, R) != one2) return 0;
  return X;
}

// Candidate loop shared by both enumerators: accept(c) is called on every
// n^2-bit pattern in order and the kept ones come back ascending.
std::vector<uint32_t> scan(int n, const std::function<bool(uint32_t)>& accept, unsigned jobs) {
  const uint32_t total = 1u << (n * n);
  const uint32_t chunk = 1u << 10;
  const std::size_t chunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<uint32_t>> parts(chunks);
  parallel_for(
      chunks,
      [&](std::size_t i) {
        uint32_t lo = static_cast<uint32_t>(i) * chunk, hi = std::min(total, lo + chunk);
        for (uint32_t c = lo; c < hi; ++c)
          if (accept(c)) parts[i].push_back(c);
      },
      jobs);
  std::vector<uint32_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::string to_string(QtKind k) {
  switch (k) {
    case QtKind::trivial: return "trivial";
    case QtKind::triangular: return "triangular";
    case QtKind::strict: return "strict";
  }
  return "?";
}

std::optional<TensorSquareElement> tensor_inverse(const AlgebraSC& a, const TensorSquareElement& R) {
  uint32_t X = inverse_mask(a, R.coeffs);
  if (!X) return std::nullopt;
  return TensorSquareElement{a.n, X};
}

QtClassification classify_R(const Bialgebra& b, const TensorSquareElement& R) {
  const int n = b.n();
  QtClassification c;
  uint32_t one2 = unit_square(b.alg);
  c.Q = {n, tensor_mul(b.alg, flip_tensor(n, R.coeffs), R.coeffs)};
  if (R.coeffs == one2)
    c.klass = QtKind::trivial;
  else if (c.Q.coeffs == one2)
    c.klass = QtKind::triangular;
  else
    c.klass = QtKind::strict;
  Gf2Mat Q(n, n);
  for (int p = 0; p < n * n; ++p)
    if (bit(c.Q.coeffs, p)) Q.set(p / n, p % n);
  c.factorisable = invert(Q).has_value();
  return c;
}

AxiomReport check_quasitriangular(const Bialgebra& b, const TensorSquareElement& R) {
  QtContext ctx(b);
  if (!ctx.counit(R.coeffs)) return fail("R counit", {});
  if (int h = ctx.hexagons(R.coeffs)) return fail(h == 1 ? "R hexagon (Delta x id)" : "R hexagon (id x Delta)", {});
  if (int r = ctx.quasi_cocommutative(R.coeffs); r >= 0) return fail("R quasi-cocommutativity", {r});
  if (!inverse_mask(b.alg, R.coeffs)) return fail("R invertible", {});
  return {};
}

bool yang_baxter(const AlgebraSC& a, const TensorSquareElement& R) {
  Bialgebra dummy{a, CoalgebraSC{a.n, 0, 0}};
  QtContext ctx(dummy);
  uint64_t R12 = ctx.r12(R.coeffs), R13 = ctx.r13(R.coeffs), R23 = ctx.r23(R.coeffs);
  return tensor3_mul(a, tensor3_mul(a, R12, R13), R23) == tensor3_mul(a, tensor3_mul(a, R23, R13), R12);
}

std::vector<QuasiTriangularStructure> enumerate_quasitriangular(const Bialgebra& b, unsigned jobs) {
  QtContext ctx(b);
  const bool flat = b.alg.commutative() && b.coalg.cocommutative();
  auto kept = scan(
      b.n(),
      [&](uint32_t R) {
        if (!ctx.counit(R) || ctx.hexagons(R) != 0) return false;
        if (ctx.quasi_cocommutative(R) >= 0) {
          if (flat) throw std::logic_error("quasi-cocommutativity failed on a commutative cocommutative bialgebra");
          return false;
        }
        return inverse_mask(b.alg, R) != 0;
      },
      jobs);
  std::vector<QuasiTriangularStructure> out;
  for (uint32_t R : kept) {
    QuasiTriangularStructure q;
    q.R = {b.n(), R};
    q.R_inv = {b.n(), inverse_mask(b.alg, R)};
    auto c = classify_R(b, q.R);
    q.Q = c.Q;
    q.klass = c.klass;
    q.factorisable = c.factorisable;
    out.push_back(q);
  }
  return out;
}

std::vector<QuasiTriangularStructure> enumerate_quasitriangular(const HopfAlgebra& h, unsigned jobs) {
  auto out = enumerate_quasitriangular(h.bi, jobs);
  Gf2Mat id = Gf2Mat::identity(h.bi.n());
  for (const auto& q : out) {
    if (apply_matrix_tensor(h.s, id, q.R.coeffs) != q.R_inv.coeffs)
      throw std::logic_error("R^-1 differs from (S x id) R");
    if (apply_matrix_tensor(h.s, h.s, q.R.coeffs) != q.R.coeffs) throw std::logic_error("(S x S) R differs from R");
  }
  return out;
}

AxiomReport check_coquasitriangular(const Bialgebra& b, uint32_t r) {
  const auto& A = b.alg;
  const auto& C = b.coalg;
  const int n = b.n(), nn = n * n;
  std::array<uint32_t, kMaxDim> row{}, col{};  // row[a] = r(a, .), col[c] = r(., c)
  for (int p = 0; p < nn; ++p)
    if (bit(r, p)) {
      row[p / n] |= 1u << (p % n);
      col[p % n] |= 1u << (p / n);
    }
  for (int a = 0; a < n; ++a)
    if (parity(row[a] & A.eta) != bit(C.eps, a) || parity(col[a] & A.eta) != bit(C.eps, a))
      return fail("r counit", {a});
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int c = 0; c < n; ++c) {
        // r(x^a x^b (x) x^c) = r(x^a (x) c1) r(x^b (x) c2)
        if (parity(A.prod(a, bb) & col[c]) != parity(C.delta(c) & outer(row[a], row[bb], n)))
          return fail("r multiplicative (left)", {a, bb, c});
        // r(x^a (x) x^b x^c) = r(a1 (x) x^c) r(a2 (x) x^b)
        if (parity(A.prod(bb, c) & row[a]) != parity(C.delta(a) & outer(col[c], col[bb], n)))
          return fail("r multiplicative (right)", {a, bb, c});
      }
  // g1 h1 r(h2 (x) g2) = r(h1 (x) g1) h2 g2
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      uint32_t lhs = 0, rhs = 0;
      for (uint32_t s = C.delta(g); s; s &= s - 1) {
        int ps = __builtin_ctz(s), p = ps / n, q = ps % n;
        for (uint32_t t = C.delta(h); t; t &= t - 1) {
          int pt = __builtin_ctz(t), u = pt / n, v = pt % n;
          if (bit(r, v * n + q)) lhs ^= A.prod(p, u);
          if (bit(r, u * n + p)) rhs ^= A.prod(v, q);
        }
      }
      if (lhs != rhs) return fail("r quasi-commutativity", {g, h});
    }
  // Convolution inverse: (r * X)(a (x) b) = eps(a) eps(b).
  Gf2Mat M(nn, nn);
  Gf2Vec target(nn);
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb) {
      int eq = a * n + bb;
      if (bit(C.eps, a) && bit(C.eps, bb)) target.set(eq);
      for (uint32_t s = C.delta(a); s; s &= s - 1) {
        int ps = __builtin_ctz(s), p = ps / n, q = ps % n;
        for (uint32_t t = C.delta(bb); t; t &= t - 1) {
          int pt = __builtin_ctz(t), u = pt / n, v = pt % n;
          if (bit(r, p * n + u)) M.row(eq).flip(q * n + v);
        }
      }
    }
  auto sol = solve_linear(M, target);
  if (!sol.consistent) return fail("r convolution invertible", {});
  uint32_t X = static_cast<uint32_t>(sol.particular.mask());
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb) {
      bool v = false;
      for (uint32_t s = C.delta(a); s; s &= s - 1) {
        int ps = __builtin_ctz(s), p = ps / n, q = ps % n;
        for (uint32_t t = C.delta(bb); t; t &= t - 1) {
          int pt = __builtin_ctz(t), u = pt / n, w = pt % n;
          v ^= bit(X, p * n + u) && bit(r, q * n + w);
        }
      }
      if (v != (bit(C.eps, a) && bit(C.eps, bb))) return fail("r convolution invertible", {a, bb});
    }
  return {};
}

std::vector<uint32_t> enumerate_coquasitriangular(const Bialgebra& b, unsigned jobs) {
  return scan(b.n(), [&](uint32_t r) { return static_cast<bool>(check_coquasitriangular(b, r)); }, jobs);
}

std::vector<uint32_t> coquasitriangular_via_dual(const Bialgebra& b, unsigned jobs) {
  Bialgebra dual{dualize(b.coalg), dualize(b.alg)};
  std::vector<uint32_t> out;
  for (const auto& q : enumerate_quasitriangular(dual, jobs)) out.push_back(q.R.coeffs);
  return out;
}

int QtClassResult::nontrivial() const {
  int k = 0;
  for (const auto& q : structures) k += q.klass != QtKind::trivial;
  return k;
}

const std::vector<QtClassResult>& qt_survey(int n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("qt_survey: dimension out of range");
  static std::once_flag once[kMaxDim + 1];
  static std::vector<QtClassResult> data[kMaxDim + 1];
  std::call_once(once[n], [n] {
    for (const auto& s : survey(n))
      for (std::size_t k = 0; k < s.classes.size(); ++k) {
        const auto& c = s.classes[k];
        if (!c.hopf) continue;
        QtClassResult r;
        r.algebra = s.label;
        r.coalgebra_type = c.coalgebra_type;
        r.class_index = k;
        r.hopf = {{s.algebra, c.representative}, *c.antipode};
        r.structures = enumerate_quasitriangular(r.hopf);
        if (c.representative.cocommutative()) {
          bool has_one = false;
          for (const auto& q : r.structures) has_one |= q.klass == QtKind::trivial;
          if (!has_one) throw std::logic_error("cocommutative Hopf algebra without R = 1 (x) 1");
        }
        data[n].push_back(std::move(r));
      }
  });
  return data[n];
}

const QtClassResult& qt_result(int n, const std::string& algebra, const std::string& coalgebra_type) {
  const QtClassResult* found = nullptr;
  for (const auto& r : qt_survey(n))
    if (r.algebra == algebra && r.coalgebra_type == coalgebra_type) {
      if (found) throw std::invalid_argument("qt_result: more than one Hopf class of type " + algebra + "," + coalgebra_type);
      found = &r;
    }
  if (!found) throw std::invalid_argument("qt_result: no Hopf class of type " + algebra + "," + coalgebra_type);
  return *found;
}

int qt_census(int n) {
  int total = 0;
  for (const auto& r : qt_survey(n)) total += r.nontrivial();
  return total;
}

}  // namespace f2hopf
