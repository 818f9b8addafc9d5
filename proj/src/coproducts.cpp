#include "f2hopf/coproducts.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "f2hopf/enumerate.hpp"
#include "f2hopf/parallel.hpp"

namespace f2hopf {

std::size_t RawSolutionSet::hopf_count() const {
  return static_cast<std::size_t>(
      std::count_if(solutions.begin(), solutions.end(), [](const RawSolution& s) { return s.hopf; }));
}

long RawSolutionSet::find(const CoalgebraSC& c) const {
  for (std::size_t i = 0; i < solutions.size(); ++i)
    if (solutions[i].coalg == c) return static_cast<long>(i);
  return -1;
}

std::vector<uint32_t> enumerate_counits(const AlgebraSC& a) {
  const int n = a.n;
  std::vector<uint32_t> out;
  for (uint32_t e = 1; e < (1u << n); e += 2) {
    auto ev = [&](uint32_t x) { return __builtin_popcount(x & e) & 1; };
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      for (int j = 1; j < n && ok; ++j)
        ok = static_cast<uint32_t>(ev(a.prod(i, j))) == (((e >> i) & (e >> j)) & 1u);
    if (ok) out.push_back(e);
  }
  return out;
}

std::string coalgebra_type(const CoalgebraSC& c) { return identify_algebra(dualize(c)); }

namespace {

// Search state: Delta x^mu for the rows assigned so far.
struct State {
  std::array<uint32_t, kMaxDim> row{};
  uint32_t assigned = 1;
};

class Search {
 public:
  Search(const AlgebraSC& a, uint32_t eps) : a_(a), n_(a.n), eps_(eps) {
    for (int mu = 1; mu < n_; ++mu) cands_[mu] = counity_candidates(mu);
    const int w = n_ * n_;
    for (int p = 0; p < w; ++p)
      for (int q = 0; q < w; ++q) mt_[p][q] = tensor_mul(a_, 1u << p, 1u << q);
    // Values already refuted with only this row fixed can never appear.
    for (int mu = 1; mu < n_; ++mu) {
      std::vector<uint32_t> keep;
      for (uint32_t m : cands_[mu]) {
        State t = root();
        if (assign(t, mu, m)) keep.push_back(m);
      }
      cands_[mu].swap(keep);
    }
  }

  const std::vector<uint32_t>& candidates(int mu) const { return cands_[mu]; }

  State root() const {
    State s;
    s.row[0] = 1;  // 1(x)1
    return s;
  }

  // Lowest unassigned row, or -1 at a leaf.
  int next_row(const State& s) const {
    for (int mu = 1; mu < n_; ++mu)
      if (!((s.assigned >> mu) & 1u)) return mu;
    return -1;
  }

  // Fixes row mu and propagates; false when some equation already fails.
  bool assign(State& s, int mu, uint32_t m) const {
    s.row[mu] = m;
    s.assigned |= 1u << mu;
    return propagate(s);
  }

  void run(State s, std::vector<CoalgebraSC>& out) const {
    int mu = next_row(s);
    if (mu < 0) {
      CoalgebraSC c{n_, 0, eps_};
      for (int r = 0; r < n_; ++r) c.C |= static_cast<uint64_t>(s.row[r]) << (r * n_ * n_);
      if (!check_bialgebra({a_, c})) throw std::logic_error("coproduct search produced a non-bialgebra");
      out.push_back(c);
      return;
    }
    for (uint32_t m : cands_[mu]) {
      State t = s;
      if (assign(t, mu, m)) run(t, out);
    }
  }

 private:
  // Product in A(x)A through the basis table.
  uint32_t mul2(uint32_t s, uint32_t t) const {
    std::array<uint32_t, kMaxDim * kMaxDim> left{};
    const int w = n_ * n_;
    for (; s; s &= s - 1) {
      const auto& m = mt_[__builtin_ctz(s)];
      for (int q = 0; q < w; ++q) left[q] ^= m[q];
    }
    uint32_t r = 0;
    for (; t; t &= t - 1) r ^= left[__builtin_ctz(t)];
    return r;
  }

  bool counity_ok(uint32_t m, int mu) const {
    for (int i = 0; i < n_; ++i) {
      uint32_t right = 0, left = 0;
      for (int j = 0; j < n_; ++j) {
        if ((m >> (i * n_ + j)) & 1u) right ^= (eps_ >> j) & 1u;
        if ((m >> (j * n_ + i)) & 1u) left ^= (eps_ >> j) & 1u;
      }
      if (right != (i == mu ? 1u : 0u) || left != (i == mu ? 1u : 0u)) return false;
    }
    return true;
  }

  // (id (x) eps) Delta x^mu = x^mu and (eps (x) id) Delta x^mu = x^mu as a
  // linear system in the n^2 coefficients of Delta x^mu.
  std::vector<uint32_t> counity_candidates(int mu) const {
    const int w = n_ * n_;
    Gf2Mat A(2 * n_, w);
    Gf2Vec b(2 * n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j)
        if ((eps_ >> j) & 1u) {
          A.set(i, i * n_ + j);
          A.set(n_ + i, j * n_ + i);
        }
      if (i == mu) {
        b.set(i);
        b.set(n_ + i);
      }
    }
    auto sol = solve_linear(A, b);
    std::vector<uint32_t> out;
    if (!sol.consistent) return out;
    sol.for_each([&](const Gf2Vec& v) { out.push_back(static_cast<uint32_t>(v.mask())); });
    std::sort(out.begin(), out.end());
    return out;
  }

  // Rows referenced by the coassociativity equation of row mu.
  uint32_t coassoc_support(uint32_t m) const {
    uint32_t dep = 0;
    while (m) {
      int p = __builtin_ctz(m);
      m &= m - 1;
      dep |= (1u << (p / n_)) | (1u << (p % n_));
    }
    return dep;
  }

  bool coassoc_ok(const State& s, int mu) const {
    uint64_t lhs = 0, rhs = 0;
    uint32_t m = s.row[mu];
    while (m) {
      int p = __builtin_ctz(m);
      m &= m - 1;
      int nu = p / n_, rho = p % n_;
      lhs ^= outer(s.row[nu], uint64_t{1} << rho, n_);
      rhs ^= static_cast<uint64_t>(s.row[rho]) << (nu * n_ * n_);
    }
    return lhs == rhs;
  }

  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 1; x < n_; ++x) {
        if (!((s.assigned >> x) & 1u)) continue;
        for (int y = 1; y < n_; ++y) {
          if (!((s.assigned >> y) & 1u)) continue;
          uint32_t support = a_.prod(x, y);
          uint32_t open = support & ~s.assigned;
          if (__builtin_popcount(open) > 1) continue;
          uint32_t want = mul2(s.row[x], s.row[y]);
          uint32_t have = 0;
          for (uint32_t k = support & s.assigned; k; k &= k - 1) have ^= s.row[__builtin_ctz(k)];
          if (!open) {
            if (have != want) return false;
            continue;
          }
          // Delta(x^x x^y) = Delta x^x Delta x^y pins the single open row.
          int r = __builtin_ctz(open);
          s.row[r] = want ^ have;
          if (!counity_ok(s.row[r], r)) return false;
          s.assigned |= open;
          changed = true;
        }
      }
    }
    for (int mu = 1; mu < n_; ++mu) {
      if (!((s.assigned >> mu) & 1u)) continue;
      if ((coassoc_support(s.row[mu]) & ~s.assigned) != 0) continue;
      if (!coassoc_ok(s, mu)) return false;
    }
    return true;
  }

  const AlgebraSC& a_;
  int n_;
  uint32_t eps_;
  std::array<std::vector<uint32_t>, kMaxDim> cands_;
  std::array<std::array<uint32_t, kMaxDim * kMaxDim>, kMaxDim * kMaxDim> mt_{};
};

}  // namespace

std::vector<CoalgebraSC> solve_coalgebras(const AlgebraSC& a, unsigned jobs) {
  if (!a.standard()) throw std::invalid_argument("solve_coproducts needs a standard-form algebra");
  if (!check_algebra(a)) throw std::invalid_argument("solve_coproducts: input is not an algebra");
  std::vector<Search> searches;
  for (uint32_t e : enumerate_counits(a)) searches.emplace_back(a, e);

  // One task per (counit, value of the first free row).
  struct Task {
    std::size_t search;
    uint32_t first;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < searches.size(); ++i) {
    if (a.n == 1) {
      tasks.push_back({i, 0});
      continue;
    }
    for (uint32_t m : searches[i].candidates(1)) tasks.push_back({i, m});
  }
  std::vector<std::vector<CoalgebraSC>> parts(tasks.size());
  parallel_for(
      tasks.size(),
      [&](std::size_t t) {
        const Search& s = searches[tasks[t].search];
        State st = s.root();
        if (a.n > 1 && !s.assign(st, 1, tasks[t].first)) return;
        s.run(st, parts[t]);
      },
      jobs);
  std::vector<CoalgebraSC> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

RawSolutionSet solve_coproducts(const AlgebraSC& a, unsigned jobs) {
  RawSolutionSet set;
  set.algebra = a;
  set.algebra_label = identify_algebra(a);
  auto coalgs = solve_coalgebras(a, jobs);
  set.solutions.resize(coalgs.size());
  parallel_for(
      coalgs.size(),
      [&](std::size_t i) {
        RawSolution& r = set.solutions[i];
        r.coalg = coalgs[i];
        r.type = coalgebra_type(coalgs[i]);
        r.antipode = solve_antipode({a, coalgs[i]});
        r.hopf = r.antipode.has_value();
      },
      jobs);
  return set;
}

}  // namespace f2hopf
