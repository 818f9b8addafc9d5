#include "f2hopf/repsearch.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "f2hopf/fixtures.hpp"
#include "f2hopf/notation.hpp"
#include "f2hopf/parallel.hpp"

namespace f2hopf {

namespace {

// k x k matrices with k <= 4 packed as entry (i,j) at bit 4i+j.
using Km = uint16_t;

Km km_mul(Km a, Km b, int k) {
  Km r = 0;
  for (int i = 0; i < k; ++i) {
    unsigned row = (a >> (4 * i)) & 0xFu, acc = 0;
    for (; row; row &= row - 1) acc ^= (b >> (4 * __builtin_ctz(row))) & 0xFu;
    r |= static_cast<Km>(acc << (4 * i));
  }
  return r;
}

Km km_identity(int k) {
  Km r = 0;
  for (int i = 0; i < k; ++i) r |= static_cast<Km>(1u << (5 * i));
  return r;
}

Km to_km(const Gf2Mat& m) {
  Km r = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) r |= static_cast<Km>((m.row_mask(i) & 0xFu) << (4 * i));
  return r;
}

Gf2Mat from_km(Km v, int k) {
  Gf2Mat m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((v >> (4 * i + j)) & 1u) m.set(i, j);
  return m;
}

// The c-th k x k matrix in packed order (row 0 in the low bits).
Km nth_matrix(uint32_t c, int k) {
  Km r = 0;
  for (int i = 0; i < k; ++i) r |= static_cast<Km>(((c >> (k * i)) & ((1u << k) - 1)) << (4 * i));
  return r;
}

// sum over rho in `support` of img[rho]
Km combination(uint32_t support, const Km* img) {
  Km r = 0;
  for (; support; support &= support - 1) r ^= img[__builtin_ctz(support)];
  return r;
}

struct GlK {
  std::vector<Km> P, Pinv;
};

const GlK& general_linear(int k) {
  static const std::vector<GlK> cache = [] {
    std::vector<GlK> all(kMaxRepDim + 1);
    for (int d = 1; d <= kMaxRepDim; ++d)
      for (const auto& M : enumerate_invertible(d, false)) {
        all[d].P.push_back(to_km(M));
        all[d].Pinv.push_back(to_km(*invert(M)));
      }
    return all;
  }();
  if (k < 1 || k > kMaxRepDim) throw std::invalid_argument("representation dimension out of range");
  return cache[k];
}

std::vector<Km> packed(const Representation& r) {
  std::vector<Km> v;
  for (const auto& m : r.images) v.push_back(to_km(m));
  return v;
}

Representation unpack(const std::vector<Km>& v, int k) {
  Representation r;
  r.k = k;
  for (Km m : v) r.images.push_back(from_km(m, k));
  return r;
}

Gf2Mat kron(const Gf2Mat& a, const Gf2Mat& b) {
  const std::size_t ka = a.rows(), kb = b.rows();
  Gf2Mat m(ka * kb, ka * kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j)
      if (a.get(i, j))
        for (std::size_t p = 0; p < kb; ++p)
          for (std::size_t q = 0; q < kb; ++q)
            if (b.get(p, q)) m.set(i * kb + p, j * kb + q);
  return m;
}

Gf2Mat add(Gf2Mat a, const Gf2Mat& b) {
  for (std::size_t i = 0; i < a.rows(); ++i) a.row(i) += b.row(i);
  return a;
}

}  // namespace

bool Representation::operator<(const Representation& o) const {
  if (k != o.k) return k < o.k;
  return images < o.images;
}

AxiomReport check_representation(const AlgebraSC& a, const Representation& r) {
  AxiomReport bad;
  bad.ok = false;
  const int n = a.n;
  if (static_cast<int>(r.images.size()) != n) {
    bad.axiom = "representation size";
    return bad;
  }
  for (const auto& m : r.images)
    if (static_cast<int>(m.rows()) != r.k || static_cast<int>(m.cols()) != r.k) {
      bad.axiom = "representation shape";
      return bad;
    }
  auto sum = [&](uint32_t support) {
    Gf2Mat s(r.k, r.k);
    for (; support; support &= support - 1) s = add(s, r.images[__builtin_ctz(support)]);
    return s;
  };
  if (!sum(a.eta).is_identity()) {
    bad.axiom = "representation unit";
    return bad;
  }
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      if (r.images[mu] * r.images[nu] != sum(a.prod(mu, nu))) {
        bad.axiom = "representation multiplicative";
        bad.index = {mu, nu};
        return bad;
      }
  return {};
}

std::vector<Representation> enumerate_reps(const AlgebraSC& a, int k, unsigned jobs) {
  if (!a.standard()) throw std::invalid_argument("enumerate_reps: algebra must be in standard form");
  if (k < 1 || k > 3) throw std::invalid_argument("enumerate_reps: k must be 1, 2 or 3");
  const int n = a.n;
  // Relations become checkable at the level of their highest index.
  std::vector<std::vector<std::pair<int, int>>> at_level(n);
  for (int mu = 1; mu < n; ++mu)
    for (int nu = 1; nu < n; ++nu) {
      uint32_t p = a.prod(mu, nu);
      int top = std::max(mu, nu);
      if (p) top = std::max(top, 31 - __builtin_clz(p));
      at_level[top].push_back({mu, nu});
    }
  const uint32_t count = 1u << (k * k);
  std::vector<Km> all(count);
  for (uint32_t c = 0; c < count; ++c) all[c] = nth_matrix(c, k);

  if (n == 1) return {unpack({km_identity(k)}, k)};
  std::vector<std::vector<std::vector<Km>>> parts(count);
  parallel_for(
      count,
      [&](std::size_t first) {
        std::vector<Km> img(n);
        img[0] = km_identity(k);
        auto ok = [&](int level) {
          for (auto [mu, nu] : at_level[level])
            if (km_mul(img[mu], img[nu], k) != combination(a.prod(mu, nu), img.data())) return false;
          return true;
        };
        std::function<void(int)> dfs = [&](int level) {
          if (level == n) {
            parts[first].push_back(img);
            return;
          }
          for (Km m : all) {
            img[level] = m;
            if (ok(level)) dfs(level + 1);
          }
        };
        img[1] = all[first];
        if (ok(1)) dfs(2);
      },
      jobs);
  std::vector<Representation> out;
  for (auto& p : parts)
    for (auto& v : p) out.push_back(unpack(v, k));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Gf2Mat> find_equivalence(const Representation& r1, const Representation& r2) {
  if (r1.k != r2.k || r1.images.size() != r2.images.size()) return std::nullopt;
  const int k = r1.k;
  auto a = packed(r1), b = packed(r2);
  const auto& gl = general_linear(k);
  for (std::size_t i = 0; i < gl.P.size(); ++i) {
    bool good = true;
    for (std::size_t m = 0; m < a.size() && good; ++m) good = km_mul(gl.P[i], a[m], k) == km_mul(b[m], gl.P[i], k);
    if (good) return from_km(gl.P[i], k);
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> rep_equivalence_classes(const std::vector<Representation>& reps) {
  std::map<std::vector<Km>, std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const int k = reps[i].k;
    auto v = packed(reps[i]);
    const auto& gl = general_linear(k);
    std::vector<Km> best;
    for (std::size_t g = 0; g < gl.P.size(); ++g) {
      std::vector<Km> c(v.size());
      for (std::size_t m = 0; m < v.size(); ++m) c[m] = km_mul(km_mul(gl.P[g], v[m], k), gl.Pinv[g], k);
      if (best.empty() || c < best) best = c;
    }
    best.insert(best.begin(), static_cast<Km>(k));
    orbits[best].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [key, idx] : orbits) out.push_back(idx);
  std::sort(out.begin(), out.end());
  return out;
}

Representation direct_sum(const Representation& r1, const Representation& r2) {
  if (r1.images.size() != r2.images.size()) throw std::invalid_argument("direct_sum: different algebras");
  Representation r;
  r.k = r1.k + r2.k;
  for (std::size_t m = 0; m < r1.images.size(); ++m) {
    Gf2Mat s(r.k, r.k);
    for (int i = 0; i < r1.k; ++i)
      for (int j = 0; j < r1.k; ++j)
        if (r1.images[m].get(i, j)) s.set(i, j);
    for (int i = 0; i < r2.k; ++i)
      for (int j = 0; j < r2.k; ++j)
        if (r2.images[m].get(i, j)) s.set(r1.k + i, r1.k + j);
    r.images.push_back(s);
  }
  return r;
}

Representation tensor_rep(const HopfAlgebra& h, const Representation& r1, const Representation& r2) {
  const int n = h.bi.n();
  Representation r;
  r.k = r1.k * r2.k;
  for (int mu = 0; mu < n; ++mu) {
    Gf2Mat m(r.k, r.k);
    for (uint32_t t = h.bi.coalg.delta(mu); t; t &= t - 1) {
      int p = __builtin_ctz(t);
      m = add(m, kron(r1.images[p / n], r2.images[p % n]));
    }
    r.images.push_back(m);
  }
  return r;
}

Representation dual_rep(const HopfAlgebra& h, const Representation& r) {
  Representation d;
  d.k = r.k;
  for (int mu = 0; mu < h.bi.n(); ++mu) {
    Gf2Mat m(r.k, r.k);
    for (uint32_t t = static_cast<uint32_t>(h.s.row_mask(mu)); t; t &= t - 1) m = add(m, r.images[__builtin_ctz(t)]);
    d.images.push_back(m.transpose());
  }
  return d;
}

Representation regular_rep(const AlgebraSC& a) {
  Representation r;
  r.k = a.n;
  for (int mu = 0; mu < a.n; ++mu) {
    Gf2Mat m(a.n, a.n);
    for (int nu = 0; nu < a.n; ++nu)
      for (uint32_t t = a.prod(mu, nu); t; t &= t - 1) m.set(__builtin_ctz(t), nu);
    r.images.push_back(m);
  }
  return r;
}

Representation counit_rep(const Bialgebra& b) {
  Representation r;
  r.k = 1;
  for (int mu = 0; mu < b.n(); ++mu) {
    Gf2Mat m(1, 1);
    m.set(0, 0, (b.coalg.eps >> mu) & 1u);
    r.images.push_back(m);
  }
  return r;
}

bool is_subrepresentation(const Representation& r, const std::vector<Gf2Vec>& basis) {
  auto rank_of = [&](const std::vector<Gf2Vec>& vs) {
    Gf2Mat m(vs.size(), r.k);
    for (std::size_t i = 0; i < vs.size(); ++i) m.row(i) = vs[i];
    return m.rank();
  };
  std::size_t base = rank_of(basis);
  for (const auto& img : r.images)
    for (const auto& v : basis) {
      auto grown = basis;
      grown.push_back(img.apply_col(v));
      if (rank_of(grown) != base) return false;
    }
  return true;
}

std::vector<std::string> decompose(const Representation& r, const std::vector<NamedRep>& generators) {
  std::vector<std::size_t> pick;
  std::vector<std::string> found;
  std::function<bool(std::size_t, int)> go = [&](std::size_t from, int left) {
    if (left == 0) {
      Representation sum = generators[pick[0]].rep;
      for (std::size_t i = 1; i < pick.size(); ++i) sum = direct_sum(sum, generators[pick[i]].rep);
      if (!find_equivalence(sum, r)) return false;
      for (auto i : pick) found.push_back(generators[i].name);
      return true;
    }
    for (std::size_t g = from; g < generators.size(); ++g) {
      if (generators[g].rep.k > left) continue;
      pick.push_back(g);
      if (go(g, left - generators[g].rep.k)) return true;
      pick.pop_back();
    }
    return false;
  };
  go(0, r.k);
  return found;
}

std::vector<NamedRep> dsl2_generators() {
  auto d = fixtures::dsl2();
  auto names = fixtures::kDsl2Names;
  auto rep = [&](int k, const char* s, const char* x, const char* w) {
    Representation r;
    r.k = k;
    r.images.resize(4);
    r.images[0] = Gf2Mat::identity(k);
    r.images[names.find('s')] = parse_matrix(s);
    r.images[names.find('x')] = parse_matrix(x);
    r.images[names.find('w')] = parse_matrix(w);
    return r;
  };
  return {{"1", counit_rep(d.bi)},
          {"1bar", rep(1, "1", "1", "1")},
          {"2", rep(2, "01,10", "11,00", "00,11")},
          {"2bar", rep(2, "01,10", "10,10", "10,10")}};
}

RepCensus rep_census(const HopfAlgebra& h, int k, const std::vector<NamedRep>& generators, unsigned jobs) {
  RepCensus c;
  c.k = k;
  auto reps = enumerate_reps(h.bi.alg, k, jobs);
  c.raw = reps.size();
  auto classes = rep_equivalence_classes(reps);
  c.classes = classes.size();
  for (const auto& cls : classes)
    if (!decompose(reps[cls.front()], generators).empty()) ++c.sums_of_generators;
  return c;
}

}  // namespace f2hopf
