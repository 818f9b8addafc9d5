#include "f2hopf/hopfdual.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "f2hopf/enumerate.hpp"

namespace f2hopf {

std::vector<BialgebraClass> classify_bialgebras(const AlgebraSC& a, const RawSolutionSet& raw) {
  const auto& sols = raw.solutions;
  std::map<CoalgebraSC, std::size_t> where;
  for (std::size_t i = 0; i < sols.size(); ++i) where[sols[i].coalg] = i;
  auto aut = automorphism_group(a);

  std::vector<long> class_of(sols.size(), -1);
  std::vector<BialgebraClass> out;
  // Raw solutions are sorted, so the first unclaimed index is its orbit's minimum.
  for (std::size_t i = 0; i < sols.size(); ++i) {
    if (class_of[i] >= 0) continue;
    BialgebraClass cls;
    cls.algebra_label = raw.algebra_label;
    cls.coalgebra_type = sols[i].type;
    cls.representative = sols[i].coalg;
    cls.hopf = sols[i].hopf;
    cls.antipode = sols[i].antipode;
    for (const auto& phi : aut) {
      auto it = where.find(apply_basis_change(sols[i].coalg, phi));
      if (it == where.end()) throw std::logic_error("automorphism moved a coproduct outside the raw set");
      std::size_t j = it->second;
      if (class_of[j] < 0) {
        class_of[j] = static_cast<long>(out.size());
        cls.orbit.push_back(j);
      }
      if (sols[j].hopf != cls.hopf || sols[j].type != cls.coalgebra_type)
        throw std::logic_error("orbit mixes Hopf flags or coalgebra types");
    }
    std::sort(cls.orbit.begin(), cls.orbit.end());
    out.push_back(std::move(cls));
  }
  for (auto& cls : out) {
    auto cop = opposite(Bialgebra{a, cls.representative}, Which::coproduct).coalg;
    auto it = where.find(cop);
    if (it != where.end()) cls.cop_partner = static_cast<std::size_t>(class_of[it->second]);
  }
  return out;
}

namespace reference {

std::vector<std::vector<std::size_t>> classify_pairwise(const AlgebraSC& a, const RawSolutionSet& raw) {
  const auto& sols = raw.solutions;
  std::vector<std::size_t> parent(sols.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto GL = enumerate_invertible(static_cast<std::size_t>(a.n), true);
  for (std::size_t i = 0; i < sols.size(); ++i)
    for (std::size_t j = i + 1; j < sols.size(); ++j) {
      if (root(i) == root(j)) continue;
      for (const auto& P : GL) {
        // P must be an algebra automorphism and a coalgebra map c_i -> c_j.
        Bialgebra moved = apply_basis_change(Bialgebra{a, sols[i].coalg}, P);
        if (moved.alg == a && moved.coalg == sols[j].coalg) {
          parent[root(j)] = root(i);
          break;
        }
      }
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < sols.size(); ++i) groups[root(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, g] : groups) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace reference

const std::vector<AlgebraSurvey>& survey(int n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("survey: dimension out of range");
  static std::once_flag once[kMaxDim + 1];
  static std::vector<AlgebraSurvey> data[kMaxDim + 1];
  std::call_once(once[n], [n] {
    for (const auto& c : AlgebraCatalog::instance().classes(n)) {
      AlgebraSurvey s;
      s.label = c.label;
      s.algebra = c.named_form;
      s.raw = solve_coproducts(c.named_form);
      s.classes = classify_bialgebras(c.named_form, s.raw);
      data[n].push_back(std::move(s));
    }
  });
  return data[n];
}

const AlgebraSurvey& survey(int n, const std::string& label) {
  for (const auto& s : survey(n))
    if (s.label == label) return s;
  throw std::invalid_argument("survey: unknown algebra " + label);
}

Gf2Mat to_named_basis(const AlgebraSC& a) {
  const int n = a.n;
  Gf2Mat N = a.eta == 1 ? Gf2Mat::identity(n) : unit_normalizer(n, a.eta);
  AlgebraSC std_form = apply_basis_change(a, N);
  const auto& target = AlgebraCatalog::instance().get(n, identify_algebra(std_form)).named_form;
  std::optional<Gf2Mat> found;
  for_each_invertible(static_cast<std::size_t>(n), true, [&](const Gf2Mat& P) {
    if (!found && apply_basis_change(std_form, P) == target) found = P;
  });
  if (!found) throw std::logic_error("to_named_basis: no isomorphism onto the named form");
  return N * *found;
}

ClassRef locate_class(const Bialgebra& b) {
  const int n = b.n();
  Bialgebra moved = apply_basis_change(b, to_named_basis(b.alg));
  const auto& s = survey(n, identify_algebra(moved.alg));
  long i = s.raw.find(moved.coalg);
  if (i < 0) throw std::logic_error("locate_class: coproduct missing from the raw solutions");
  for (std::size_t k = 0; k < s.classes.size(); ++k) {
    const auto& orb = s.classes[k].orbit;
    if (std::binary_search(orb.begin(), orb.end(), static_cast<std::size_t>(i))) return {s.label, k};
  }
  throw std::logic_error("locate_class: raw solution in no class");
}

Census hopf_census(int n) {
  Census c;
  for (const auto& s : survey(n)) {
    ++c.algebras;
    for (const auto& cls : s.classes) {
      ++c.bialgebras;
      if (cls.hopf) ++c.hopf;
    }
  }
  return c;
}

const QuiverArrow* QuiverGraph::find(const std::string& source, const std::string& target) const {
  for (const auto& a : arrows)
    if (a.source == source && a.target == target) return &a;
  return nullptr;
}

int QuiverGraph::total(bool hopf_only) const {
  int t = 0;
  for (const auto& a : arrows) t += hopf_only ? a.hopf_multiplicity : a.multiplicity;
  return t;
}

std::string QuiverGraph::to_dot(bool hopf_only) const {
  std::ostringstream os;
  os << "digraph quiver_n" << dimension << " {\n";
  for (const auto& v : nodes) os << "  \"" << v << "\";\n";
  for (const auto& a : arrows) {
    if (hopf_only && a.hopf_multiplicity == 0) continue;
    int m = hopf_only ? a.hopf_multiplicity : a.multiplicity;
    os << "  \"" << a.source << "\" -> \"" << a.target << "\" [label=\"";
    if (!hopf_only && a.hopf_multiplicity > 0 && a.hopf_multiplicity != a.multiplicity)
      os << m << "/" << a.hopf_multiplicity;
    else
      os << m;
    os << "\", hopf=" << (a.hopf_multiplicity > 0 ? "true" : "false") << "];\n";
  }
  os << "}\n";
  return os.str();
}

QuiverGraph build_quiver(int n) {
  QuiverGraph g;
  g.dimension = n;
  std::map<std::string, int> order;
  for (const auto& c : AlgebraCatalog::instance().classes(n)) {
    order[c.label] = static_cast<int>(g.nodes.size());
    g.nodes.push_back(c.label);
  }
  std::map<std::pair<int, int>, QuiverArrow> acc;
  for (const auto& s : survey(n))
    for (const auto& cls : s.classes) {
      auto key = std::make_pair(order.at(cls.algebra_label), order.at(cls.coalgebra_type));
      auto& arr = acc[key];
      arr.source = cls.algebra_label;
      arr.target = cls.coalgebra_type;
      arr.multiplicity++;
      if (cls.hopf) arr.hopf_multiplicity++;
    }
  for (auto& [k, a] : acc) g.arrows.push_back(a);
  return g;
}

Bialgebra dual_bialgebra(const Bialgebra& b) {
  Bialgebra d{dualize(b.coalg), dualize(b.alg)};
  if (d.alg.eta == 1) return d;
  return apply_basis_change(d, unit_normalizer(b.n(), d.alg.eta));
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  HopfAlgebra d{{dualize(h.bi.coalg), dualize(h.bi.alg)}, h.s.transpose()};
  if (d.bi.alg.eta == 1) return d;
  auto N = unit_normalizer(h.bi.n(), d.bi.alg.eta);
  return {apply_basis_change(d.bi, N), conjugate_antipode(d.s, N)};
}

namespace {

// Pairing with rows and columns as masks, checked axiom by axiom.
struct PairingCheck {
  const Bialgebra& b;
  int n;
  std::array<uint32_t, kMaxDim> row{}, col{};

  PairingCheck(const Bialgebra& bi, const Gf2Mat& P) : b(bi), n(bi.n()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (P.get(i, j)) {
          row[i] |= 1u << j;
          col[j] |= 1u << i;
        }
  }

  bool units() const { return row[0] == b.coalg.eps && col[0] == b.coalg.eps; }

  bool ok() const {
    if (!units()) return false;
    auto parity = [](uint32_t x) { return __builtin_popcount(x) & 1; };
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        // <x y, z> against <x (x) y, Delta z>, all z at once.
        uint32_t lhs = 0;
        for (uint32_t r = b.alg.prod(x, y); r; r &= r - 1) lhs ^= row[__builtin_ctz(r)];
        uint32_t pr = static_cast<uint32_t>(outer(row[x], row[y], n));
        for (int z = 0; z < n; ++z)
          if (static_cast<uint32_t>(parity(b.coalg.delta(z) & pr)) != ((lhs >> z) & 1u)) return false;
        // <z, x y> against <Delta z, x (x) y>.
        uint32_t pc = static_cast<uint32_t>(outer(col[x], col[y], n));
        uint32_t prod = b.alg.prod(x, y);
        for (int z = 0; z < n; ++z)
          if (parity(prod & row[z]) != parity(b.coalg.delta(z) & pc)) return false;
      }
    return true;
  }
};

}  // namespace

bool is_bialgebra_pairing(const Bialgebra& b, const Gf2Mat& P) {
  if (static_cast<int>(P.rows()) != b.n() || static_cast<int>(P.cols()) != b.n()) return false;
  return PairingCheck(b, P).ok();
}

std::vector<Gf2Mat> self_duality_pairings(const Bialgebra& b) {
  std::vector<Gf2Mat> out;
  for_each_invertible(static_cast<std::size_t>(b.n()), false, [&](const Gf2Mat& P) {
    if (P.row_mask(0) == b.coalg.eps && is_bialgebra_pairing(b, P)) out.push_back(P);
  });
  return out;
}

std::optional<Gf2Mat> self_duality_pairing(const Bialgebra& b) {
  auto all = self_duality_pairings(b);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace f2hopf
