#include "f2hopf/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "f2hopf/notation.hpp"
#include "f2hopf/parallel.hpp"

namespace f2hopf {

namespace {

struct CatalogEntry {
  int n;
  const char* label;
  const char* relations;
};

// Relation lists in the named bases (basis 1,x[,y[,z]]); unlisted products of
// x,y,z vanish.  Algebras given in the literature as polynomial quotients are
// written out in the basis that the named coproduct tables use.
const CatalogEntry kCatalog[] = {
    {1, "F2", ""},  // the ground field

    {2, "A", ""},
    {2, "B", "xx=x"},
    {2, "C", "xx=1+x"},

    {3, "A", ""},
    {3, "B", "xx=x yy=y"},
    {3, "C", "xx=x"},
    {3, "D", "xx=y yy=x xy=x+y yx=x+y"},
    {3, "E", "xx=y"},
    {3, "F", "xx=y xy=1+y yx=1+y yy=1+x+y"},
    {3, "G", "xx=x xy=y"},

    {4, "A", ""},
    {4, "B", "xx=z"},
    {4, "C", "xx=x"},
    {4, "D", "xx=x xy=z yx=z xz=z zx=z"},
    {4, "E", "xy=z yx=z"},
    {4, "F", "xx=z xy=z yx=z"},
    {4, "G", "xx=y xy=z yx=z"},
    {4, "H", "xx=1+x xy=z yx=z xz=y+z zx=y+z"},
    // x = w^2+w^3, y = w^2, z = w+w^2+w^3 in F2[w]/<w^4+w^3+w^2>
    {4, "I", "xx=y xy=x+y yx=x+y yy=x"},
    // x = y^2, z = y^3+y^2 in F2[y]/<y^4+y^3>
    {4, "J", "xx=x+z xy=x+z yx=x+z yy=x"},
    {4, "K", "xx=x yy=y"},
    // z = x^2, y = 1+x^3 in F2[x]/<x^4+x>
    {4, "L", "xx=z xz=1+y zx=1+y yy=y zz=x"},
    {4, "M", "xx=1+x+y+z yy=y zz=x xz=1+x+y zx=1+x+y"},
    {4, "N", "xx=1+x yy=1+y xy=z yx=z xz=y+z zx=y+z yz=x+z zy=x+z zz=1+x+y+z"},
    // x = z^2, y = 1+z^3 in F2[z]/<z^4+z+1>
    {4, "O", "xx=1+z xy=z yx=z xz=1+y zx=1+y yy=x+y yz=1 zy=1 zz=x"},
    {4, "P", "xx=x yy=y xy=z yx=z xz=z zx=z yz=z zy=z zz=z"},
    {4, "NA", "xy=z"},
    {4, "NB", "xx=z xy=z yy=z"},
    {4, "NC", "xx=x xy=y"},
    {4, "ND", "xx=x yx=y"},
    {4, "NE", "xx=x xy=y xz=z"},
    {4, "NF", "xx=x yx=y xz=z"},
    {4, "NG", "xx=x yy=y xz=z"},
    {4, "NH", "xx=x yx=y xz=z yz=1+x zy=x"},
    {4, "NI", "xy=x+z yx=z yy=1+y yz=x+z zy=x"},
};

std::vector<RowPair> build_group(int n, bool fix_unit) {
  std::vector<RowPair> out;
  for (const auto& r : invertible_row_masks(n, fix_unit)) {
    RowPair p{};
    for (int i = 0; i < n; ++i) p.P[i] = r[i];
    invert_rows(n, p.P, p.Pinv);
    out.push_back(p);
  }
  return out;
}

std::vector<uint64_t> orbit(int n, uint64_t V) {
  std::vector<uint64_t> out;
  for (const auto& g : unit_fixing_group(n)) out.push_back(transport_product(n, V, g.P, g.Pinv));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Backtracking over the products of non-unit basis elements.
class AlgebraSearch {
 public:
  explicit AlgebraSearch(int n) : n_(n), m_(n - 1) {
    for (int i = 0; i < n; ++i) {
      prod_[0][i] = prod_[i][0] = 1u << i;
      set_[0][i] = set_[i][0] = true;
    }
  }

  void run_from(int first_value, std::vector<uint64_t>& out) {
    if (m_ == 0) {
      out.push_back(pack());
      return;
    }
    assign(0, static_cast<uint32_t>(first_value), out);
  }

 private:
  int n_, m_;
  uint32_t prod_[kMaxDim][kMaxDim]{};
  bool set_[kMaxDim][kMaxDim]{};

  uint64_t pack() const {
    uint64_t V = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) V |= static_cast<uint64_t>(prod_[i][j]) << ((i * n_ + j) * n_);
    return V;
  }

  // (x^a x^b) x^c against x^a (x^b x^c) when every needed cell is known.
  bool consistent() const {
    for (int a = 1; a < n_; ++a)
      for (int b = 1; b < n_; ++b) {
        if (!set_[a][b]) continue;
        for (int c = 1; c < n_; ++c) {
          if (!set_[b][c]) continue;
          uint32_t l = 0, r = 0;
          bool known = true;
          for (uint32_t t = prod_[a][b]; t && known; t &= t - 1) {
            int p = __builtin_ctz(t);
            if (!set_[p][c]) known = false;
            else l ^= prod_[p][c];
          }
          for (uint32_t t = prod_[b][c]; t && known; t &= t - 1) {
            int p = __builtin_ctz(t);
            if (!set_[a][p]) known = false;
            else r ^= prod_[a][p];
          }
          if (known && l != r) return false;
        }
      }
    return true;
  }

  void assign(int cell, uint32_t value, std::vector<uint64_t>& out) {
    int a = 1 + cell / m_, b = 1 + cell % m_;
    prod_[a][b] = value;
    set_[a][b] = true;
    if (consistent()) {
      if (cell + 1 == m_ * m_) {
        out.push_back(pack());
      } else {
        for (uint32_t v = 0; v < (1u << n_); ++v) assign(cell + 1, v, out);
      }
    }
    set_[a][b] = false;
  }
};

}  // namespace

const std::vector<RowPair>& unit_fixing_group(int n) {
  static std::once_flag once[kMaxDim + 1];
  static std::vector<RowPair> groups[kMaxDim + 1];
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("unit_fixing_group: dimension out of range");
  std::call_once(once[n], [n] { groups[n] = build_group(n, true); });
  return groups[n];
}

const std::vector<RowPair>& general_linear_group(int n) {
  static std::once_flag once[kMaxDim + 1];
  static std::vector<RowPair> groups[kMaxDim + 1];
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("general_linear_group: dimension out of range");
  std::call_once(once[n], [n] { groups[n] = build_group(n, false); });
  return groups[n];
}

AlgebraCatalog::AlgebraCatalog() : by_dim_(kMaxDim + 1), label_of_(kMaxDim + 1) {
  for (const auto& e : kCatalog) {
    AlgebraClass c;
    c.label = e.label;
    c.named_form = parse_algebra(e.n, e.relations);
    if (auto r = check_algebra(c.named_form); !r)
      throw std::logic_error("catalog algebra " + c.label + " invalid: " + r.to_string());
    c.relations_doc = e.relations;
    auto orb = orbit(e.n, c.named_form.V);
    c.representative = {e.n, orb.front(), 1};
    int id = static_cast<int>(by_dim_[e.n].size());
    for (auto V : orb)
      if (!label_of_[e.n].emplace(V, id).second)
        throw std::logic_error("catalog algebras " + c.label + " and " +
                               by_dim_[e.n][label_of_[e.n][V]].label + " are isomorphic");
    by_dim_[e.n].push_back(std::move(c));
  }
}

const AlgebraCatalog& AlgebraCatalog::instance() {
  static const AlgebraCatalog cat;
  return cat;
}

const std::vector<AlgebraClass>& AlgebraCatalog::classes(int n) const {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("catalog: dimension out of range");
  return by_dim_[n];
}

const AlgebraClass& AlgebraCatalog::get(int n, std::string_view label) const {
  for (const auto& c : classes(n))
    if (c.label == label) return c;
  throw std::invalid_argument("catalog: no algebra " + std::string(label) + " in dimension " + std::to_string(n));
}

std::string AlgebraCatalog::lookup(int n, uint64_t V) const {
  if (n < 0 || n > kMaxDim) return {};
  auto it = label_of_[n].find(V);
  return it == label_of_[n].end() ? std::string{} : by_dim_[n][it->second].label;
}

std::size_t AlgebraCatalog::orbit_union_size(int n) const { return label_of_.at(n).size(); }

std::vector<AlgebraSC> enumerate_algebras(int n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("enumerate_algebras: dimension out of range");
  const int branches = n == 1 ? 1 : (1 << n);
  std::vector<std::vector<uint64_t>> parts(branches);
  parallel_for(branches, [&](std::size_t b) {
    AlgebraSearch s(n);
    s.run_from(static_cast<int>(b), parts[b]);
  });
  std::vector<uint64_t> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  std::vector<AlgebraSC> out;
  out.reserve(all.size());
  for (auto V : all) out.push_back({n, V, 1});
  return out;
}

uint64_t canonical_tensor(int n, uint64_t V) {
  uint64_t best = V;
  for (const auto& g : unit_fixing_group(n)) best = std::min(best, transport_product(n, V, g.P, g.Pinv));
  return best;
}

std::vector<AlgebraClass> classify_algebras(const std::vector<AlgebraSC>& list) {
  std::vector<AlgebraClass> out;
  if (list.empty()) return out;
  const int n = list.front().n;
  std::unordered_map<uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].n != n || !list[i].standard())
      throw std::invalid_argument("classify_algebras: expects standard-form tensors of one dimension");
    index.emplace(list[i].V, i);
  }
  std::vector<bool> done(list.size(), false);
  const auto& cat = AlgebraCatalog::instance();
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (done[i]) continue;
    auto orb = orbit(n, list[i].V);
    AlgebraClass c;
    c.representative = {n, orb.front(), 1};
    for (auto V : orb) {
      auto it = index.find(V);
      if (it == index.end()) throw std::logic_error("classify_algebras: orbit leaves the input list");
      done[it->second] = true;
      c.members.push_back(it->second);
    }
    std::sort(c.members.begin(), c.members.end());
    c.label = cat.lookup(n, c.representative.V);
    if (!c.label.empty()) {
      c.named_form = cat.get(n, c.label).named_form;
      c.relations_doc = cat.get(n, c.label).relations_doc;
    } else {
      c.relations_doc = relations_doc(c.representative);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const AlgebraClass& a, const AlgebraClass& b) { return a.representative.V < b.representative.V; });
  return out;
}

AlgebraSC to_standard_form(const AlgebraSC& a) {
  if (a.standard()) return a;
  return apply_basis_change(a, unit_normalizer(a.n, a.eta));
}

std::string identify_algebra(const AlgebraSC& a) {
  AlgebraSC s = to_standard_form(a);
  std::string label = AlgebraCatalog::instance().lookup(s.n, s.V);
  if (label.empty()) throw std::logic_error("identify_algebra: no catalog match for " + relations_doc(s));
  return label;
}

std::vector<Gf2Mat> automorphism_group(const AlgebraSC& a) {
  if (!a.standard()) throw std::invalid_argument("automorphism_group: expects standard form");
  std::vector<Gf2Mat> out;
  for (const auto& g : unit_fixing_group(a.n)) {
    if (transport_product(a.n, a.V, g.P, g.Pinv) != a.V) continue;
    Gf2Mat m(a.n, a.n);
    for (int i = 0; i < a.n; ++i) m.row(i) = Gf2Vec::from_mask(a.n, g.P[i]);
    out.push_back(m);
  }
  return out;
}

}  // namespace f2hopf
