#include "f2hopf/gf2.hpp"

#include <bit>
#include <sstream>

namespace f2hopf {

Gf2Vec::Gf2Vec(std::size_t len) : len_(len) {
  if (len > kMaxBits) throw std::invalid_argument("Gf2Vec: length exceeds capacity");
}

Gf2Vec Gf2Vec::from_mask(std::size_t len, uint64_t mask) {
  Gf2Vec v(len);
  if (len < 64) mask &= (uint64_t{1} << len) - 1;
  v.w_[0] = mask;
  return v;
}

Gf2Vec Gf2Vec::unit(std::size_t len, std::size_t i) {
  Gf2Vec v(len);
  v.set(i);
  return v;
}

bool Gf2Vec::is_zero() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

std::size_t Gf2Vec::weight() const {
  std::size_t c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

std::size_t Gf2Vec::lowest() const {
  for (std::size_t k = 0; k < kWords; ++k)
    if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
  return len_;
}

bool Gf2Vec::dot(const Gf2Vec& o) const {
  uint64_t acc = 0;
  for (std::size_t k = 0; k < kWords; ++k) acc ^= w_[k] & o.w_[k];
  return std::popcount(acc) & 1;
}

Gf2Vec& Gf2Vec::operator+=(const Gf2Vec& o) {
  if (o.len_ != len_) throw std::invalid_argument("Gf2Vec: length mismatch");
  for (std::size_t k = 0; k < kWords; ++k) w_[k] ^= o.w_[k];
  return *this;
}

bool Gf2Vec::operator<(const Gf2Vec& o) const {
  if (len_ != o.len_) return len_ < o.len_;
  for (std::size_t k = kWords; k-- > 0;)
    if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
  return false;
}

std::string Gf2Vec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < len_; ++i) s += get(i) ? '1' : '0';
  return s;
}

Gf2Mat::Gf2Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), r_(rows, Gf2Vec(cols)) {}

Gf2Mat Gf2Mat::identity(std::size_t n) {
  Gf2Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Mat Gf2Mat::from_rows(std::size_t cols, const std::vector<uint64_t>& rows) {
  Gf2Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.r_[i] = Gf2Vec::from_mask(cols, rows[i]);
  return m;
}

Gf2Mat Gf2Mat::operator*(const Gf2Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Gf2Mat: shape mismatch in product");
  Gf2Mat out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) out.r_[i] = o.apply_row(r_[i]);
  return out;
}

Gf2Vec Gf2Mat::apply_row(const Gf2Vec& v) const {
  if (v.size() != rows_) throw std::invalid_argument("Gf2Mat: shape mismatch in apply_row");
  Gf2Vec out(cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    if (v.get(i)) out += r_[i];
  return out;
}

Gf2Vec Gf2Mat::apply_col(const Gf2Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Gf2Mat: shape mismatch in apply_col");
  Gf2Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.set(i, r_[i].dot(v));
  return out;
}

Gf2Mat Gf2Mat::transpose() const {
  Gf2Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

std::size_t Gf2Mat::rank() const {
  std::vector<Gf2Vec> rows = r_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i)
      if (rows[i].get(c)) rows[i] += rows[rank];
    ++rank;
  }
  return rank;
}

bool Gf2Mat::is_identity() const {
  return rows_ == cols_ && *this == identity(rows_);
}

bool Gf2Mat::operator==(const Gf2Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && r_ == o.r_;
}

bool Gf2Mat::operator<(const Gf2Mat& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (r_[i] < o.r_[i]) return true;
    if (o.r_[i] < r_[i]) return false;
  }
  return false;
}

std::string Gf2Mat::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) os << (i ? "," : "") << r_[i].to_string();
  return os.str();
}

void LinearSolution::for_each(const std::function<void(const Gf2Vec&)>& fn) const {
  if (!consistent) return;
  if (nullspace.size() >= 64) throw std::length_error("LinearSolution: nullity too large to enumerate");
  uint64_t total = uint64_t{1} << nullspace.size();
  Gf2Vec x = particular;
  fn(x);
  // Gray code walk so each step is a single vector addition.
  for (uint64_t g = 1; g < total; ++g) {
    x += nullspace[std::countr_zero(g)];
    fn(x);
  }
}

LinearSolution solve_linear(const Gf2Mat& A, const Gf2Vec& b) {
  if (A.rows() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch between A and b");
  const std::size_t n = A.cols();
  if (n + 1 > Gf2Vec::kMaxBits) throw std::invalid_argument("solve_linear: too many unknowns");
  std::vector<Gf2Vec> rows;
  rows.reserve(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Gf2Vec r(n + 1);
    for (std::size_t j = 0; j < n; ++j)
      if (A.get(i, j)) r.set(j);
    if (b.get(i)) r.set(n);
    rows.push_back(r);
  }
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i].get(c)) rows[i] += rows[rank];
    pivot_col.push_back(c);
    ++rank;
  }
  LinearSolution sol;
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rows[i].get(n)) return sol;
  sol.consistent = true;
  sol.particular = Gf2Vec(n);
  for (std::size_t i = 0; i < rank; ++i)
    if (rows[i].get(n)) sol.particular.set(pivot_col[i]);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Gf2Vec v(n);
    v.set(f);
    for (std::size_t i = 0; i < rank; ++i)
      if (rows[i].get(f)) v.set(pivot_col[i]);
    sol.nullspace.push_back(v);
  }
  return sol;
}

std::optional<Gf2Mat> invert(const Gf2Mat& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("invert: matrix not square");
  const std::size_t n = M.rows();
  if (2 * n > Gf2Vec::kMaxBits) throw std::invalid_argument("invert: matrix too large");
  std::vector<Gf2Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Gf2Vec r(2 * n);
    for (std::size_t j = 0; j < n; ++j)
      if (M.get(i, j)) r.set(j);
    r.set(n + i);
    rows.push_back(r);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !rows[p].get(c)) ++p;
    if (p == n) return std::nullopt;
    std::swap(rows[p], rows[c]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && rows[i].get(c)) rows[i] += rows[c];
  }
  Gf2Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rows[i].get(n + j)) inv.set(i, j);
  return inv;
}

std::size_t multiplicative_order(const Gf2Mat& M, std::size_t limit) {
  Gf2Mat P = M;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (P.is_identity()) return k;
    P = P * M;
  }
  return 0;
}

namespace {

// Span of a set of row masks, as a bitmap over all 2^n values.
void grow(std::size_t n, std::size_t k, bool fix_unit, std::array<uint8_t, 8>& rows,
          std::vector<uint8_t>& span, const std::function<void(const std::array<uint8_t, 8>&)>& fn) {
  if (k == n) {
    fn(rows);
    return;
  }
  const uint32_t lim = 1u << n;
  if (k == 0 && fix_unit) {
    rows[0] = 1;
    std::vector<uint8_t> s2(lim, 0);
    s2[0] = s2[1] = 1;
    grow(n, 1, fix_unit, rows, s2, fn);
    return;
  }
  for (uint32_t v = 1; v < lim; ++v) {
    if (span[v]) continue;
    rows[k] = static_cast<uint8_t>(v);
    std::vector<uint8_t> s2 = span;
    for (uint32_t u = 0; u < lim; ++u)
      if (span[u]) s2[u ^ v] = 1;
    grow(n, k + 1, fix_unit, rows, s2, fn);
  }
}

}  // namespace

std::vector<std::array<uint8_t, 8>> invertible_row_masks(std::size_t n, bool fix_unit) {
  if (n < 1 || n > 4) throw std::invalid_argument("invertible_row_masks: n out of range");
  std::vector<std::array<uint8_t, 8>> out;
  std::array<uint8_t, 8> rows{};
  std::vector<uint8_t> span(std::size_t{1} << n, 0);
  span[0] = 1;
  grow(n, 0, fix_unit, rows, span, [&](const std::array<uint8_t, 8>& r) { out.push_back(r); });
  return out;
}

void for_each_invertible(std::size_t n, bool fix_unit, const std::function<void(const Gf2Mat&)>& fn) {
  for (const auto& r : invertible_row_masks(n, fix_unit)) {
    Gf2Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.row(i) = Gf2Vec::from_mask(n, r[i]);
    fn(m);
  }
}

std::vector<Gf2Mat> enumerate_invertible(std::size_t n, bool fix_unit) {
  std::vector<Gf2Mat> out;
  for_each_invertible(n, fix_unit, [&](const Gf2Mat& m) { out.push_back(m); });
  return out;
}

}  // namespace f2hopf
