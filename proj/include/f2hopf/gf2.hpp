#pragma once

// Exact linear algebra over the two-element field.
//
// Bit layout: coordinate i of a vector lives in word i/64 at bit i%64, so
// coordinate 0 is the least significant bit.  Matrices are row-major and
// each row is a Gf2Vec with the same layout.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace f2hopf {

class Gf2Vec {
 public:
  static constexpr std::size_t kMaxBits = 256;
  static constexpr std::size_t kWords = kMaxBits / 64;

  Gf2Vec() = default;
  explicit Gf2Vec(std::size_t len);
  // Low `len` bits of `mask` become the coordinates.
  static Gf2Vec from_mask(std::size_t len, uint64_t mask);
  static Gf2Vec unit(std::size_t len, std::size_t i);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool b = true) {
    uint64_t bit = uint64_t{1} << (i & 63);
    if (b)
      w_[i >> 6] |= bit;
    else
      w_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  uint64_t word(std::size_t k) const { return w_[k]; }
  // First 64 coordinates as an integer.
  uint64_t mask() const { return w_[0]; }

  bool is_zero() const;
  std::size_t weight() const;
  // Index of the lowest set coordinate or size() when zero.
  std::size_t lowest() const;
  bool dot(const Gf2Vec& o) const;

  Gf2Vec& operator+=(const Gf2Vec& o);
  friend Gf2Vec operator+(Gf2Vec a, const Gf2Vec& b) { return a += b; }
  bool operator==(const Gf2Vec& o) const { return len_ == o.len_ && w_ == o.w_; }
  bool operator!=(const Gf2Vec& o) const { return !(*this == o); }
  // Packed order: numeric comparison of the packed integer.
  bool operator<(const Gf2Vec& o) const;

  std::string to_string() const;

 private:
  std::size_t len_ = 0;
  std::array<uint64_t, kWords> w_{};
};

class Gf2Mat {
 public:
  Gf2Mat() = default;
  Gf2Mat(std::size_t rows, std::size_t cols);
  static Gf2Mat identity(std::size_t n);
  // Rows given as integers, bit j of rows[i] is entry (i,j).
  static Gf2Mat from_rows(std::size_t cols, const std::vector<uint64_t>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool b = true) { r_[i].set(j, b); }
  const Gf2Vec& row(std::size_t i) const { return r_[i]; }
  Gf2Vec& row(std::size_t i) { return r_[i]; }
  uint64_t row_mask(std::size_t i) const { return r_[i].mask(); }

  Gf2Mat operator*(const Gf2Mat& o) const;
  // Row vector times matrix.
  Gf2Vec apply_row(const Gf2Vec& v) const;
  // Matrix times column vector.
  Gf2Vec apply_col(const Gf2Vec& v) const;
  Gf2Mat transpose() const;
  std::size_t rank() const;
  bool is_identity() const;

  bool operator==(const Gf2Mat& o) const;
  bool operator!=(const Gf2Mat& o) const { return !(*this == o); }
  // Lexicographic over rows (row 0 first), rows compared in packed order.
  bool operator<(const Gf2Mat& o) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Gf2Vec> r_;
};

struct LinearSolution {
  bool consistent = false;
  Gf2Vec particular;
  std::vector<Gf2Vec> nullspace;

  // Number of solutions as a power of two exponent; meaningless when inconsistent.
  std::size_t nullity() const { return nullspace.size(); }
  // Calls fn on every solution, particular + span(nullspace).  nullity must be < 64.
  void for_each(const std::function<void(const Gf2Vec&)>& fn) const;
};

LinearSolution solve_linear(const Gf2Mat& A, const Gf2Vec& b);

std::optional<Gf2Mat> invert(const Gf2Mat& M);

// Smallest k >= 1 with M^k = I, or 0 if none up to `limit`.
std::size_t multiplicative_order(const Gf2Mat& M, std::size_t limit = 1u << 16);

// Invertible n x n matrices in lexicographic order: rows are chosen in order,
// each row ranges over integers (bit j = column j) ascending, skipping values in
// the span of the earlier rows.  With fix_unit, row 0 is pinned to e_0.
void for_each_invertible(std::size_t n, bool fix_unit,
                         const std::function<void(const Gf2Mat&)>& fn);
std::vector<Gf2Mat> enumerate_invertible(std::size_t n, bool fix_unit);

// Row masks form of the above for hot loops.  Both require 1 <= n <= 4.
std::vector<std::array<uint8_t, 8>> invertible_row_masks(std::size_t n, bool fix_unit);

}  // namespace f2hopf
