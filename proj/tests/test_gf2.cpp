#include <random>
#include <set>

#include "doctest.h"
#include "f2hopf/gf2.hpp"

using namespace f2hopf;

namespace {

Gf2Mat naive_product(const Gf2Mat& A, const Gf2Mat& B) {
  Gf2Mat C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) {
      bool s = false;
      for (std::size_t k = 0; k < A.cols(); ++k) s ^= A.get(i, k) && B.get(k, j);
      C.set(i, j, s);
    }
  return C;
}

Gf2Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Gf2Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1);
  return m;
}

}  // namespace

TEST_CASE("solve_linear small examples") {
  {
    auto s = solve_linear(Gf2Mat(1, 1), Gf2Vec(1));
    CHECK(s.consistent);
    CHECK(s.particular == Gf2Vec(1));
    REQUIRE(s.nullity() == 1);
    CHECK(s.nullspace[0] == Gf2Vec::from_mask(1, 1));
  }
  {
    auto s = solve_linear(Gf2Mat::identity(3), Gf2Vec::from_mask(3, 0b101));
    CHECK(s.consistent);
    CHECK(s.nullity() == 0);
    CHECK(s.particular == Gf2Vec::from_mask(3, 0b101));
  }
  {
    auto A = Gf2Mat::from_rows(2, {0b11, 0b11});
    auto s = solve_linear(A, Gf2Vec::from_mask(2, 0b11));
    CHECK(s.consistent);
    CHECK(s.particular == Gf2Vec::from_mask(2, 0b01));
    REQUIRE(s.nullity() == 1);
    CHECK(s.nullspace[0] == Gf2Vec::from_mask(2, 0b11));
    // Oracle: all 4 vectors.
    int count = 0;
    for (uint64_t x = 0; x < 4; ++x)
      if (A.apply_col(Gf2Vec::from_mask(2, x)) == Gf2Vec::from_mask(2, 0b11)) ++count;
    CHECK(count == 2);
  }
  {
    auto A = Gf2Mat::from_rows(2, {0b11, 0b11});
    CHECK_FALSE(solve_linear(A, Gf2Vec::from_mask(2, 0b01)).consistent);
  }
  CHECK_THROWS_AS(solve_linear(Gf2Mat(2, 2), Gf2Vec(3)), std::invalid_argument);
}

TEST_CASE("solve_linear agrees with exhaustive search") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
    auto A = random_mat(rng, m, n);
    auto b = Gf2Vec::from_mask(m, rng());
    auto s = solve_linear(A, b);
    std::set<uint64_t> brute;
    for (uint64_t x = 0; x < (1u << n); ++x)
      if (A.apply_col(Gf2Vec::from_mask(n, x)) == b) brute.insert(x);
    std::set<uint64_t> got;
    s.for_each([&](const Gf2Vec& x) {
      CHECK(A.apply_col(x) == b);
      got.insert(x.mask());
    });
    CHECK(s.consistent == !brute.empty());
    CHECK(got == brute);
    if (s.consistent) CHECK(brute.size() == (std::size_t{1} << s.nullity()));
  }
}

TEST_CASE("invert examples and exhaustive 2x2") {
  CHECK(*invert(Gf2Mat::identity(3)) == Gf2Mat::identity(3));
  auto U = Gf2Mat::from_rows(2, {0b11, 0b10});
  CHECK(*invert(U) == U);
  CHECK_FALSE(invert(Gf2Mat::from_rows(2, {0b11, 0b11})).has_value());
  int invertible = 0;
  for (uint64_t bits = 0; bits < 16; ++bits) {
    auto M = Gf2Mat::from_rows(2, {bits & 3, bits >> 2});
    auto inv = invert(M);
    bool has_inverse = false;
    for (uint64_t b2 = 0; b2 < 16; ++b2) {
      auto N = Gf2Mat::from_rows(2, {b2 & 3, b2 >> 2});
      if ((M * N).is_identity() && (N * M).is_identity()) {
        has_inverse = true;
        REQUIRE(inv.has_value());
        CHECK(*inv == N);
      }
    }
    CHECK(inv.has_value() == has_inverse);
    invertible += has_inverse;
  }
  CHECK(invertible == 6);
}

TEST_CASE("enumerate_invertible counts, order and distinctness") {
  auto product = [](std::size_t n) {
    std::size_t p = 1;
    for (std::size_t k = 0; k < n; ++k) p *= (std::size_t{1} << n) - (std::size_t{1} << k);
    return p;
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    auto all = enumerate_invertible(n, false);
    CHECK(all.size() == product(n));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    for (const auto& m : all) CHECK(m.rank() == n);
    auto fixed = enumerate_invertible(n, true);
    CHECK(fixed.size() == product(n) / ((std::size_t{1} << n) - 1));
    for (const auto& m : fixed) CHECK(m.row_mask(0) == 1);
  }
  CHECK(enumerate_invertible(4, false).size() == 20160);
  CHECK(enumerate_invertible(4, true).size() == 1344);
  CHECK(enumerate_invertible(2, false).size() == 6);
  auto one = enumerate_invertible(1, false);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_identity());
}

TEST_CASE("packed products agree with naive products") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 8; ++n)
    for (int t = 0; t < 1000; ++t) {
      auto A = random_mat(rng, n, n), B = random_mat(rng, n, n);
      CHECK(A * B == naive_product(A, B));
    }
}

TEST_CASE("multiplicative order") {
  auto anti = Gf2Mat::from_rows(2, {0b10, 0b01});
  CHECK(multiplicative_order(anti) == 2);
  CHECK(multiplicative_order(Gf2Mat::identity(3)) == 1);
  CHECK(multiplicative_order(Gf2Mat(2, 2), 10) == 0);
}
