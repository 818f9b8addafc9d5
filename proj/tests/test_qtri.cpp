#include <algorithm>
#include <set>

#include "doctest.h"
#include "f2hopf/fixtures.hpp"
#include "f2hopf/hopfdual.hpp"
#include "f2hopf/notation.hpp"
#include "f2hopf/qtri.hpp"

using namespace f2hopf;

namespace {

std::set<uint32_t> Rs(const std::vector<QuasiTriangularStructure>& v) {
  std::set<uint32_t> s;
  for (const auto& q : v) s.insert(q.R.coeffs);
  return s;
}

HopfAlgebra solved(Bialgebra b) {
  auto s = solve_antipode(b);
  REQUIRE(s.has_value());
  return {b, *s};
}

int nontrivial(int n, const char* a, const char* c) { return qt_result(n, a, c).nontrivial(); }

}  // namespace

TEST_CASE("census of nontrivial quasitriangular pairs") {
  CHECK(qt_census(1) == 0);
  CHECK(qt_census(2) == 1);
  CHECK(qt_census(3) == 0);
  CHECK(qt_census(4) == 28);
  CHECK(qt_survey(4).size() == 20);
}

TEST_CASE("dimension two and three") {
  auto line = solved({parse_algebra(2, ""), parse_coalgebra(2, "x=x1+1x", "")});
  auto qs = enumerate_quasitriangular(line);
  CHECK(Rs(qs) == std::set<uint32_t>{parse_tensor("11", "1x"), parse_tensor("11+xx", "1x")});
  for (const auto& q : qs) CHECK(q.klass != QtKind::strict);
  CHECK(qs.back().klass == QtKind::triangular);
  CHECK(nontrivial(2, "A", "A") == 1);
  CHECK(nontrivial(2, "A", "B") == 0);
  CHECK(nontrivial(2, "B", "A") == 0);
  CHECK(nontrivial(3, "D", "B") == 0);
  CHECK(nontrivial(3, "B", "D") == 0);
  // The group algebras still carry 1 (x) 1.
  CHECK(qt_result(3, "D", "B").structures.size() == 1);
}

TEST_CASE("dimension four, algebras with no nontrivial R") {
  for (auto [a, c] : std::vector<std::pair<const char*, const char*>>{
           {"L", "E"}, {"E", "L"}, {"M", "E"}, {"E", "M"}, {"E", "P"},
           {"P", "E"}, {"G", "P"}, {"P", "G"}, {"G", "L"}, {"L", "G"}}) {
    CAPTURE(std::string(a) + "," + c);
    CHECK(nontrivial(4, a, c) == 0);
  }
}

TEST_CASE("dimension four, a unique nontrivial triangular R") {
  for (auto [a, c] : std::vector<std::pair<const char*, const char*>>{{"G", "E"}, {"E", "G"}, {"D", "E"}, {"E", "D"}}) {
    CAPTURE(std::string(a) + "," + c);
    const auto& r = qt_result(4, a, c);
    CHECK(r.nontrivial() == 1);
    for (const auto& q : r.structures) CHECK(q.klass != QtKind::strict);
  }
  // c[B+]* is the arrow NF -> E.
  const auto& bstar = qt_result(4, "NF", "E");
  CHECK(bstar.nontrivial() == 1);
  CHECK(bstar.structures.size() == 2);
  for (const auto& q : bstar.structures) CHECK(q.klass != QtKind::strict);
  // c[B+] has none at all, not even 1 (x) 1.
  CHECK(qt_result(4, "E", "NF").structures.empty());
}

TEST_CASE("self-dual nonlinear anyonic line") {
  CHECK(nontrivial(4, "G", "G") == 3);
  // x^4 = 0 with Delta x = x(x)1 + 1(x)x + x^2(x)x^2, y = x^2, z = x^3.
  auto qs = enumerate_quasitriangular(fixtures::hopf_of(*fixtures::fourier_row("G", "G")));
  std::set<uint32_t> want;
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be)
      want.insert(parse_tensor("11") ^ (al ? parse_tensor("yy") : 0) ^ (be ? parse_tensor("xy+yx+zz") : 0));
  CHECK(Rs(qs) == want);
  for (const auto& q : qs) {
    CHECK(q.klass != QtKind::strict);
    CHECK(q.R_inv == q.R);
  }
}

TEST_CASE("double of F2(Z2)") {
  CHECK(nontrivial(4, "D", "D") == 3);
  // x^2 = x primitive, y^2 = 0 grouplike-shifted, z = xy.
  Bialgebra b{parse_algebra(4, "xx=x xy=z yx=z xz=z zx=z"), parse_coalgebra(4, "x=x1+1x; y=y1+1y+yy; z=1z+xy+yx+z1+zy+yz", "")};
  auto qs = enumerate_quasitriangular(solved(b));
  REQUIRE(qs.size() == 4);
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be) {
      uint32_t R = tensor_mul(b.alg, parse_tensor(al ? "11+yx" : "11"), parse_tensor(be ? "11+xy" : "11"));
      auto it = std::find_if(qs.begin(), qs.end(), [&](const auto& q) { return q.R.coeffs == R; });
      REQUIRE(it != qs.end());
      CHECK(it->factorisable == (al != be));
      CHECK((it->klass == QtKind::strict) == (al != be));
    }
  auto canonical = classify_R(b, {4, parse_tensor("11+xy")});
  CHECK(canonical.factorisable);
  CHECK(canonical.klass == QtKind::strict);
  CHECK(canonical.Q.coeffs == parse_tensor("11+xy+yx+zz"));
}

TEST_CASE("Grassmann plane") {
  CHECK(nontrivial(4, "E", "E") == 15);
  auto h = fixtures::hopf_of(*fixtures::fourier_row("E", "E"));
  auto qs = enumerate_quasitriangular(h);
  REQUIRE(qs.size() == 16);
  const char* terms[4] = {"xx", "xy", "yx", "yy"};
  for (int r = 0; r < 16; ++r) {
    uint32_t R = parse_tensor("11");
    for (int k = 0; k < 4; ++k)
      if ((r >> k) & 1) R ^= parse_tensor(terms[k]);
    bool det = (((r >> 0) & 1) && ((r >> 3) & 1)) != (((r >> 1) & 1) && ((r >> 2) & 1));
    if (det) R ^= parse_tensor("zz");
    auto it = std::find_if(qs.begin(), qs.end(), [&](const auto& q) { return q.R.coeffs == R; });
    REQUIRE(it != qs.end());
    bool symmetric = ((r >> 1) & 1) == ((r >> 2) & 1);
    CHECK((it->klass != QtKind::strict) == symmetric);
    // Q = 1(x)1 + (r12 + r21)(x(x)y + y(x)x + z(x)z), the same Killing form as
    // the double above, so the eight nonsymmetric r have invertible Q too.
    CHECK(it->Q.coeffs == (symmetric ? parse_tensor("11") : parse_tensor("11+xy+yx+zz")));
    CHECK(it->factorisable == !symmetric);
  }
}

TEST_CASE("d_sl2") {
  auto d = fixtures::dsl2();
  auto qs = enumerate_quasitriangular(d);
  REQUIRE(qs.size() == 2);
  auto names = fixtures::kDsl2Names;
  uint32_t base = parse_tensor("11+1w+sw+x1+xs+xx+xw+wx+ww", names);
  uint32_t uu = parse_tensor("11+1s+s1+ss", names);
  CHECK(Rs(qs) == std::set<uint32_t>{base, base ^ uu});
  for (const auto& q : qs) CHECK(q.klass == QtKind::triangular);
  CHECK(nontrivial(4, "NF", "NF") == 2);
}

TEST_CASE("every R is a Yang-Baxter solution and S-invariant") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& r : qt_survey(n))
      for (const auto& q : r.structures) {
        CHECK(yang_baxter(r.hopf.bi.alg, q.R));
        CHECK(apply_matrix_tensor(r.hopf.s, r.hopf.s, q.R.coeffs) == q.R.coeffs);
        CHECK(check_quasitriangular(r.hopf.bi, q.R));
        CHECK(tensor_mul(r.hopf.bi.alg, q.R.coeffs, q.R_inv.coeffs) == unit_square(r.hopf.bi.alg));
      }
}

TEST_CASE("quasitriangular axiom failures are reported") {
  auto line = solved({parse_algebra(2, ""), parse_coalgebra(2, "x=x1+1x", "")});
  CHECK(check_quasitriangular(line.bi, {2, parse_tensor("11+x1", "1x")}).axiom == "R counit");
  auto grp = solved({parse_algebra(2, ""), parse_coalgebra(2, "x=x1+1x+xx", "")});
  CHECK_FALSE(check_quasitriangular(grp.bi, {2, parse_tensor("11+xx", "1x")}));
  CHECK_FALSE(tensor_inverse(line.bi.alg, {2, parse_tensor("xx", "1x")}).has_value());
}

TEST_CASE("coquasitriangular functionals") {
  auto line = solved({parse_algebra(2, ""), parse_coalgebra(2, "x=x1+1x", "")});
  uint32_t triv = parse_tensor("11", "1x");
  CHECK(enumerate_coquasitriangular(line.bi) == std::vector<uint32_t>{triv, triv | parse_tensor("xx", "1x")});
  auto grp = solved({parse_algebra(2, ""), parse_coalgebra(2, "x=x1+1x+xx", "")});
  // eps(x) = 0 here, so the trivial functional is eps (x) eps = r(1 (x) 1) only.
  CHECK(enumerate_coquasitriangular(grp.bi) == std::vector<uint32_t>{triv});
  auto fun = solved({parse_algebra(2, "xx=x"), parse_coalgebra(2, "x=x1+1x", "")});
  CHECK(enumerate_coquasitriangular(fun.bi) == coquasitriangular_via_dual(fun.bi));
}

TEST_CASE("direct and dual coquasitriangular enumerations agree") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& r : qt_survey(n)) {
      CAPTURE(r.algebra + "," + r.coalgebra_type);
      auto direct = enumerate_coquasitriangular(r.hopf.bi);
      CHECK(direct == coquasitriangular_via_dual(r.hopf.bi));
      // |quasitriangular(H)| = |coquasitriangular(H*)|
      auto dual = dual_hopf(r.hopf);
      CHECK(enumerate_coquasitriangular(dual.bi).size() == r.structures.size());
    }
}
