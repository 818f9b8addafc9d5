#include <map>

#include "doctest.h"
#include "f2hopf/enumerate.hpp"
#include "f2hopf/fixtures.hpp"
#include "f2hopf/hopfdual.hpp"
#include "f2hopf/notation.hpp"
#include "f2hopf/repsearch.hpp"

using namespace f2hopf;

namespace {

// Every tuple of images checked in full, no pruning.
std::vector<Representation> brute_force_reps(const AlgebraSC& a, int k) {
  std::vector<Representation> out;
  const int free = a.n - 1;
  const uint64_t per = uint64_t{1} << (k * k);
  uint64_t total = 1;
  for (int i = 0; i < free; ++i) total *= per;
  for (uint64_t c = 0; c < total; ++c) {
    Representation r;
    r.k = k;
    r.images.push_back(Gf2Mat::identity(k));
    uint64_t rest = c;
    for (int i = 0; i < free; ++i) {
      uint64_t m = rest % per;
      rest /= per;
      std::vector<uint64_t> rows;
      for (int j = 0; j < k; ++j) rows.push_back((m >> (k * j)) & ((1u << k) - 1));
      r.images.push_back(Gf2Mat::from_rows(k, rows));
    }
    if (check_representation(a, r)) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const NamedRep& gen(const std::vector<NamedRep>& g, const std::string& name) {
  for (const auto& x : g)
    if (x.name == name) return x;
  throw std::invalid_argument(name);
}

}  // namespace

TEST_CASE("pruned enumeration matches brute force") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& c : AlgebraCatalog::instance().classes(n))
      for (int k = 1; k <= 2; ++k) {
        CAPTURE(c.label);
        CHECK(enumerate_reps(c.named_form, k) == brute_force_reps(c.named_form, k));
      }
  for (const char* l : {"A", "E", "G", "NF", "P"}) {
    const auto& a = AlgebraCatalog::instance().get(4, l).named_form;
    CAPTURE(l);
    CHECK(enumerate_reps(a, 2) == brute_force_reps(a, 2));
  }
  CHECK(enumerate_reps(fixtures::dsl2().bi.alg, 2) == brute_force_reps(fixtures::dsl2().bi.alg, 2));
}

TEST_CASE("d_sl2 representation counts") {
  auto d = fixtures::dsl2();
  auto gens = dsl2_generators();
  std::map<int, std::size_t> raw{{1, 2}, {2, 20}, {3, 394}};
  std::map<int, std::size_t> classes{{1, 2}, {2, 5}, {3, 8}};
  for (int k = 1; k <= 3; ++k) {
    auto c = rep_census(d, k, gens);
    CHECK(c.raw == raw[k]);
    CHECK(c.classes == classes[k]);
    // Up to dimension 3 every class is a direct sum of 1, 1bar, 2, 2bar.
    CHECK(c.sums_of_generators == c.classes);
  }
  // The count does not depend on the basis: NF in its named form.
  CHECK(enumerate_reps(survey(4, "NF").algebra, 3).size() == 394);
  // One dimensional: eps and the character with s, x, w -> 1.
  auto one = enumerate_reps(d.bi.alg, 1);
  REQUIRE(one.size() == 2);
  CHECK(find_equivalence(one[0], gen(gens, "1").rep).has_value());
  CHECK(find_equivalence(one[1], gen(gens, "1bar").rep).has_value());
}

TEST_CASE("the four generators") {
  auto d = fixtures::dsl2();
  auto gens = dsl2_generators();
  for (const auto& g : gens) CHECK(check_representation(d.bi.alg, g.rep));
  CHECK_FALSE(find_equivalence(gen(gens, "2").rep, gen(gens, "2bar").rep).has_value());
  Gf2Vec ones = parse_bits("11");
  CHECK(is_subrepresentation(gen(gens, "2").rep, {ones}));
  CHECK(is_subrepresentation(gen(gens, "2bar").rep, {ones}));
  CHECK_FALSE(is_subrepresentation(gen(gens, "2").rep, {parse_bits("10")}));
  // The invariant line is 1 inside 2 and 1bar inside 2bar.
  auto s = fixtures::kDsl2Names.find('s'), x = fixtures::kDsl2Names.find('x');
  CHECK(gen(gens, "2").rep.images[x].apply_col(ones).is_zero());
  CHECK(gen(gens, "2").rep.images[s].apply_col(ones) == ones);
  CHECK(gen(gens, "2bar").rep.images[x].apply_col(ones) == ones);
  // Indecomposable: not a sum of two characters.
  CHECK(decompose(gen(gens, "2").rep, {gens[0], gens[1]}).empty());
  CHECK(decompose(gen(gens, "2bar").rep, {gens[0], gens[1]}).empty());
  CHECK(decompose(direct_sum(gen(gens, "2").rep, gen(gens, "2bar").rep), gens) == std::vector<std::string>{"2", "2bar"});
  CHECK(decompose(regular_rep(d.bi.alg), gens) == std::vector<std::string>{"2", "2bar"});
}

TEST_CASE("duals and the tensor product table") {
  auto d = fixtures::dsl2();
  auto gens = dsl2_generators();
  using V = std::vector<std::string>;
  CHECK(decompose(dual_rep(d, gen(gens, "1").rep), gens) == V{"1"});
  CHECK(decompose(dual_rep(d, gen(gens, "1bar").rep), gens) == V{"1bar"});
  CHECK(decompose(dual_rep(d, gen(gens, "2").rep), gens) == V{"2bar"});
  CHECK(decompose(dual_rep(d, gen(gens, "2bar").rep), gens) == V{"2"});
  std::map<std::pair<std::string, std::string>, V> table{
      {{"1", "1"}, {"1"}},           {{"1", "1bar"}, {"1bar"}},           {{"1", "2"}, {"2"}},
      {{"1", "2bar"}, {"2bar"}},     {{"1bar", "1"}, {"1bar"}},           {{"1bar", "1bar"}, {"1"}},
      {{"1bar", "2"}, {"2bar"}},     {{"1bar", "2bar"}, {"2"}},           {{"2", "1"}, {"2"}},
      {{"2", "1bar"}, {"2bar"}},     {{"2", "2"}, {"2", "2bar"}},         {{"2", "2bar"}, {"2", "2bar"}},
      {{"2bar", "1"}, {"2bar"}},     {{"2bar", "1bar"}, {"2"}},           {{"2bar", "2"}, {"2", "2bar"}},
      {{"2bar", "2bar"}, {"2", "2bar"}}};
  for (const auto& a : gens)
    for (const auto& b : gens) {
      CAPTURE(a.name + " x " + b.name);
      auto t = tensor_rep(d, a.rep, b.rep);
      REQUIRE(check_representation(d.bi.alg, t));
      CHECK(decompose(t, gens) == table.at({a.name, b.name}));
    }
}

TEST_CASE("representation constructions on other Hopf algebras") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& s : survey(n))
      for (const auto& c : s.classes) {
        if (!c.hopf) continue;
        HopfAlgebra h{{s.algebra, c.representative}, *c.antipode};
        auto reg = regular_rep(h.bi.alg);
        CHECK(check_representation(h.bi.alg, reg));
        auto eps = counit_rep(h.bi);
        CHECK(check_representation(h.bi.alg, eps));
        CHECK(find_equivalence(tensor_rep(h, eps, reg), reg).has_value());
        CHECK(find_equivalence(tensor_rep(h, reg, eps), reg).has_value());
        CHECK(check_representation(h.bi.alg, dual_rep(h, reg)));
        CHECK(find_equivalence(dual_rep(h, eps), eps).has_value());
      }
}

TEST_CASE("equivalence classes") {
  auto a = AlgebraCatalog::instance().get(2, "B").named_form;  // x^2 = x
  auto reps = enumerate_reps(a, 2);
  // x -> an idempotent 2x2 matrix: 0, I and six of rank one, in three classes.
  CHECK(reps.size() == 8);
  CHECK(rep_equivalence_classes(reps).size() == 3);
  auto ones = enumerate_reps(a, 1);
  CHECK(rep_equivalence_classes(ones).size() == ones.size());
  CHECK_THROWS_AS(enumerate_reps(a, 4), std::invalid_argument);
}
