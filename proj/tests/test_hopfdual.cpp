#include <map>
#include <set>

#include "doctest.h"
#include "f2hopf/enumerate.hpp"
#include "f2hopf/fixtures.hpp"
#include "f2hopf/hopfdual.hpp"
#include "f2hopf/notation.hpp"

using namespace f2hopf;

namespace {

// (coalgebra type, hopf) -> number of classes
std::map<std::pair<std::string, bool>, int> class_split(int n, const char* label) {
  std::map<std::pair<std::string, bool>, int> m;
  for (const auto& c : survey(n, label).classes) m[{c.coalgebra_type, c.hopf}]++;
  return m;
}

std::vector<std::vector<std::size_t>> orbits(const std::vector<BialgebraClass>& cls) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : cls) out.push_back(c.orbit);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("census") {
  CHECK(hopf_census(2) == Census{3, 4, 3});
  CHECK(hopf_census(3) == Census{7, 24, 2});
  CHECK(hopf_census(4) == Census{25, 286, 20});
}

TEST_CASE("n = 3 classes per algebra") {
  using M = std::map<std::pair<std::string, bool>, int>;
  CHECK(class_split(3, "B") == M{{{"D", true}, 1}, {{"C", false}, 3}, {{"G", false}, 2}, {{"B", false}, 1}});
  CHECK(class_split(3, "G") == M{{{"B", false}, 2}, {{"C", false}, 2}, {{"D", false}, 2}});
  CHECK(survey(3, "C").classes.size() == 8);
  CHECK(survey(3, "D").classes.size() == 3);
  // B.3 and B.16 are one class, related by x -> 1+x+y.
  auto b3 = fixtures::bialgebra_of(fixtures::coproduct_row("B.3"));
  auto b16 = fixtures::bialgebra_of(fixtures::coproduct_row("B.16"));
  CHECK(locate_class(b3) == locate_class(b16));
}

TEST_CASE("orbit method agrees with the pairwise basis-change search") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& s : survey(n)) {
      CAPTURE(s.label);
      CHECK(orbits(s.classes) == reference::classify_pairwise(s.algebra, s.raw));
    }
  // A few small n = 4 algebras as well.
  for (const char* l : {"G", "I", "J", "M", "NF"}) {
    const auto& s = survey(4, l);
    CHECK(orbits(s.classes) == reference::classify_pairwise(s.algebra, s.raw));
  }
}

TEST_CASE("n = 4 classes of the hand-analysed algebras") {
  using M = std::map<std::pair<std::string, bool>, int>;
  CHECK(class_split(4, "G") == M{{{"E", true}, 1}, {{"P", true}, 1}, {{"G", true}, 1}, {{"L", true}, 1}});
  CHECK(class_split(4, "I") == M{{{"NC", false}, 1}, {{"ND", false}, 1}, {{"NG", false}, 2}});
  CHECK(class_split(4, "J") == M{{{"C", false}, 1}, {{"J", false}, 1}, {{"P", false}, 1}, {{"NE", false}, 2}});
  CHECK(class_split(4, "M") == M{{{"E", true}, 1}, {{"NE", false}, 2}});
  CHECK(class_split(4, "NF") == M{{{"E", true}, 1}, {{"NF", true}, 1}});
  CHECK(survey(4, "M").classes.size() == 3);
  // The NE pairs on J and M are co-opposites of each other.
  for (const char* l : {"J", "M"}) {
    const auto& cls = survey(4, l).classes;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (cls[k].coalgebra_type != "NE") continue;
      REQUIRE(cls[k].cop_partner.has_value());
      CHECK(*cls[k].cop_partner != k);
      CHECK(cls[*cls[k].cop_partner].coalgebra_type == "NE");
    }
  }
  // Named isomorphisms among the published NF coproducts.
  using fixtures::bialgebra_of;
  using fixtures::coproduct_row;
  for (auto [p, q] : {std::pair{"NF.1", "NF.5"}, {"NF.4", "NF.8"}, {"NF.2", "NF.6"}, {"NF.3", "NF.7"}, {"NF.1", "NF.8"},
                      {"NF.4", "NF.5"}, {"NF.2", "NF.7"}, {"NF.3", "NF.6"}, {"NF.2", "NF.3"}})
    CHECK(locate_class(bialgebra_of(coproduct_row(p))) == locate_class(bialgebra_of(coproduct_row(q))));
  CHECK_FALSE(locate_class(bialgebra_of(coproduct_row("NF.1"))) == locate_class(bialgebra_of(coproduct_row("NF.2"))));
}

TEST_CASE("class invariants") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& s : survey(n)) {
      std::size_t members = 0;
      for (const auto& c : s.classes) {
        members += c.orbit.size();
        CHECK(c.representative == s.raw.solutions[c.orbit.front()].coalg);
        for (auto i : c.orbit) {
          CHECK(s.raw.solutions[i].hopf == c.hopf);
          CHECK(s.raw.solutions[i].type == c.coalgebra_type);
        }
        // Co-opposite partner is symmetric.
        REQUIRE(c.cop_partner.has_value());
        CHECK(s.classes[*c.cop_partner].cop_partner == std::optional<std::size_t>(&c - s.classes.data()));
      }
      CHECK(members == s.raw.solutions.size());
    }
}

TEST_CASE("quiver") {
  auto q2 = build_quiver(2);
  CHECK(q2.total(false) == 4);
  CHECK(q2.total(true) == 3);
  CHECK(q2.arrows.size() == 4);
  auto q4 = build_quiver(4);
  CHECK(q4.total(false) == 286);
  std::set<std::pair<std::string, std::string>> hopf_arrows;
  for (const auto& a : q4.arrows)
    if (a.hopf_multiplicity > 0) {
      CHECK(a.hopf_multiplicity == 1);  // at most one Hopf algebra per type
      hopf_arrows.insert({a.source, a.target});
    }
  std::set<std::pair<std::string, std::string>> want{
      {"D", "D"}, {"D", "E"}, {"E", "D"}, {"E", "E"}, {"E", "G"}, {"E", "L"}, {"E", "M"},
      {"E", "P"}, {"E", "NF"}, {"G", "E"}, {"G", "G"}, {"G", "L"}, {"G", "P"}, {"L", "E"},
      {"L", "G"}, {"M", "E"}, {"P", "E"}, {"P", "G"}, {"NF", "E"}, {"NF", "NF"}};
  CHECK(hopf_arrows == want);
  // Only NF -> NF is noncommutative and noncocommutative among the Hopf classes.
  int both = 0;
  for (const auto& s : survey(4))
    for (const auto& c : s.classes)
      if (c.hopf && !s.algebra.commutative() && !c.representative.cocommutative()) {
        ++both;
        CHECK(s.label == "NF");
        CHECK(c.coalgebra_type == "NF");
      }
  CHECK(both == 1);
  for (int n = 2; n <= 4; ++n) {
    auto q = build_quiver(n);
    for (const auto& a : q.arrows) {
      const auto* back = q.find(a.target, a.source);
      REQUIRE(back != nullptr);
      CHECK(back->multiplicity == a.multiplicity);
      CHECK(back->hopf_multiplicity == a.hopf_multiplicity);
    }
  }
  CHECK(q4.find("E", "E")->multiplicity == 1);
  CHECK(q4.to_dot(true).find("\"NF\" -> \"NF\"") != std::string::npos);
}

TEST_CASE("dual bialgebras") {
  // Group algebra and function algebra of Z2 are dual.
  Bialgebra grp{parse_algebra(2, ""), parse_coalgebra(2, "x=x1+1x+xx", "")};
  Bialgebra fun{parse_algebra(2, "xx=x"), parse_coalgebra(2, "x=x1+1x", "")};
  REQUIRE(check_bialgebra(grp));
  REQUIRE(check_bialgebra(fun));
  CHECK(locate_class(dual_bialgebra(grp)) == locate_class(fun));
  CHECK(locate_class(dual_bialgebra(fun)) == locate_class(grp));
  auto c1 = fixtures::bialgebra_of(fixtures::coproduct_row("C.1"));
  auto c3 = fixtures::bialgebra_of(fixtures::coproduct_row("C.3"));
  CHECK(locate_class(dual_bialgebra(c1)) == locate_class(c3));
  for (int n = 2; n <= 4; ++n)
    for (const auto& s : survey(n))
      for (std::size_t k = 0; k < s.classes.size(); ++k) {
        const auto& c = s.classes[k];
        Bialgebra b{s.algebra, c.representative};
        auto d = dual_bialgebra(b);
        REQUIRE(check_bialgebra(d));
        CHECK(d.alg.standard());
        auto ref = locate_class(d);
        CHECK(ref.algebra == c.coalgebra_type);
        const auto& dc = survey(n, ref.algebra).classes[ref.index];
        CHECK(dc.coalgebra_type == s.label);
        CHECK(dc.hopf == c.hopf);
        CHECK(locate_class(dual_bialgebra(d)) == ClassRef{s.label, k});
        if (c.hopf) {
          auto dh = dual_hopf({b, *c.antipode});
          CHECK(check_antipode(dh.bi, dh.s));
        }
      }
}

TEST_CASE("self-duality pairings") {
  for (const auto& p : fixtures::pairing_rows()) {
    CAPTURE(p.row);
    Bialgebra b = std::string(p.row) == "d_sl2" ? fixtures::dsl2().bi : fixtures::bialgebra_of(fixtures::coproduct_row(p.row, p.n));
    auto P = fixtures::pairing_matrix(p);
    CHECK(invert(P).has_value());
    CHECK(is_bialgebra_pairing(b, P));
    auto all = self_duality_pairings(b);
    REQUIRE_FALSE(all.empty());
    CHECK(std::find(all.begin(), all.end(), P) != all.end());
    CHECK(*self_duality_pairing(b) == all.front());
    CHECK(all.front() == P);  // the published pairing is also the smallest one
  }
  // Not self-dual: the Grassmann line paired with itself works, F2Z2 does not.
  CHECK(self_duality_pairing({parse_algebra(2, ""), parse_coalgebra(2, "x=x1+1x", "")}).has_value());
  CHECK_FALSE(self_duality_pairing({parse_algebra(2, ""), parse_coalgebra(2, "x=x1+1x+xx", "")}).has_value());
}

TEST_CASE("antipode orders") {
  auto d = fixtures::dsl2();
  auto S2 = d.s * d.s;
  CHECK_FALSE(S2.is_identity());
  CHECK((S2 * S2).is_identity());
  for (int n = 2; n <= 4; ++n)
    for (const auto& s : survey(n))
      for (const auto& c : s.classes) {
        if (!c.hopf) continue;
        if (s.algebra.commutative() || c.representative.cocommutative()) CHECK((*c.antipode * *c.antipode).is_identity());
      }
}

TEST_CASE("basis change composes as a row-vector product") {
  auto GL = enumerate_invertible(4, true);
  const auto& a = AlgebraCatalog::instance().get(4, "NF").named_form;
  for (std::size_t i = 0; i < GL.size(); i += 97) {
    const auto& P = GL[i];
    const auto& Q = GL[(i * 7 + 3) % GL.size()];
    CHECK(apply_basis_change(apply_basis_change(a, P), Q) == apply_basis_change(a, P * Q));
  }
}
