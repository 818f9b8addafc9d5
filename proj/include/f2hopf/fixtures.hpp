#pragma once

// Published structures used as regression data: the raw n=3 coproduct lists,
// the named n=4 coproduct tables, the n=4 Fourier table, d_sl2, the stated
// self-pairings and the holonomy cycles.  Everything is kept in the compact
// text notation of notation.hpp and parsed on demand.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f2hopf/structure.hpp"

namespace f2hopf::fixtures {

struct CoproductRow {
  const char* label;      // "B.19", "NF.2", ...
  int n;
  const char* algebra;    // catalog label of the fixed algebra
  const char* coproduct;  // rows for the non-unit basis elements
  const char* counit;     // names with eps = 1
  bool hopf;
  const char* antipode;   // linear map text, empty when not Hopf
  const char* dual_type;  // "Dual is ... algebra X" / "coalg. type X*"
};

const std::vector<CoproductRow>& coproduct_rows();
// n = 0 accepts any dimension but the label must then be unique.
const CoproductRow& coproduct_row(std::string_view label, int n = 0);
Bialgebra bialgebra_of(const CoproductRow& row);
std::optional<Gf2Mat> antipode_of(const CoproductRow& row);

struct FourierRow {
  const char* algebra;  // source algebra
  const char* dual;     // coalgebra type, i.e. target of the arrow
  const char* label;
  const char* counit;
  const char* coproduct;
  const char* antipode;
  const char* integral;  // I^mu as a bit string, mu = 0 first
  const char* F;         // F^{mu nu}, rows mu
  std::array<const char*, 4> identification;  // y_mu in the target standard basis
  const char* transport;
};

const std::vector<FourierRow>& fourier_rows();
const FourierRow* fourier_row(std::string_view algebra, std::string_view dual);
HopfAlgebra hopf_of(const FourierRow& row);
// Rows are the images of y_mu, so this is the identification as a matrix.
Gf2Mat identification_of(const FourierRow& row);

// d_sl2 on the basis 1,s,x,w.
inline constexpr std::string_view kDsl2Names = "1sxw";
HopfAlgebra dsl2();
// Stated self-pairing <x^mu, x^nu>.
Gf2Mat dsl2_pairing();

struct PairingFixture {
  const char* row;        // coproduct row label, or "d_sl2"
  int n;
  const char* names;
  const char* ones;       // pairs "ab" with <a,b> = 1, space separated
};
const std::vector<PairingFixture>& pairing_rows();
Gf2Mat pairing_matrix(const PairingFixture& p);

struct HolonomyFixture {
  std::vector<std::string> path;  // node labels, first == last
  const char* matrix;
  int order;
};
const std::vector<HolonomyFixture>& holonomy_rows();

}  // namespace f2hopf::fixtures
