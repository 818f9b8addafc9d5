#include "f2hopf/fixtures.hpp"

#include <stdexcept>

#include "f2hopf/enumerate.hpp"
#include "f2hopf/notation.hpp"

namespace f2hopf::fixtures {

namespace {

// n=3 raw lists first (B, C, D, G), then the named n=4 tables.  NF.4 and
// NF.8 carry three misprinted terms in the source ("xy(x)", "zx(x)",
// "xz(x)"); they are entered as x(x)y, z(x)x and x(x)z.
const std::vector<CoproductRow> kCoproducts = {
    {"B.1", 3, "B", "x=1x+x1+xx+xy+yx+yy; y=1y+y1", "", false, "", "C"},
    {"B.2", 3, "B", "x=1x+x1+xx; y=1y+y1+xy+yx", "", false, "", "C"},
    {"B.3", 3, "B", "x=1x+x1+xx+yy; y=1y+y1+xy+yx", "", false, "", "C"},
    {"B.4", 3, "B", "x=1x+x1+xy+yx+yy; y=1y+y1+xy+yx+xx", "", true, "x=y; y=x", "D"},
    {"B.5", 3, "B", "x=1x+x1+xy+yx; y=1y+y1+yy", "", false, "", "C"},
    {"B.6", 3, "B", "x=1x+x1+xy+yx+xx; y=1y+y1+yy", "", false, "", "B"},
    {"B.7", 3, "B", "x=1x+x1+xy+yx; y=1y+y1+xx+yy", "", false, "", "C"},
    {"B.8", 3, "B", "x=1x+x1+xx+yx; y=1y+y1+xy+yy", "", false, "", "G"},
    {"B.9", 3, "B", "x=1x+x1+xx+xy; y=1y+y1+yx+yy", "", false, "", "G"},
    {"B.10", 3, "B", "x=1x+x1+xx; y=1y+y1+xy+yx+yy", "", false, "", "B"},
    {"B.11", 3, "B", "x=1x+x1; y=1y+y1+xy+yx+xx+yy", "", false, "", "C"},
    {"B.12", 3, "B", "x=xx; y=1y+y1", "x", false, "", "C"},
    {"B.13", 3, "B", "x=xx; y=11+1x+x1+1y+y1+xx", "x", false, "", "C"},
    {"B.14", 3, "B", "x=xx; y=xy+y1", "x", false, "", "G"},
    {"B.15", 3, "B", "x=xx; y=1y+yx", "x", false, "", "G"},
    {"B.16", 3, "B", "x=xx; y=xy+yx", "x", false, "", "C"},
    {"B.17", 3, "B", "x=xx+yy; y=xy+yx", "x", false, "", "C"},
    {"B.18", 3, "B", "x=xx; y=11+1x+x1+xx+xy+yx", "x", false, "", "C"},
    {"B.19", 3, "B", "x=xx; y=1y+y1+yy", "x", false, "", "B"},
    {"B.20", 3, "B", "x=11+1x+1y+x1+xy+y1+yx+yy; y=1y+y1+yy", "x", false, "", "C"},
    {"B.21", 3, "B", "x=1y+xx+xy+y1+yx; y=11+1x+1y+x1+xx+y1+yy", "x", true, "x=x; y=1+x+y", "D"},
    {"B.22", 3, "B", "x=xx; y=xy+yx+yy", "x", false, "", "B"},
    {"B.23", 3, "B", "x=1x+x1+xx; y=11+1x+x1+1y+y1+xy+yx+xx", "y", false, "", "C"},
    {"B.24", 3, "B", "x=1x+x1; y=yy", "y", false, "", "C"},
    {"B.25", 3, "B", "x=1x+x1+xx; y=yy", "y", false, "", "B"},
    {"B.26", 3, "B", "x=1x+xy; y=yy", "y", false, "", "G"},
    {"B.27", 3, "B", "x=x1+yx; y=yy", "y", false, "", "G"},
    {"B.28", 3, "B", "x=xy+yx; y=yy", "y", false, "", "C"},
    {"B.29", 3, "B", "x=xx+xy+yx; y=yy", "y", false, "", "B"},
    {"B.30", 3, "B", "x=11+1x+1y+x1+y1+yy; y=yy", "y", false, "", "C"},
    {"B.31", 3, "B", "x=11+1y+xy+y1+yx+yy; y=yy", "y", false, "", "C"},
    {"B.32", 3, "B", "x=xy+yx; y=xx+yy", "y", false, "", "C"},
    {"B.33", 3, "B", "x=11+1x+1y+x1+y1+xx+yy; y=1x+x1+xy+yx+yy", "y", true, "x=1+x+y; y=y", "D"},
    {"C.1", 3, "C", "x=1x+x1+xx; y=1y+y1+xy+yx", "", false, "", "C"},
    {"C.2", 3, "C", "x=1x+x1+xx; y=1y+y1+xy+yx+yy", "", false, "", "B"},
    {"C.3", 3, "C", "x=xx; y=1y+y1", "x", false, "", "C"},
    {"C.4", 3, "C", "x=xx; y=xy+y1", "x", false, "", "G"},
    {"C.5", 3, "C", "x=xx; y=1y+yx", "x", false, "", "G"},
    {"C.6", 3, "C", "x=xx; y=xy+yx", "x", false, "", "C"},
    {"C.7", 3, "C", "x=xx; y=1y+y1+yy", "x", false, "", "B"},
    {"C.8", 3, "C", "x=xx; y=xy+yx+yy", "x", false, "", "B"},
    {"D.1", 3, "D", "x=1x+x1+xx; y=1y+y1+yy", "", true, "x=y; y=x", "B"},
    {"D.2", 3, "D", "x=1x+x1+xx+yx; y=1y+y1+xy+yy", "", false, "", "G"},
    {"D.3", 3, "D", "x=1x+x1+xx+xy; y=1y+y1+yx+yy", "", false, "", "G"},
    {"G.1", 3, "G", "x=1x+x1+xx; y=1y+y1+xy+yx", "", false, "", "C"},
    {"G.2", 3, "G", "x=1x+x1+xx+yy; y=1y+y1+xy+yx", "", false, "", "C"},
    {"G.3", 3, "G", "x=1x+x1+xx; y=1y+y1+xy+yx+yy", "", false, "", "B"},
    {"G.4", 3, "G", "x=1x+x1+xx+yy; y=1y+y1+xy+yx+yy", "", false, "", "D"},
    {"G.5", 3, "G", "x=xx; y=xy+yx", "x", false, "", "C"},
    {"G.6", 3, "G", "x=xx+yy; y=xy+yx", "x", false, "", "C"},
    {"G.7", 3, "G", "x=xx; y=xy+yx+yy", "x", false, "", "B"},
    {"G.8", 3, "G", "x=xx+yy; y=xy+yx+yy", "x", false, "", "D"},
    {"G.1", 4, "G", "x=1x+x1; y=1y+y1; z=1z+xy+yx+z1", "", true, "x=x; y=y; z=z", "E"},
    {"G.2", 4, "G", "x=1x+x1+yy; y=1y+y1; z=1z+xy+yx+z1", "", true, "x=x; y=y; z=z", "G"},
    {"G.3", 4, "G", "x=1x+x1+xy+yx+zy+yz; y=1y+y1; z=1z+xy+yx+zy+yz+z1", "", true, "x=x; y=y; z=z", "E"},
    {"G.4", 4, "G", "x=1x+x1+xy+yx+zy+yz+yy; y=1y+y1; z=1z+xy+yx+zy+yz+z1", "", true, "x=x; y=y; z=z", "G"},
    {"G.5", 4, "G", "x=1x+x1+xx; y=1y+y1+yy; z=1z+xz+yz+z1+zx+zy+zz+yx+xy", "", true, "x=x+y+z; y=y; z=z", "P"},
    {"G.6", 4, "G", "x=1x+x1+xx+yy+zy+yz+zz; y=1y+y1+yy; z=1z+xz+yz+z1+zx+zy+zz+yx+xy", "", true, "x=x+y+z; y=y; z=z", "L"},
    {"G.7", 4, "G", "x=1x+x1+xx+xy+yx; y=1y+y1+yy; z=1z+xz+xy+yx+z1+zx+zz", "", true, "x=x+y+z; y=y; z=z", "P"},
    {"G.8", 4, "G", "x=1x+x1+xx+xy+yx+yy+zy+yz+zz; y=1y+y1+yy; z=1z+xz+xy+yx+z1+zx+zz", "", true, "x=x+y+z; y=y; z=z", "L"},
    {"I.1", 4, "I", "x=1x+x1+xx+yx; y=1y+y1+xy+yy; z=1z+xz+yz+z1+zx+zy", "", false, "", "ND"},
    {"I.2", 4, "I", "x=1x+x1+xx+yx; y=1y+y1+xy+yy; z=1z+xz+yz+z1+zx+zy+zz", "", false, "", "NG"},
    {"I.3", 4, "I", "x=1x+x1+xx+xy; y=1y+y1+yx+yy; z=1z+xz+yz+z1+zx+zy", "", false, "", "NC"},
    {"I.4", 4, "I", "x=1x+x1+xx+xy; y=1y+y1+yx+yy; z=1z+xz+yz+z1+zx+zy+zz", "", false, "", "NG"},
    {"J.1", 4, "J", "x=xx; y=yy; z=xz+zx+zz", "xy", false, "", "P"},
    {"J.2", 4, "J", "x=xx; y=xz+yy+yz+zx+zy; z=xz+zx+zz", "xy", false, "", "P"},
    {"J.3", 4, "J", "x=xx+zz; y=xx+xy+xz+yx+yz+zx+zy; z=xz+zx", "xy", false, "", "J"},
    {"J.4", 4, "J", "x=xx+zz; y=xx+xy+xz+yx+yz+zx+zy+zz; z=xz+zx", "xy", false, "", "C"},
    {"J.5", 4, "J", "x=xx+z1+zx; y=x1+xy+y1+z1+zy; z=xz+z1+zz", "xy", false, "", "NE"},
    {"J.6", 4, "J", "x=1z+xx+xz; y=1x+1y+1z+yx+yz; z=1z+zx+zz", "xy", false, "", "NE"},
    {"M.1", 4, "M", "x=x1+yx; y=yy; z=yz+z1", "y", false, "", "NE"},
    {"M.2", 4, "M", "x=1z+xy+xz+yx+yz+z1+zx+zy; y=11+1x+1y+1z+x1+y1+z1+xy+xz+yx+yz+zx+zy; z=1x+x1+xy+xz+yx+yz+zx+zy", "y", true, "x=x; y=y; z=z", "E"},
    {"M.3", 4, "M", "x=1x+xy; y=yy; z=1z+zy", "y", false, "", "NE"},
    {"NF.1", 4, "NF", "x=x1+1x; y=1y+xy+xz+y1+yx+zx; z=1z+xy+xz+yx+z1+zx", "", true, "x=x; y=z; z=y", "E"},
    {"NF.2", 4, "NF", "x=1x+x1+yx+zx; y=1y+xy+xz+y1+yx+yy+yz+zx; z=1z+xy+xz+yx+z1+zx+zy+zz", "", true, "x=x+y; y=z; z=y", "NF"},
    {"NF.3", 4, "NF", "x=1x+x1+xy+xz; y=1y+xy+xz+y1+yx+yy+zx+zy; z=1z+xy+xz+yx+yz+z1+zx+zz", "", true, "x=x+z; y=z; z=y", "NF"},
    {"NF.4", 4, "NF", "x=1x+x1+xy+xz+yx+yz+zx+zy; y=1y+xy+xz+y1+yx+yz+zx+zy; z=1z+xy+xz+yx+yz+z1+zx+zy", "", true, "x=x+y+z; y=z; z=y", "E"},
    {"NF.5", 4, "NF", "x=11+1x+x1; y=1z+xy+xz+yx+z1+zx; z=1y+xy+xz+y1+yx+zx", "x", true, "x=x; y=z; z=y", "E"},
    {"NF.6", 4, "NF", "x=11+1x+x1+y1+yx+z1+zx; y=1z+xy+xz+yx+yy+yz+z1+zx; z=1y+xy+xz+y1+yx+zx+zy+zz", "x", true, "x=x+z; y=z; z=y", "NF"},
    {"NF.7", 4, "NF", "x=11+1x+1y+1z+x1+xy+xz; y=1z+xy+xz+yx+yy+z1+zx+zy; z=1y+xy+xz+y1+yx+yz+zx+zz", "x", true, "x=x+y; y=z; z=y", "NF"},
    {"NF.8", 4, "NF", "x=11+1x+1y+1z+x1+xy+xz+y1+yx+yz+z1+zx+zy; y=1z+xy+xz+yx+yz+z1+zx+zy; z=1y+xy+xz+y1+yx+yz+zx+zy", "x", true, "x=x+y+z; y=z; z=y", "E"},
};

const std::vector<FourierRow> kFourier = {
    {"D", "D", "D.2", "",
     "x=x1+1x; y=y1+1y+yy; z=1z+xy+yx+z1+zy+yz",
     "x=x; y=y; z=z", "0101", "0101,1111,0100,1100", {"1", "y", "x", "z"}, "0011,1111,0010,1010"},
    {"D", "E", "D.1", "",
     "x=x1+1x; y=y1+1y; z=1z+xy+yx+z1",
     "x=x; y=y; z=z", "0001", "0001,0011,0100,1100", {"1", "y", "x", "z"}, "0001,0101,0010,1010"},
    {"E", "D", "E.2", "",
     "x=1x+x1; y=1y+y1+yy; z=1z+xy+yx+yz+z1+zy",
     "x=x; y=y; z=z", "0101", "0101,1010,0100,1000", {"1", "y", "x", "z"}, "0011,1100,0010,1000"},
    {"E", "E", "E.1", "",
     "x=x1+1x; y=y1+1y; z=1z+xy+yx+z1",
     "x=x; y=y; z=z", "0001", "0001,0010,0100,1000", {"1", "x", "y", "z"}, "0001,0010,0100,1000"},
    {"E", "G", "E.5", "",
     "x=1x+x1; y=1y+xx+y1; z=1z+xy+yx+z1",
     "x=x; y=y; z=z", "0001", "0001,0010,0100,1000", {"1", "x", "y", "z"}, "0001,0010,0100,1000"},
    {"E", "L", "E.15", "",
     "x=1x+zx+x1+xz+yy; y=1y+zy+y1+yz+xx; z=1z+xy+yx+z1+zz",
     "x=x; y=y; z=z", "1001", "1001,0010,0100,1000", {"1", "x", "z", "1+y"}, "0010,0001,0100,1000"},
    {"E", "M", "E.16", "",
     "x=1x+zx+x1+xz+yy+zz; y=1y+zy+y1+yz+xx+xz+yy+zx+zz; z=1z+xy+yx+yz+z1+zy+zz",
     "x=x; y=y; z=z", "1101", "1101,1010,0100,1000", {"1", "1+x+y", "x+z", "x"}, "0010,1101,1110,1000"},
    {"E", "P", "E.38", "",
     "x=1x+x1+xx; y=1y+y1+yy; z=1z+xz+yz+z1+zx+zy+zz+yx+xy",
     "x=x; y=y; z=z", "1111", "1111,1010,1100,1000", {"1", "x", "y", "z"}, "1111,1010,1100,1000"},
    {"E", "NF", "E.40", "",
     "x=1x+x1+xx; y=1y+xy+y1; z=1z+z1+yx+zx+xy",
     "x=x; y=y+z; z=z", "0011", "0011,0010,1100,1000", {"1", "x", "y+z", "y"}, "0001,0011,1100,1000"},
    {"G", "E", "G.1", "",
     "x=1x+x1; y=1y+y1; z=1z+xy+yx+z1",
     "x=x; y=y; z=z", "0001", "0001,0010,0100,1000", {"1", "x", "y", "z"}, "0001,0010,0100,1000"},
    {"G", "G", "G.2", "",
     "x=1x+x1+yy; y=1y+y1; z=1z+xy+yx+z1",
     "x=x; y=y; z=z", "0001", "0001,0010,0100,1000", {"1", "y", "x", "z"}, "0001,0100,0010,1000"},
    {"G", "P", "G.5", "",
     "x=1x+x1+xx; y=1y+y1+yy; z=1z+xz+yz+z1+zx+zy+yx+xy+zz",
     "x=x+y+z; y=y; z=z", "1111", "1111,1110,1100,1000", {"1", "x", "y", "z"}, "1111,1110,1100,1000"},
    {"G", "L", "G.6", "",
     "x=1x+x1+xx+yy+yz+zy+zz; y=1y+y1+yy; z=1z+xy+xz+yx+zx+z1+yz+zy+zz",
     "x=x+y+z; y=y; z=z", "1111", "1111,1110,1100,1000", {"1", "x+z", "z", "1+x+y"}, "0010,1100,1101,1000"},
    {"L", "E", "L.6", "y",
     "x=1x+x1; y=11+1y+xz+y1+zx; z=1z+z1",
     "x=x; y=y; z=z", "0010", "0010,0001,1010,0100", {"1+z", "x", "z", "y"}, "0001,0010,1000,0100"},
    {"L", "G", "L.11", "y",
     "x=1x+x1+xx+xz+zx+zz; y=11+1y+xx+y1+zz; z=1z+xx+xz+z1+zx+zz",
     "x=z; y=y; z=x", "0010", "0010,0001,1010,0100", {"1+z", "x+z", "z", "x+y"}, "0001,0110,1000,0101"},
    {"M", "E", "M.2", "y",
     "x=1z+xy+xz+yx+zx+z1+yz+zy; y=11+yz+zy+1x+1y+1z+x1+y1+z1+xy+xz+yx+zx; z=1x+x1+xy+xz+yx+zx+yz+zy",
     "x=x; y=y; z=z", "0111", "0111,1100,1010,1001", {"1+x", "x+y+z", "x", "y"}, "0001,1011,1000,1110"},
    {"P", "E", "P.1", "",
     "x=1x+x1; y=1y+y1; z=1z+xy+yx+z1",
     "x=x; y=y; z=z", "0001", "0001,0011,0101,1111", {"1", "x", "y", "z"}, "0001,0011,0101,1111"},
    {"P", "G", "P.3", "",
     "x=1x+x1; y=1y+xx+y1; z=1z+xy+yx+z1",
     "x=x; y=y; z=z", "0001", "0001,0011,0101,1111", {"1", "x", "y", "z"}, "0001,0011,0101,1111"},
    {"NF", "E", "NF.1", "",
     "x=1x+x1; y=1y+xy+xz+y1+yx+zx; z=1z+xy+xz+yx+z1+zx",
     "x=x; y=z; z=y", "0011", "0011,0010,1000,1100", {"1", "x", "y+z", "y"}, "0001,0011,1000,1100"},
    {"NF", "NF", "NF.2", "",
     "x=1x+x1+yx+zx; y=1y+xy+xz+y1+yx+yy+yz+zx; z=1z+xy+xz+yx+z1+zx+zy+zz",
     "x=x+y; y=z; z=y", "0111", "0111,1110,1000,1100", {"1", "y+z", "x+y", "x"}, "0001,1101,1000,1011"},
};

const std::vector<PairingFixture> kPairings = {
    {"B.19", 3, "1xy", "11 1x x1 xy yx"},
    {"G.2", 4, "1xyz", "11 xy yx zz"},
    {"d_sl2", 4, "1sxw", "11 1s s1 ss sx sw xs ws ww"},
};

}  // namespace

const std::vector<CoproductRow>& coproduct_rows() { return kCoproducts; }

const CoproductRow& coproduct_row(std::string_view label, int n) {
  const CoproductRow* hit = nullptr;
  for (const auto& r : kCoproducts)
    if (label == r.label && (n == 0 || n == r.n)) {
      if (hit) throw std::invalid_argument("coproduct fixture " + std::string(label) + " needs a dimension");
      hit = &r;
    }
  if (!hit) throw std::out_of_range("no coproduct fixture " + std::string(label));
  return *hit;
}

Bialgebra bialgebra_of(const CoproductRow& row) {
  const auto& alg = AlgebraCatalog::instance().get(row.n, row.algebra).named_form;
  return {alg, parse_coalgebra(row.n, row.coproduct, row.counit)};
}

std::optional<Gf2Mat> antipode_of(const CoproductRow& row) {
  if (!row.hopf) return std::nullopt;
  return parse_linear_map(row.n, row.antipode);
}

const std::vector<FourierRow>& fourier_rows() { return kFourier; }

const FourierRow* fourier_row(std::string_view algebra, std::string_view dual) {
  for (const auto& r : kFourier)
    if (algebra == r.algebra && dual == r.dual) return &r;
  return nullptr;
}

HopfAlgebra hopf_of(const FourierRow& row) {
  const auto& alg = AlgebraCatalog::instance().get(4, row.algebra).named_form;
  return {{alg, parse_coalgebra(4, row.coproduct, row.counit)}, parse_linear_map(4, row.antipode)};
}

Gf2Mat identification_of(const FourierRow& row) {
  std::vector<uint64_t> rows;
  for (const char* e : row.identification) rows.push_back(parse_element(e));
  return Gf2Mat::from_rows(4, rows);
}

HopfAlgebra dsl2() {
  auto alg = parse_algebra(4, "ss=1 sx=w wx=w ww=w xs=1+s+w ws=1+s+x sw=x xw=x xx=x", kDsl2Names);
  auto co = parse_coalgebra(4, "s=ss; x=sx+x1; w=1w+ws", "s", kDsl2Names);
  return {{alg, co}, parse_linear_map(4, "s=s; x=w; w=1+s+x", kDsl2Names)};
}

Gf2Mat dsl2_pairing() { return pairing_matrix(kPairings.back()); }

const std::vector<PairingFixture>& pairing_rows() { return kPairings; }

Gf2Mat pairing_matrix(const PairingFixture& p) {
  std::string_view names = p.names;
  Gf2Mat m(names.size(), names.size());
  std::string_view ones = p.ones;
  for (std::size_t i = 0; i + 1 < ones.size(); ++i) {
    if (ones[i] == ' ') continue;
    m.set(names.find(ones[i]), names.find(ones[i + 1]), true);
    ++i;
  }
  return m;
}

const std::vector<HolonomyFixture>& holonomy_rows() {
  static const std::vector<HolonomyFixture> rows = {
      {{"E", "P", "G", "E"}, "0001,0010,0100,1000", 2},
      {{"E", "G", "L", "E"}, "0001,0111,0011,1000", 4},
      {{"E", "P", "G", "L", "E"}, "1000,0011,0111,0001", 3},
  };
  return rows;
}

}  // namespace f2hopf::fixtures
