#pragma once

// Compact text notation for hand-entered fixtures.
//
// Basis names are single characters, index 0 is the unit ("1xyz" by default).
//   element:      "1+x+y", "0"
//   tensor:       "1x+x1+xy" (each term is two basis names)
//   relations:    "xx=x yx=y xz=z"  (unlisted products of non-unit basis
//                 elements are zero; products with 1 are the unit law)
//   coproduct:    "x=1x+x1; y=1y+y1+xx"  (Delta 1 = 11 is implied)
//   counit:       names with eps = 1, e.g. "x" (eps 1 = 1 is implied)
//   linear map:   "x=x+y; y=z; z=y" or "id" (unlisted rows are identity)
//   matrix:       "0101,1111,0100,1100" (rows, column 0 first)

#include <string>
#include <string_view>

#include "f2hopf/structure.hpp"

namespace f2hopf {

inline constexpr std::string_view kDefaultNames = "1xyz";

uint32_t parse_element(std::string_view s, std::string_view names = kDefaultNames);
uint32_t parse_tensor(std::string_view s, std::string_view names = kDefaultNames);
AlgebraSC parse_algebra(int n, std::string_view relations, std::string_view names = kDefaultNames);
CoalgebraSC parse_coalgebra(int n, std::string_view coproduct, std::string_view counit_ones,
                            std::string_view names = kDefaultNames);
Gf2Mat parse_linear_map(int n, std::string_view s, std::string_view names = kDefaultNames);
Gf2Mat parse_matrix(std::string_view s);
// "0101" -> coordinates 0..3, first character first.
Gf2Vec parse_bits(std::string_view s);

std::string format_element(uint32_t x, std::string_view names = kDefaultNames);
std::string format_tensor(int n, uint32_t t, std::string_view names = kDefaultNames);
// Nonzero products of non-unit basis elements, in the relations syntax.
std::string relations_doc(const AlgebraSC& a, std::string_view names = kDefaultNames);
std::string coproduct_doc(const CoalgebraSC& c, std::string_view names = kDefaultNames);
std::string matrix_doc(const Gf2Mat& m);

}  // namespace f2hopf
