#pragma once

// Unital associative algebras over F2 in standard form (x^0 = 1), their
// isomorphism classes, and the named catalog used to label them.

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "f2hopf/structure.hpp"

namespace f2hopf {

struct AlgebraClass {
  std::string label;
  // Lexicographically smallest tensor in the isomorphism orbit.
  AlgebraSC representative;
  // The same algebra in the basis the named fixtures are written in.
  AlgebraSC named_form;
  std::string relations_doc;
  // Indices into the list handed to classify_algebras (empty for catalog entries).
  std::vector<std::size_t> members;
};

class AlgebraCatalog {
 public:
  static const AlgebraCatalog& instance();

  const std::vector<AlgebraClass>& classes(int n) const;
  const AlgebraClass& get(int n, std::string_view label) const;
  // Label of a standard-form tensor, or empty when not found.
  std::string lookup(int n, uint64_t V) const;
  // Number of standard-form tensors covered by the catalog orbits.
  std::size_t orbit_union_size(int n) const;

 private:
  AlgebraCatalog();
  std::vector<std::vector<AlgebraClass>> by_dim_;
  std::vector<std::unordered_map<uint64_t, int>> label_of_;
};

// Every standard-form algebra tensor of dimension n, ascending.
std::vector<AlgebraSC> enumerate_algebras(int n);

// Orbits under unit-fixing basis changes; classes sorted by representative.
std::vector<AlgebraClass> classify_algebras(const std::vector<AlgebraSC>& list);

// Lexicographic minimum of the orbit of a standard-form tensor.
uint64_t canonical_tensor(int n, uint64_t V);

// Basis change to standard form when the unit is a general combination.
AlgebraSC to_standard_form(const AlgebraSC& a);

// Catalog label; throws std::logic_error when nothing matches.
std::string identify_algebra(const AlgebraSC& a);

// Unit-fixing matrices P with apply_basis_change(a, P) == a.
std::vector<Gf2Mat> automorphism_group(const AlgebraSC& a);

// Cached unit-fixing matrices (row masks and inverses) for dimension n.
struct RowPair {
  uint8_t P[kMaxDim];
  uint8_t Pinv[kMaxDim];
};
const std::vector<RowPair>& unit_fixing_group(int n);
const std::vector<RowPair>& general_linear_group(int n);

}  // namespace f2hopf
