#include "f2hopf/notation.hpp"

#include <stdexcept>
#include <vector>

namespace f2hopf {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (ch != ' ' && ch != '\t' && ch != '\n') out += ch;
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int index_of(char ch, std::string_view names) {
  auto p = names.find(ch);
  if (p == std::string_view::npos) throw std::invalid_argument(std::string("unknown basis name '") + ch + "'");
  return static_cast<int>(p);
}

// Whitespace separated tokens, commas also accepted.
std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == ',' || ch == ';' || ch == '\n' || ch == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

uint32_t parse_element(std::string_view s, std::string_view names) {
  std::string t = strip(s);
  if (t.empty() || t == "0") return 0;
  uint32_t x = 0;
  for (const auto& term : split(t, '+')) {
    if (term.size() != 1) throw std::invalid_argument("bad element term '" + term + "'");
    x ^= 1u << index_of(term[0], names);
  }
  return x;
}

uint32_t parse_tensor(std::string_view s, std::string_view names) {
  std::string t = strip(s);
  const int n = static_cast<int>(names.size());
  if (t.empty() || t == "0") return 0;
  uint32_t x = 0;
  for (const auto& term : split(t, '+')) {
    if (term.size() != 2) throw std::invalid_argument("bad tensor term '" + term + "'");
    x ^= 1u << (index_of(term[0], names) * n + index_of(term[1], names));
  }
  return x;
}

AlgebraSC parse_algebra(int n, std::string_view relations, std::string_view names) {
  names = names.substr(0, n);
  AlgebraSC a;
  a.n = n;
  a.eta = 1;
  for (int i = 0; i < n; ++i) {
    a.V |= uint64_t{1} << tidx(n, 0, i, i);
    a.V |= uint64_t{1} << tidx(n, i, 0, i);
  }
  std::vector<uint8_t> seen(n * n, 0);
  for (const auto& tok : tokens(relations)) {
    auto eq = tok.find('=');
    if (eq != 2) throw std::invalid_argument("bad relation '" + tok + "'");
    int i = index_of(tok[0], names), j = index_of(tok[1], names);
    if (i == 0 || j == 0) throw std::invalid_argument("relation involves the unit: '" + tok + "'");
    if (seen[i * n + j]++) throw std::invalid_argument("repeated relation '" + tok + "'");
    a.V |= static_cast<uint64_t>(parse_element(tok.substr(3), names)) << ((i * n + j) * n);
  }
  return a;
}

CoalgebraSC parse_coalgebra(int n, std::string_view coproduct, std::string_view counit_ones,
                            std::string_view names) {
  names = names.substr(0, n);
  CoalgebraSC c;
  c.n = n;
  c.C = 1;  // Delta 1 = 1 (x) 1
  c.eps = 1;
  for (char ch : strip(counit_ones)) c.eps |= 1u << index_of(ch, names);
  std::vector<uint8_t> seen(n, 0);
  for (const auto& part : split(strip(coproduct), ';')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq != 1) throw std::invalid_argument("bad coproduct entry '" + part + "'");
    int m = index_of(part[0], names);
    if (m == 0) throw std::invalid_argument("coproduct of the unit is implied");
    if (seen[m]++) throw std::invalid_argument("repeated coproduct entry '" + part + "'");
    c.C |= static_cast<uint64_t>(parse_tensor(part.substr(2), names)) << (m * n * n);
  }
  for (int m = 1; m < n; ++m)
    if (!seen[m]) throw std::invalid_argument(std::string("missing coproduct of '") + names[m] + "'");
  return c;
}

Gf2Mat parse_linear_map(int n, std::string_view s, std::string_view names) {
  names = names.substr(0, n);
  Gf2Mat m = Gf2Mat::identity(n);
  std::string t = strip(s);
  if (t.empty() || t == "id") return m;
  for (const auto& part : split(t, ';')) {
    if (part.empty()) continue;
    if (part.size() < 3 || part[1] != '=') throw std::invalid_argument("bad map entry '" + part + "'");
    int i = index_of(part[0], names);
    m.row(i) = Gf2Vec::from_mask(n, parse_element(part.substr(2), names));
  }
  return m;
}

Gf2Vec parse_bits(std::string_view s) {
  s = strip(s);
  Gf2Vec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i);
    else if (s[i] != '0')
      throw std::invalid_argument("bad bit string");
  }
  return v;
}

Gf2Mat parse_matrix(std::string_view s) {
  auto rows = split(strip(s), ',');
  const std::size_t n = rows.size();
  Gf2Mat m(n, rows[0].size());
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] == '1')
        m.set(i, j);
      else if (rows[i][j] != '0')
        throw std::invalid_argument("bad matrix entry");
    }
  }
  return m;
}

std::string format_element(uint32_t x, std::string_view names) {
  if (!x) return "0";
  std::string out;
  for (; x; x &= x - 1) {
    if (!out.empty()) out += '+';
    out += names[__builtin_ctz(x)];
  }
  return out;
}

std::string format_tensor(int n, uint32_t t, std::string_view names) {
  if (!t) return "0";
  std::string out;
  for (; t; t &= t - 1) {
    int p = __builtin_ctz(t);
    if (!out.empty()) out += '+';
    out += names[p / n];
    out += names[p % n];
  }
  return out;
}

std::string relations_doc(const AlgebraSC& a, std::string_view names) {
  std::string out;
  for (int i = 1; i < a.n; ++i)
    for (int j = 1; j < a.n; ++j) {
      uint32_t p = a.prod(i, j);
      if (!p) continue;
      if (!out.empty()) out += ' ';
      out += names[i];
      out += names[j];
      out += '=';
      out += format_element(p, names);
    }
  return out;
}

std::string coproduct_doc(const CoalgebraSC& c, std::string_view names) {
  std::string out;
  for (int m = 1; m < c.n; ++m) {
    if (!out.empty()) out += "; ";
    out += names[m];
    out += '=';
    out += format_tensor(c.n, c.delta(m), names);
  }
  return out;
}

std::string matrix_doc(const Gf2Mat& m) { return m.to_string(); }

}  // namespace f2hopf
