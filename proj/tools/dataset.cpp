#include <fstream>
#include <functional>
#include <sstream>

#include "f2hopf/enumerate.hpp"
#include "f2hopf/fixtures.hpp"
#include "f2hopf/fourier.hpp"
#include "f2hopf/notation.hpp"
#include "f2hopf/qtri.hpp"
#include "f2hopf/repsearch.hpp"
#include "pipeline.hpp"

namespace f2hopf::cli {

std::string to_hex(uint64_t value, int bits) {
  static const char* digits = "0123456789abcdef";
  const int width = (bits + 3) / 4;
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) s[width - 1 - i] = digits[(value >> (4 * i)) & 0xf];
  return "0x" + s;
}

uint64_t from_hex(const std::string& s, int bits) {
  if (s.size() < 3 || s.compare(0, 2, "0x") != 0 || s.size() - 2 != static_cast<std::size_t>((bits + 3) / 4))
    throw std::invalid_argument("bad hex field '" + s + "'");
  uint64_t v = 0;
  for (std::size_t i = 2; i < s.size(); ++i) {
    char c = s[i];
    int d = c >= '0' && c <= '9' ? c - '0' : c >= 'a' && c <= 'f' ? c - 'a' + 10 : -1;
    if (d < 0) throw std::invalid_argument("bad hex digit in '" + s + "'");
    v = (v << 4) | static_cast<uint64_t>(d);
  }
  if (bits < 64 && (v >> bits)) throw std::invalid_argument("hex field '" + s + "' wider than " + std::to_string(bits) + " bits");
  return v;
}

json matrix_json(const Gf2Mat& m) { return matrix_doc(m); }

Gf2Mat matrix_from_json(const json& j, int n) {
  Gf2Mat m = parse_matrix(j.get<std::string>());
  if (m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("matrix '" + j.get<std::string>() + "' is not " + std::to_string(n) + "x" + std::to_string(n));
  return m;
}

std::string bits_string(const Gf2Vec& v) { return v.to_string(); }

json bialgebra_fields(const Bialgebra& b) {
  const int n = b.n();
  return {{"n", n},
          {"V", to_hex(b.alg.V, n * n * n)},
          {"eta", to_hex(b.alg.eta, n)},
          {"C", to_hex(b.coalg.C, n * n * n)},
          {"eps", to_hex(b.coalg.eps, n)},
          {"relations", relations_doc(b.alg)},
          {"coproduct", coproduct_doc(b.coalg)},
          {"counit", format_element(b.coalg.eps)}};
}

namespace {

int dim_of(const json& rec) {
  int n = rec.at("n").get<int>();
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("dimension " + std::to_string(n) + " out of range");
  return n;
}

AlgebraSC algebra_from(const json& rec) {
  int n = dim_of(rec);
  return {n, from_hex(rec.at("V").get<std::string>(), n * n * n),
          static_cast<uint32_t>(from_hex(rec.at("eta").get<std::string>(), n))};
}

json algebra_fields(const AlgebraSC& a) {
  const int n = a.n;
  return {{"n", n}, {"V", to_hex(a.V, n * n * n)}, {"eta", to_hex(a.eta, n)}, {"relations", relations_doc(a)}};
}

}  // namespace

Bialgebra bialgebra_from(const json& rec) {
  int n = dim_of(rec);
  CoalgebraSC c{n, from_hex(rec.at("C").get<std::string>(), n * n * n),
                static_cast<uint32_t>(from_hex(rec.at("eps").get<std::string>(), n))};
  return {algebra_from(rec), c};
}

json document(const std::string& schema, int n, json records) {
  return {{"schema", "f2hopf." + schema},
          {"version", kSchemaVersion},
          {"engine", kEngine},
          {"dimension", n},
          {"records", std::move(records)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json raw_document(const RawSolutionSet& raw) {
  json recs = json::array();
  for (std::size_t i = 0; i < raw.solutions.size(); ++i) {
    const auto& s = raw.solutions[i];
    json r = bialgebra_fields({raw.algebra, s.coalg});
    r["kind"] = "bialgebra";
    r["algebra"] = raw.algebra_label;
    r["index"] = i;
    r["type"] = s.type;
    r["hopf"] = s.hopf;
    r["antipode"] = s.antipode ? matrix_json(*s.antipode) : json(nullptr);
    recs.push_back(std::move(r));
  }
  json doc = document("raw", raw.algebra.n, std::move(recs));
  doc["algebra"] = algebra_fields(raw.algebra);
  doc["algebra"]["label"] = raw.algebra_label;
  doc["count"] = raw.solutions.size();
  doc["hopf_count"] = raw.hopf_count();
  return doc;
}

RawSolutionSet raw_from_document(const json& doc) {
  if (doc.at("schema") != "f2hopf.raw" || doc.at("version") != kSchemaVersion || doc.at("engine") != kEngine)
    throw SchemaError("not a raw solution document of this engine");
  RawSolutionSet raw;
  raw.algebra_label = doc.at("algebra").at("label").get<std::string>();
  raw.algebra = algebra_from(doc.at("algebra"));
  for (const auto& r : doc.at("records")) {
    RawSolution s;
    s.coalg = bialgebra_from(r).coalg;
    s.type = r.at("type").get<std::string>();
    s.hopf = r.at("hopf").get<bool>();
    if (!r.at("antipode").is_null()) s.antipode = matrix_from_json(r.at("antipode"), raw.algebra.n);
    raw.solutions.push_back(std::move(s));
  }
  if (raw.solutions.size() != doc.at("count").get<std::size_t>()) throw SchemaError("record count mismatch");
  return raw;
}

// ---- verification ---------------------------------------------------------

namespace {

// A named check returns an empty string on success, else a description.
using Check = std::pair<std::string, std::function<std::string()>>;

std::string report_of(const AxiomReport& r) { return r ? "" : r.to_string(); }

std::string expect_eq(const std::string& what, const std::string& got, const std::string& want) {
  return got == want ? "" : what + " is " + want + ", record says " + got;
}

std::optional<Gf2Mat> antipode_field(const json& rec, int n) {
  if (!rec.contains("antipode") || rec.at("antipode").is_null()) return std::nullopt;
  return matrix_from_json(rec.at("antipode"), n);
}

std::vector<Check> bialgebra_checks(const json& rec, const Bialgebra& b, bool hopf_required) {
  std::vector<Check> cs;
  cs.push_back({"bialgebra_axioms", [b] { return report_of(check_bialgebra(b)); }});
  if (rec.contains("type"))
    cs.push_back({"type", [b, &rec] { return expect_eq("coalgebra type", rec.at("type").get<std::string>(), coalgebra_type(b.coalg)); }});
  const int n = b.n();
  bool hopf = hopf_required || (rec.contains("hopf") && rec.at("hopf").get<bool>());
  if (rec.contains("hopf"))
    cs.push_back({"hopf", [b, &rec] {
                    bool solvable = solve_antipode(b).has_value();
                    return rec.at("hopf").get<bool>() == solvable ? std::string{} : std::string(solvable ? "has an antipode" : "has no antipode");
                  }});
  if (hopf)
    cs.push_back({"antipode", [b, &rec, n] {
                    auto s = antipode_field(rec, n);
                    if (!s) return std::string("antipode missing");
                    return report_of(check_antipode(b, *s));
                  }});
  return cs;
}

std::vector<Check> record_checks(const json& rec) {
  const std::string kind = rec.at("kind").get<std::string>();
  std::vector<Check> cs;
  if (kind == "algebra") {
    AlgebraSC a = algebra_from(rec);
    cs.push_back({"algebra_axioms", [a] { return report_of(check_algebra(a)); }});
    cs.push_back({"label", [a, &rec] {
                    return expect_eq("catalog label", rec.at("label").get<std::string>(), identify_algebra(to_standard_form(a)));
                  }});
    return cs;
  }
  if (kind == "bialgebra" || kind == "bialgebra_class") return bialgebra_checks(rec, bialgebra_from(rec), false);
  if (kind == "fourier") {
    Bialgebra b = bialgebra_from(rec);
    const int n = b.n();
    cs = bialgebra_checks(rec, b, true);
    cs.push_back({"integral", [b, &rec, n] {
                    auto sp = right_integral_space(b);
                    if (sp.nullity() != 1) return "integral space has dimension " + std::to_string(sp.nullity());
                    return expect_eq("right integral", rec.at("integral").get<std::string>(), bits_string(sp.nullspace[0]));
                  }});
    cs.push_back({"fourier", [b, &rec, n] {
                    // F and F# from the recorded integral, int(x^nu x^mu) and int(x^mu x^nu).
                    Gf2Vec I = parse_bits(rec.at("integral").get<std::string>());
                    if (I.size() != static_cast<std::size_t>(n)) return std::string("integral has the wrong length");
                    Gf2Mat F(n, n), Fs(n, n);
                    for (int mu = 0; mu < n; ++mu)
                      for (int nu = 0; nu < n; ++nu) {
                        F.set(mu, nu, __builtin_popcount(b.alg.prod(nu, mu) & I.mask()) & 1);
                        Fs.set(mu, nu, __builtin_popcount(b.alg.prod(mu, nu) & I.mask()) & 1);
                      }
                    std::string e = expect_eq("F", rec.at("F").get<std::string>(), matrix_doc(F));
                    if (e.empty() && rec.contains("F_sharp")) e = expect_eq("F#", rec.at("F_sharp").get<std::string>(), matrix_doc(Fs));
                    if (e.empty() && !invert(F)) e = "F is singular";
                    return e;
                  }});
    cs.push_back({"identification", [b, &rec, n] {
                    Gf2Mat J = matrix_from_json(rec.at("identification"), n);
                    std::string target = rec.at("target").get<std::string>();
                    bool self = rec.value("self_dual_basis", false);
                    bool ok = self ? apply_basis_change(dualize(b.coalg), J) == b.alg : is_dual_identification(b.coalg, target, J);
                    return ok ? std::string{} : "not an algebra isomorphism onto " + target;
                  }});
    cs.push_back({"transport", [&rec, n] {
                    Gf2Mat T = matrix_from_json(rec.at("F"), n) * matrix_from_json(rec.at("identification"), n);
                    std::string e = expect_eq("F J", rec.at("transport").get<std::string>(), matrix_doc(T));
                    if (e.empty() && rec.contains("transport_order"))
                      e = expect_eq("transport order", std::to_string(rec.at("transport_order").get<std::size_t>()),
                                    std::to_string(multiplicative_order(T)));
                    return e;
                  }});
    return cs;
  }
  if (kind == "quasitriangular") {
    Bialgebra b = bialgebra_from(rec);
    const int n = b.n();
    cs = bialgebra_checks(rec, b, true);
    auto R = [&rec, n] { return TensorSquareElement{n, static_cast<uint32_t>(from_hex(rec.at("R").get<std::string>(), n * n))}; };
    cs.push_back({"quasitriangular", [b, R] { return report_of(check_quasitriangular(b, R())); }});
    cs.push_back({"inverse", [b, R, &rec, n] {
                    uint32_t inv = static_cast<uint32_t>(from_hex(rec.at("R_inv").get<std::string>(), n * n));
                    bool ok = tensor_mul(b.alg, R().coeffs, inv) == unit_square(b.alg) && tensor_mul(b.alg, inv, R().coeffs) == unit_square(b.alg);
                    return ok ? std::string{} : std::string("R_inv is not the inverse of R");
                  }});
    cs.push_back({"killing_form", [b, R, &rec, n] {
                    auto c = classify_R(b, R());
                    std::string e = expect_eq("Q", rec.at("Q").get<std::string>(), to_hex(c.Q.coeffs, n * n));
                    if (e.empty()) e = expect_eq("class", rec.at("class").get<std::string>(), to_string(c.klass));
                    if (e.empty()) e = expect_eq("factorisable", rec.at("factorisable").dump(), json(c.factorisable).dump());
                    return e;
                  }});
    cs.push_back({"yang_baxter", [b, R] { return yang_baxter(b.alg, R()) ? std::string{} : std::string("R12 R13 R23 != R23 R13 R12"); }});
    return cs;
  }
  if (kind == "representation") {
    AlgebraSC a = algebra_from(rec);
    cs.push_back({"representation", [a, &rec] {
                    Representation r;
                    r.k = rec.at("k").get<int>();
                    for (const auto& m : rec.at("images")) r.images.push_back(matrix_from_json(m, r.k));
                    if (r.images.size() != static_cast<std::size_t>(a.n)) return std::string("wrong number of images");
                    return report_of(check_representation(a, r));
                  }});
    return cs;
  }
  throw SchemaError("unknown record kind '" + kind + "'");
}

}  // namespace

void verify_document(const json& doc, const std::string& file, VerifyReport& report) {
  if (!doc.is_object() || !doc.contains("schema") || !doc.contains("version") || !doc.contains("records") ||
      !doc.at("records").is_array())
    throw SchemaError(file + ": missing schema, version or records");
  if (doc.at("version") != kSchemaVersion) throw SchemaError(file + ": unsupported version " + doc.at("version").dump());
  ++report.files;
  const auto& recs = doc.at("records");
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const json& rec = recs[i];
    std::vector<Check> checks;
    try {
      checks = record_checks(rec);
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception& e) {
      throw SchemaError(file + " record " + std::to_string(i) + ": " + e.what());
    }
    ++report.records;
    std::optional<VerifyFailure> first;
    for (const auto& [name, fn] : checks) {
      std::string err;
      try {
        err = fn();
      } catch (const std::exception& e) {
        err = e.what();
      }
      if (err.empty()) {
        ++report.passed[name];
      } else if (!first) {
        std::string label = rec.contains("label") ? rec.at("label").get<std::string>()
                            : rec.contains("algebra") ? rec.at("algebra").get<std::string>() + "#" + std::to_string(rec.value("index", i))
                                                      : "";
        first = VerifyFailure{file, i, label, name, err};
      }
    }
    if (first) report.failures.push_back(*first);
  }
}

VerifyReport verify(const fs::path& path) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& e : fs::recursive_directory_iterator(path))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(path)) {
    files.push_back(path);
  } else {
    throw SchemaError(path.string() + ": no such file or directory");
  }
  VerifyReport report;
  for (const auto& f : files) {
    std::ifstream in(f);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw SchemaError(f.string() + ": not valid JSON");
    verify_document(doc, f.string(), report);
  }
  return report;
}

// ---- export ---------------------------------------------------------------

std::vector<std::string> export_names() { return {"fourier-table", "coproducts"}; }

json export_dataset(const std::string& name) {
  json recs = json::array();
  if (name == "fourier-table") {
    for (const auto& row : fixtures::fourier_rows()) {
      auto h = fixtures::hopf_of(row);
      json r = bialgebra_fields(h.bi);
      r["kind"] = "fourier";
      r["label"] = row.label;
      r["source"] = row.algebra;
      r["target"] = row.dual;
      r["type"] = row.dual;
      r["antipode"] = matrix_json(h.s);
      r["integral"] = row.integral;
      r["F"] = matrix_doc(parse_matrix(row.F));
      r["identification"] = matrix_json(fixtures::identification_of(row));
      r["transport"] = matrix_doc(parse_matrix(row.transport));
      recs.push_back(std::move(r));
    }
    return document("fourier-table", 4, std::move(recs));
  }
  if (name == "coproducts") {
    for (const auto& row : fixtures::coproduct_rows()) {
      auto b = fixtures::bialgebra_of(row);
      json r = bialgebra_fields(b);
      r["kind"] = "bialgebra";
      r["label"] = row.label;
      r["algebra"] = row.algebra;
      r["type"] = row.dual_type;
      r["hopf"] = row.hopf;
      auto s = fixtures::antipode_of(row);
      r["antipode"] = s ? matrix_json(*s) : json(nullptr);
      recs.push_back(std::move(r));
    }
    // Mixed dimensions; each record carries its own n.
    return document("published-coproducts", 0, std::move(recs));
  }
  throw UsageError("unknown dataset '" + name + "'");
}

}  // namespace f2hopf::cli
