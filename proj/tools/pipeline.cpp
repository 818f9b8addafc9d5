#include <fstream>

#include "f2hopf/enumerate.hpp"
#include "f2hopf/fixtures.hpp"
#include "f2hopf/fourier.hpp"
#include "f2hopf/hopfdual.hpp"
#include "f2hopf/notation.hpp"
#include "f2hopf/qtri.hpp"
#include "f2hopf/repsearch.hpp"
#include "pipeline.hpp"

namespace f2hopf::cli {

const std::vector<Stage>& all_stages() {
  static const std::vector<Stage> v{Stage::algebras, Stage::coproducts, Stage::classify, Stage::quiver,
                                    Stage::fourier,  Stage::qtri,       Stage::reps};
  return v;
}

std::string to_string(Stage s) {
  switch (s) {
    case Stage::algebras: return "algebras";
    case Stage::coproducts: return "coproducts";
    case Stage::classify: return "classify";
    case Stage::quiver: return "quiver";
    case Stage::fourier: return "fourier";
    case Stage::qtri: return "qtri";
    case Stage::reps: return "reps";
  }
  return "?";
}

std::optional<Stage> parse_stage(const std::string& s) {
  for (Stage st : all_stages())
    if (to_string(st) == s) return st;
  return std::nullopt;
}

std::set<Stage> with_dependencies(const std::set<Stage>& s) {
  std::set<Stage> out = s;
  for (Stage st : s) {
    out.insert(Stage::algebras);
    if (st != Stage::algebras && st != Stage::reps) {
      out.insert(Stage::coproducts);
      if (st != Stage::coproducts) out.insert(Stage::classify);
    }
  }
  return out;
}

std::optional<ExpectedCensus> expected_census(int n) {
  switch (n) {
    case 2: return ExpectedCensus{3, 4, 3, 1};
    case 3: return ExpectedCensus{7, 24, 2, 0};
    case 4: return ExpectedCensus{25, 286, 20, 28};
    default: return std::nullopt;
  }
}

std::map<std::string, std::size_t> expected_raw_counts(int n) {
  std::map<std::string, std::size_t> nonzero;
  if (n == 3) nonzero = {{"B", 33}, {"C", 8}, {"D", 3}, {"G", 8}};
  if (n == 4)
    nonzero = {{"C", 90}, {"D", 52}, {"E", 76},  {"G", 8},   {"I", 4},   {"J", 6},  {"K", 96},  {"L", 32},
               {"M", 3},  {"P", 624}, {"NC", 30}, {"ND", 30}, {"NE", 152}, {"NF", 8}, {"NG", 112}};
  if (nonzero.empty()) return {};
  std::map<std::string, std::size_t> all;
  for (const auto& c : AlgebraCatalog::instance().classes(n)) all[c.label] = nonzero.count(c.label) ? nonzero.at(c.label) : 0;
  return all;
}

void validate(const RunConfig& cfg) {
  if (cfg.dims.empty()) throw UsageError("no dimension given");
  for (int n : cfg.dims)
    if (n < 1 || n > kMaxDim) throw UsageError("dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDim));
  if (cfg.stages.empty()) throw UsageError("no stage given");
  if (cfg.out.empty()) throw UsageError("no output directory given");
  auto st = with_dependencies(cfg.stages);
  if (cfg.mode == Mode::fixture) {
    if (!cfg.stages.count(Stage::fourier))
      throw UsageError("fixture mode only applies to the fourier stage");
    for (int n : cfg.dims)
      if (n != 4) throw UsageError("fixture data exists for dimension 4 only");
  }
  if (!cfg.algebra.empty()) {
    for (Stage s : st)
      if (s != Stage::algebras && s != Stage::coproducts && s != Stage::classify)
        throw UsageError("--algebra restricts coproducts and classify only; stage " + to_string(s) + " needs every algebra");
    for (int n : cfg.dims) {
      bool found = false;
      for (const auto& c : AlgebraCatalog::instance().classes(n)) found = found || c.label == cfg.algebra;
      if (!found) throw UsageError("no algebra " + cfg.algebra + " in dimension " + std::to_string(n));
    }
  }
}

namespace {

struct DimRun {
  const RunConfig& cfg;
  int n;
  RawCache& cache;
  RunResult& result;
  fs::path dir;
  std::map<std::string, std::string> files;  // name -> bytes, written in one pass at the end
  json summary = json::object();

  std::vector<AlgebraSurvey> surveys;  // what coproducts and classify produced

  void mismatch(const std::string& what) { result.mismatches.push_back("n=" + std::to_string(n) + ": " + what); }
  void note(const std::string& what) { result.notes.push_back("n=" + std::to_string(n) + ": " + what); }
  void emit(const std::string& name, const json& doc) { files[name] = dump(doc); }

  std::vector<const AlgebraClass*> selected() const {
    std::vector<const AlgebraClass*> v;
    for (const auto& c : AlgebraCatalog::instance().classes(n))
      if (cfg.algebra.empty() || c.label == cfg.algebra) v.push_back(&c);
    return v;
  }

  void algebras() {
    auto list = enumerate_algebras(n);
    auto classes = classify_algebras(list);
    json recs = json::array();
    for (const auto& c : classes) {
      if (c.label.empty()) mismatch("an algebra class has no catalog label: " + relations_doc(c.representative));
      json r = {{"kind", "algebra"},
                {"label", c.label},
                {"n", n},
                {"V", to_hex(c.representative.V, n * n * n)},
                {"eta", to_hex(c.representative.eta, n)},
                {"relations", relations_doc(c.representative)},
                {"orbit_size", c.members.size()}};
      if (!c.label.empty()) {
        const auto& named = AlgebraCatalog::instance().get(n, c.label).named_form;
        r["named_form"] = {{"V", to_hex(named.V, n * n * n)}, {"relations", relations_doc(named)}};
      }
      recs.push_back(std::move(r));
    }
    json doc = document("algebras", n, std::move(recs));
    doc["standard_form_tensors"] = list.size();
    doc["classes"] = classes.size();
    emit("algebras.json", doc);
    summary["algebras"] = classes.size();
    if (auto e = expected_census(n); e && static_cast<int>(classes.size()) != e->algebras)
      mismatch("algebras " + std::to_string(classes.size()) + ", expected " + std::to_string(e->algebras));
  }

  void coproducts() {
    auto want = expected_raw_counts(n);
    json counts = json::object();
    for (const auto* c : selected()) {
      AlgebraSurvey s;
      s.label = c->label;
      s.algebra = c->named_form;
      auto cached = cache.load(n, c->label);
      if (cached && cached->algebra == c->named_form) {
        s.raw = std::move(*cached);
      } else {
        s.raw = solve_coproducts(c->named_form, cfg.jobs);
        s.raw.algebra_label = c->label;
        cache.store(s.raw);
      }
      emit("raw_" + c->label + ".json", raw_document(s.raw));
      counts[c->label] = s.raw.solutions.size();
      if (want.count(c->label) && want.at(c->label) != s.raw.solutions.size())
        mismatch("raw coproducts on " + c->label + ": " + std::to_string(s.raw.solutions.size()) + ", expected " +
                 std::to_string(want.at(c->label)));
      surveys.push_back(std::move(s));
    }
    summary["raw_coproducts"] = counts;
  }

  void classify() {
    json recs = json::array();
    int bialgebras = 0, hopf = 0;
    for (auto& s : surveys) {
      s.classes = classify_bialgebras(s.algebra, s.raw);
      std::map<std::string, int> hopf_per_type;
      for (std::size_t i = 0; i < s.classes.size(); ++i) {
        const auto& c = s.classes[i];
        json r = bialgebra_fields({s.algebra, c.representative});
        r["kind"] = "bialgebra_class";
        r["algebra"] = s.label;
        r["index"] = i;
        r["type"] = c.coalgebra_type;
        r["hopf"] = c.hopf;
        r["antipode"] = c.antipode ? matrix_json(*c.antipode) : json(nullptr);
        r["orbit"] = c.orbit;
        r["orbit_size"] = c.orbit.size();
        r["cop_partner"] = c.cop_partner ? json(*c.cop_partner) : json(nullptr);
        recs.push_back(std::move(r));
        ++bialgebras;
        if (c.hopf) {
          ++hopf;
          if (++hopf_per_type[c.coalgebra_type] > 1)
            mismatch("two Hopf classes of type (" + s.label + "," + c.coalgebra_type + "*)");
        }
      }
    }
    json doc = document("classes", n, std::move(recs));
    doc["bialgebras"] = bialgebras;
    doc["hopf"] = hopf;
    emit("classes.json", doc);
    if (!cfg.algebra.empty()) return;
    summary["bialgebras"] = bialgebras;
    summary["hopf"] = hopf;
    if (auto e = expected_census(n)) {
      if (bialgebras != e->bialgebras) mismatch("bialgebras " + std::to_string(bialgebras) + ", expected " + std::to_string(e->bialgebras));
      if (hopf != e->hopf) mismatch("Hopf algebras " + std::to_string(hopf) + ", expected " + std::to_string(e->hopf));
    }
  }

  void quiver() {
    QuiverGraph g;
    g.dimension = n;
    for (const auto& c : AlgebraCatalog::instance().classes(n)) g.nodes.push_back(c.label);
    auto pos = [&](const std::string& l) { return std::find(g.nodes.begin(), g.nodes.end(), l) - g.nodes.begin(); };
    std::map<std::pair<long, long>, QuiverArrow> acc;
    for (const auto& s : surveys)
      for (const auto& c : s.classes) {
        auto& a = acc[{pos(s.label), pos(c.coalgebra_type)}];
        a.source = s.label;
        a.target = c.coalgebra_type;
        ++a.multiplicity;
        a.hopf_multiplicity += c.hopf;
      }
    for (auto& [k, a] : acc) g.arrows.push_back(a);
    files["quiver.dot"] = g.to_dot(false);
    files["quiver_hopf.dot"] = g.to_dot(true);
    json arrows = json::array();
    for (const auto& a : g.arrows)
      arrows.push_back({{"source", a.source},
                        {"target", a.target},
                        {"multiplicity", a.multiplicity},
                        {"hopf_multiplicity", a.hopf_multiplicity},
                        {"self_loop", a.source == a.target}});
    json doc = document("quiver", n, json::array());
    doc["nodes"] = g.nodes;
    doc["arrows"] = arrows;
    doc["total_arrows"] = g.total(false);
    doc["hopf_arrows"] = g.total(true);
    emit("quiver.json", doc);
    summary["quiver"] = {{"nodes", g.nodes.size()}, {"arrows", g.total(false)}, {"hopf_arrows", g.total(true)}};
    if (n == 2 && (g.total(false) != 4 || g.total(true) != 3))
      mismatch("n=2 quiver has " + std::to_string(g.total(false)) + " arrows (" + std::to_string(g.total(true)) + " Hopf), expected 4 (3)");
    if (auto e = expected_census(n); e && (g.total(false) != e->bialgebras || g.total(true) != e->hopf))
      mismatch("quiver totals disagree with the census");
  }

  json fourier_record(const HopfAlgebra& h, const FourierData& d, const std::string& label) {
    json r = bialgebra_fields(h.bi);
    r["kind"] = "fourier";
    r["label"] = label;
    r["source"] = d.source;
    r["target"] = d.target;
    r["type"] = d.target;
    r["antipode"] = matrix_json(h.s);
    r["integral"] = bits_string(d.integral);
    r["F"] = matrix_json(d.F);
    r["F_sharp"] = matrix_json(d.F_sharp);
    r["identification"] = matrix_json(d.identification);
    r["transport"] = matrix_json(d.transport);
    r["transport_order"] = multiplicative_order(d.transport);
    return r;
  }

  void fourier() {
    json recs = json::array();
    if (cfg.mode == Mode::computed) {
      for (const auto& s : surveys)
        for (std::size_t i = 0; i < s.classes.size(); ++i) {
          const auto& c = s.classes[i];
          if (!c.hopf) continue;
          HopfAlgebra h{{s.algebra, c.representative}, *c.antipode};
          json r = fourier_record(h, fourier_transport(h), s.label + "#" + std::to_string(i));
          auto rt = dual_pair_transport(h);
          r["round_trip"] = matrix_json(rt.composite);
          r["round_trip_is_antipode"] = rt.composite == h.s;
          if (rt.composite != h.s) mismatch("round trip through the dual of " + s.label + "#" + std::to_string(i) + " is not S");
          recs.push_back(std::move(r));
        }
    } else {
      for (const auto& row : fixtures::fourier_rows()) {
        auto h = fixtures::hopf_of(row);
        json published_s = matrix_json(h.s);
        bool printed_ok = static_cast<bool>(check_antipode(h.bi, h.s));
        if (!printed_ok) {
          auto s = solve_antipode(h.bi);
          if (!s) {
            mismatch(std::string(row.label) + " is not Hopf");
            continue;
          }
          note(std::string(row.label) + ": published antipode fails the antipode identities; the solved one is used");
          h.s = *s;
        }
        auto d = fourier_transport(h, fixtures::identification_of(row));
        json r = fourier_record(h, d, row.label);
        r["published_antipode"] = published_s;
        r["published_antipode_valid"] = printed_ok;
        bool I_ok = d.integral == parse_bits(row.integral);
        bool F_ok = d.F == parse_matrix(row.F);
        bool T_ok = d.transport == parse_matrix(row.transport);
        r["matches_published"] = {{"integral", I_ok}, {"F", F_ok}, {"transport", T_ok}};
        if (!I_ok) mismatch(std::string(row.label) + ": integral differs from the published row");
        if (!F_ok) mismatch(std::string(row.label) + ": F differs from the published row");
        if (!T_ok) mismatch(std::string(row.label) + ": transport differs from the published row");
        auto cls = locate_class(h.bi);
        r["class"] = cls.algebra + "#" + std::to_string(cls.index);
        recs.push_back(std::move(r));
      }
    }
    json doc = document("fourier", n, std::move(recs));
    doc["mode"] = cfg.mode == Mode::computed ? "computed" : "fixture";
    summary["fourier_records"] = doc["records"].size();
    emit("fourier.json", doc);
  }

  void qtri() {
    json recs = json::array();
    json per_class = json::array();
    for (const auto& r : qt_survey(n)) {
      per_class.push_back({{"algebra", r.algebra},
                           {"type", r.coalgebra_type},
                           {"class_index", r.class_index},
                           {"structures", r.structures.size()},
                           {"nontrivial", r.nontrivial()}});
      for (std::size_t i = 0; i < r.structures.size(); ++i) {
        const auto& q = r.structures[i];
        json rec = bialgebra_fields(r.hopf.bi);
        rec["kind"] = "quasitriangular";
        rec["label"] = r.algebra + "#" + std::to_string(r.class_index) + ".R" + std::to_string(i);
        rec["algebra"] = r.algebra;
        rec["type"] = r.coalgebra_type;
        rec["antipode"] = matrix_json(r.hopf.s);
        rec["R"] = to_hex(q.R.coeffs, n * n);
        rec["R_terms"] = format_tensor(n, q.R.coeffs);
        rec["R_inv"] = to_hex(q.R_inv.coeffs, n * n);
        rec["Q"] = to_hex(q.Q.coeffs, n * n);
        rec["class"] = to_string(q.klass);
        rec["factorisable"] = q.factorisable;
        rec["yang_baxter"] = yang_baxter(r.hopf.bi.alg, q.R);
        if (!rec["yang_baxter"].get<bool>()) mismatch(rec["label"].get<std::string>() + " fails Yang-Baxter");
        recs.push_back(std::move(rec));
      }
    }
    int pairs = qt_census(n);
    json doc = document("qt", n, std::move(recs));
    doc["classes"] = per_class;
    doc["nontrivial_pairs"] = pairs;
    emit("qt.json", doc);
    summary["qt_pairs"] = pairs;
    if (auto e = expected_census(n); e && pairs != e->qt_pairs)
      mismatch("nontrivial quasitriangular pairs " + std::to_string(pairs) + ", expected " + std::to_string(e->qt_pairs));
  }

  static json rep_record(const AlgebraSC& a, const std::string& label, const Representation& r) {
    json images = json::array();
    for (const auto& m : r.images) images.push_back(matrix_json(m));
    return {{"kind", "representation"}, {"label", label},          {"n", a.n},         {"V", to_hex(a.V, a.n * a.n * a.n)},
            {"eta", to_hex(a.eta, a.n)}, {"relations", relations_doc(a)}, {"k", r.k}, {"images", images}};
  }

  void reps() {
    json recs = json::array();
    json per_algebra = json::array();
    for (const auto& c : AlgebraCatalog::instance().classes(n)) {
      json counts = json::object();
      for (int k = 1; k <= 2; ++k) {
        auto raw = enumerate_reps(c.named_form, k, cfg.jobs);
        counts[std::to_string(k)] = {{"raw", raw.size()}, {"classes", rep_equivalence_classes(raw).size()}};
      }
      per_algebra.push_back({{"algebra", c.label}, {"counts", counts}});
    }
    json doc = document("reps", n, json::array());
    doc["algebras"] = per_algebra;
    if (n == 4) doc["d_sl2"] = dsl2(recs);
    doc["records"] = std::move(recs);
    emit("reps.json", doc);
  }

  json dsl2(json& recs) {
    auto d = fixtures::dsl2();
    auto gens = dsl2_generators();
    for (const auto& g : gens) recs.push_back(rep_record(d.bi.alg, "d_sl2:" + g.name, g.rep));
    const std::size_t raw_want[] = {0, 2, 20, 394};
    json census = json::object();
    for (int k = 1; k <= 3; ++k) {
      auto c = rep_census(d, k, gens, cfg.jobs);
      census[std::to_string(k)] = {{"raw", c.raw}, {"classes", c.classes}, {"sums_of_generators", c.sums_of_generators}};
      if (c.raw != raw_want[k]) {
        if (c.classes == raw_want[k])
          note("d_sl2 k=" + std::to_string(k) + ": published count matches equivalence classes, not raw representations");
        else
          mismatch("d_sl2 k=" + std::to_string(k) + ": " + std::to_string(c.raw) + " representations, expected " + std::to_string(raw_want[k]));
      }
    }
    auto by_name = [&](const std::string& nm) -> const Representation& {
      for (const auto& g : gens)
        if (g.name == nm) return g.rep;
      throw std::logic_error(nm);
    };
    json duals = json::object(), table = json::object();
    for (const auto& g : gens) {
      duals[g.name] = decompose(dual_rep(d, g.rep), gens);
      for (const auto& h : gens) table[g.name + " x " + h.name] = decompose(tensor_rep(d, g.rep, h.rep), gens);
    }
    const std::map<std::string, std::string> dual_want{{"1", "1"}, {"1bar", "1bar"}, {"2", "2bar"}, {"2bar", "2"}};
    for (const auto& [a, b] : dual_want)
      if (duals[a] != json::array({b})) mismatch("dual of " + a + " is not " + b);
    auto regular = decompose(regular_rep(d.bi.alg), gens);
    if (regular != std::vector<std::string>{"2", "2bar"}) mismatch("regular representation is not 2 + 2bar");
    Gf2Vec ones = parse_bits("11");
    bool sub1 = is_subrepresentation(by_name("2"), {ones}), sub1bar = is_subrepresentation(by_name("2bar"), {ones});
    if (!sub1 || !sub1bar) mismatch("trivial lines are not subrepresentations of 2 and 2bar");
    summary["d_sl2_reps"] = census;
    return {{"basis", std::string(fixtures::kDsl2Names)},
            {"census", census},
            {"duals", duals},
            {"tensor_products", table},
            {"regular", regular},
            {"subrepresentations", {{"1 in 2", sub1}, {"1bar in 2bar", sub1bar}}}};
  }

  void write_all() {
    fs::create_directories(dir);
    for (const auto& [name, bytes] : files) {
      fs::path p = dir / name;
      std::ofstream out(p, std::ios::binary | std::ios::trunc);
      out << bytes;
      if (!out) throw std::runtime_error("cannot write " + p.string());
      result.files.push_back(p);
    }
  }
};

}  // namespace

RunResult run(const RunConfig& cfg) {
  validate(cfg);
  RunResult result;
  RawCache cache(cfg.use_cache ? (cfg.cache_root.empty() ? RawCache::default_root() : cfg.cache_root) : fs::path{});
  auto stages = with_dependencies(cfg.stages);
  for (int n : cfg.dims) {
    DimRun r{cfg, n, cache, result, cfg.out / ("n" + std::to_string(n)), {}, json::object(), {}};
    std::size_t mismatches_before = result.mismatches.size(), notes_before = result.notes.size();
    for (Stage s : all_stages()) {
      if (!stages.count(s)) continue;
      switch (s) {
        case Stage::algebras: r.algebras(); break;
        case Stage::coproducts: r.coproducts(); break;
        case Stage::classify: r.classify(); break;
        case Stage::quiver: r.quiver(); break;
        case Stage::fourier: r.fourier(); break;
        case Stage::qtri: r.qtri(); break;
        case Stage::reps: r.reps(); break;
      }
    }
    json summary = document("summary", n, json::array());
    summary.update(r.summary);
    json st = json::array();
    for (Stage s : all_stages())
      if (stages.count(s)) st.push_back(to_string(s));
    summary["stages"] = st;
    summary["mode"] = cfg.mode == Mode::computed ? "computed" : "fixture";
    summary["algebra_filter"] = cfg.algebra;
    summary["mismatches"] = std::vector<std::string>(result.mismatches.begin() + mismatches_before, result.mismatches.end());
    summary["notes"] = std::vector<std::string>(result.notes.begin() + notes_before, result.notes.end());
    r.emit("summary.json", summary);
    r.write_all();
  }
  result.cache_hits = cache.hits;
  result.cache_misses = cache.misses;
  result.cache_corrupt = cache.corrupt;
  return result;
}

}  // namespace f2hopf::cli
