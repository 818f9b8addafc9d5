#pragma once

// The command line pipeline: stage runner, on-disk cache of raw coproduct
// solutions, JSON datasets and their verification.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "f2hopf/coproducts.hpp"
#include "f2hopf/structure.hpp"

namespace f2hopf::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kEngine = "f2hopf-1.0";
inline constexpr const char* kCacheEnv = "F2HOPF_CACHE_DIR";

// ---- serialization --------------------------------------------------------

// Packed bits as "0x" plus ceil(bits/4) lower-case hex digits.
std::string to_hex(uint64_t value, int bits);
uint64_t from_hex(const std::string& s, int bits);  // throws std::invalid_argument

json matrix_json(const Gf2Mat& m);                  // "0101,1111,..." rows
Gf2Mat matrix_from_json(const json& j, int n);
std::string bits_string(const Gf2Vec& v);           // "0110", coordinate 0 first

// Fields shared by every record that carries a bialgebra.
json bialgebra_fields(const Bialgebra& b);
Bialgebra bialgebra_from(const json& rec);

// Top-level document: schema, version, engine, dimension and records.
json document(const std::string& schema, int n, json records);
// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& doc);

json raw_document(const RawSolutionSet& raw);
RawSolutionSet raw_from_document(const json& doc);  // throws on schema problems

// ---- verification ---------------------------------------------------------

struct VerifyFailure {
  std::string file;
  std::size_t record = 0;
  std::string label;
  std::string check;
  std::string detail;
};

struct VerifyReport {
  std::size_t files = 0;
  std::size_t records = 0;
  std::map<std::string, std::size_t> passed;  // check name -> records passing it
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A file or every *.json below a directory.  Every record is checked in full
// and contributes at most one failure, its first failing check.
VerifyReport verify(const fs::path& path);
void verify_document(const json& doc, const std::string& file, VerifyReport& report);

// Published tables as datasets in the same schema.
//   fourier-table:  the twenty Fourier rows
//   coproducts:  the raw n = 3 lists and the named n = 4 tables
json export_dataset(const std::string& name);
std::vector<std::string> export_names();

// ---- cache ----------------------------------------------------------------

std::string sha256_hex(const std::string& bytes);

class RawCache {
 public:
  // Empty root disables the cache.
  explicit RawCache(fs::path root) : root_(std::move(root)) {}
  static fs::path default_root();

  bool enabled() const { return !root_.empty(); }
  fs::path entry(int n, const std::string& label) const;
  // Returns nothing on a miss, a checksum mismatch or an unreadable entry;
  // corrupt entries are counted.
  std::optional<RawSolutionSet> load(int n, const std::string& label);
  void store(const RawSolutionSet& raw);

  std::size_t hits = 0, misses = 0, corrupt = 0;

 private:
  fs::path root_;
};

// ---- stages ---------------------------------------------------------------

enum class Stage { algebras, coproducts, classify, quiver, fourier, qtri, reps };
const std::vector<Stage>& all_stages();
std::string to_string(Stage s);
std::optional<Stage> parse_stage(const std::string& s);
// The stage and everything it depends on, in run order.
std::set<Stage> with_dependencies(const std::set<Stage>& s);

enum class Mode { computed, fixture };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<int> dims;
  std::set<Stage> stages;  // as requested; dependencies are added by run
  std::string algebra;     // restricts coproducts and classify to one algebra
  Mode mode = Mode::computed;
  unsigned jobs = 0;
  fs::path out;
  bool use_cache = true;
  fs::path cache_root;     // empty means default_root()
};

struct RunResult {
  std::vector<std::string> mismatches;  // acceptance mismatches
  std::vector<std::string> notes;
  std::vector<fs::path> files;
  std::size_t cache_hits = 0, cache_misses = 0, cache_corrupt = 0;
  int exit_code() const { return mismatches.empty() ? 0 : 1; }
};

// Checks the configuration and throws UsageError before anything is written.
void validate(const RunConfig& cfg);
RunResult run(const RunConfig& cfg);

// Published census and count tables used as run-time acceptance checks.
struct ExpectedCensus {
  int algebras, bialgebras, hopf, qt_pairs;
};
std::optional<ExpectedCensus> expected_census(int n);
std::map<std::string, std::size_t> expected_raw_counts(int n);  // empty when unpublished

}  // namespace f2hopf::cli
