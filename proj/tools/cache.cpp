#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pipeline.hpp"

namespace f2hopf::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += digits[md[i] >> 4];
    out += digits[md[i] & 0xf];
  }
  return out;
}

fs::path RawCache::default_root() {
  if (const char* p = std::getenv(kCacheEnv); p && *p) return p;
  if (const char* p = std::getenv("XDG_CACHE_HOME"); p && *p) return fs::path(p) / "f2hopf";
  if (const char* p = std::getenv("HOME"); p && *p) return fs::path(p) / ".cache" / "f2hopf";
  return fs::temp_directory_path() / "f2hopf-cache";
}

fs::path RawCache::entry(int n, const std::string& label) const {
  return root_ / kEngine / ("n" + std::to_string(n)) / ("raw_" + label + ".json");
}

namespace {

std::optional<std::string> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::optional<RawSolutionSet> RawCache::load(int n, const std::string& label) {
  if (!enabled()) return std::nullopt;
  fs::path p = entry(n, label);
  auto body = slurp(p);
  auto sum = slurp(fs::path(p).concat(".sha256"));
  if (!body || !sum) {
    ++misses;
    return std::nullopt;
  }
  std::string want = sum->substr(0, sum->find_first_of(" \n"));
  if (want != sha256_hex(*body)) {
    ++corrupt;
    return std::nullopt;
  }
  try {
    auto raw = raw_from_document(json::parse(*body));
    if (raw.algebra_label != label || raw.algebra.n != n) throw SchemaError("entry for another algebra");
    ++hits;
    return raw;
  } catch (const std::exception&) {
    ++corrupt;
    return std::nullopt;
  }
}

void RawCache::store(const RawSolutionSet& raw) {
  if (!enabled()) return;
  fs::path p = entry(raw.algebra.n, raw.algebra_label);
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  if (ec) return;  // an unwritable cache only costs time
  std::string body = dump(raw_document(raw));
  // Body first, then the checksum, each via rename so readers never see a torn file.
  auto put = [](const fs::path& dst, const std::string& bytes) {
    fs::path tmp = fs::path(dst).concat(".tmp");
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << bytes;
      if (!out) return false;
    }
    std::error_code e;
    fs::rename(tmp, dst, e);
    return !e;
  };
  if (put(p, body)) put(fs::path(p).concat(".sha256"), sha256_hex(body) + "  " + p.filename().string() + "\n");
}

}  // namespace f2hopf::cli
