#include <iostream>

#include "CLI11.hpp"

#include "f2hopf/parallel.hpp"
#include "pipeline.hpp"

using namespace f2hopf::cli;

namespace {

constexpr int kUsage = 2;

// "3", "2,4" or "1-4".
std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    std::string part = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::size_t dash = part.find('-');
    try {
      std::size_t used = 0;
      if (dash == std::string::npos) {
        out.push_back(std::stoi(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } else {
        int lo = std::stoi(part.substr(0, dash)), hi = std::stoi(part.substr(dash + 1));
        for (int n = lo; n <= hi; ++n) out.push_back(n);
      }
    } catch (const std::exception&) {
      throw UsageError("bad dimension list '" + s + "'");
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite bialgebras and Hopf algebras over F2: census, quivers, Fourier transforms, R-matrices"};
  app.require_subcommand(1);

  std::string dims = "2", mode = "computed", algebra, out;
  std::vector<std::string> stages{"all"};
  unsigned jobs = 0;
  bool no_cache = false;
  auto* run_cmd = app.add_subcommand("run", "run pipeline stages and write JSON and DOT outputs");
  run_cmd->add_option("--dim", dims, "dimension, list or range, e.g. 4, 2,3 or 1-4")->capture_default_str();
  run_cmd->add_option("--stage", stages, "algebras|coproducts|classify|quiver|fourier|qtri|reps|all")
      ->delimiter(',')
      ->capture_default_str();
  run_cmd->add_option("--algebra", algebra, "restrict coproducts and classify to one catalog label");
  run_cmd->add_option("--mode", mode, "computed or fixture (published dimension four Fourier rows)")
      ->check(CLI::IsMember({"computed", "fixture"}))
      ->capture_default_str();
  run_cmd->add_option("--jobs", jobs, "worker threads, 0 for the hardware count");
  run_cmd->add_option("--out", out, "output directory")->required();
  run_cmd->add_flag("--no-cache", no_cache, std::string("ignore the raw solution cache (root from ") + kCacheEnv + ")");

  std::string dataset_path;
  auto* verify_cmd = app.add_subcommand("verify", "re-check every record of a dataset file or directory");
  verify_cmd->add_option("path", dataset_path, "JSON file or directory")->required();

  std::string export_name, export_out;
  auto* export_cmd = app.add_subcommand("export", "write a published table as a dataset");
  export_cmd->add_option("--dataset", export_name, "fourier-table or coproducts")->required()->check(CLI::IsMember(export_names()));
  export_cmd->add_option("--out", export_out, "output file, - for stdout")->default_val("-");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*run_cmd) {
      RunConfig cfg;
      cfg.dims = parse_dims(dims);
      for (const auto& s : stages) {
        if (s == "all") {
          cfg.stages.insert(all_stages().begin(), all_stages().end());
        } else if (auto st = parse_stage(s)) {
          cfg.stages.insert(*st);
        } else {
          throw UsageError("unknown stage '" + s + "'");
        }
      }
      cfg.algebra = algebra;
      cfg.mode = mode == "fixture" ? Mode::fixture : Mode::computed;
      cfg.jobs = jobs;
      cfg.out = out;
      cfg.use_cache = !no_cache;
      if (jobs) f2hopf::set_default_jobs(jobs);
      validate(cfg);
      auto r = run(cfg);
      for (const auto& nte : r.notes) std::cerr << "note: " << nte << "\n";
      for (const auto& m : r.mismatches) std::cerr << "MISMATCH: " << m << "\n";
      std::cerr << "wrote " << r.files.size() << " files under " << cfg.out.string() << "; cache " << r.cache_hits
                << " hits, " << r.cache_misses << " misses, " << r.cache_corrupt << " corrupt\n";
      return r.exit_code();
    }
    if (*verify_cmd) {
      auto rep = verify(dataset_path);
      for (const auto& f : rep.failures)
        std::cout << "FAIL " << f.file << " record " << f.record << (f.label.empty() ? "" : " (" + f.label + ")") << ": "
                  << f.check << ": " << f.detail << "\n";
      for (const auto& [check, count] : rep.passed) std::cout << "pass " << check << ": " << count << "\n";
      std::cout << rep.files << " files, " << rep.records << " records, " << rep.failures.size() << " failures\n";
      return rep.ok() ? 0 : 1;
    }
    if (*export_cmd) {
      std::string bytes = dump(export_dataset(export_name));
      if (export_out == "-") {
        std::cout << bytes;
      } else {
        std::ofstream f(export_out, std::ios::binary | std::ios::trunc);
        f << bytes;
        if (!f) throw std::runtime_error("cannot write " + export_out);
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
