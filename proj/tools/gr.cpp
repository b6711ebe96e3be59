// gr: command-line interface to the green-ring engine.
//
// Subcommands:
//   gr build                 derive the dictionary tables and cache them
//   gr mul ELEM...           normal form of a product of ring elements
//   gr tensor A B            decompose a tensor product of indecomposables
//   gr verify --suite NAME   run a verification suite (JSON-lines reports)
//
// Exit codes: 0 ok, 1 check failed, 2 inconclusive, 3 cache corruption,
// 4 parse error, 5 missing table entry, 6 unidentified/inconclusive oracle.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "green/parse.hpp"
#include "green/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  int n = 3;
  bool stable = false;
  bool allow_large = false;
  std::string suite = "all";
  int jobs = 1;           // reserved for future parallel suites
  unsigned seed = 12345;  // reserved for randomized checks
  std::string cache_dir;
  std::string format = "pretty";
  int max_m = 3;
};

struct CacheCorruption : std::runtime_error {
  explicit CacheCorruption(const std::string& m) : std::runtime_error(m) {}
};

fs::path cache_file(const Options& opt) {
  fs::path dir = opt.cache_dir.empty() ? fs::path(".") : fs::path(opt.cache_dir);
  return dir / ("tables-" + std::to_string(opt.n) + ".json");
}

// Engine state for one n, with lazily derived (or cache-loaded) tables.
struct Engine {
  explicit Engine(const Options& opt)
      : opt(opt), F(opt.n), H(F), cat(H), P(opt.n) {}

  const Options& opt;
  green::CycField F;
  green::HopfAlgebra H;
  green::ModCat cat;
  green::Presentation P;
  std::optional<green::DerivedTables> T;

  // Returns true if the tables came from the cache.
  bool ensure_tables() {
    if (T) return true;
    fs::path file = cache_file(opt);
    if (fs::exists(file)) {
      std::ifstream in(file);
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        T = green::tables_from_json(buf.str(), F);
        if (T->max_m < opt.max_m) {
          T.reset();  // cache too shallow; rebuild below
        } else {
          return true;
        }
      } catch (const std::exception& e) {
        throw CacheCorruption(file.string() + ": " + e.what());
      }
    }
    T = green::derive_tables(cat, P, opt.max_m);
    if (!opt.cache_dir.empty()) fs::create_directories(opt.cache_dir);
    std::ofstream out(file);
    out << green::tables_to_json(*T);
    return false;
  }
};

int cmd_build(Engine& eng) {
  bool cached = eng.ensure_tables();
  if (cached)
    std::cout << "tables for n=" << eng.opt.n << " up to date ("
              << cache_file(eng.opt).string() << ")\n";
  else
    std::cout << "wrote " << cache_file(eng.opt).string() << " (m <= "
              << eng.T->max_m << ")\n";
  return 0;
}

int cmd_mul(Engine& eng, const std::vector<std::string>& operands) {
  eng.ensure_tables();
  green::RingElement prod = green::RingElement::one();
  for (const std::string& s : operands)
    prod = prod * green::parse_element(s, eng.cat, eng.P, *eng.T);
  green::RingElement nf =
      eng.opt.stable ? eng.P.stable_normal_form(prod) : eng.P.normal_form(prod);
  if (eng.opt.format == "json")
    std::cout << green::ring_to_json(nf).dump() << "\n";
  else
    std::cout << nf.str() << "\n";
  return 0;
}

int cmd_tensor(Engine& eng, const std::string& a, const std::string& b) {
  green::IndecLabel A = green::parse_label(a, eng.cat);
  green::IndecLabel B = green::parse_label(b, eng.cat);
  green::LabelMultiset d = eng.cat.decompose_tensor(A, B);
  long total = 0;
  for (const auto& [lab, mult] : d) total += (long)eng.cat.dim_of(lab) * mult;
  bool dims_ok =
      total == (long)eng.cat.dim_of(A) * eng.cat.dim_of(B);
  if (eng.opt.format == "json") {
    json out;
    out["summands"] = json::array();
    for (const auto& [lab, mult] : d)
      out["summands"].push_back(json{{"label", green::label_to_json(lab)},
                                     {"mult", mult}});
    out["dims_check"] = dims_ok;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << A.str() << " (x) " << B.str() << " = ";
    bool first = true;
    for (const auto& [lab, mult] : d) {
      if (!first) std::cout << " + ";
      first = false;
      if (mult != 1) std::cout << mult << "*";
      std::cout << lab.str();
    }
    std::cout << (dims_ok ? "" : "   [DIMENSION MISMATCH]") << "\n";
  }
  return dims_ok ? 0 : 1;
}

int cmd_verify(Engine& eng) {
  eng.ensure_tables();
  green::Verifier ver(eng.cat, eng.P, *eng.T);
  std::vector<green::CheckReport> reports = ver.run_suite(eng.opt.suite);
  for (const auto& r : reports) {
    if (eng.opt.format == "json")
      std::cout << r.to_json_line() << "\n";
    else
      std::cout << "[" << r.status << "] " << r.id
                << (r.inputs.empty() ? "" : " " + r.inputs) << "\n";
  }
  return green::report_exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"green ring calculator for the Drinfeld double of a Taft algebra"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may also appear after the subcommand

  Options opt;
  if (const char* env = std::getenv("GR_CACHE_DIR")) opt.cache_dir = env;

  app.add_option("--n", opt.n, "order of the root of unity (>= 3)")
      ->check(CLI::Range(3, 5));
  app.add_flag("--stable", opt.stable, "compute in the stable green ring");
  app.add_flag("--allow-large", opt.allow_large, "permit the expensive n=5 case");
  app.add_option("--jobs", opt.jobs, "worker threads (reserved)");
  app.add_option("--seed", opt.seed, "random seed (reserved)");
  app.add_option("--cache-dir", opt.cache_dir, "table cache directory");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--max-m", opt.max_m, "table depth in the band/syzygy index")
      ->check(CLI::Range(1, 6));

  CLI::App* build = app.add_subcommand("build", "derive and cache tables");
  CLI::App* mul = app.add_subcommand("mul", "normal form of a product");
  std::vector<std::string> operands;
  mul->add_option("elements", operands, "ring elements / labels")->required();
  CLI::App* tensor = app.add_subcommand("tensor", "decompose a tensor product");
  std::string lab_a, lab_b;
  tensor->add_option("A", lab_a, "left factor")->required();
  tensor->add_option("B", lab_b, "right factor")->required();
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", opt.suite,
                     "identities|relations|crosscheck|basis|omega|all");

  CLI11_PARSE(app, argc, argv);

  if (opt.n >= 5 && !opt.allow_large) {
    std::cerr << "n=" << opt.n << " is expensive; pass --allow-large to proceed\n";
    return 4;
  }

  try {
    Engine eng(opt);
    if (build->parsed()) return cmd_build(eng);
    if (mul->parsed()) return cmd_mul(eng, operands);
    if (tensor->parsed()) return cmd_tensor(eng, lab_a, lab_b);
    if (verify->parsed()) return cmd_verify(eng);
  } catch (const CacheCorruption& e) {
    std::cerr << "cache corruption: " << e.what() << "\n";
    return 3;
  } catch (const green::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 4;
  } catch (const green::MissingTableEntry& e) {
    std::cerr << "missing table entry: " << e.what() << "\n";
    return 5;
  } catch (const green::UnidentifiedError& e) {
    std::cerr << "unidentified module: " << e.what() << "\n";
    return 6;
  } catch (const green::InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 6;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
