// meshsum: grow disks in the degree-r triangular mesh, predict layer counts,
// compute the Euler-summed invariants and verify everything against the
// explicit construction.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "meshsum/disk_json.hpp"
#include "meshsum/error.hpp"
#include "meshsum/report.hpp"

namespace {

using meshsum::report::ExitCode;
using nlohmann::json;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw meshsum::report::InputError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw meshsum::report::InputError("failed writing '" + path + "'");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw meshsum::report::InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int single_degree(const std::string& text) {
  const auto [lo, hi] = meshsum::report::parse_degree_range(text);
  if (lo != hi) throw meshsum::report::InputError("this subcommand takes a single degree, got '" + text + "'");
  return lo;
}

/// Emits a JSON document to `path` (or stdout when empty).
void emit_json(const json& doc, const std::string& path, bool to_stdout) {
  const std::string text = doc.dump(2) + "\n";
  if (!path.empty()) write_text(path, text);
  if (to_stdout) std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit growth and Euler-summed counts of degree-r triangular meshes"};
  app.require_subcommand(1);

  std::string degree = "7";
  std::string seed_text = "face";
  int layers = 3;
  std::int64_t budget = 0;
  std::string emit_disk;
  std::string output;
  bool as_json = false;

  auto* grow = app.add_subcommand("grow", "Grow a disk layer by layer and compare with the predictions");
  grow->add_option("-r,--degree", degree, "Mesh degree (>= 7)")->required();
  grow->add_option("--seed", seed_text, "vertex | face")->capture_default_str();
  grow->add_option("-n,--layers", layers, "Number of expansions")->capture_default_str();
  grow->add_option("--budget", budget, "Vertex cap for explicit construction (default: MESHSUM_BUDGET or 1000000)");
  grow->add_option("--emit-disk", emit_disk, "Write the last explicitly built disk as JSON");
  grow->add_option("-o", output, "Write the JSON report to this path");
  grow->add_flag("--json", as_json, "Print the JSON report instead of a table");

  auto* predict = app.add_subcommand("predict", "Analytic layer predictions");
  predict->add_option("-r,--degree", degree, "Mesh degree (>= 7)")->required();
  predict->add_option("--seed", seed_text, "vertex | face | t:d")->capture_default_str();
  predict->add_option("-n,--layers", layers, "Number of layers")->capture_default_str();
  predict->add_option("-o", output, "Write JSON to this path");
  predict->add_flag("--json", as_json, "Print JSON (default when -o is absent)");

  std::optional<std::string> sum_seed;
  auto* sum = app.add_subcommand("sum", "Euler-summed vertex, edge and face counts of the mesh");
  sum->add_option("-r,--degree", degree, "Mesh degree or range a:b")->required();
  sum->add_option("--seed", sum_seed, "Also run the pipeline from this seed: vertex | face | t:d");
  sum->add_option("-o", output, "Write JSON to this path");
  sum->add_flag("--json", as_json, "Print JSON (default when -o is absent)");

  meshsum::report::VerifyConfig vcfg;
  std::string verify_seeds = "both";
  std::string fault = "none";
  auto* verify = app.add_subcommand("verify", "Run the full property suite over a degree range");
  verify->add_option("-r,--degree", degree, "Degree or range a:b within 7..1000")->required();
  verify->add_option("-n,--layers", vcfg.n, "Layers per seed")->capture_default_str();
  verify->add_option("--seed", verify_seeds, "vertex | face | both")->capture_default_str();
  verify->add_option("--budget", budget, "Vertex cap for explicit construction");
  verify->add_option("--inject-fault", fault, "Corrupt one analytic quantity: census | delta | counts | invariants");
  verify->add_option("--rng-seed", vcfg.rng_seed, "Seed for randomized checks")->capture_default_str();
  verify->add_option("--trials", vcfg.random_trials, "Random Lemma-1 trials per degree")->capture_default_str();
  verify->add_option("-o", output, "Write the JSON summary to this path");
  verify->add_flag("--json", as_json, "Print the JSON summary");

  std::string disk_path, svg_path;
  auto* render = app.add_subcommand("render", "Draw a disk JSON file as SVG");
  render->add_option("disk", disk_path, "Disk JSON (from grow --emit-disk)")->required();
  render->add_option("svg", svg_path, "Output SVG path");
  render->add_option("-o", svg_path, "Output SVG path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ExitCode::kOk : ExitCode::kInputError;
  }

  try {
    const std::int64_t effective_budget = budget > 0 ? budget : meshsum::report::budget_from_env();

    if (grow->parsed()) {
      meshsum::report::GrowConfig cfg;
      cfg.r = single_degree(degree);
      const auto seed = meshsum::report::parse_seed(seed_text);
      if (seed.kind == meshsum::SeedKind::Custom) {
        throw meshsum::report::InputError("grow builds only vertex and face seeds; use predict for t:d");
      }
      cfg.seed = seed.kind;
      cfg.n = layers;
      cfg.budget = effective_budget;
      const auto result = meshsum::report::run_grow(cfg);
      if (!emit_disk.empty() && result.last_disk) {
        write_text(emit_disk, meshsum::disk_to_json(*result.last_disk).dump() + "\n");
      }
      emit_json(result.report, output, as_json);
      if (!as_json) std::cout << meshsum::report::grow_table(result.report);
      return result.all_match ? ExitCode::kOk : ExitCode::kVerificationFailure;
    }

    if (predict->parsed()) {
      const auto doc =
          meshsum::report::predict_report(single_degree(degree), meshsum::report::parse_seed(seed_text), layers);
      emit_json(doc, output, as_json || output.empty());
      return ExitCode::kOk;
    }

    if (sum->parsed()) {
      const auto [lo, hi] = meshsum::report::parse_degree_range(degree);
      std::optional<meshsum::report::SeedChoice> seed;
      if (sum_seed) seed = meshsum::report::parse_seed(*sum_seed);
      json doc;
      bool ok = true;
      if (lo == hi) {
        doc = meshsum::report::sum_report(lo, seed);
        ok = doc["euler_check"].get<bool>() && (!seed || doc["seed_equal"].get<bool>());
      } else {
        doc = json::array();
        for (int r = lo; r <= hi; ++r) {
          doc.push_back(meshsum::report::sum_report(r, seed));
          ok = ok && doc.back()["euler_check"].get<bool>() && (!seed || doc.back()["seed_equal"].get<bool>());
        }
      }
      emit_json(doc, output, as_json || output.empty());
      return ok ? ExitCode::kOk : ExitCode::kVerificationFailure;
    }

    if (verify->parsed()) {
      const auto [lo, hi] = meshsum::report::parse_degree_range(degree);
      vcfg.r_lo = lo;
      vcfg.r_hi = hi;
      vcfg.budget = effective_budget;
      vcfg.fault = meshsum::report::parse_fault(fault);
      if (verify_seeds == "vertex") {
        vcfg.seeds = {meshsum::SeedKind::Vertex};
      } else if (verify_seeds == "face") {
        vcfg.seeds = {meshsum::SeedKind::Face};
      } else if (verify_seeds != "both") {
        throw meshsum::report::InputError("verify --seed must be vertex, face or both");
      }
      const auto result = meshsum::report::run_verify(vcfg);
      emit_json(result.summary, output, as_json);
      if (!as_json) {
        const auto& s = result.summary;
        for (const auto& [name, n] : s["pass_counts"].items()) {
          const std::size_t failed = s["fail_counts"].contains(name) ? s["fail_counts"][name].get<std::size_t>() : 0;
          std::cout << name << ": " << n.get<std::size_t>() << " passed, " << failed << " failed\n";
        }
        for (const auto& [name, n] : s["fail_counts"].items()) {
          if (!s["pass_counts"].contains(name)) std::cout << name << ": 0 passed, " << n.get<std::size_t>() << " failed\n";
        }
        for (const auto& v : s["violations"]) std::cout << "VIOLATION " << v.dump() << "\n";
        std::cout << (result.violations == 0 ? "verify: all checks passed\n" : "verify: FAILED\n");
      }
      return result.violations == 0 ? ExitCode::kOk : ExitCode::kVerificationFailure;
    }

    if (render->parsed()) {
      if (svg_path.empty()) throw meshsum::report::InputError("render needs an output SVG path");
      write_text(svg_path, meshsum::report::render_file(read_text(disk_path)));
      return ExitCode::kOk;
    }
  } catch (const json::exception& e) {
    std::cerr << "meshsum: malformed JSON: " << e.what() << "\n";
    return ExitCode::kInputError;
  } catch (const meshsum::Error& e) {
    std::cerr << "meshsum: " << e.what() << "\n";
    return ExitCode::kInputError;
  }
  return ExitCode::kInputError;
}
