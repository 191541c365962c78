#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "meshsum/disk.hpp"
#include "meshsum/error.hpp"
#include "meshsum/euler_sum.hpp"
#include "meshsum/growth.hpp"

namespace meshsum::report {

inline constexpr const char* kSchemaVersion = "meshsum/1";

/// Process exit codes shared by all subcommands.
enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kInputError = 2 };

/// Thrown for malformed command-line values; maps to kInputError.
class InputError : public Error {
 public:
  using Error::Error;
};

nlohmann::json to_json(const BigInt& x);
nlohmann::json to_json(const BigRational& x);
nlohmann::json to_json(const DiskCounts& c);
nlohmann::json to_json(const LayerCensus& c);
nlohmann::json to_json(const DeltaCounts& d);
nlohmann::json to_json(const LayerPrediction& p);
nlohmann::json invariants_json(int r, const MeshInvariants& m);

/// "7" -> (7, 7); "7:12" -> (7, 12).
std::pair<int, int> parse_degree_range(std::string_view text);

/// Seed given on the command line: "vertex", "face" or "t:d".
struct SeedChoice {
  SeedKind kind = SeedKind::Face;
  std::int64_t t = 0;
  std::int64_t d = 0;

  std::string label() const;
  SeedDescriptor profile(int r) const { return {r, t, d}; }
};
SeedChoice parse_seed(std::string_view text);

/// Budget from MESHSUM_BUDGET if set, else `fallback`.
std::int64_t budget_from_env(std::int64_t fallback = kDefaultVertexBudget);

struct GrowConfig {
  int r = 7;
  SeedKind seed = SeedKind::Face;
  int n = 3;
  std::int64_t budget = kDefaultVertexBudget;
};

struct GrowResult {
  nlohmann::json report;
  bool all_match = false;
  int explicit_layers = 0;
  std::optional<CombinatorialDisk> last_disk;
};

/// Grows T^0..T^n explicitly (until the budget stops it) while the analytic
/// predictions are computed concurrently, and compares them layer by layer.
GrowResult run_grow(const GrowConfig& cfg);

/// Layer predictions for any seed (including custom t:d profiles).
nlohmann::json predict_report(int r, const SeedChoice& seed, int n);

/// Closed-form invariants; with a seed also the pipeline value and an
/// equality flag. Throws DomainError / InvalidSeed.
nlohmann::json sum_report(int r, const std::optional<SeedChoice>& seed);

enum class Fault { None, Census, Delta, Counts, Invariants };
Fault parse_fault(std::string_view text);

struct VerifyConfig {
  int r_lo = 7;
  int r_hi = 12;
  int n = 6;
  std::vector<SeedKind> seeds{SeedKind::Vertex, SeedKind::Face};
  std::int64_t budget = kDefaultVertexBudget;
  Fault fault = Fault::None;
  std::uint64_t rng_seed = 20240607;
  int random_trials = 200;
  int recurrence_depth = 50;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct VerifyResult {
  nlohmann::json summary;
  std::size_t violations = 0;
};

/// Runs every property check per (degree, seed); degrees are processed
/// concurrently and merged in degree order.
VerifyResult run_verify(const VerifyConfig& cfg);

/// Reads a disk JSON document and renders it. Throws MalformedDiskError,
/// LayoutError or nlohmann::json::exception on bad input.
std::string render_file(const std::string& disk_json_text);

/// Multi-line table for terminal output.
std::string grow_table(const nlohmann::json& report);

}  // namespace meshsum::report
