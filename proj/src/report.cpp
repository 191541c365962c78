#include "meshsum/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "meshsum/disk_json.hpp"
#include "meshsum/error.hpp"
#include "meshsum/render_svg.hpp"

namespace meshsum::report {

using nlohmann::json;

namespace {

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InputError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

json to_json(const BigInt& x) { return x.to_string(); }

json to_json(const BigRational& x) { return {{"num", x.num().to_string()}, {"den", x.den().to_string()}}; }

json to_json(const DiskCounts& c) {
  return {{"v", to_json(c.v)}, {"e", to_json(c.e)}, {"f", to_json(c.f)}, {"s", to_json(c.s)}};
}

json to_json(const LayerCensus& c) { return {{"a", to_json(c.a)}, {"b", to_json(c.b)}}; }

json to_json(const DeltaCounts& d) { return {{"v", to_json(d.v)}, {"e", to_json(d.e)}, {"f", to_json(d.f)}}; }

json to_json(const LayerPrediction& p) {
  return {{"n", p.n},
          {"a", to_json(p.census.a)},
          {"b", to_json(p.census.b)},
          {"dv", to_json(p.deltas.v)},
          {"de", to_json(p.deltas.e)},
          {"df", to_json(p.deltas.f)},
          {"cum", to_json(p.cumulative)}};
}

json invariants_json(int r, const MeshInvariants& m) {
  return {{"r", r},
          {"vM", to_json(m.v)},
          {"eM", to_json(m.e)},
          {"fM", to_json(m.f)},
          {"euler_check", euler_formula_check(m)}};
}

std::pair<int, int> parse_degree_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    const auto r = static_cast<int>(parse_int(text, "degree"));
    return {r, r};
  }
  const auto lo = static_cast<int>(parse_int(text.substr(0, colon), "degree range"));
  const auto hi = static_cast<int>(parse_int(text.substr(colon + 1), "degree range"));
  if (lo > hi) throw InputError("empty degree range '" + std::string(text) + "'");
  return {lo, hi};
}

std::string SeedChoice::label() const {
  if (kind != SeedKind::Custom) return to_string(kind);
  return std::to_string(t) + ":" + std::to_string(d);
}

SeedChoice parse_seed(std::string_view text) {
  if (text == "vertex") return {SeedKind::Vertex, 0, 0};
  if (text == "face") return {SeedKind::Face, 3, 6};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("seed must be 'vertex', 'face' or 't:d', got '" + std::string(text) + "'");
  }
  return {SeedKind::Custom, parse_int(text.substr(0, colon), "seed boundary length"),
          parse_int(text.substr(colon + 1), "seed degree sum")};
}

std::int64_t budget_from_env(std::int64_t fallback) {
  const char* env = std::getenv("MESHSUM_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  return parse_int(env, "MESHSUM_BUDGET");
}

GrowResult run_grow(const GrowConfig& cfg) {
  if (cfg.r == 6) throw DomainError("degree 6 excluded");
  if (cfg.r < kMinDegree) throw DomainError("mesh degree must be at least 7, got " + std::to_string(cfg.r));
  if (cfg.n < 0 || cfg.n > kMaxLayers) throw InputError("layer count out of range");
  if (cfg.seed == SeedKind::Custom) throw InputError("grow supports only vertex and face seeds");

  auto predicted_future = std::async(std::launch::async, [&cfg] {
    return cfg.n >= 1 ? predict_seed(cfg.seed, cfg.r, cfg.n) : std::vector<LayerPrediction>{};
  });

  GrowResult result;
  json layers = json::array();
  bool all_match = true;

  std::optional<CombinatorialDisk> current =
      cfg.seed == SeedKind::Vertex ? seed_vertex(cfg.r) : seed_face(cfg.r);
  std::optional<DiskCounts> current_counts = count_explicit(*current);
  const DiskCounts initial = seed_counts(cfg.seed, cfg.r);

  {
    const bool match = *current_counts == initial;
    all_match = all_match && match;
    layers.push_back({{"layer", 0},
                      {"analytic_only", false},
                      {"explicit", to_json(*current_counts)},
                      {"predicted", to_json(initial)},
                      {"match", match}});
  }

  const auto predicted = predicted_future.get();
  for (int k = 1; k <= cfg.n; ++k) {
    const LayerPrediction& p = predicted[static_cast<std::size_t>(k - 1)];
    json row = {{"layer", k},
                {"predicted", to_json(p.cumulative)},
                {"predicted_census", to_json(p.census)},
                {"predicted_deltas", to_json(p.deltas)}};
    std::optional<CombinatorialDisk> next;
    if (current) {
      try {
        next = expand(*current, cfg.budget);
      } catch (const BudgetError&) {
        next.reset();
      }
    }
    if (!next) {
      current.reset();
      row["analytic_only"] = true;
      row["explicit"] = nullptr;
      row["census"] = nullptr;
      row["deltas"] = nullptr;
      row["match"] = nullptr;
      layers.push_back(std::move(row));
      continue;
    }
    const DiskCounts counts = count_explicit(*next);
    const DeltaCounts deltas{counts.v - current_counts->v, counts.e - current_counts->e,
                             counts.f - current_counts->f};
    bool match = counts == p.cumulative && deltas == p.deltas;
    try {
      const LayerCensus census = layer_census(*current, *next);
      row["census"] = to_json(census);
      match = match && census == p.census;
    } catch (const CensusContradiction& e) {
      row["census"] = nullptr;
      row["error"] = e.what();
      match = false;
    }
    row["analytic_only"] = false;
    row["explicit"] = to_json(counts);
    row["deltas"] = to_json(deltas);
    row["match"] = match;
    all_match = all_match && match;
    layers.push_back(std::move(row));
    ++result.explicit_layers;
    current = std::move(next);
    current_counts = counts;
    result.last_disk = *current;
  }
  if (!result.last_disk && current) result.last_disk = *current;

  const MeshInvariants from_seed = mesh_invariants_from_seed(cfg.seed, cfg.r);
  json invariants = invariants_json(cfg.r, from_seed);
  invariants["seed_independent"] = from_seed == mesh_invariants(cfg.r);

  result.all_match = all_match;
  result.report = {{"schema_version", kSchemaVersion},
                   {"config", {{"r", cfg.r}, {"seed", to_string(cfg.seed)}, {"n_max", cfg.n}, {"budget", cfg.budget}}},
                   {"explicit_layers", result.explicit_layers},
                   {"layers", std::move(layers)},
                   {"invariants", std::move(invariants)},
                   {"all_match", all_match}};
  return result;
}

json predict_report(int r, const SeedChoice& seed, int n) {
  if (r == 6) throw DomainError("degree 6 excluded");
  std::vector<LayerPrediction> layers;
  DiskCounts initial;
  if (seed.kind == SeedKind::Custom) {
    validate_seed(seed.profile(r));
    initial = counts_from_boundary(seed.profile(r));
    layers = predict_layers(seed.profile(r), n);
  } else {
    initial = seed_counts(seed.kind, r);
    layers = predict_seed(seed.kind, r, n);
  }
  json rows = json::array();
  for (const auto& p : layers) rows.push_back(to_json(p));
  return {{"schema_version", kSchemaVersion},
          {"config", {{"r", r}, {"seed", seed.label()}, {"n_max", n}}},
          {"initial", to_json(initial)},
          {"layers", std::move(rows)}};
}

json sum_report(int r, const std::optional<SeedChoice>& seed) {
  const MeshInvariants closed = mesh_invariants(r);
  json out = invariants_json(r, closed);
  out["schema_version"] = kSchemaVersion;
  if (seed) {
    MeshInvariants piped;
    if (seed->kind == SeedKind::Custom) {
      validate_seed(seed->profile(r));
      piped = mesh_invariants_from_seed(seed->profile(r));
    } else {
      piped = mesh_invariants_from_seed(seed->kind, r);
    }
    json s = invariants_json(r, piped);
    s["seed"] = seed->label();
    out["from_seed"] = std::move(s);
    out["seed_equal"] = piped == closed;
  }
  return out;
}

Fault parse_fault(std::string_view text) {
  if (text.empty() || text == "none") return Fault::None;
  if (text == "census") return Fault::Census;
  if (text == "delta") return Fault::Delta;
  if (text == "counts") return Fault::Counts;
  if (text == "invariants") return Fault::Invariants;
  throw InputError("unknown fault '" + std::string(text) + "' (census, delta, counts, invariants)");
}

namespace {

/// Collects pass/fail tallies and violation records for one degree.
class Tally {
 public:
  Tally(int r, std::string seed) : r_(r), seed_(std::move(seed)) {}

  void check(const std::string& invariant, bool ok, int layer = -1, const std::string& detail = {}) {
    if (ok) {
      ++pass_[invariant];
      return;
    }
    ++fail_[invariant];
    json v = {{"r", r_}, {"seed", seed_}, {"invariant", invariant}, {"detail", detail}};
    v["layer"] = layer >= 0 ? json(layer) : json(nullptr);
    violations_.push_back(std::move(v));
  }
  void set_seed(std::string seed) { seed_ = std::move(seed); }

  std::map<std::string, std::size_t> pass_, fail_;
  std::vector<json> violations_;

 private:
  int r_;
  std::string seed_;
};

std::string describe(const DiskCounts& c) {
  return "(" + c.v.to_string() + ", " + c.e.to_string() + ", " + c.f.to_string() + ", " + c.s.to_string() + ")";
}

void verify_seed(int r, SeedKind kind, const VerifyConfig& cfg, Tally& tally) {
  tally.set_seed(to_string(kind));
  auto predicted = predict_seed(kind, r, std::max(cfg.n, 2));
  for (auto& p : predicted) {
    switch (cfg.fault) {
      case Fault::Census:
        p.census.a += BigInt(1);
        break;
      case Fault::Delta:
        p.deltas.e += BigInt(1);
        break;
      case Fault::Counts:
        p.cumulative.v += BigInt(1);
        break;
      default:
        break;
    }
  }
  const MeshInvariants expected = mesh_invariants(r);
  auto seed_invariants = [&](const MeshInvariants& m) {
    if (cfg.fault != Fault::Invariants) return m;
    MeshInvariants bumped = m;
    bumped.v = bumped.v + BigRational(1);
    return bumped;
  };

  CombinatorialDisk disk = kind == SeedKind::Vertex ? seed_vertex(r) : seed_face(r);
  DiskCounts counts = count_explicit(disk);
  tally.check("oracle-prediction", counts == seed_counts(kind, r), 0, describe(counts));

  for (int k = 0;; ++k) {
    const auto violations = validate_disk(disk);
    tally.check("disk-valid", violations.empty(), k,
                violations.empty() ? "" : violations.front().invariant + ": " + violations.front().detail);
    const auto t = static_cast<std::int64_t>(disk.boundary().size());
    tally.check("euler-explicit", counts.v - counts.e + counts.f == BigInt(1), k, describe(counts));
    tally.check("handshake", BigInt(static_cast<std::int64_t>(disk.graph().rotation_sum())) == BigInt(2) * counts.e, k);
    if (!disk.degenerate()) {
      tally.check("triangulation", BigInt(3) * counts.f + BigInt(t) == BigInt(2) * counts.e, k);
      tally.check("convex", is_convex(disk), k);
      const BoundaryProfile profile = boundary_profile(disk);
      const SeedDescriptor desc{r, profile.t, profile.d};
      bool closed_ok = false;
      std::string detail;
      try {
        closed_ok = counts_from_boundary(desc) == counts;
        detail = describe(counts);
      } catch (const Error& e) {
        detail = e.what();
      }
      tally.check("closed-form", closed_ok, k, detail);
      bool independent = false;
      try {
        independent = seed_invariants(mesh_invariants_from_seed(desc)) == expected;
      } catch (const Error& e) {
        detail = e.what();
      }
      tally.check("seed-independence", independent, k, "profile " + std::to_string(profile.t) + ":" +
                                                           std::to_string(profile.d));
    }
    if (k >= cfg.n) break;

    std::optional<CombinatorialDisk> next;
    try {
      next = expand(disk, cfg.budget);
    } catch (const BudgetError&) {
      break;
    }
    const LayerPrediction& p = predicted[static_cast<std::size_t>(k)];
    const DiskCounts next_counts = count_explicit(*next);
    const DeltaCounts delta{next_counts.v - counts.v, next_counts.e - counts.e, next_counts.f - counts.f};
    tally.check("delta-euler", delta.v - delta.e + delta.f == BigInt(0), k + 1);

    std::optional<LayerCensus> census;
    try {
      census = layer_census(disk, *next);
      tally.check("census-degrees", true, k + 1);
    } catch (const CensusContradiction& e) {
      tally.check("census-degrees", false, k + 1, e.what());
    }
    if (census) {
      tally.check("delta-linear", delta == deltas_from_census(*census), k + 1);
      if (!disk.degenerate()) {
        const BoundaryProfile profile = boundary_profile(disk);
        const LayerCensus lemma{BigInt(profile.t) * BigInt(r - 2) - BigInt(profile.d), BigInt(profile.t)};
        tally.check("census-lemma", *census == lemma, k + 1);
      }
      tally.check("census-prediction", *census == p.census, k + 1,
                  "explicit (" + census->a.to_string() + ", " + census->b.to_string() + "), predicted (" +
                      p.census.a.to_string() + ", " + p.census.b.to_string() + ")");
    }
    tally.check("delta-prediction", delta == p.deltas, k + 1);
    tally.check("oracle-prediction", next_counts == p.cumulative, k + 1,
                "explicit " + describe(next_counts) + ", predicted " + describe(p.cumulative));
    tally.check("new-boundary-simple", next->boundary().size() ==
                                           static_cast<std::size_t>((next_counts.v - counts.v).to_int64()),
                k + 1);
    disk = std::move(*next);
    counts = next_counts;
  }

  // Recurrence forms, independent of predict_layers' own cross-check.
  const int depth = std::max(cfg.recurrence_depth, cfg.n);
  {
    LayerCensus c = kind == SeedKind::Vertex ? LayerCensus{BigInt(r), BigInt(0)} : initial_census(face_profile(r));
    std::vector<DeltaCounts> coupled;
    for (int n = 1; n <= depth; ++n) {
      if (n > 1) c = census_step(r, c);
      coupled.push_back(deltas_from_census(c));
    }
    DeltaCounts x0 = coupled[0], x1 = coupled.size() > 1 ? coupled[1] : coupled[0];
    bool same = true;
    for (std::size_t i = 2; i < coupled.size(); ++i) {
      DeltaCounts x2{second_order_step(r, x0.v, x1.v), second_order_step(r, x0.e, x1.e),
                     second_order_step(r, x0.f, x1.f)};
      same = same && x2 == coupled[i];
      x0 = x1;
      x1 = x2;
    }
    tally.check("recurrence-equivalence", same);

    bool band = true;
    for (const auto& p : predicted) {
      if (p.n < 2 || static_cast<std::size_t>(p.n) >= predicted.size()) continue;
      const BigInt& a = p.census.a;
      const BigInt& a_next = predicted[static_cast<std::size_t>(p.n)].census.a;
      band = band && BigInt(r - 5) * a <= a_next && a_next <= BigInt(r - 4) * a;
    }
    tally.check("growth-band", band);
  }

  tally.check("seed-independence", seed_invariants(mesh_invariants_from_seed(kind, r)) == expected);

  // Convergent regime: partial sums of the v-increments at t = 1/(2(r-4)).
  const RecurrenceSeries series{r - 4, predicted[0].deltas.v, predicted[1].deltas.v};
  const BigRational t(BigInt(1), BigInt(2 * (r - 4)));
  const BigRational exact = generating_value(series, t);
  const BigRational gap = BigRational::abs(partial_sum(series, t, 60) - exact) / BigRational::abs(exact);
  tally.check("convergent-regime", gap < BigRational(BigInt(1), BigInt::pow(BigInt(10), 12)));
}

json verify_degree(int r, const VerifyConfig& cfg) {
  Tally tally(r, "-");
  try {
    for (SeedKind kind : cfg.seeds) verify_seed(r, kind, cfg, tally);
    tally.set_seed("-");
    MeshInvariants m = mesh_invariants(r);
    if (cfg.fault == Fault::Invariants) m.f = m.f + BigRational(1);
    tally.check("corollary", euler_formula_check(m));

    std::mt19937_64 rng(cfg.rng_seed ^ (static_cast<std::uint64_t>(r) * 0x9E3779B97F4A7C15ull));
    std::uniform_int_distribution<std::int64_t> coeff(-1'000'000, 1'000'000);
    bool lemma_ok = true;
    for (int i = 0; i < cfg.random_trials; ++i) {
      const BigInt x1(coeff(rng)), x2(coeff(rng));
      lemma_ok = lemma_ok && euler_sum_by_lemma(r, x1, x2) == euler_sum(RecurrenceSeries{r - 4, x1, x2});
    }
    tally.check("lemma1-eq-star", lemma_ok);
  } catch (const Error& e) {
    tally.check("exception", false, -1, e.what());
  }
  json pass = json::object(), fail = json::object();
  for (const auto& [k, v] : tally.pass_) pass[k] = v;
  for (const auto& [k, v] : tally.fail_) fail[k] = v;
  return {{"r", r}, {"pass", std::move(pass)}, {"fail", std::move(fail)}, {"violations", tally.violations_}};
}

}  // namespace

VerifyResult run_verify(const VerifyConfig& cfg) {
  if (cfg.r_lo < kMinDegree || cfg.r_hi > 1000 || cfg.r_lo > cfg.r_hi) {
    throw InputError("verify degree range must lie within 7..1000");
  }
  if (cfg.n < 0 || cfg.n > kMaxLayers) throw InputError("layer count out of range");

  const auto count = static_cast<std::size_t>(cfg.r_hi - cfg.r_lo + 1);
  std::vector<json> per_degree(count);
  unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> workers;
  for (unsigned i = 0; i < threads; ++i) {
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t j = next++; j < count; j = next++) {
        per_degree[j] = verify_degree(cfg.r_lo + static_cast<int>(j), cfg);
      }
    }));
  }
  for (auto& w : workers) w.get();

  std::map<std::string, std::size_t> pass, fail;
  json violations = json::array();
  for (const auto& d : per_degree) {
    for (const auto& [k, v] : d["pass"].items()) pass[k] += v.get<std::size_t>();
    for (const auto& [k, v] : d["fail"].items()) fail[k] += v.get<std::size_t>();
    for (const auto& v : d["violations"]) violations.push_back(v);
  }
  json seeds = json::array();
  for (SeedKind s : cfg.seeds) seeds.push_back(to_string(s));

  VerifyResult result;
  result.violations = violations.size();
  result.summary = {{"schema_version", kSchemaVersion},
                    {"config",
                     {{"r_min", cfg.r_lo},
                      {"r_max", cfg.r_hi},
                      {"n_max", cfg.n},
                      {"seeds", std::move(seeds)},
                      {"budget", cfg.budget},
                      {"rng_seed", cfg.rng_seed},
                      {"fault", cfg.fault == Fault::None ? "none" : "injected"}}},
                    {"pass_counts", pass},
                    {"fail_counts", fail},
                    {"violations", std::move(violations)},
                    {"ok", result.violations == 0}};
  return result;
}

std::string render_file(const std::string& disk_json_text) {
  const json doc = json::parse(disk_json_text);
  const CombinatorialDisk disk = disk_from_json(doc);
  const auto violations = validate_disk(disk);
  if (!violations.empty()) {
    throw MalformedDiskError("invalid disk: " + violations.front().invariant + " (" + violations.front().detail + ")");
  }
  return emit_svg(disk, layout_disk(disk));
}

std::string grow_table(const json& report) {
  std::ostringstream os;
  const auto& cfg = report["config"];
  os << "r = " << cfg["r"].get<int>() << ", seed = " << cfg["seed"].get<std::string>()
     << ", layers = " << cfg["n_max"].get<int>() << ", budget = " << cfg["budget"].get<std::int64_t>() << "\n";
  os << "layer  mode      v                e                f                match\n";
  for (const auto& row : report["layers"]) {
    const bool analytic = row["analytic_only"].get<bool>();
    const auto& c = analytic ? row["predicted"] : row["explicit"];
    auto pad = [](std::string s, std::size_t w) {
      if (s.size() < w) s.append(w - s.size(), ' ');
      return s + " ";
    };
    os << pad(std::to_string(row["layer"].get<int>()), 6) << pad(analytic ? "analytic" : "explicit", 9)
       << pad(c["v"].get<std::string>(), 16) << pad(c["e"].get<std::string>(), 16)
       << pad(c["f"].get<std::string>(), 16)
       << (row["match"].is_null() ? "-" : (row["match"].get<bool>() ? "yes" : "NO")) << "\n";
  }
  const auto& inv = report["invariants"];
  auto rat = [](const json& q) {
    const auto den = q["den"].get<std::string>();
    return den == "1" ? q["num"].get<std::string>() : q["num"].get<std::string>() + "/" + den;
  };
  os << "vM = " << rat(inv["vM"]) << ", eM = " << rat(inv["eM"]) << ", fM = " << rat(inv["fM"])
     << ", euler_check = " << (inv["euler_check"].get<bool>() ? "true" : "false") << "\n";
  os << (report["all_match"].get<bool>() ? "all explicit layers match" : "MISMATCH") << "\n";
  return os.str();
}

}  // namespace meshsum::report
