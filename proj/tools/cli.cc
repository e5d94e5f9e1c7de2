// Copyright 2026 The svsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "svsim/svsim.h"

namespace svsim::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Raised for bad flag values detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WidthRange {
  int min = kDefaultMinWidth;
  int max = kDefaultMaxWidth;
};

WidthRange ParseWidthRange(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
      throw UsageError("invalid width range '" + text + "' (expected A..B or N)");
    }
    return v;
  };
  const std::size_t dots = text.find("..");
  WidthRange range;
  if (dots == std::string::npos) {
    range.min = range.max = parse_int(text);
  } else {
    range.min = parse_int(std::string_view(text).substr(0, dots));
    range.max = parse_int(std::string_view(text).substr(dots + 2));
  }
  if (range.min > range.max) {
    throw UsageError("width range '" + text + "' is empty");
  }
  return range;
}

int ResolveWorkers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv(kWorkersEnv); env != nullptr && *env) {
    int v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
      throw UsageError(std::string(kWorkersEnv) + " must be a positive integer");
    }
    return v;
  }
  return KernelBackend::DefaultWorkers();
}

void CheckWritable(const fs::path& path, bool force) {
  if (fs::exists(path) && !force) {
    throw UsageError("refusing to overwrite '" + path.string() +
                     "' (pass --force)");
  }
}

std::ofstream OpenOutput(const fs::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

std::string Bitstring(BasisIndex index, int width) {
  std::string bits(static_cast<std::size_t>(width), '0');
  for (int q = 0; q < width; ++q) {
    if ((index >> q) & 1u) bits[static_cast<std::size_t>(width - 1 - q)] = '1';
  }
  return bits;
}

// Circuit-selection flags shared by `generate` and `verify backends`.
struct GeneratorFlags {
  std::string family = "supremacy";
  int rows = 4;
  int cols = 4;
  int depth = 20;
  int operand_bits = 3;
  std::uint64_t seed = 0;

  void Register(CLI::App* app) {
    app->add_option("--family", family, "Circuit family: supremacy or multiplier")
        ->check(CLI::IsMember({"supremacy", "multiplier"}))
        ->capture_default_str();
    app->add_option("--rows", rows, "Supremacy grid rows")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--cols", cols, "Supremacy grid columns")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--depth", depth, "Supremacy cycles (CZ + single-qubit layers)")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--operand-bits", operand_bits, "Multiplier operand size n (width 4n+1)")
        ->check(CLI::Range(1, 15))->capture_default_str();
    app->add_option("--seed", seed, "Generator seed")->capture_default_str();
  }

  Circuit Build() const {
    if (family == "multiplier") return GenerateMultiplier({operand_bits});
    return GenerateSupremacy({rows, cols, depth, seed});
  }
};

// --- generate ----------------------------------------------------------------

struct GenerateCommand {
  GeneratorFlags gen;
  int sweep_to = 0;
  std::string out_path;
  bool force = false;

  void Register(CLI::App* app) {
    gen.Register(app);
    app->add_option("--sweep-to", sweep_to,
                    "Also write circuits with qubits removed at random down to this width")
        ->check(CLI::PositiveNumber);
    app->add_option("--out", out_path, "Output circuit file")->required();
    app->add_flag("--force", force, "Overwrite existing files");
  }

  int Run(std::ostream& out) const {
    const Circuit base = gen.Build();
    std::vector<std::pair<fs::path, const Circuit*>> files;
    files.emplace_back(out_path, &base);
    SweepPlan plan{base, {}, 0, {}, {}};
    if (sweep_to > 0) {
      if (sweep_to >= base.num_qubits()) {
        throw UsageError("--sweep-to must be below the circuit width " +
                         std::to_string(base.num_qubits()));
      }
      plan = WidthSweep(base, sweep_to, gen.seed);
      const fs::path p(out_path);
      for (const Circuit& c : plan.circuits) {
        fs::path name = p.parent_path() /
                        (p.stem().string() + "_w" +
                         std::to_string(c.num_qubits()) + p.extension().string());
        files.emplace_back(std::move(name), &c);
      }
    }
    for (const auto& [path, circuit] : files) CheckWritable(path, force);
    for (const auto& [path, circuit] : files) {
      WriteCircuitFile(path, *circuit);
      out << "wrote " << path.string() << " (qubits=" << circuit->num_qubits()
          << " depth=" << circuit->depth() << " gates=" << circuit->gate_count()
          << ")\n";
    }
    return kExitOk;
  }
};

// --- simulate ----------------------------------------------------------------

struct SimulateCommand {
  std::string file;
  std::string backend = "kernel";
  std::string initial = "zero";
  int workers = 0;
  int top_k = 8;
  bool dump = false;

  void Register(CLI::App* app) {
    app->add_option("file", file, "Circuit file to simulate")->required();
    app->add_option("--backend", backend, "kernel or dense")
        ->check(CLI::IsMember({"kernel", "dense"}))->capture_default_str();
    app->add_option("--initial", initial, "Initial state: zero or superposition")
        ->check(CLI::IsMember({"zero", "superposition"}))->capture_default_str();
    app->add_option("--workers", workers,
                    std::string("Kernel worker threads (default: $") + kWorkersEnv +
                        " or hardware concurrency)")
        ->check(CLI::PositiveNumber);
    app->add_option("--top-k", top_k, "Number of largest amplitudes to print")
        ->check(CLI::NonNegativeNumber)->capture_default_str();
    app->add_flag("--dump-amplitudes", dump,
                  "Print every amplitude as 'index re im' instead of a summary");
  }

  int Run(std::ostream& out) const {
    const Circuit circuit = ReadCircuitFile(file);
    const auto engine = MakeBackend(backend, ResolveWorkers(workers));
    StateVector start = initial == "zero" ? ZeroState(circuit.num_qubits())
                                          : EqualSuperpositionState(circuit.num_qubits());
    const StateVector final_state = Simulate(*engine, circuit, std::move(start));

    if (dump) {
      out << "# index re im\n";
      for (BasisIndex i = 0; i < final_state.size(); ++i) {
        out << i << ' ' << FormatReal(final_state[i].real()) << ' '
            << FormatReal(final_state[i].imag()) << '\n';
      }
      return kExitOk;
    }
    out << "circuit: " << file << " family=" << FamilyName(circuit.family())
        << " qubits=" << circuit.num_qubits() << " depth=" << circuit.depth()
        << " gates=" << circuit.gate_count() << "\n";
    out << "backend: " << engine->name() << "\n";
    out << "initial: " << initial << "\n";
    out << "norm: " << std::setprecision(15) << Norm(final_state) << "\n";

    std::vector<BasisIndex> order(final_state.size());
    for (BasisIndex i = 0; i < order.size(); ++i) order[i] = i;
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(top_k), order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                      order.end(), [&](BasisIndex a, BasisIndex b) {
                        const double na = std::norm(final_state[a]);
                        const double nb = std::norm(final_state[b]);
                        return na != nb ? na > nb : a < b;
                      });
    if (k > 0) out << "top " << k << " amplitudes (index bitstring re im probability):\n";
    for (std::size_t j = 0; j < k; ++j) {
      const BasisIndex i = order[j];
      out << "  " << i << ' ' << Bitstring(i, circuit.num_qubits()) << ' '
          << std::setprecision(12) << final_state[i].real() << ' '
          << final_state[i].imag() << ' ' << std::norm(final_state[i]) << "\n";
    }
    return kExitOk;
  }
};

// --- bench -------------------------------------------------------------------

struct BenchCommand {
  std::string family = "supremacy";
  std::string widths = "13..28";
  int depth = 20;
  std::vector<std::string> backends{"kernel"};
  int reps = kDefaultRepetitions;
  std::uint64_t seed = 0;
  int workers = 0;
  bool no_warmup = false;
  std::string out_path;
  std::string aggregate_path;
  std::string speedup_path;
  std::string baseline = "dense";
  std::string subject = "kernel";
  std::string plot_dir;
  bool force = false;

  void Register(CLI::App* app) {
    app->add_option("--family", family, "supremacy or multiplier")
        ->check(CLI::IsMember({"supremacy", "multiplier"}))->capture_default_str();
    app->add_option("--widths", widths, "Width range A..B (inclusive) or a single width")
        ->capture_default_str();
    app->add_option("--depth", depth, "Supremacy cycles")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--backends", backends, "Comma-separated backends to time")
        ->delimiter(',')->check(CLI::IsMember({"kernel", "dense"}))
        ->capture_default_str();
    app->add_option("--reps", reps, "Timed repetitions per circuit and backend")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--seed", seed, "Seed for generation and qubit removal")
        ->capture_default_str();
    app->add_option("--workers", workers,
                    std::string("Kernel worker threads (default: $") + kWorkersEnv +
                        " or hardware concurrency)")
        ->check(CLI::PositiveNumber);
    app->add_flag("--no-warmup", no_warmup, "Skip the discarded warm-up run");
    app->add_option("--out", out_path, "Per-run records CSV")->required();
    app->add_option("--aggregate-out", aggregate_path, "Mean/stddev CSV");
    app->add_option("--speedup-out", speedup_path,
                    "Speedup CSV of --baseline over --subject");
    app->add_option("--baseline", baseline, "Speedup baseline backend")
        ->check(CLI::IsMember({"kernel", "dense"}))->capture_default_str();
    app->add_option("--subject", subject, "Speedup subject backend")
        ->check(CLI::IsMember({"kernel", "dense"}))->capture_default_str();
    app->add_option("--plot-dir", plot_dir,
                    "Directory for per-backend width/mean_seconds TSV series");
    app->add_flag("--force", force, "Overwrite existing files");
  }

  int Run(std::ostream& out, std::ostream& err) const {
    const WidthRange range = ParseWidthRange(widths);
    for (const std::string& p : {out_path, aggregate_path, speedup_path}) {
      if (!p.empty()) CheckWritable(p, force);
    }
    SweepBenchmarkConfig config;
    config.family = *ParseFamily(family);
    config.min_width = range.min;
    config.max_width = range.max;
    config.depth = depth;
    config.seed = seed;

    const int worker_count = ResolveWorkers(workers);
    std::vector<std::unique_ptr<Backend>> owned;
    std::vector<const Backend*> engines;
    for (const std::string& name : backends) {
      owned.push_back(MakeBackend(name, worker_count));
      engines.push_back(owned.back().get());
    }
    HarnessOptions options;
    options.repetitions = reps;
    options.warmup = !no_warmup;
    options.on_record = [&err](const BenchmarkRecord& r) {
      err << r.family << " width=" << r.width << " backend=" << r.backend
          << " rep=" << r.rep << " seconds=" << r.seconds << "\n";
    };
    const BenchmarkResult result = SweepBenchmark(config, engines, options);

    {
      std::ofstream csv = OpenOutput(out_path);
      WriteRecordsCsv(csv, result.records);
    }
    out << "wrote " << result.records.size() << " records to " << out_path << "\n";
    for (const FailedRun& f : result.failures) {
      out << "failed: " << f.family << " width=" << f.width
          << " backend=" << f.backend << ": " << f.reason << "\n";
    }
    if (result.records.empty()) return result.failures.empty() ? kExitOk : kExitRuntimeError;

    const std::vector<AggregateRow> rows = Aggregate(result.records);
    out << "family,width,backend,repetitions,mean_seconds,stddev_seconds\n";
    for (const AggregateRow& r : rows) {
      out << r.family << ',' << r.width << ',' << r.backend << ','
          << r.repetitions << ',' << r.mean_seconds << ',' << r.stddev_seconds
          << "\n";
    }
    if (!aggregate_path.empty()) {
      std::ofstream csv = OpenOutput(aggregate_path);
      WriteAggregatesCsv(csv, rows);
    }
    if (!speedup_path.empty()) {
      std::ofstream csv = OpenOutput(speedup_path);
      WriteSpeedupsCsv(csv, Speedup(rows, baseline, subject));
    }
    if (!plot_dir.empty()) {
      for (const fs::path& p : WritePlotData(plot_dir, rows)) {
        out << "wrote " << p.string() << "\n";
      }
    }
    return result.failures.empty() ? kExitOk : kExitRuntimeError;
  }
};

// --- verify ------------------------------------------------------------------

void WriteJson(const std::string& path, const json& doc, bool force) {
  if (path.empty()) return;
  CheckWritable(path, force);
  std::ofstream out = OpenOutput(path);
  out << doc.dump(2) << "\n";
}

struct VerifyBackendsCommand {
  std::string file;
  GeneratorFlags gen;
  std::string initial = "superposition";
  double tolerance = kBackendTolerance;
  std::string json_path;
  bool force = false;

  void Register(CLI::App* app) {
    app->add_option("--file", file, "Circuit file (otherwise generated from the flags)");
    gen.Register(app);
    app->add_option("--initial", initial, "zero or superposition")
        ->check(CLI::IsMember({"zero", "superposition"}))->capture_default_str();
    app->add_option("--tolerance", tolerance, "Maximum elementwise difference")
        ->capture_default_str();
    app->add_option("--json", json_path, "Write a machine-readable report");
    app->add_flag("--force", force, "Overwrite an existing report");
  }

  int Run(std::ostream& out) const {
    const Circuit circuit = file.empty() ? gen.Build() : ReadCircuitFile(file);
    const int n = circuit.num_qubits();
    const StateVector start = initial == "zero" ? ZeroState(n) : EqualSuperpositionState(n);
    const EquivalenceReport report =
        CompareBackends(circuit, start, tolerance, ResolveWorkers(0));
    out << "backends kernel vs dense: qubits=" << n
        << " gates=" << circuit.gate_count() << " max_abs_diff="
        << std::setprecision(3) << report.max_abs_diff
        << " worst_index=" << report.worst_index << " tolerance=" << tolerance
        << " -> " << (report.pass ? "PASS" : "FAIL") << "\n";
    WriteJson(json_path,
              {{"mode", "backends"},
               {"qubits", n},
               {"gate_count", circuit.gate_count()},
               {"max_abs_diff", report.max_abs_diff},
               {"worst_index", report.worst_index},
               {"tolerance", tolerance},
               {"pass", report.pass}},
              force);
    return report.pass ? kExitOk : kExitVerificationFailed;
  }
};

// Random path-sum cases visiting more than 2^22 paths are redrawn.
constexpr int kMaxRandomBranchingBits = 22;

struct VerifyPathSumCommand {
  std::string file;
  int random = 0;
  int max_qubits = 5;
  int max_gates = 20;
  std::uint64_t seed = 0;
  std::uint64_t in_index = 0;
  std::uint64_t out_index = 0;
  bool override_guard = false;
  double tolerance = kPathSumTolerance;
  std::string json_path;
  bool force = false;

  void Register(CLI::App* app) {
    app->add_option("--file", file, "Circuit file to check");
    app->add_option("--in", in_index, "Input basis index (with --file)")
        ->capture_default_str();
    app->add_option("--out-index", out_index, "Output basis index (with --file)")
        ->capture_default_str();
    app->add_option("--random", random,
                    "Check this many random circuits instead of a file")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--max-qubits", max_qubits, "Random circuit width bound")
        ->check(CLI::Range(1, 12))->capture_default_str();
    app->add_option("--max-gates", max_gates, "Random circuit gate bound")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--seed", seed, "Seed for random circuits and indices")
        ->capture_default_str();
    app->add_flag("--override-guard", override_guard,
                  "Allow path sums over circuits with more than 25 gates");
    app->add_option("--tolerance", tolerance, "Maximum |path sum - state amplitude|")
        ->capture_default_str();
    app->add_option("--json", json_path, "Write a machine-readable report");
    app->add_flag("--force", force, "Overwrite an existing report");
  }

  int Run(std::ostream& out) const {
    if (file.empty() == (random == 0)) {
      throw UsageError("verify pathsum needs exactly one of --file or --random");
    }
    struct Case {
      Circuit circuit;
      BasisIndex in, out;
    };
    std::vector<Case> cases;
    if (!file.empty()) {
      cases.push_back({ReadCircuitFile(file), in_index, out_index});
    } else {
      Rng rng(seed);
      while (static_cast<int>(cases.size()) < random) {
        RandomCircuitSpec spec;
        spec.num_qubits = 1 + static_cast<int>(rng.UniformBelow(
                                  static_cast<std::uint64_t>(max_qubits)));
        spec.depth = 1 + static_cast<int>(rng.UniformBelow(6));
        spec.seed = rng.Next();
        Circuit c = RandomCircuit(spec);
        if (c.gate_count() > max_gates ||
            PathSumBranchingBits(c) > kMaxRandomBranchingBits) {
          continue;
        }
        const std::uint64_t dim = std::uint64_t{1} << spec.num_qubits;
        cases.push_back({std::move(c), rng.UniformBelow(dim), rng.UniformBelow(dim)});
      }
    }
    PathSumOptions options;
    options.override_guard = override_guard;
    double worst = 0.0;
    json results = json::array();
    for (const Case& c : cases) {
      const Amplitude path = PathSumAmplitude(c.circuit, c.in, c.out, options);
      std::vector<Amplitude> amps(std::size_t{1} << c.circuit.num_qubits());
      amps[c.in] = 1.0;
      const StateVector state = Simulate(KernelBackend(1), c.circuit,
                                         StateVector(c.circuit.num_qubits(), std::move(amps)));
      const Amplitude full = BasisAmplitude(state, c.out);
      const double diff = std::abs(path - full);
      worst = std::max(worst, diff);
      out << "pathsum qubits=" << c.circuit.num_qubits()
          << " gates=" << c.circuit.gate_count() << " in=" << c.in
          << " out=" << c.out << std::setprecision(17) << " path=(" << path.real()
          << "," << path.imag() << ") state=(" << full.real() << ","
          << full.imag() << ") diff=" << std::setprecision(3) << diff << "\n";
      results.push_back({{"qubits", c.circuit.num_qubits()},
                         {"in", c.in},
                         {"out", c.out},
                         {"path_sum", {path.real(), path.imag()}},
                         {"state", {full.real(), full.imag()}},
                         {"diff", diff}});
    }
    const bool pass = worst <= tolerance;
    out << "pathsum: " << cases.size() << " case(s), max diff " << std::setprecision(3)
        << worst << " -> " << (pass ? "PASS" : "FAIL") << "\n";
    WriteJson(json_path,
              {{"mode", "pathsum"}, {"cases", results}, {"max_diff", worst},
               {"tolerance", tolerance}, {"pass", pass}},
              force);
    return pass ? kExitOk : kExitVerificationFailed;
  }
};

struct VerifyMultiplierCommand {
  int operand_bits = 2;
  bool sampled = false;
  int samples = 32;
  std::uint64_t seed = 0;
  std::string json_path;
  bool force = false;

  void Register(CLI::App* app) {
    app->add_option("--operand-bits", operand_bits, "Operand size n")
        ->check(CLI::Range(1, 6))->capture_default_str();
    app->add_flag("--sampled", sampled,
                  "Check random inputs instead of every (a, b) pair");
    app->add_option("--samples", samples, "Number of sampled inputs")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--seed", seed, "Seed for sampled inputs")->capture_default_str();
    app->add_option("--json", json_path, "Write a machine-readable report");
    app->add_flag("--force", force, "Overwrite an existing report");
  }

  int Run(std::ostream& out) const {
    MultiplierVerifyOptions options;
    options.exhaustive = !sampled;
    options.samples = samples;
    options.seed = seed;
    options.workers = ResolveWorkers(0);
    if (options.exhaustive && operand_bits > 3) {
      throw UsageError("exhaustive mode supports --operand-bits up to 3; add --sampled");
    }
    const MultiplierVerification v = VerifyMultiplier(operand_bits, options);
    out << "multiplier n=" << operand_bits << " width=" << 4 * operand_bits + 1
        << (v.exhaustive ? " exhaustive" : " sampled") << ": " << v.cases_checked
        << " case(s) -> " << (v.pass() ? "PASS" : "FAIL") << "\n";
    json doc = {{"mode", "multiplier"},
                {"operand_bits", operand_bits},
                {"exhaustive", v.exhaustive},
                {"cases_checked", v.cases_checked},
                {"pass", v.pass()}};
    if (v.counterexample) {
      const auto& cx = *v.counterexample;
      out << "counterexample: a=" << cx.input.a << " b=" << cx.input.b
          << " observed_index=" << cx.observed_index << ": " << cx.reason << "\n";
      doc["counterexample"] = {{"a", cx.input.a},
                               {"b", cx.input.b},
                               {"observed_index", cx.observed_index},
                               {"observed_magnitude", cx.observed_magnitude},
                               {"reason", cx.reason}};
    }
    WriteJson(json_path, doc, force);
    return v.pass() ? kExitOk : kExitVerificationFailed;
  }
};

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"svsim: full-amplitude quantum circuit simulator and benchmark harness"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  GenerateCommand generate;
  generate.Register(app.add_subcommand("generate", "Write a benchmark circuit file"));
  SimulateCommand simulate;
  simulate.Register(app.add_subcommand("simulate", "Simulate a circuit file"));
  BenchCommand bench;
  bench.Register(app.add_subcommand("bench", "Time backends over a width sweep and write CSVs"));

  CLI::App* verify = app.add_subcommand("verify", "Check simulator correctness against oracles");
  verify->require_subcommand(1);
  VerifyBackendsCommand verify_backends;
  verify_backends.Register(
      verify->add_subcommand("backends", "Compare kernel and dense backends"));
  VerifyPathSumCommand verify_pathsum;
  verify_pathsum.Register(
      verify->add_subcommand("pathsum", "Compare amplitudes with a path-sum oracle"));
  VerifyMultiplierCommand verify_multiplier;
  verify_multiplier.Register(
      verify->add_subcommand("multiplier", "Check multiplier truth tables"));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("generate")) return generate.Run(out);
    if (app.got_subcommand("simulate")) return simulate.Run(out);
    if (app.got_subcommand("bench")) return bench.Run(out, err);
    if (verify->got_subcommand("backends")) return verify_backends.Run(out);
    if (verify->got_subcommand("pathsum")) return verify_pathsum.Run(out);
    if (verify->got_subcommand("multiplier")) return verify_multiplier.Run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: circuit parse failed: " << e.what() << "\n";
    return kExitRuntimeError;
  } catch (const ResourceError& e) {
    err << "error: out of resources: " << e.what() << "\n";
    return kExitRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitUsage;
}

}  // namespace svsim::cli
