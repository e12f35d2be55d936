#include "sing/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <utility>

#include "sing/cli/results.hpp"
#include "sing/error.hpp"
#include "sing/format.hpp"
#include "sing/model_io.hpp"
#include "sing/most_suite.hpp"
#include "sing/sing_core.hpp"

namespace sing::cli {

namespace fs = std::filesystem;

std::string to_string(DatasetName name) {
  switch (name) {
    case DatasetName::iris:
      return "iris";
    case DatasetName::car:
      return "car";
    case DatasetName::abalone:
      return "abalone";
  }
  return "?";
}

void RunConfig::validate() const {
  if (delta_max && !(*delta_max > 0.0)) throw ConfigError("--delta-max must be positive");
  if (mc_samples && *mc_samples < 1) throw ConfigError("--mc-samples must be positive");
  if (nn_mc_samples && *nn_mc_samples < 1) throw ConfigError("--nn-mc-samples must be positive");
  if (divisions < 1) throw ConfigError("--divisions must be positive");
  if (!(tolerance > 0.0) || !(tolerance < 1.0)) throw ConfigError("--tolerance must lie in (0, 1)");
  if (max_sweeps < 1) throw ConfigError("--max-sweeps must be positive");
  if (seeds.empty()) throw ConfigError("--seeds needs at least one seed");
}

Protocol protocol_for(DatasetName name) {
  Protocol p;
  p.dataset = name;
  switch (name) {
    case DatasetName::iris:
      p.split.test_per_class = 10;
      p.delta_max = 1.0;
      p.mc_samples = 50;
      p.nn = MlpSpec{{4, 3, 3}, 2.0};
      p.nn_mc_samples = 200;
      p.published_sing_teaching = 1.0;
      p.published_sing_test = 1.0;
      p.published_nn_teaching = 0.99;
      p.published_nn_test = 0.93;
      p.min_sing_test = 0.93;
      p.min_sing_teaching = 0.99;
      p.min_nn_test = 0.85;
      break;
    case DatasetName::car:
      p.split.test_count = 729;
      p.split.train_count = 995;
      p.delta_max = 5.0;
      p.mc_samples = 50;
      p.nn = MlpSpec{{6, 10, 8, 4}, 2.0};
      p.nn_mc_samples = 50;
      p.published_sing_teaching = 1.0;
      p.published_sing_test = 0.94;
      p.published_nn_teaching = 0.84;
      p.published_nn_test = 0.81;
      p.min_sing_test = 0.90;
      p.min_sing_teaching = 0.98;
      p.min_nn_test = 0.75;
      break;
    case DatasetName::abalone:
      p.split.test_count = 2117;
      p.split.train_count = 2000;
      p.delta_max = 2.5;
      p.mc_samples = 50;
      p.published_sing_teaching = 1.0;
      p.published_sing_test = 0.86;
      p.published_sing_test_alt = 0.85;
      p.external_baseline = 0.79;
      p.min_sing_test = 0.80;
      break;
  }
  return p;
}

Dataset load_benchmark(DatasetName name, const fs::path& path) {
  switch (name) {
    case DatasetName::iris:
      return load_iris(path);
    case DatasetName::car:
      return load_car(path);
    case DatasetName::abalone:
      return load_abalone(path, true);
  }
  throw ConfigError("unknown dataset");
}

MostConfig sing_most_config(const RunConfig& c, const Protocol& p) {
  MostConfig m;
  m.initial_divisions = c.divisions;
  m.mc_samples = c.mc_samples.value_or(p.mc_samples);
  m.tolerance = c.tolerance;
  m.max_sweeps = c.max_sweeps;
  m.use_initial_scan = c.initial_scan.value_or(true);
  return m;
}

MostConfig nn_most_config(const RunConfig& c, const Protocol& p, std::uint64_t seed) {
  MostConfig m;
  m.initial_divisions = c.divisions;
  m.mc_samples = c.nn_mc_samples.value_or(p.nn_mc_samples);
  m.tolerance = c.tolerance;
  m.max_sweeps = c.max_sweeps;
  m.use_initial_scan = c.initial_scan.value_or(p.nn_initial_scan);
  m.seed = derive_seed(seed, {21});
  return m;
}

Split protocol_split(const Dataset& data, const RunConfig& c, const Protocol& p, std::uint64_t seed) {
  SplitSpec spec = p.split;
  spec.seed = seed;
  spec.leak_test_from_full = c.leak_test_from_full;
  return split(data, spec);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

std::string on_off(bool b) { return b ? "on" : "off"; }

fs::path resolved_data_path(const RunConfig& c) {
  return c.data_path.empty() ? fs::path("data") / (to_string(c.dataset) + ".data") : c.data_path;
}

bool wants_sing(const RunConfig& c) { return c.method != Method::nn; }

bool wants_nn(const RunConfig& c, const Protocol& p, std::ostream& err) {
  if (c.method == Method::sing) return false;
  if (p.nn) return true;
  if (c.method == Method::nn) {
    throw ConfigError("no network baseline is defined for " + to_string(c.dataset) +
                      "; the published external result is quoted instead");
  }
  err << "note: no network baseline for " << to_string(c.dataset) << ", running SiNG only\n";
  return false;
}

std::vector<std::string> provenance(const RunConfig& c, const Protocol& p, const fs::path& data, const Split* s) {
  static const char* const names[] = {"fit", "eval", "reproduce", "most-demo"};
  std::vector<std::string> lines;
  lines.push_back(std::string("tool=sing ") + SING_VERSION);
  lines.push_back(std::string("command=") + names[static_cast<int>(c.command)]);
  if (c.command != Command::most_demo) {
    lines.push_back("dataset=" + to_string(c.dataset));
    lines.push_back("data=" + data.generic_string());
  }
  if (c.command == Command::reproduce) {
    std::string seeds;
    for (auto v : c.seeds) seeds += (seeds.empty() ? "" : ";") + std::to_string(v);
    lines.push_back("seeds=" + seeds);
  } else {
    lines.push_back("seed=" + std::to_string(c.seed));
  }
  if (c.command == Command::most_demo) {
    lines.push_back("mc_samples=" + std::to_string(c.mc_samples.value_or(2000)));
    lines.push_back("initial_scan=" + on_off(c.initial_scan.value_or(true)));
  } else {
    lines.push_back("delta_max=" + format_real(c.delta_max.value_or(p.delta_max)));
    lines.push_back("mc_samples=" + std::to_string(c.mc_samples.value_or(p.mc_samples)));
    if (p.nn && c.method != Method::sing) {
      lines.push_back("nn_mc_samples=" + std::to_string(c.nn_mc_samples.value_or(p.nn_mc_samples)));
      lines.push_back("nn_weight_bound=" + format_real(p.nn->weight_bound));
    }
    lines.push_back("initial_scan=" + (c.initial_scan ? on_off(*c.initial_scan) : std::string("default")));
    lines.push_back("relearn=" + on_off(c.relearn));
    lines.push_back("leak_test_from_full=" + on_off(c.leak_test_from_full));
  }
  lines.push_back("divisions=" + std::to_string(c.divisions));
  lines.push_back("tolerance=" + format_real(c.tolerance));
  lines.push_back("max_sweeps=" + std::to_string(c.max_sweeps));
  if (s) lines.push_back("split=train " + std::to_string(s->train.size()) + " / test " + std::to_string(s->test.size()));
  return lines;
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  body(out);
  if (!out) throw Error("write failed for " + path.string());
}

struct SingRun {
  SingFit fit;
  GroupStore store;  // groups from the whole train set, before any test relearning
  Evaluation test;
  double seconds = 0.0;
};

SingRun run_sing(const Split& s, const RunConfig& c, const Protocol& p, std::uint64_t seed) {
  const auto start = Clock::now();
  SingTrainConfig tc;
  tc.delta_max = {c.delta_max.value_or(p.delta_max)};
  tc.most = sing_most_config(c, p);
  tc.seed = seed;
  SingFit fit = train_sing(s.train, tc);
  GroupStore store = build_groups(s.train, fit.delta);
  GroupStore scoring = store;
  Evaluation test = evaluate(scoring, s.test, c.relearn);
  return SingRun{std::move(fit), std::move(store), std::move(test), seconds_since(start)};
}

struct NnRun {
  MlpSpec spec;
  NnFit fit;
  double seconds = 0.0;
};

NnRun run_nn(const Split& s, const RunConfig& c, const Protocol& p, std::uint64_t seed) {
  const auto start = Clock::now();
  NnFit fit = train_nn(s.train, *p.nn, nn_most_config(c, p, seed), &s.test);
  return NnRun{*p.nn, std::move(fit), seconds_since(start)};
}

ResultRow sing_row(const SingRun& r, std::uint64_t seed) {
  return ResultRow{"SiNG", std::to_string(seed), r.fit.report.teaching_accuracy, r.test.accuracy,
                   "delta=" + join_reals(r.fit.delta.values(), ";")};
}

ResultRow nn_row(const NnRun& r, std::uint64_t seed) {
  return ResultRow{"NN", std::to_string(seed), r.fit.report.train_accuracy, r.fit.report.test_accuracy,
                   "weights=" + std::to_string(r.fit.weights.size()) + ";loss=" + format_real(r.fit.report.train_loss)};
}

void emit_table(const ResultsTable& table, const fs::path& stem, std::ostream& out,
                const std::vector<std::string>& footer = {}) {
  write_file(stem.string() + ".csv", [&](std::ostream& f) { write_csv(f, table); });
  write_file(stem.string() + ".txt", [&](std::ostream& f) {
    write_text(f, table);
    for (const auto& line : footer) f << line << '\n';
  });
  write_text(out, table);
  for (const auto& line : footer) out << line << '\n';
}

int cmd_fit(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Protocol p = protocol_for(c.dataset);
  const bool nn = wants_nn(c, p, err);
  const fs::path data_file = resolved_data_path(c);
  const Dataset data = load_benchmark(c.dataset, data_file);
  const Split s = protocol_split(data, c, p, c.seed);
  fs::create_directories(c.output_dir);
  const std::string stem = to_string(c.dataset) + "_seed" + std::to_string(c.seed);

  ResultsTable table{provenance(c, p, data_file, &s), {}};
  std::vector<std::string> timing;
  if (wants_sing(c)) {
    SingRun r = run_sing(s, c, p, c.seed);
    save_model(c.output_dir / (stem + "_sing.model"), r.store);
    write_file(c.output_dir / (stem + "_sing_delta.csv"), [&](std::ostream& f) {
      f << "feature,delta\n";
      const auto names = data.schema().feature_names();
      for (std::size_t j = 0; j < names.size(); ++j) f << names[j] << ',' << format_real(r.fit.delta[j]) << '\n';
    });
    write_file(c.output_dir / (stem + "_sing_trace_fold1.csv"),
               [&](std::ostream& f) { write_trace_csv(f, r.fit.report.optimize_first_to_second); });
    write_file(c.output_dir / (stem + "_sing_trace_fold2.csv"),
               [&](std::ostream& f) { write_trace_csv(f, r.fit.report.optimize_second_to_first); });
    for (const auto& w : r.fit.report.warnings) err << "warning: " << w << '\n';
    table.rows.push_back(sing_row(r, c.seed));
    timing.push_back("runtime SiNG: " + seconds_text(r.seconds) + " (relearned " + std::to_string(r.test.relearned) +
                     " test samples)");
  }
  if (nn) {
    NnRun r = run_nn(s, c, p, c.seed);
    write_file(c.output_dir / (stem + "_nn.weights"),
               [&](std::ostream& f) { write_weights(f, r.spec, r.fit.weights); });
    write_file(c.output_dir / (stem + "_nn_trace.csv"),
               [&](std::ostream& f) { write_trace_csv(f, r.fit.report.optimizer); });
    table.rows.push_back(nn_row(r, c.seed));
    timing.push_back("runtime NN: " + seconds_text(r.seconds));
  }
  emit_table(table, c.output_dir / (stem + "_results"), out);
  for (const auto& line : timing) out << line << '\n';
  return kExitOk;
}

int cmd_eval(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (c.model.empty()) throw ConfigError("eval needs --model");
  const Protocol p = protocol_for(c.dataset);
  const fs::path data_file = resolved_data_path(c);
  const Dataset data = load_benchmark(c.dataset, data_file);
  const Split s = protocol_split(data, c, p, c.seed);

  std::ifstream in(c.model);
  if (!in) throw ParseError("cannot open " + c.model.string());
  std::string first;
  std::getline(in, first);
  in.seekg(0);

  ResultsTable table{provenance(c, p, data_file, &s), {}};
  table.provenance.push_back("model=" + c.model.generic_string());
  if (first.rfind("mlp,", 0) == 0) {
    auto [spec, weights] = read_weights(in);
    if (spec.inputs() != data.schema().feature_count() ||
        static_cast<int>(spec.outputs()) != data.schema().class_count()) {
      throw ConfigError("network in " + c.model.string() + " does not fit the " + to_string(c.dataset) + " schema");
    }
    table.rows.push_back(ResultRow{"NN", std::to_string(c.seed), nn_accuracy(spec, weights, s.train),
                                   nn_accuracy(spec, weights, s.test),
                                   "weights=" + std::to_string(weights.size())});
  } else {
    GroupStore store = read_model(in);
    if (!(store.schema() == data.schema())) {
      throw ConfigError("model in " + c.model.string() + " was built for a different schema");
    }
    const double teaching = evaluate(std::as_const(store), s.train).accuracy;
    const Evaluation test = evaluate(store, s.test, c.relearn);
    table.rows.push_back(ResultRow{"SiNG", std::to_string(c.seed), teaching, test.accuracy,
                                   "delta=" + join_reals(store.delta().values(), ";")});
  }
  write_text(out, table);
  return kExitOk;
}

struct Check {
  std::string what;
  double value = 0.0;
  double bound = 0.0;
  bool strict = false;

  bool ok() const { return strict ? value > bound : value >= bound; }
  std::string line() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-5s %s: %.4f %s %.4f", ok() ? "ok" : "MISS", what.c_str(), value,
                  strict ? ">" : ">=", bound);
    return buf;
  }
};

int cmd_reproduce(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Protocol p = protocol_for(c.dataset);
  const bool nn = wants_nn(c, p, err);
  const fs::path data_file = resolved_data_path(c);
  const Dataset data = load_benchmark(c.dataset, data_file);
  fs::create_directories(c.output_dir);

  ResultsTable table{provenance(c, p, data_file, nullptr), {}};
  std::vector<double> sing_test, sing_teach, nn_test, nn_teach;
  std::vector<ResultRow> nn_rows;
  for (std::uint64_t seed : c.seeds) {
    const Split s = protocol_split(data, c, p, seed);
    if (wants_sing(c)) {
      SingRun r = run_sing(s, c, p, seed);
      table.rows.push_back(sing_row(r, seed));
      sing_test.push_back(r.test.accuracy);
      sing_teach.push_back(r.fit.report.teaching_accuracy);
      out << "seed " << seed << " SiNG " << seconds_text(r.seconds) << '\n';
    }
    if (nn) {
      NnRun r = run_nn(s, c, p, seed);
      nn_rows.push_back(nn_row(r, seed));
      nn_test.push_back(*r.fit.report.test_accuracy);
      nn_teach.push_back(r.fit.report.train_accuracy);
      out << "seed " << seed << " NN " << seconds_text(r.seconds) << '\n';
    }
  }
  table.rows.insert(table.rows.end(), nn_rows.begin(), nn_rows.end());

  std::vector<Check> checks;
  if (wants_sing(c)) {
    const double test = median(sing_test), teach = median(sing_teach);
    table.rows.push_back(ResultRow{"SiNG", "median", teach, test, ""});
    std::string note;
    if (p.published_sing_test_alt) note = "also quoted as " + format_real(*p.published_sing_test_alt);
    table.rows.push_back(ResultRow{"SiNG", "published", p.published_sing_teaching, p.published_sing_test, note});
    checks.push_back({"SiNG median test accuracy", test, p.min_sing_test});
    if (p.min_sing_teaching) checks.push_back({"SiNG median teaching accuracy", teach, *p.min_sing_teaching});
    if (p.external_baseline) {
      table.rows.push_back(ResultRow{"external", "published", std::nullopt, *p.external_baseline, ""});
      checks.push_back({"SiNG median test accuracy over the external baseline", test, *p.external_baseline, true});
    }
  }
  if (nn) {
    const double test = median(nn_test);
    table.rows.push_back(ResultRow{"NN", "median", median(nn_teach), test, ""});
    table.rows.push_back(ResultRow{"NN", "published", p.published_nn_teaching, p.published_nn_test, ""});
    if (p.min_nn_test) checks.push_back({"NN median test accuracy", test, *p.min_nn_test});
  }

  std::vector<std::string> verdict;
  bool all_ok = true;
  for (const auto& ch : checks) {
    verdict.push_back(ch.line());
    all_ok = all_ok && ch.ok();
  }
  emit_table(table, c.output_dir / (to_string(c.dataset) + "_reproduce"), out, verdict);
  return all_ok ? kExitOk : kExitThresholdMiss;
}

int cmd_most_demo(const RunConfig& c, std::ostream& out, std::ostream&) {
  MostConfig m;
  m.initial_divisions = c.divisions;
  m.mc_samples = c.mc_samples.value_or(2000);
  m.tolerance = c.tolerance;
  m.max_sweeps = c.max_sweeps;
  m.use_initial_scan = c.initial_scan.value_or(true);
  m.seed = c.seed;
  fs::create_directories(c.output_dir);

  std::vector<TestFunction> suite = one_dimensional_suite();
  for (auto& f : separable_suite()) suite.push_back(std::move(f));

  std::vector<std::vector<std::string>> cells;
  cells.push_back({"function", "dim", "best_value", "oracle_best", "allowed_excess", "within_bound", "widths_converged",
                   "sweeps", "evaluations", "best_point"});
  for (const auto& fn : suite) {
    const SuiteOutcome o = run_suite_case(fn, m);
    write_file(c.output_dir / ("most_" + fn.name + "_trace.csv"),
               [&](std::ostream& f) { write_trace_csv(f, o.report); });
    cells.push_back({fn.name, std::to_string(o.dimension), format_real(o.report.best_value),
                     format_real(o.oracle.best_value), format_real(o.allowed_excess),
                     o.within_oracle_bound ? "yes" : "no", o.widths_converged ? "yes" : "no",
                     std::to_string(o.report.sweeps_used), std::to_string(o.report.evaluations),
                     join_reals(o.report.best_point, ";")});
  }
  const auto header = provenance(c, Protocol{}, {}, nullptr);
  write_file(c.output_dir / "most_oracle.csv", [&](std::ostream& f) {
    for (const auto& line : header) f << "# " << line << '\n';
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << row[i];
      f << '\n';
    }
  });
  auto text = [&](std::ostream& f) {
    for (const auto& line : header) f << "# " << line << '\n';
    write_aligned(f, cells);
  };
  write_file(c.output_dir / "most_oracle.txt", text);
  text(out);
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    switch (config.command) {
      case Command::fit:
        return cmd_fit(config, out, err);
      case Command::eval:
        return cmd_eval(config, out, err);
      case Command::reproduce:
        return cmd_reproduce(config, out, err);
      case Command::most_demo:
        return cmd_most_demo(config, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SiNG classifier with the MOST optimizer", "sing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("sing ") + SING_VERSION);

  RunConfig cfg;
  double delta_max = 0.0;
  int mc_samples = 0, nn_mc_samples = 0;
  bool initial_scan = true;
  const std::map<std::string, DatasetName> datasets{
      {"iris", DatasetName::iris}, {"car", DatasetName::car}, {"abalone", DatasetName::abalone}};
  const std::map<std::string, Method> methods{{"sing", Method::sing}, {"nn", Method::nn}, {"both", Method::both}};

  struct Optional {
    CLI::Option* delta_max = nullptr;
    CLI::Option* mc_samples = nullptr;
    CLI::Option* nn_mc_samples = nullptr;
    CLI::Option* initial_scan = nullptr;
  };
  std::map<CLI::App*, Optional> optionals;

  auto add_search = [&](CLI::App* sub, Optional& o) {
    o.mc_samples = sub->add_option("--mc-samples", mc_samples, "Random points per region score");
    sub->add_option("--divisions", cfg.divisions, "Parts in the initial scan")->capture_default_str();
    sub->add_option("--tolerance", cfg.tolerance, "Relative width at which a variable has converged")
        ->capture_default_str();
    sub->add_option("--max-sweeps", cfg.max_sweeps, "Bisection sweep limit")->capture_default_str();
    o.initial_scan = sub->add_flag("--initial-scan,!--no-initial-scan", initial_scan, "Run the initial scan");
    sub->add_option("--output-dir", cfg.output_dir, "Directory for result files")->capture_default_str();
  };
  auto add_data = [&](CLI::App* sub, Optional& o) {
    sub->add_option("--dataset", cfg.dataset, "iris, car or abalone")
        ->transform(CLI::CheckedTransformer(datasets, CLI::ignore_case));
    sub->add_option("--data", cfg.data_path, "Data file (default data/<dataset>.data)");
    sub->add_option("--method", cfg.method, "sing, nn or both")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    o.delta_max = sub->add_option("--delta-max", delta_max, "Upper end of the Delta search interval");
    o.nn_mc_samples = sub->add_option("--nn-mc-samples", nn_mc_samples, "Random points per region for the network");
    sub->add_flag("--relearn,!--no-relearn", cfg.relearn, "Relearn Unknown test samples");
    sub->add_flag("--leak-test-from-full", cfg.leak_test_from_full, "Draw train from the full dataset");
  };

  CLI::App* fit = app.add_subcommand("fit", "Split, train, evaluate on the held-out test set and save the model");
  CLI::App* eval = app.add_subcommand("eval", "Score a saved model on a seeded split");
  CLI::App* reproduce = app.add_subcommand("reproduce", "Run the benchmark protocol over several seeds");
  CLI::App* demo = app.add_subcommand("most-demo", "Run the optimizer on the built-in test functions");

  for (CLI::App* sub : {fit, eval, reproduce}) add_data(sub, optionals[sub]);
  for (CLI::App* sub : {fit, reproduce, demo}) add_search(sub, optionals[sub]);
  for (CLI::App* sub : {fit, eval, demo}) sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  eval->add_option("--model", cfg.model, "Model dump or weight file")->required();
  eval->add_option("--output-dir", cfg.output_dir, "Unused; accepted for symmetry");
  reproduce->add_option("--seeds", cfg.seeds, "Seed list")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const Optional& o = optionals[chosen];
  if (o.delta_max && o.delta_max->count()) cfg.delta_max = delta_max;
  if (o.mc_samples && o.mc_samples->count()) cfg.mc_samples = mc_samples;
  if (o.nn_mc_samples && o.nn_mc_samples->count()) cfg.nn_mc_samples = nn_mc_samples;
  if (o.initial_scan && o.initial_scan->count()) cfg.initial_scan = initial_scan;
  if (chosen == fit) cfg.command = Command::fit;
  if (chosen == eval) cfg.command = Command::eval;
  if (chosen == reproduce) cfg.command = Command::reproduce;
  if (chosen == demo) cfg.command = Command::most_demo;
  return run(cfg, out, err);
}

}  // namespace sing::cli
