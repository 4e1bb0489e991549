// h2core command line: metrics, sir, evaluate, crawl, rankfit, rank-of and
// datasets pipelines over edge-list graphs. Randomized subcommands take a
// seed (always echoed) and rerunning with the same manifest reproduces the
// primary outputs byte for byte.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "datasets.hpp"
#include "digest.hpp"
#include "h2core/h2core.hpp"
#include "table_io.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace h2core;
using h2cli::csv_field;
using h2cli::fmt_double;

constexpr int kExitParse = 65;     // malformed input data
constexpr int kExitIo = 66;        // missing/unwritable files
constexpr int kExitCompute = 70;   // undefined result (e.g. zero variance)
constexpr int kExitDigest = 75;    // dataset digest mismatch
constexpr int kExitRegistry = 78;  // unknown dataset name

std::vector<std::string> g_argv;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ =
      std::chrono::steady_clock::now();
};

struct InputBytes {
  std::string source;
  std::string bytes;
  std::string sha256;
};

InputBytes slurp(const std::string& path) {
  InputBytes in;
  if (path == "-") {
    in.source = "<stdin>";
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    in.bytes = std::move(buf).str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    in.source = path;
    in.bytes = std::move(buf).str();
  }
  in.sha256 = h2cli::sha256_hex(in.bytes);
  return in;
}

struct CommonOpts {
  std::string input = "-";
  std::string output = "-";
  unsigned threads = 0;
  bool lcc = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
  if (with_input) {
    cmd->add_option("-i,--input", o.input,
                    "edge-list path, '-' for stdin; gzip is sniffed");
    cmd->add_flag("--lcc", o.lcc, "use only the largest connected component");
  }
  cmd->add_option("-o,--output", o.output, "output path, '-' for stdout");
  cmd->add_option("-t,--threads", o.threads, "worker threads, 0 = all cores");
}

struct GraphInput {
  Graph graph;
  InputBytes in;
};

GraphInput load_graph(const CommonOpts& o) {
  GraphInput gi;
  gi.in = slurp(o.input);
  LoadedGraph loaded =
      looks_gzip(gi.in.bytes)
          ? load_edge_list_text(gunzip(gi.in.bytes))
          : load_edge_list_text(gi.in.bytes);
  const json rep{{"nodes", loaded.report.nodes},
                 {"edges", loaded.report.edges},
                 {"dropped_self_loops", loaded.report.dropped_self_loops},
                 {"dropped_duplicates", loaded.report.dropped_duplicates}};
  std::cerr << "load report: " << rep.dump() << "\n";
  if (o.lcc) {
    gi.graph = largest_connected_component(loaded.graph);
    std::cerr << "lcc: " << gi.graph.node_count() << " nodes, "
              << gi.graph.edge_count() << " edges\n";
  } else {
    gi.graph = std::move(loaded.graph);
  }
  return gi;
}

json make_manifest(const std::string& subcommand, const InputBytes* in,
                   std::optional<std::uint64_t> seed, unsigned threads,
                   double duration_ms) {
  json m;
  m["tool"] = "h2core";
  m["version"] = kVersion;
  m["subcommand"] = subcommand;
  if (in) m["input"] = json{{"source", in->source}, {"sha256", in->sha256}};
  m["argv"] = g_argv;
  if (seed) m["rng_seed"] = *seed;
  m["threads"] = threads;
  m["duration_ms"] = duration_ms;
  return m;
}

// Writes content to path ('-' = stdout); file outputs get a manifest sidecar.
void write_output(const std::string& path, const std::string& content,
                  const json& manifest) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write output file: " + path);
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  f.close();
  if (!f) throw IoError("write failed: " + path);
  std::ofstream mf(path + ".manifest.json", std::ios::binary);
  mf << manifest.dump(2) << "\n";
}

// ---------------------------------------------------------------- metrics

void run_metrics(const CommonOpts& o) {
  Stopwatch sw;
  const auto gi = load_graph(o);
  const auto m = compute_metrics(gi.graph, o.threads);
  std::string csv = "node_label,degree,h_index,h2_index,shell_index\n";
  for (NodeId u = 0; u < gi.graph.node_count(); ++u) {
    csv += csv_field(gi.graph.label(u));
    csv += ',' + std::to_string(m.degree[u]);
    csv += ',' + std::to_string(m.h_index[u]);
    csv += ',' + std::to_string(m.h2_index[u]);
    csv += ',' + std::to_string(m.shell_index[u]);
    csv += '\n';
  }
  write_output(o.output, csv,
               make_manifest("metrics", &gi.in, std::nullopt, o.threads, sw.ms()));
}

// -------------------------------------------------------------------- sir

struct SirOpts {
  double lambda = -1.0;
  bool auto_lambda = false;
  unsigned runs = 100;
  double mu = 1.0;
  std::uint64_t seed = 1;
};

void run_sir(const CommonOpts& o, const SirOpts& s) {
  Stopwatch sw;
  const auto gi = load_graph(o);
  double lambda = s.lambda;
  if (s.auto_lambda) {
    const double lc = epidemic_threshold(gi.graph);
    lambda = lc + 0.01;
    std::cerr << "epidemic threshold: " << fmt_double(lc)
              << ", lambda: " << fmt_double(lambda) << "\n";
  } else if (lambda < 0.0) {
    throw std::invalid_argument("sir: provide --lambda or --auto-lambda");
  }
  std::cerr << "seed: " << s.seed << "\n";
  SirConfig cfg;
  cfg.infection_probability = lambda;
  cfg.recovery_probability = s.mu;
  cfg.runs_per_seed = s.runs;
  cfg.rng_seed = s.seed;
  const auto out = spreading_power_all(gi.graph, cfg, o.threads);
  std::string csv = "node_label,spreading_power,std_dev\n";
  for (NodeId u = 0; u < gi.graph.node_count(); ++u) {
    csv += csv_field(gi.graph.label(u));
    csv += ',' + fmt_double(out.spreading_power[u]);
    csv += ',' + fmt_double(out.std_dev[u]);
    csv += '\n';
  }
  write_output(o.output, csv,
               make_manifest("sir", &gi.in, s.seed, o.threads, sw.ms()));
}

// --------------------------------------------------------------- evaluate

struct EvaluateOpts {
  std::string metrics_path;
  std::string spreading_path;
  bool as_json = false;
};

h2cli::Table read_table(const std::string& path) {
  if (path == "-") return h2cli::read_csv(std::cin);
  std::ifstream f(path);
  if (!f) throw IoError("cannot open input file: " + path);
  return h2cli::read_csv(f);
}

void run_evaluate(const CommonOpts& o, const EvaluateOpts& e) {
  Stopwatch sw;
  const auto mt = read_table(e.metrics_path);
  const auto st = read_table(e.spreading_path);
  const auto label_col = h2cli::column_index(mt, "node_label");
  const auto shell_col = h2cli::column_index(mt, "shell_index");
  const auto h2_col = h2cli::column_index(mt, "h2_index");
  const auto s_label_col = h2cli::column_index(st, "node_label");
  const auto power_col = h2cli::column_index(st, "spreading_power");

  std::unordered_map<std::string, double> power;
  power.reserve(st.rows.size());
  for (const auto& row : st.rows)
    power[row[s_label_col]] = std::stod(row[power_col]);

  std::vector<Count> shell, h2;
  std::vector<double> sir;
  shell.reserve(mt.rows.size());
  for (const auto& row : mt.rows) {
    const auto it = power.find(row[label_col]);
    if (it == power.end())
      throw ParseError("spreading csv: missing node '" + row[label_col] + "'");
    shell.push_back(static_cast<Count>(std::stoul(row[shell_col])));
    h2.push_back(static_cast<Count>(std::stoul(row[h2_col])));
    sir.push_back(it->second);
  }

  const auto ev_shell = evaluate_ranking(shell, sir);
  const auto ev_h2 = evaluate_ranking(h2, sir);

  std::string out;
  if (e.as_json) {
    const json doc{
        {"shell_index",
         {{"monotonicity", ev_shell.monotonicity},
          {"kendall_tau", ev_shell.kendall_tau},
          {"pearson_r", ev_shell.pearson_r},
          {"spearman_rho", ev_shell.spearman_rho}}},
        {"h2_index",
         {{"monotonicity", ev_h2.monotonicity},
          {"kendall_tau", ev_h2.kendall_tau},
          {"pearson_r", ev_h2.pearson_r},
          {"spearman_rho", ev_h2.spearman_rho}}}};
    out = doc.dump(2) + "\n";
  } else {
    out =
        "monotonicity_shell,monotonicity_h2,"
        "shell_kendall_tau,shell_pearson_r,shell_spearman_rho,"
        "h2_kendall_tau,h2_pearson_r,h2_spearman_rho\n";
    out += fmt_double(ev_shell.monotonicity);
    out += ',' + fmt_double(ev_h2.monotonicity);
    out += ',' + fmt_double(ev_shell.kendall_tau);
    out += ',' + fmt_double(ev_shell.pearson_r);
    out += ',' + fmt_double(ev_shell.spearman_rho);
    out += ',' + fmt_double(ev_h2.kendall_tau);
    out += ',' + fmt_double(ev_h2.pearson_r);
    out += ',' + fmt_double(ev_h2.spearman_rho);
    out += '\n';
  }
  write_output(o.output, out,
               make_manifest("evaluate", nullptr, std::nullopt, o.threads,
                             sw.ms()));
}

// ------------------------------------------------------------------ crawl

struct CrawlOpts {
  std::string variant = "index";
  Count repeat_limit = 50;
  std::uint64_t seed = 1;
  bool all = false;
  std::string start;
  bool oracle_free = false;
  bool lazy = false;
  std::string summary_path;
};

json record_json(const Graph& g, const CrawlRecord& r) {
  return json{{"start", g.label(r.start_node)},
              {"steps", r.steps},
              {"restarts_used", r.restarts_used},
              {"succeeded", r.succeeded},
              {"terminal", g.label(r.terminal_node)},
              {"terminal_id", r.terminal_node},
              {"visited_count", r.visited_count}};
}

void run_crawl(const CommonOpts& o, const CrawlOpts& c) {
  Stopwatch sw;
  if (c.all == !c.start.empty())
    throw std::invalid_argument("crawl: use exactly one of --all or --start");
  const auto gi = load_graph(o);

  CrawlConfig cfg;
  cfg.repeat_limit = c.repeat_limit;
  cfg.rng_seed = c.seed;
  cfg.variant = c.variant == "index-degree" ? CrawlVariant::index_and_degree
                                            : CrawlVariant::index_only;
  std::cerr << "seed: " << c.seed << "\n";

  if (c.all) {
    const auto m = compute_metrics(gi.graph, o.threads);
    cfg.max_index = max_h2_index(m);
    std::vector<CrawlRecord> records;
    const auto summary = crawl_all(gi.graph, m, cfg, o.threads, &records);
    const json sj{{"variant", c.variant},
                  {"repeat_limit", c.repeat_limit},
                  {"max_h2_index", *cfg.max_index},
                  {"runs", summary.runs},
                  {"avg_steps", summary.avg_steps},
                  {"std_steps", summary.std_steps},
                  {"avg_restarts", summary.avg_restarts},
                  {"failed_pct", summary.failed_pct}};
    if (o.output != "-") {
      std::string csv =
          "start_label,steps,restarts_used,succeeded,terminal_label,"
          "visited_count\n";
      for (const auto& r : records) {
        csv += csv_field(gi.graph.label(r.start_node));
        csv += ',' + std::to_string(r.steps);
        csv += ',' + std::to_string(r.restarts_used);
        csv += ',' + std::string(r.succeeded ? "1" : "0");
        csv += ',' + csv_field(gi.graph.label(r.terminal_node));
        csv += ',' + std::to_string(r.visited_count);
        csv += '\n';
      }
      write_output(o.output, csv,
                   make_manifest("crawl", &gi.in, c.seed, o.threads, sw.ms()));
    }
    const std::string summary_text = sj.dump(2) + "\n";
    if (!c.summary_path.empty()) {
      write_output(c.summary_path, summary_text,
                   make_manifest("crawl", &gi.in, c.seed, o.threads, sw.ms()));
    } else {
      std::cout << summary_text;
    }
    return;
  }

  // single start
  const auto ix_map = label_index(gi.graph);
  const auto it = ix_map.find(c.start);
  if (it == ix_map.end())
    throw std::invalid_argument("crawl: unknown start node '" + c.start + "'");
  const NodeId start = it->second;

  json doc;
  if (c.lazy) {
    LazyH2Provider lazy(gi.graph);
    auto cfg2 = cfg;
    cfg2.lazy_pruning = true;
    if (!c.oracle_free) {
      const auto m = compute_metrics(gi.graph, o.threads);
      cfg2.max_index = max_h2_index(m);
    }
    const auto rec = crawl(gi.graph, lazy, start, cfg2);
    doc = record_json(gi.graph, rec);
    doc["h2_evaluations"] = lazy.h2_evaluations();
    doc["terminal_h2_index"] = lazy.h2(rec.terminal_node);
  } else {
    const auto m = compute_metrics(gi.graph, o.threads);
    if (!c.oracle_free) cfg.max_index = max_h2_index(m);
    MetricsProvider ix(m);
    const auto rec = crawl(gi.graph, ix, start, cfg);
    doc = record_json(gi.graph, rec);
    doc["terminal_h2_index"] = m.h2_index[rec.terminal_node];
  }
  doc["oracle_free"] = c.oracle_free;
  write_output(o.output, doc.dump(2) + "\n",
               make_manifest("crawl", &gi.in, c.seed, o.threads, sw.ms()));
}

// ---------------------------------------------------------------- rankfit

struct RankfitOpts {
  std::string mode = "best-fit";
  std::string curve_path;
};

void run_rankfit(const CommonOpts& o, const RankfitOpts& r) {
  Stopwatch sw;
  const auto gi = load_graph(o);
  const auto m = compute_metrics(gi.graph, o.threads);
  const auto curve = rank_curve(m);

  const FitResult fit = r.mode == "heuristic"
                            ? heuristic_params(curve)
                            : fit_logistic(curve, best_fit_init(curve));
  const auto ev = evaluate_fit(curve, fit.params);

  json doc{{"mode", r.mode},
           {"params",
            {{"a1", fit.params.a1},
             {"a2", fit.params.a2},
             {"x0", fit.params.x0},
             {"p", fit.params.p}}},
           {"converged", fit.converged},
           {"iterations", fit.iterations},
           {"sse", fit.sse},
           {"curve_points", curve.size()},
           {"excluded_zero_h2", curve.excluded_zero},
           {"report",
            {{"avg_abs_error", ev.avg_abs_error},
             {"std_dev", ev.std_dev},
             {"kendall_tau", ev.kendall_tau},
             {"pearson_r", ev.pearson_r},
             {"spearman_rho", ev.spearman_rho}}}};
  write_output(o.output, doc.dump(2) + "\n",
               make_manifest("rankfit", &gi.in, std::nullopt, o.threads,
                             sw.ms()));

  if (!r.curve_path.empty()) {
    std::string csv = "h2,actual_percentile,model_percentile\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
      csv += fmt_double(curve.h2_values[i]);
      csv += ',' + fmt_double(curve.percentiles[i]);
      csv += ',' + fmt_double(logistic_eval(fit.params, curve.h2_values[i]));
      csv += '\n';
    }
    write_output(r.curve_path, csv,
                 make_manifest("rankfit", &gi.in, std::nullopt, o.threads,
                               sw.ms()));
  }
}

// ---------------------------------------------------------------- rank-of

struct RankOfOpts {
  std::string params_path;
  double h2 = 0.0;
};

void run_rank_of(const RankOfOpts& r) {
  const auto in = slurp(r.params_path);
  const json doc = json::parse(in.bytes);
  const json& p = doc.contains("params") ? doc.at("params") : doc;
  LogisticParams q;
  q.a1 = p.at("a1").get<double>();
  q.a2 = p.at("a2").get<double>();
  q.x0 = p.at("x0").get<double>();
  q.p = p.at("p").get<double>();
  std::cout << fmt_double(logistic_eval(q, r.h2)) << "\n";
}

// --------------------------------------------------------------- datasets

struct DatasetsOpts {
  std::vector<std::string> names;
  std::string cache;
  std::string registry_path;
  bool force = false;
  long timeout = 300;
};

std::string default_cache_dir() {
  if (const char* env = std::getenv("H2CORE_CACHE_DIR")) return env;
  return "datasets";
}

void run_datasets_list(const DatasetsOpts& d) {
  const auto registry = d.registry_path.empty()
                            ? h2cli::dataset_registry()
                            : h2cli::load_registry_file(d.registry_path);
  json out = json::array();
  for (const auto& e : registry) {
    out.push_back(json{{"name", e.name},
                       {"url", e.url},
                       {"sha256", e.sha256},
                       {"ref_nodes", e.ref_nodes},
                       {"ref_edges", e.ref_edges}});
  }
  std::cout << out.dump(2) << "\n";
}

void run_datasets_fetch(const DatasetsOpts& d) {
  const auto registry = d.registry_path.empty()
                            ? h2cli::dataset_registry()
                            : h2cli::load_registry_file(d.registry_path);
  const auto cache = d.cache.empty() ? default_cache_dir() : d.cache;
  json reports = json::array();
  for (const auto& name : d.names) {
    const auto& info = h2cli::find_dataset(registry, name);
    const auto outcome =
        h2cli::fetch_dataset(info, cache, d.force, d.timeout);
    if (outcome.status == h2cli::FetchOutcome::Status::skipped_unreachable ||
        outcome.status == h2cli::FetchOutcome::Status::skipped_no_url) {
      std::cerr << "warning: skipping '" << name
                << "': " << outcome.report.value("warning", "") << "\n";
    }
    reports.push_back(outcome.report);
  }
  std::cout << reports.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_argv.emplace_back(argv[i]);

  CLI::App app{"shell-index estimation from local information"};
  app.require_subcommand(1);

  CommonOpts metrics_common;
  auto* metrics_cmd = app.add_subcommand(
      "metrics", "per-node degree, h-index, h2-index and shell-index CSV");
  add_common(metrics_cmd, metrics_common);

  CommonOpts sir_common;
  SirOpts sir_opts;
  auto* sir_cmd = app.add_subcommand(
      "sir", "Monte Carlo spreading power per node (SIR, mu = 1)");
  add_common(sir_cmd, sir_common);
  auto* lambda_opt =
      sir_cmd->add_option("--lambda", sir_opts.lambda, "infection probability");
  sir_cmd
      ->add_flag("--auto-lambda", sir_opts.auto_lambda,
                 "use epidemic threshold + 0.01")
      ->excludes(lambda_opt);
  sir_cmd->add_option("--runs", sir_opts.runs, "runs per seed node");
  sir_cmd->add_option("--mu", sir_opts.mu, "recovery probability");
  sir_cmd->add_option("--seed", sir_opts.seed, "rng seed (always echoed)");

  CommonOpts eval_common;
  EvaluateOpts eval_opts;
  auto* eval_cmd = app.add_subcommand(
      "evaluate", "monotonicity and rank correlations of shell/h2 vs SIR");
  add_common(eval_cmd, eval_common, /*with_input=*/false);
  eval_cmd->add_option("--metrics", eval_opts.metrics_path, "metrics CSV path")
      ->required();
  eval_cmd
      ->add_option("--spreading", eval_opts.spreading_path,
                   "spreading power CSV path")
      ->required();
  eval_cmd->add_flag("--json", eval_opts.as_json, "emit JSON instead of CSV");

  CommonOpts crawl_common;
  CrawlOpts crawl_opts;
  auto* crawl_cmd = app.add_subcommand(
      "crawl", "hill-climbing search for the top h2-index nodes");
  add_common(crawl_cmd, crawl_common);
  crawl_cmd->add_option("--variant", crawl_opts.variant, "index | index-degree")
      ->check(CLI::IsMember({"index", "index-degree"}));
  crawl_cmd->add_option("--repeat-limit", crawl_opts.repeat_limit,
                        "restart budget");
  crawl_cmd->add_option("--seed", crawl_opts.seed, "rng seed (always echoed)");
  crawl_cmd->add_flag("--all", crawl_opts.all,
                      "crawl from every non-top node; emits a summary");
  crawl_cmd->add_option("--start", crawl_opts.start, "start node label");
  crawl_cmd->add_flag("--oracle-free", crawl_opts.oracle_free,
                      "stop on budget exhaustion, report the best node seen");
  crawl_cmd->add_flag("--lazy", crawl_opts.lazy,
                      "compute h2 on demand with degree pruning");
  crawl_cmd->add_option("--summary", crawl_opts.summary_path,
                        "summary JSON path (--all mode)");

  CommonOpts rankfit_common;
  RankfitOpts rankfit_opts;
  auto* rankfit_cmd = app.add_subcommand(
      "rankfit", "fit the percentile-rank logistic curve");
  add_common(rankfit_cmd, rankfit_common);
  rankfit_cmd->add_option("--mode", rankfit_opts.mode, "best-fit | heuristic")
      ->check(CLI::IsMember({"best-fit", "heuristic"}));
  rankfit_cmd->add_option("--curve", rankfit_opts.curve_path,
                          "also write the curve CSV to this path");

  RankOfOpts rankof_opts;
  auto* rankof_cmd = app.add_subcommand(
      "rank-of", "estimated percentile rank for an h2 value, O(1)");
  rankof_cmd->add_option("--params", rankof_opts.params_path,
                         "params JSON (as emitted by rankfit)")
      ->required();
  rankof_cmd->add_option("--h2", rankof_opts.h2, "h2-index value")->required();

  DatasetsOpts ds_opts;
  auto* ds_cmd = app.add_subcommand("datasets",
                                    "fetch and normalize benchmark edge lists");
  ds_cmd->require_subcommand(1);
  auto* ds_list = ds_cmd->add_subcommand("list", "print the dataset registry");
  auto* ds_fetch =
      ds_cmd->add_subcommand("fetch", "download, verify and normalize");
  ds_fetch->add_option("names", ds_opts.names, "dataset names")->required();
  for (auto* sub : {ds_list, ds_fetch}) {
    sub->add_option("--registry", ds_opts.registry_path,
                    "registry JSON override");
  }
  ds_fetch->add_option("--cache", ds_opts.cache,
                       "cache directory (default $H2CORE_CACHE_DIR or "
                       "./datasets)");
  ds_fetch->add_flag("--force", ds_opts.force, "re-download cached files");
  ds_fetch->add_option("--timeout", ds_opts.timeout,
                       "download timeout in seconds");

  metrics_cmd->callback([&] { run_metrics(metrics_common); });
  sir_cmd->callback([&] { run_sir(sir_common, sir_opts); });
  eval_cmd->callback([&] { run_evaluate(eval_common, eval_opts); });
  crawl_cmd->callback([&] { run_crawl(crawl_common, crawl_opts); });
  rankfit_cmd->callback([&] { run_rankfit(rankfit_common, rankfit_opts); });
  rankof_cmd->callback([&] { run_rank_of(rankof_opts); });
  ds_list->callback([&] { run_datasets_list(ds_opts); });
  ds_fetch->callback([&] { run_datasets_fetch(ds_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const h2cli::DigestMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDigest;
  } catch (const h2cli::RegistryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegistry;
  } catch (const ZeroVarianceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
