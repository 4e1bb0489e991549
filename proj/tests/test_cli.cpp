// End-to-end tests driving the installed binary through a shell, covering
// stdin piping, exit codes, manifests and rerun determinism.

#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>
#include <zlib.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "h2core/graph_io.hpp"
#include "testutil.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() /
             ("h2core_cli_tests_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path unique_path(const std::string& stem) {
  static int counter = 0;
  return work_dir() / (stem + "_" + std::to_string(counter++));
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  f << content;
  REQUIRE(f.good());
}

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  const fs::path in = unique_path("stdin");
  const fs::path out = unique_path("stdout");
  const fs::path err = unique_path("stderr");
  write_file(in, stdin_data);
  const std::string cmd = std::string(H2CORE_CLI_PATH) + " " + args + " < " +
                          in.string() + " > " + out.string() + " 2> " +
                          err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out);
  r.err = read_file(err);
  return r;
}

const std::string kTriangle = "0 1\n1 2\n2 0\n";

std::string two_cliques_edge_list() {
  std::ostringstream os;
  h2core::write_edge_list(
      testutil::from_pairs(
          10,
          {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
           {5, 6}, {5, 7}, {5, 8}, {5, 9}, {6, 7}, {6, 8},
           {6, 9}, {7, 8}, {7, 9}, {8, 9}, {0, 4}, {4, 5}}),
      os);
  return os.str();
}

}  // namespace

TEST_CASE("metrics reads stdin and prints the CSV") {
  const auto r = run_cli("metrics", kTriangle);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out ==
        "node_label,degree,h_index,h2_index,shell_index\n"
        "0,2,2,2,2\n"
        "1,2,2,2,2\n"
        "2,2,2,2,2\n");
  CHECK(r.err.find("load report:") != std::string::npos);
}

TEST_CASE("metrics preserves external labels from a file input") {
  const fs::path input = unique_path("labels.txt");
  write_file(input, "alpha beta\nbeta gamma\ngamma alpha\n");
  const auto r = run_cli("metrics --input " + input.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("alpha,2,2,2,2\n") != std::string::npos);
}

TEST_CASE("gzip input works through the pipeline") {
  const fs::path gz = unique_path("tri.gz");
  {
    // compress via the library's own zlib linkage in-test
    const std::string text = kTriangle;
    std::string compressed;
    compressed.resize(text.size() + 128);
    z_stream zs{};
    REQUIRE(deflateInit2(&zs, Z_BEST_SPEED, Z_DEFLATED, 16 + MAX_WBITS, 8,
                         Z_DEFAULT_STRATEGY) == Z_OK);
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(text.data()));
    zs.avail_in = static_cast<uInt>(text.size());
    zs.next_out = reinterpret_cast<Bytef*>(compressed.data());
    zs.avail_out = static_cast<uInt>(compressed.size());
    REQUIRE(deflate(&zs, Z_FINISH) == Z_STREAM_END);
    compressed.resize(compressed.size() - zs.avail_out);
    deflateEnd(&zs);
    write_file(gz, compressed);
  }
  const auto r = run_cli("metrics --input " + gz.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("0,2,2,2,2") != std::string::npos);
}

TEST_CASE("lcc flag restricts the node set") {
  const auto r = run_cli("metrics --lcc", "0 1\n1 2\n2 0\n8 9\n");
  REQUIRE(r.exit_code == 0);
  // triangle kept, isolated edge dropped
  CHECK(r.out.find("8,") == std::string::npos);
  CHECK(r.out.find("0,2,2,2,2") != std::string::npos);
}

TEST_CASE("exit codes distinguish usage, parse, io and compute errors") {
  CHECK(run_cli("no-such-subcommand").exit_code != 0);

  const auto parse = run_cli("metrics", "0 1\nbroken\n");
  CHECK(parse.exit_code == 65);
  CHECK(parse.err.find("line 2") != std::string::npos);

  const auto io = run_cli("metrics --input /nonexistent/file.txt");
  CHECK(io.exit_code == 66);

  // all shell indices equal on a clique: zero variance in the correlation
  const fs::path mpath = unique_path("metrics.csv");
  const fs::path spath = unique_path("spreading.csv");
  const auto mcsv = run_cli("metrics", kTriangle);
  write_file(mpath, mcsv.out);
  write_file(spath,
             "node_label,spreading_power,std_dev\n0,1,0\n1,2,0\n2,3,0\n");
  const auto compute = run_cli("evaluate --metrics " + mpath.string() +
                               " --spreading " + spath.string());
  CHECK(compute.exit_code == 70);
}

TEST_CASE("sir runs are reproducible and auto-lambda reports the threshold") {
  const std::string g = two_cliques_edge_list();
  const auto a = run_cli("sir --lambda 0.3 --runs 50 --seed 9", g);
  REQUIRE(a.exit_code == 0);
  CHECK(a.err.find("seed: 9") != std::string::npos);
  const auto b = run_cli("sir --lambda 0.3 --runs 50 --seed 9", g);
  CHECK(a.out == b.out);

  const auto c = run_cli("sir --auto-lambda --runs 10 --seed 1", g);
  REQUIRE(c.exit_code == 0);
  CHECK(c.err.find("epidemic threshold:") != std::string::npos);

  const auto missing = run_cli("sir --runs 10", g);
  CHECK(missing.exit_code == 70);
}

TEST_CASE("file outputs carry manifests; reruns are byte-identical") {
  const fs::path graph_file = unique_path("graph.txt");
  write_file(graph_file, two_cliques_edge_list());
  const fs::path out1 = unique_path("sir1.csv");
  const fs::path out2 = unique_path("sir2.csv");

  const std::string base = "sir --lambda 0.4 --runs 30 --seed 5 --input " +
                           graph_file.string() + " --output ";
  REQUIRE(run_cli(base + out1.string()).exit_code == 0);
  REQUIRE(run_cli(base + out2.string()).exit_code == 0);
  CHECK(read_file(out1) == read_file(out2));

  const json m1 = json::parse(read_file(out1.string() + ".manifest.json"));
  const json m2 = json::parse(read_file(out2.string() + ".manifest.json"));
  CHECK(m1.at("subcommand") == "sir");
  CHECK(m1.at("rng_seed") == 5);
  CHECK(m1.at("input").at("sha256") == m2.at("input").at("sha256"));
  CHECK(m1.at("version") == m2.at("version"));
}

TEST_CASE("evaluate joins the two CSVs into a summary row") {
  const fs::path graph_file = unique_path("graph.txt");
  write_file(graph_file, two_cliques_edge_list());
  const fs::path mpath = unique_path("metrics.csv");
  const fs::path spath = unique_path("sir.csv");
  REQUIRE(run_cli("metrics --input " + graph_file.string() + " --output " +
                  mpath.string())
              .exit_code == 0);
  REQUIRE(run_cli("sir --lambda 0.5 --runs 200 --seed 3 --input " +
                  graph_file.string() + " --output " + spath.string())
              .exit_code == 0);

  const auto r = run_cli("evaluate --json --metrics " + mpath.string() +
                         " --spreading " + spath.string());
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  const double m_shell = doc.at("shell_index").at("monotonicity");
  const double m_h2 = doc.at("h2_index").at("monotonicity");
  CHECK(m_shell >= 0.0);
  CHECK(m_shell <= 1.0);
  CHECK(m_h2 >= 0.0);
  CHECK(m_h2 <= 1.0);
  for (const auto& key : {"kendall_tau", "pearson_r", "spearman_rho"}) {
    const double v = doc.at("h2_index").at(key);
    CHECK(v >= -1.0);
    CHECK(v <= 1.0);
  }

  const auto csv = run_cli("evaluate --metrics " + mpath.string() +
                           " --spreading " + spath.string());
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out.find("monotonicity_shell") != std::string::npos);
}

TEST_CASE("crawl --all emits a summary and optional per-start records") {
  const fs::path graph_file = unique_path("graph.txt");
  write_file(graph_file, two_cliques_edge_list());
  const fs::path records = unique_path("records.csv");

  const auto r = run_cli("crawl --all --variant index --repeat-limit 50 "
                         "--seed 2 --input " +
                         graph_file.string() + " --output " + records.string());
  REQUIRE(r.exit_code == 0);
  const json summary = json::parse(r.out);
  CHECK(summary.at("runs") == 5);
  CHECK(summary.at("failed_pct") == 20.0);  // start 0 dead-ends in its clique
  CHECK(summary.at("avg_steps").get<double>() > 0.0);

  const auto body = read_file(records);
  CHECK(body.find("start_label") != std::string::npos);

  const auto rerun =
      run_cli("crawl --all --variant index --repeat-limit 50 --seed 2 --input " +
              graph_file.string() + " --output " + records.string());
  CHECK(rerun.out == r.out);
}

TEST_CASE("crawl --start reports one record, lazy or not") {
  const std::string g = two_cliques_edge_list();
  const auto r = run_cli("crawl --start 1 --seed 4", g);
  REQUIRE(r.exit_code == 0);
  const json rec = json::parse(r.out);
  CHECK(rec.at("succeeded") == true);
  CHECK(rec.at("terminal_h2_index") == 4);

  const auto lazy = run_cli("crawl --start 1 --seed 4 --lazy", g);
  REQUIRE(lazy.exit_code == 0);
  const json lrec = json::parse(lazy.out);
  CHECK(lrec.at("steps") == rec.at("steps"));
  CHECK(lrec.at("terminal") == rec.at("terminal"));
  CHECK(lrec.at("h2_evaluations").get<std::uint64_t>() <= 10);

  const auto oracle_free =
      run_cli("crawl --start 1 --seed 4 --lazy --oracle-free --repeat-limit 2", g);
  REQUIRE(oracle_free.exit_code == 0);
  const json orec = json::parse(oracle_free.out);
  CHECK(orec.at("succeeded") == false);
  CHECK(orec.at("terminal_h2_index") == 4);  // still finds the top

  const auto unknown = run_cli("crawl --start nope", g);
  CHECK(unknown.exit_code == 70);
}

TEST_CASE("rankfit emits params, report and optionally the curve") {
  const auto g = testutil::gnp(120, 0.08, 4242);
  std::ostringstream os;
  h2core::write_edge_list(g, os);

  const fs::path curve = unique_path("curve.csv");
  const auto r = run_cli("rankfit --mode best-fit --curve " + curve.string(), os.str());
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("mode") == "best-fit");
  CHECK(doc.at("params").contains("x0"));
  CHECK(doc.at("report").contains("avg_abs_error"));
  const auto curve_body = read_file(curve);
  CHECK(curve_body.find("h2,actual_percentile,model_percentile") !=
        std::string::npos);

  const auto h = run_cli("rankfit --mode heuristic", os.str());
  REQUIRE(h.exit_code == 0);
  const json hdoc = json::parse(h.out);
  CHECK(hdoc.at("params").at("a1") == 1.0);
  CHECK(hdoc.at("params").at("a2") == 100.0);
  CHECK(hdoc.at("params").at("p") == 1.44);
}

TEST_CASE("rank-of evaluates the logistic in O(1)") {
  const fs::path params = unique_path("params.json");
  write_file(params,
             R"({"params": {"a1": 1.0, "a2": 100.0, "x0": 10.0, "p": 1.44}})");
  const auto r = run_cli("rank-of --params " + params.string() + " --h2 10");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "50.5\n");
}

TEST_CASE("datasets registry lookups and fetch error paths") {
  const auto listing = run_cli("datasets list");
  REQUIRE(listing.exit_code == 0);
  const json reg = json::parse(listing.out);
  bool has_condmat = false;
  for (const auto& e : reg)
    if (e.at("name") == "cond-mat") has_condmat = true;
  CHECK(has_condmat);

  const fs::path cache = unique_path("cache");
  const auto unknown =
      run_cli("datasets fetch no-such-dataset --cache " + cache.string());
  CHECK(unknown.exit_code == 78);

  // local file:// source with a pinned digest
  const fs::path source = unique_path("local_source.txt");
  write_file(source, kTriangle);
  const std::string good_digest =
      "b2d516ac2fbfdf330a3807ea2448b0f4c0e9f82abd7a9eefdb1522aa364ec48e";

  const fs::path registry = unique_path("registry.json");
  write_file(registry, std::string(R"([
    {"name": "tri-ok", "url": "file://)") + source.string() +
                           R"(", "sha256": ")" + good_digest + R"(",
     "ref_nodes": 3, "ref_edges": 3},
    {"name": "tri-bad", "url": "file://)" + source.string() +
                           R"(", "sha256": "0000000000000000000000000000000000000000000000000000000000000000",
     "ref_nodes": 3, "ref_edges": 3},
    {"name": "tri-unreachable", "url": "http://127.0.0.1:1/nope.txt"}
  ])");

  const auto ok = run_cli("datasets fetch tri-ok --registry " +
                          registry.string() + " --cache " + cache.string());
  REQUIRE(ok.exit_code == 0);
  const json report = json::parse(ok.out);
  CHECK(report.at(0).at("digest_verified") == true);
  CHECK(report.at(0).at("nodes") == 3);
  CHECK(report.at(0).at("edges") == 3);
  CHECK(report.at(0).at("matches_reference") == true);
  CHECK(fs::exists(cache / "tri-ok.edges"));

  const auto bad = run_cli("datasets fetch tri-bad --registry " +
                           registry.string() + " --cache " + cache.string());
  CHECK(bad.exit_code == 75);

  const auto unreachable =
      run_cli("datasets fetch tri-unreachable --timeout 3 --registry " +
              registry.string() + " --cache " + cache.string());
  CHECK(unreachable.exit_code == 0);  // skip with warning
  CHECK(unreachable.err.find("warning") != std::string::npos);
}
