#pragma once

// Dataset acquisition: a small registry of public edge-list sources with
// expected reference sizes, download via libcurl, SHA-256 verification for
// pinned entries, and normalization to the plain two-column edge-list format.

#include <curl/curl.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "digest.hpp"
#include "h2core/graph_io.hpp"
#include "json.hpp"

namespace h2cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DigestMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DatasetInfo {
  std::string name;
  std::string url;     // empty: no stable public mirror, place file manually
  std::string sha256;  // empty: unpinned, computed digest is reported
  std::uint64_t ref_nodes = 0;  // reference node/edge counts for drift reports
  std::uint64_t ref_edges = 0;
  bool lenient_columns = false;  // source lines may carry extra columns
};

inline const std::vector<DatasetInfo>& dataset_registry() {
  static const std::vector<DatasetInfo> registry = {
      {"astro-ph", "https://snap.stanford.edu/data/ca-AstroPh.txt.gz", "",
       14845, 119652, false},
      {"cond-mat", "https://snap.stanford.edu/data/ca-CondMat.txt.gz", "",
       13861, 44619, false},
      {"enron", "https://snap.stanford.edu/data/email-Enron.txt.gz", "", 84384,
       295889, false},
      {"dblp",
       "https://snap.stanford.edu/data/bigdata/communities/"
       "com-dblp.ungraph.txt.gz",
       "", 317080, 1049866, false},
      {"gowalla", "https://snap.stanford.edu/data/loc-gowalla_edges.txt.gz",
       "", 196591, 950327, false},
      {"facebook", "http://socialnetworks.mpi-sws.org/data/facebook-links.txt.gz",
       "", 63392, 816831, true},
      {"fb-wall", "http://socialnetworks.mpi-sws.org/data/facebook-wall.txt.gz",
       "", 43953, 182384, true},
      {"buzznet", "", "", 101163, 2763066, false},
      {"digg", "", "", 261489, 1536577, false},
      {"foursquare", "", "", 639014, 3214985, false},
  };
  return registry;
}

inline std::vector<DatasetInfo> load_registry_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw RegistryError("cannot open registry file: " + path.string());
  json doc = json::parse(in, nullptr, true, true);
  std::vector<DatasetInfo> out;
  for (const auto& e : doc) {
    DatasetInfo d;
    d.name = e.at("name").get<std::string>();
    d.url = e.value("url", std::string{});
    d.sha256 = e.value("sha256", std::string{});
    d.ref_nodes = e.value("ref_nodes", std::uint64_t{0});
    d.ref_edges = e.value("ref_edges", std::uint64_t{0});
    d.lenient_columns = e.value("lenient_columns", false);
    out.push_back(std::move(d));
  }
  return out;
}

inline const DatasetInfo& find_dataset(const std::vector<DatasetInfo>& registry,
                                       const std::string& name) {
  for (const auto& d : registry)
    if (d.name == name) return d;
  throw RegistryError("unknown dataset '" + name + "'");
}

namespace detail {

inline size_t curl_write_cb(char* ptr, size_t size, size_t nmemb, void* ud) {
  auto* out = static_cast<std::string*>(ud);
  out->append(ptr, size * nmemb);
  return size * nmemb;
}

}  // namespace detail

inline bool http_fetch(const std::string& url, std::string& body,
                       std::string& error, long timeout_seconds = 300) {
  CURL* h = curl_easy_init();
  if (!h) {
    error = "curl initialization failed";
    return false;
  }
  curl_easy_setopt(h, CURLOPT_URL, url.c_str());
  curl_easy_setopt(h, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(h, CURLOPT_WRITEFUNCTION, detail::curl_write_cb);
  curl_easy_setopt(h, CURLOPT_WRITEDATA, &body);
  curl_easy_setopt(h, CURLOPT_CONNECTTIMEOUT, 15L);
  curl_easy_setopt(h, CURLOPT_TIMEOUT, timeout_seconds);
  curl_easy_setopt(h, CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(h, CURLOPT_USERAGENT, "h2core/0.1");
  const CURLcode rc = curl_easy_perform(h);
  if (rc != CURLE_OK) error = curl_easy_strerror(rc);
  curl_easy_cleanup(h);
  return rc == CURLE_OK;
}

// Strips comments and keeps the first two whitespace tokens per line; used
// for sources that append timestamps or weights.
inline std::string take_first_two_columns(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string a, b;
    if (line.empty() || line[0] == '#' || line[0] == '%') continue;
    if (ls >> a >> b) {
      out += a;
      out += ' ';
      out += b;
      out += '\n';
    }
  }
  return out;
}

struct FetchOutcome {
  enum class Status { fetched, cached, skipped_unreachable, skipped_no_url };
  Status status = Status::fetched;
  json report;
};

// Downloads (unless cached), verifies a pinned digest, normalizes to the
// two-column edge-list format under <cache>/<name>.edges and reports size
// drift against the registry's reference counts.
inline FetchOutcome fetch_dataset(const DatasetInfo& info,
                                  const fs::path& cache_dir, bool force,
                                  long timeout_seconds = 300) {
  fs::create_directories(cache_dir);
  const fs::path raw_path = cache_dir / (info.name + ".raw");
  const fs::path edges_path = cache_dir / (info.name + ".edges");

  FetchOutcome out;
  out.report["name"] = info.name;
  out.report["url"] = info.url;

  std::string raw;
  if (!force && fs::exists(raw_path)) {
    std::ifstream in(raw_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    raw = std::move(buf).str();
    out.status = FetchOutcome::Status::cached;
  } else {
    if (info.url.empty()) {
      out.status = FetchOutcome::Status::skipped_no_url;
      out.report["warning"] =
          "no public mirror registered; place the raw file at " +
          raw_path.string();
      return out;
    }
    std::string error;
    if (!http_fetch(info.url, raw, error, timeout_seconds)) {
      out.status = FetchOutcome::Status::skipped_unreachable;
      out.report["warning"] = "source unreachable: " + error;
      return out;
    }
    out.status = FetchOutcome::Status::fetched;
  }

  const std::string digest = sha256_hex(raw);
  out.report["sha256"] = digest;
  if (!info.sha256.empty()) {
    if (digest != info.sha256)
      throw DigestMismatchError("dataset '" + info.name +
                                "': digest mismatch (expected " + info.sha256 +
                                ", got " + digest + ")");
    out.report["digest_verified"] = true;
  } else {
    out.report["digest_verified"] = false;
  }

  if (out.status == FetchOutcome::Status::fetched) {
    std::ofstream rf(raw_path, std::ios::binary);
    rf.write(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (!rf) throw h2core::IoError("cannot write " + raw_path.string());
  }

  std::string text = h2core::looks_gzip(raw) ? h2core::gunzip(raw) : std::move(raw);
  if (info.lenient_columns) text = take_first_two_columns(text);
  const auto loaded = h2core::load_edge_list_text(text);
  const auto lcc = h2core::largest_connected_component(loaded.graph);

  {
    std::ofstream ef(edges_path, std::ios::binary);
    h2core::write_edge_list(loaded.graph, ef);
    if (!ef) throw h2core::IoError("cannot write " + edges_path.string());
  }

  out.report["edges_file"] = edges_path.string();
  out.report["nodes"] = loaded.report.nodes;
  out.report["edges"] = loaded.report.edges;
  out.report["lcc_nodes"] = lcc.node_count();
  out.report["lcc_edges"] = lcc.edge_count();
  out.report["ref_nodes"] = info.ref_nodes;
  out.report["ref_edges"] = info.ref_edges;
  const bool drift = loaded.report.nodes != info.ref_nodes ||
                     loaded.report.edges != info.ref_edges;
  const bool lcc_match =
      lcc.node_count() == info.ref_nodes && lcc.edge_count() == info.ref_edges;
  out.report["matches_reference"] = !drift;
  out.report["lcc_matches_reference"] = lcc_match;
  if (drift && !lcc_match)
    out.report["note"] =
        "node/edge counts differ from the registry reference; published "
        "results may shift accordingly";
  return out;
}

}  // namespace h2cli
