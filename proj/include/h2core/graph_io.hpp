#pragma once

#include <zlib.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "h2core/graph.hpp"

namespace h2core {

// Edge-list text format: one edge per line as two whitespace-separated node
// labels; lines starting with '#' or '%' are comments; blank lines are
// ignored. Input may be gzip-compressed (sniffed from the magic bytes).

struct ParseOptions {
  bool numeric_ids_only = false;  // reject labels that are not base-10 integers
};

struct LoadReport {
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
  std::uint64_t dropped_self_loops = 0;
  std::uint64_t dropped_duplicates = 0;
};

struct LoadedGraph {
  Graph graph;
  LoadReport report;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool looks_gzip(std::string_view bytes) {
  return bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0x1f &&
         static_cast<unsigned char>(bytes[1]) == 0x8b;
}

// Inflates a gzip byte string (multi-member streams included).
inline std::string gunzip(std::string_view bytes) {
  if (bytes.size() > std::numeric_limits<uInt>::max())
    throw IoError("gunzip: input too large");
  z_stream zs{};
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK)
    throw IoError("gunzip: zlib initialization failed");
  std::string out;
  out.resize(std::max<std::size_t>(bytes.size() * 4, std::size_t{1} << 16));
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(bytes.data()));
  zs.avail_in = static_cast<uInt>(bytes.size());
  std::size_t written = 0;
  for (;;) {
    if (written == out.size()) out.resize(out.size() * 2);
    zs.next_out = reinterpret_cast<Bytef*>(out.data() + written);
    zs.avail_out = static_cast<uInt>(out.size() - written);
    const int rc = inflate(&zs, Z_NO_FLUSH);
    written = out.size() - zs.avail_out;
    if (rc == Z_STREAM_END) {
      if (zs.avail_in == 0) break;
      // concatenated gzip members
      if (inflateReset2(&zs, 16 + MAX_WBITS) != Z_OK) {
        inflateEnd(&zs);
        throw ParseError("gunzip: corrupt gzip stream");
      }
      continue;
    }
    if (rc == Z_OK) continue;
    if (rc == Z_BUF_ERROR && zs.avail_out == 0) continue;
    inflateEnd(&zs);
    throw ParseError(rc == Z_BUF_ERROR ? "gunzip: truncated gzip stream"
                                       : "gunzip: corrupt gzip stream");
  }
  inflateEnd(&zs);
  out.resize(written);
  return out;
}

namespace detail {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

inline bool is_integer_token(std::string_view tok) {
  if (tok.empty()) return false;
  for (const char c : tok)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

inline LoadedGraph load_edge_list_text(std::string_view text,
                                       const ParseOptions& opts = {}) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId, detail::StringHash, std::equal_to<>>
      ids;

  const auto intern = [&](std::string_view tok) -> NodeId {
    if (const auto it = ids.find(tok); it != ids.end()) return it->second;
    const auto id = static_cast<NodeId>(labels.size());
    ids.emplace(std::string(tok), id);
    labels.emplace_back(tok);
    return id;
  };
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r';
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool saw_edge = false;
  while (pos < text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) continue;
    if (line[i] == '#' || line[i] == '%') continue;

    std::string_view tok[2];
    int ntok = 0;
    while (i < line.size()) {
      const std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      if (ntok < 2) tok[ntok] = line.substr(start, i - start);
      ++ntok;
      while (i < line.size() && is_space(line[i])) ++i;
    }
    if (ntok != 2)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two node ids, got " + std::to_string(ntok) +
                       " tokens");
    if (opts.numeric_ids_only) {
      for (const auto t : tok)
        if (!detail::is_integer_token(t))
          throw ParseError("line " + std::to_string(line_no) + ": id '" +
                           std::string(t) + "' is not an integer");
    }
    // first-appearance id order; keep the interning sequenced
    const NodeId u = intern(tok[0]);
    const NodeId v = intern(tok[1]);
    edges.emplace_back(u, v);
    saw_edge = true;
  }
  if (!saw_edge) throw ParseError("empty input: no edges found");

  LoadReport rep;
  const auto n = static_cast<NodeId>(labels.size());
  Graph g = Graph::from_edges(n, std::move(edges), std::move(labels),
                              &rep.dropped_self_loops, &rep.dropped_duplicates);
  rep.nodes = g.node_count();
  rep.edges = g.edge_count();
  return {std::move(g), rep};
}

inline LoadedGraph load_edge_list(std::istream& in,
                                  const ParseOptions& opts = {}) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = std::move(buf).str();
  if (looks_gzip(bytes)) return load_edge_list_text(gunzip(bytes), opts);
  return load_edge_list_text(bytes, opts);
}

inline LoadedGraph load_edge_list_file(const std::filesystem::path& path,
                                       const ParseOptions& opts = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path.string());
  return load_edge_list(in, opts);
}

// Canonical form: one "label label" line per edge, rows in ascending id
// order. Reloading reproduces the same adjacency structure.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (const NodeId v : g.neighbors(u))
      if (u < v) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace h2core
