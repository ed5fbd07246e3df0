#pragma once

// Plain-text hypergraph format:
//
//   # optional comment lines
//   n m
//   v v v [| c1 [c2 [c3]]]     (m edge lines)
//
// Columns after '|' are rationals ("3", "5/2", "0.25"); every edge line must
// carry the same number of columns. Their meaning is chosen by the caller.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hypermat/error.hpp"
#include "hypermat/hypergraph.hpp"
#include "hypermat/rational.hpp"

namespace hypermat {

struct ParsedHypergraph {
  Hypergraph graph;
  /// columns[c][e] is column c of edge e.
  std::vector<std::vector<Rational>> columns;
  std::vector<std::string> warnings;

  EdgeVector column(std::size_t c, EdgeRole role) const {
    if (c >= columns.size())
      throw Error(ErrorCode::kMalformedInput,
                  "missing column " + std::to_string(c + 1));
    return EdgeVector(role, columns[c]);
  }
};

struct ParseOptions {
  /// Reject repeated vertices inside an edge line instead of dropping them.
  bool strict = true;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_index(std::string_view tok, std::size_t line) {
  if (tok.empty() || tok.size() > 18)
    throw Error(ErrorCode::kMalformedInput,
                "line " + std::to_string(line) + ": bad integer '" +
                    std::string(tok) + "'");
  std::size_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line) + ": bad integer '" +
                      std::string(tok) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace detail

inline ParsedHypergraph parse_hypergraph(std::string_view text,
                                         const ParseOptions& opts = {}) {
  ParsedHypergraph out;
  std::vector<std::vector<VertexId>> edges;
  std::size_t n = 0, m = 0;
  bool have_header = false;
  std::size_t num_columns = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;

    if (!have_header) {
      auto toks = detail::split_ws(line);
      if (toks.size() != 2)
        throw Error(ErrorCode::kMalformedInput,
                    "line " + std::to_string(line_no) +
                        ": expected header 'n m'");
      n = detail::parse_index(toks[0], line_no);
      m = detail::parse_index(toks[1], line_no);
      have_header = true;
      continue;
    }

    if (edges.size() == m)
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": more than " +
                      std::to_string(m) + " edge lines");

    std::string_view verts_part = line;
    std::string_view cols_part;
    bool has_bar = false;
    if (auto bar = line.find('|'); bar != std::string_view::npos) {
      verts_part = line.substr(0, bar);
      cols_part = line.substr(bar + 1);
      has_bar = true;
    }

    std::vector<VertexId> edge;
    for (auto tok : detail::split_ws(verts_part)) {
      VertexId v = detail::parse_index(tok, line_no);
      if (v >= n)
        throw Error(ErrorCode::kVertexOutOfRange,
                    "line " + std::to_string(line_no) + ": vertex " +
                        std::to_string(v) + " >= n=" + std::to_string(n));
      edge.push_back(v);
    }
    if (edge.empty())
      throw Error(ErrorCode::kEmptyEdge,
                  "line " + std::to_string(line_no) + ": empty edge");
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      if (opts.strict)
        throw Error(ErrorCode::kDuplicateVertexInEdge,
                    "line " + std::to_string(line_no));
      edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
      out.warnings.push_back("line " + std::to_string(line_no) +
                             ": duplicate vertices removed");
    }

    std::vector<Rational> cols;
    if (has_bar) {
      for (auto tok : detail::split_ws(cols_part)) {
        try {
          cols.push_back(Rational::parse(tok));
        } catch (const std::invalid_argument& ex) {
          throw Error(ErrorCode::kMalformedInput,
                      "line " + std::to_string(line_no) + ": " + ex.what());
        }
      }
      if (cols.empty() || cols.size() > 3)
        throw Error(ErrorCode::kMalformedInput,
                    "line " + std::to_string(line_no) +
                        ": expected 1-3 columns after '|'");
    }
    if (edges.empty()) {
      num_columns = cols.size();
      out.columns.assign(num_columns, {});
    } else if (cols.size() != num_columns) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(num_columns) + " columns, found " +
                      std::to_string(cols.size()));
    }
    for (std::size_t c = 0; c < cols.size(); ++c)
      out.columns[c].push_back(std::move(cols[c]));
    edges.push_back(std::move(edge));
  }

  if (!have_header)
    throw Error(ErrorCode::kMalformedInput, "missing header 'n m'");
  if (edges.size() != m)
    throw Error(ErrorCode::kMalformedInput,
                "expected " + std::to_string(m) + " edge lines, found " +
                    std::to_string(edges.size()));
  out.graph = Hypergraph(n, std::move(edges));
  return out;
}

inline std::string serialize_hypergraph(
    const Hypergraph& h, const std::vector<std::vector<Rational>>& columns = {}) {
  for (const auto& col : columns)
    if (col.size() != h.num_edges())
      throw Error(ErrorCode::kInvalidArgument, "column length mismatch");
  if (columns.size() > 3)
    throw Error(ErrorCode::kInvalidArgument, "at most 3 columns");
  std::ostringstream os;
  os << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    bool first = true;
    for (VertexId v : h.edge(e)) {
      if (!first) os << ' ';
      os << v;
      first = false;
    }
    if (!columns.empty()) {
      os << " |";
      for (const auto& col : columns) os << ' ' << col[e].str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hypermat
