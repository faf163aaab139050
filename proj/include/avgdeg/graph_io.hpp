#pragma once

#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "avgdeg/error.hpp"
#include "avgdeg/graph.hpp"

namespace avgdeg {

enum class GraphFormat { EdgeList, Graph6, Auto };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

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

inline bool parse_int(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

inline std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

}  // namespace detail

/// Edge-list text: '#' comments, a header "n <count>", then one "u v" per line.
inline Graph parse_edgelist(std::string_view text) {
  const auto lines = detail::lines_of(text);
  long long n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    auto line = detail::trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    auto tok = detail::split_ws(line);
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n" || !detail::parse_int(tok[1], n) || n < 0)
        throw ParseError(lineno, "expected header \"n <count>\"");
      if (n > (1 << 24)) throw ParseError(lineno, "vertex count too large");
      continue;
    }
    long long a = 0;
    long long b = 0;
    if (tok.size() != 2 || !detail::parse_int(tok[0], a) || !detail::parse_int(tok[1], b))
      throw ParseError(lineno, "malformed edge line \"" + std::string(line) + "\"");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError(lineno, "vertex id out of range 0.." + std::to_string(n - 1));
    if (a == b) throw ParseError(lineno, "self-loop at vertex " + std::to_string(a));
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second)
      throw ParseError(lineno, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(lines.size() + 1, "missing header \"n <count>\"");
  return Graph(static_cast<int>(n), edges);
}

inline std::string to_edgelist(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

/// Decodes one graph6 record (n <= 62). `lineno` only labels errors.
inline Graph decode_graph6(std::string_view record, std::size_t lineno = 1) {
  record = detail::trim(record);
  constexpr std::string_view header = ">>graph6<<";
  if (record.substr(0, header.size()) == header) record.remove_prefix(header.size());
  if (record.empty()) throw ParseError(lineno, "empty graph6 record");
  for (char c : record)
    if (c < 63 || c > 126) throw ParseError(lineno, "graph6 byte outside 63..126");
  const int n = record[0] - 63;
  if (n > 62) throw ParseError(lineno, "graph6 records with more than 62 vertices are not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (record.size() != 1 + bytes)
    throw ParseError(lineno, "graph6 record has " + std::to_string(record.size() - 1) + " data bytes, expected " +
                                 std::to_string(bytes));
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = record[1 + bit / 6] - 63;
      if (byte >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = record.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError(lineno, "nonzero graph6 padding bits");
  }
  return Graph(n, edges);
}

inline std::string encode_graph6(const Graph& g) {
  ensure(g.order() <= 62, Errc::SizeLimit, "graph6 encoding supports at most 62 vertices");
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  const auto lines = detail::lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = detail::trim(lines[i]);
    if (line.empty()) continue;
    Graph g = decode_graph6(line, i + 1);
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (!detail::trim(lines[j]).empty()) throw ParseError(j + 1, "expected a single graph6 record");
    return g;
  }
  throw ParseError(1, "no graph6 record");
}

/// Auto picks edge-list when the first non-blank line is a comment or an "n <count>" header.
inline Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto) {
  if (format == GraphFormat::Auto) {
    format = GraphFormat::Graph6;
    for (auto raw : detail::lines_of(text)) {
      auto line = detail::trim(raw);
      if (line.empty()) continue;
      const bool header = line.size() > 1 && line[0] == 'n' && (line[1] == ' ' || line[1] == '\t');
      if (line.front() == '#' || header) format = GraphFormat::EdgeList;
      break;
    }
  }
  return format == GraphFormat::EdgeList ? parse_edgelist(text) : parse_graph6(text);
}

}  // namespace avgdeg
