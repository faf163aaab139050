#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "avgdeg/error.hpp"
#include "avgdeg/graph.hpp"
#include "avgdeg/graph_io.hpp"
#include "avgdeg/keyring.hpp"
#include "avgdeg/tree_embed.hpp"

// Line-oriented witness text:
//   KEYRING center=<id> cycle=<id,id,...> leaves=<id,...>
//   CYCLE <id,id,...>
//   EMBED t<tree id>->g<host id> ...   (the t and g prefixes are optional on input)
namespace avgdeg {

namespace detail {

inline std::string join_ids(const std::vector<Vertex>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ids[i]);
  }
  return s;
}

inline std::vector<Vertex> split_ids(std::string_view s, std::size_t line) {
  std::vector<Vertex> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto comma = s.find(',', start);
    auto tok = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    long long v = 0;
    if (!parse_int(tok, v) || v < 0 || v > (1 << 30)) throw ParseError(line, "bad vertex id \"" + std::string(tok) + "\"");
    out.push_back(static_cast<Vertex>(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline Vertex parse_id(std::string_view tok, std::size_t line) {
  long long v = 0;
  if (!parse_int(tok, v) || v < 0 || v > (1 << 30)) throw ParseError(line, "bad vertex id \"" + std::string(tok) + "\"");
  return static_cast<Vertex>(v);
}

}  // namespace detail

inline std::string format_witness(const KeyringWitness& w) {
  return "KEYRING center=" + std::to_string(w.center) + " cycle=" + detail::join_ids(w.cycle) +
         " leaves=" + detail::join_ids(w.leaves);
}

inline std::string format_witness(const CycleWitness& w) { return "CYCLE " + detail::join_ids(w.vertices); }

inline std::string format_witness(const Embedding& e) {
  std::string s = "EMBED";
  for (std::size_t i = 0; i < e.map.size(); ++i) s += " t" + std::to_string(i) + "->g" + std::to_string(e.map[i]);
  return s;
}

using Witness = std::variant<KeyringWitness, CycleWitness, Embedding>;

struct WitnessRecord {
  Witness witness;
  std::size_t line = 0;
};

/// Parses every record of a witness file; '#' comments and blank lines are skipped.
inline std::vector<WitnessRecord> parse_witnesses(std::string_view text) {
  std::vector<WitnessRecord> out;
  const auto lines = detail::lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    auto line = detail::trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    auto tok = detail::split_ws(line);
    if (tok[0] == "KEYRING") {
      KeyringWitness w;
      bool have_center = false;
      bool have_cycle = false;
      bool have_leaves = false;
      for (std::size_t j = 1; j < tok.size(); ++j) {
        auto eq = tok[j].find('=');
        if (eq == std::string_view::npos) throw ParseError(lineno, "expected key=value, got \"" + std::string(tok[j]) + "\"");
        auto key = tok[j].substr(0, eq);
        auto val = tok[j].substr(eq + 1);
        if (key == "center" && !have_center) {
          w.center = detail::parse_id(val, lineno);
          have_center = true;
        } else if (key == "cycle" && !have_cycle) {
          w.cycle = detail::split_ids(val, lineno);
          have_cycle = true;
        } else if (key == "leaves" && !have_leaves) {
          w.leaves = detail::split_ids(val, lineno);
          have_leaves = true;
        } else {
          throw ParseError(lineno, "unexpected KEYRING field \"" + std::string(key) + "\"");
        }
      }
      if (!have_center || !have_cycle || !have_leaves) throw ParseError(lineno, "KEYRING needs center, cycle and leaves");
      out.push_back({w, lineno});
    } else if (tok[0] == "CYCLE") {
      if (tok.size() != 2) throw ParseError(lineno, "CYCLE takes one comma-separated id list");
      out.push_back({CycleWitness{detail::split_ids(tok[1], lineno)}, lineno});
    } else if (tok[0] == "EMBED") {
      std::vector<Vertex> map(tok.size() - 1, -1);
      for (std::size_t j = 1; j < tok.size(); ++j) {
        auto arrow = tok[j].find("->");
        if (arrow == std::string_view::npos) throw ParseError(lineno, "expected <tree>-><host>, got \"" + std::string(tok[j]) + "\"");
        auto lhs = tok[j].substr(0, arrow);
        auto rhs = tok[j].substr(arrow + 2);
        if (!lhs.empty() && lhs.front() == 't') lhs.remove_prefix(1);
        if (!rhs.empty() && rhs.front() == 'g') rhs.remove_prefix(1);
        const Vertex tv = detail::parse_id(lhs, lineno);
        if (tv >= static_cast<Vertex>(map.size()) || map[tv] >= 0)
          throw ParseError(lineno, "EMBED tree ids must be 0..n-1, each once");
        map[tv] = detail::parse_id(rhs, lineno);
      }
      out.push_back({Embedding{std::move(map)}, lineno});
    } else {
      throw ParseError(lineno, "unknown witness kind \"" + std::string(tok[0]) + "\"");
    }
  }
  return out;
}

}  // namespace avgdeg
