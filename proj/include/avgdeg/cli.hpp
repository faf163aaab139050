#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "avgdeg/cycles.hpp"
#include "avgdeg/error.hpp"
#include "avgdeg/graph.hpp"
#include "avgdeg/graph_io.hpp"
#include "avgdeg/keyring.hpp"
#include "avgdeg/minimality.hpp"
#include "avgdeg/sweep.hpp"
#include "avgdeg/tree.hpp"
#include "avgdeg/tree_embed.hpp"
#include "avgdeg/witness.hpp"

// Command-line front end. Exit codes: 0 success/valid, 1 refusal, not found or
// invalid, 2 input or usage error.
namespace avgdeg::cli {

constexpr int kOk = 0;
constexpr int kRefused = 1;
constexpr int kInputError = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline GraphFormat format_from(const std::string& name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "graph6") return GraphFormat::Graph6;
  return GraphFormat::Auto;
}

inline Graph load_graph(const std::string& path, const std::string& format) {
  try {
    return parse_graph(read_file(path), format_from(format));
  } catch (const ParseError& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

inline int exit_code_for(Errc c) {
  switch (c) {
    case Errc::Parse:
    case Errc::InvalidArgument:
    case Errc::NotATree:
    case Errc::EmptySet:
      return kInputError;
    default:
      return kRefused;
  }
}

inline const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline int cmd_check(const Graph& g, int k, std::ostream& out) {
  const auto rep = is_k_minimal(g, k);
  out << "member=" << detail::flag(rep.is_member) << " minimal=" << detail::flag(rep.is_minimal) << " n=" << g.order()
      << " e=" << g.size() << " k=" << k << " slack=" << rep.slack << '\n';
  if (rep.removable_edge) out << "removable_edge=" << rep.removable_edge->u << ',' << rep.removable_edge->v << '\n';
  if (rep.removable_set)
    out << "removable_set=" << avgdeg::detail::join_ids(rep.removable_set->set.members())
        << " value=" << rep.removable_set->value << '\n';
  if (auto def = find_deficient_set(g, k))
    out << "deficient_set=" << avgdeg::detail::join_ids(def->set.members()) << " value=" << def->value << '\n';
  return rep.is_member ? kOk : kRefused;
}

inline int cmd_verify(const Graph& g, std::string_view witness_text, std::optional<int> k,
                      const std::optional<TreeSpec>& tree, std::ostream& out, std::ostream& err) {
  const auto records = parse_witnesses(witness_text);
  if (records.empty()) {
    err << "error: witness file has no records\n";
    return kInputError;
  }
  bool all_valid = true;
  for (const auto& rec : records) {
    bool valid = false;
    std::string kind;
    if (const auto* kr = std::get_if<KeyringWitness>(&rec.witness)) {
      kind = "KEYRING";
      valid = verify_keyring(g, *kr, k.value_or(0), static_cast<int>(kr->leaves.size()));
    } else if (const auto* cy = std::get_if<CycleWitness>(&rec.witness)) {
      kind = "CYCLE";
      valid = verify_cycle(g, *cy, k.value_or(3));
    } else {
      kind = "EMBED";
      if (!tree) {
        err << "error: line " << rec.line << ": EMBED witness needs --tree\n";
        return kInputError;
      }
      valid = verify_embedding(g, *tree, std::get<Embedding>(rec.witness));
    }
    out << "line " << rec.line << ": " << kind << ' ' << (valid ? "valid" : "INVALID") << '\n';
    all_valid = all_valid && valid;
  }
  return all_valid ? kOk : kRefused;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified witnesses for graphs of large average degree", "avgdeg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string graph_path;
  std::string format = "auto";
  int k = 0;
  int r = 0;
  bool no_min = false;
  bool first_choice = false;
  std::string tree_path;
  std::string witness_path;
  int sweep_n = 0;
  std::vector<int> sweep_r;
  unsigned threads = 0;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "graph file (edge list or graph6; '-' for stdin)")->required();
    sub->add_option("--format", format, "input format")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  };

  auto* check = app.add_subcommand("check", "D_k membership and k-minimality report");
  add_graph(check);
  check->add_option("--k", k, "parameter k")->required()->check(CLI::PositiveNumber);

  auto* keyring = app.add_subcommand("keyring", "find a keyring with r leaves and at least k edges");
  add_graph(keyring);
  keyring->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  keyring->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  keyring->add_flag("--no-minimalize", no_min, "search the input graph as given");

  auto* cycle = app.add_subcommand("cycle", "find a cycle of length at least k");
  add_graph(cycle);
  cycle->add_option("--k", k)->required()->check(CLI::PositiveNumber);

  auto* minim = app.add_subcommand("minimalize", "print a k-minimal subgraph as an edge list");
  add_graph(minim);
  minim->add_option("--k", k)->required()->check(CLI::PositiveNumber);

  auto* embed = app.add_subcommand("embed", "embed a tree (k = its edge count)");
  add_graph(embed);
  embed->add_option("--tree", tree_path, "tree file (edge list)")->required();
  embed->add_flag("--no-minimalize", no_min, "search the input graph as given");
  embed->add_flag("--first-choice-only", first_choice, "follow only the default leaf-move and star choices");

  auto* sweep = app.add_subcommand("sweep", "exhaustive checks over all labeled graphs");
  sweep->add_option("--n", sweep_n)->required()->check(CLI::Range(1, 7));
  sweep->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--r", sweep_r, "leaf counts (default: every r with 2r <= k-1)");
  sweep->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* verify = app.add_subcommand("verify", "check KEYRING/CYCLE/EMBED witnesses");
  add_graph(verify);
  verify->add_option("--witness", witness_path)->required();
  std::optional<int> verify_k;
  verify->add_option("--k", verify_k, "required edge count / cycle length");
  verify->add_option("--tree", tree_path, "tree file for EMBED records");

  if (!args.empty()) args.erase(args.begin());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*sweep) {
      SweepOptions opt{sweep_n, k, sweep_r.empty() ? valid_leaf_counts(k) : sweep_r, threads};
      const auto rep = run_sweep(opt);
      write_sweep_tsv(out, rep);
      return rep.passed() ? kOk : kRefused;
    }

    const Graph g = detail::load_graph(graph_path, format);
    auto load_tree = [&]() {
      try {
        return tree_stats(parse_edgelist(detail::read_file(tree_path)));
      } catch (const ParseError& e) {
        throw Error(Errc::Parse, tree_path + ": " + e.what());
      }
    };

    if (*check) return cmd_check(g, k, out);
    if (*keyring) {
      out << format_witness(find_keyring(g, k, r, KeyringOptions{!no_min, {}})) << '\n';
      return kOk;
    }
    if (*cycle) {
      if (auto c = find_cycle_at_least(g, k)) {
        out << format_witness(*c) << '\n';
        return kOk;
      }
      err << "no cycle of length >= " << k << '\n';
      return kRefused;
    }
    if (*minim) {
      const auto sub = minimalize(g, k);
      out << "# original ids: " << avgdeg::detail::join_ids(sub.to_parent) << '\n' << to_edgelist(sub.graph);
      return kOk;
    }
    if (*embed) {
      const TreeSpec t = load_tree();
      out << format_witness(embed_tree(g, t, EmbedOptions{!no_min, !first_choice})) << '\n';
      return kOk;
    }
    if (*verify) {
      std::optional<TreeSpec> t;
      if (!tree_path.empty()) t = load_tree();
      try {
        return cmd_verify(g, detail::read_file(witness_path), verify_k, t, out, err);
      } catch (const ParseError& e) {
        throw Error(Errc::Parse, witness_path + ": " + e.what());
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return detail::exit_code_for(e.code());
  }
  return kInputError;
}

}  // namespace avgdeg::cli
