#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "avgdeg/cycles.hpp"
#include "avgdeg/error.hpp"
#include "avgdeg/graph.hpp"
#include "avgdeg/keyring.hpp"
#include "avgdeg/oracle.hpp"

namespace avgdeg {

struct SweepOptions {
  int n = 0;
  int k = 0;
  std::vector<int> rs;  // keyring leaf counts to check; each needs 1 <= r, 2r <= k-1
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct KeyringTally {
  int r = 0;
  std::uint64_t ok = 0;
  std::uint64_t failed = 0;
};

/// Exhaustive check over every labeled graph on n vertices.
struct SweepReport {
  int n = 0;
  int k = 0;
  std::uint64_t total = 0;
  std::uint64_t members = 0;
  /// Most edges of a graph without a cycle of length >= k (-1: none such).
  std::int64_t max_edges_without_long_cycle = -1;
  /// Fewest edges on a longest path of a member (absent without members).
  std::optional<int> min_longest_path;
  std::vector<KeyringTally> keyrings;

  /// 2 * max edges <= (n-1)(k-1).
  bool cycle_bound_holds() const {
    return 2 * max_edges_without_long_cycle <= static_cast<std::int64_t>(n - 1) * (k - 1);
  }
  bool path_bound_holds() const { return !min_longest_path || *min_longest_path >= k; }
  bool keyrings_hold() const {
    return std::all_of(keyrings.begin(), keyrings.end(), [](const KeyringTally& t) { return t.failed == 0; });
  }
  bool passed() const { return cycle_bound_holds() && path_bound_holds() && keyrings_hold(); }
};

inline std::vector<int> valid_leaf_counts(int k) {
  std::vector<int> rs;
  for (int r = 1; 2 * r <= k - 1; ++r) rs.push_back(r);
  return rs;
}

inline SweepReport run_sweep(const SweepOptions& opt) {
  ensure(opt.n >= 1 && opt.n <= 7, Errc::SizeLimit, "sweep supports 1 <= n <= 7");
  ensure(opt.k >= 1, Errc::InvalidArgument, "k must be positive");
  for (int r : opt.rs)
    ensure(r >= 1 && 2 * r <= opt.k - 1, Errc::ROutOfRange, "r=" + std::to_string(r) + " violates 2r <= k-1");

  const std::uint64_t count = oracle::labeled_graph_count(opt.n);
  unsigned threads = opt.threads ? opt.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, count / 1024)));

  std::vector<SweepReport> parts(threads);
  auto work = [&](unsigned part) {
    SweepReport& rep = parts[part];
    for (int r : opt.rs) rep.keyrings.push_back({r, 0, 0});
    const std::uint64_t begin = count * part / threads;
    const std::uint64_t end = count * (part + 1) / threads;
    oracle::for_each_labeled_graph(
        opt.n,
        [&](const Graph& g, std::uint64_t) {
          ++rep.total;
          if (g.size() > rep.max_edges_without_long_cycle && !find_cycle_at_least(g, opt.k))
            rep.max_edges_without_long_cycle = g.size();
          if (!in_Dk(g, opt.k)) return;
          ++rep.members;
          const int lp = longest_path_length(g);
          if (!rep.min_longest_path || lp < *rep.min_longest_path) rep.min_longest_path = lp;
          for (auto& tally : rep.keyrings) {
            bool ok = false;
            try {
              ok = verify_keyring(g, find_keyring(g, opt.k, tally.r), opt.k, tally.r);
            } catch (const Error&) {
              ok = false;
            }
            ++(ok ? tally.ok : tally.failed);
          }
        },
        begin, end);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  SweepReport out;
  out.n = opt.n;
  out.k = opt.k;
  for (int r : opt.rs) out.keyrings.push_back({r, 0, 0});
  for (const auto& p : parts) {
    out.total += p.total;
    out.members += p.members;
    out.max_edges_without_long_cycle = std::max(out.max_edges_without_long_cycle, p.max_edges_without_long_cycle);
    if (p.min_longest_path && (!out.min_longest_path || *p.min_longest_path < *out.min_longest_path))
      out.min_longest_path = p.min_longest_path;
    for (std::size_t i = 0; i < p.keyrings.size(); ++i) {
      out.keyrings[i].ok += p.keyrings[i].ok;
      out.keyrings[i].failed += p.keyrings[i].failed;
    }
  }
  return out;
}

/// TSV with a header row and one row per checked r ("-" when none).
inline void write_sweep_tsv(std::ostream& os, const SweepReport& rep) {
  const std::int64_t twice_bound = static_cast<std::int64_t>(rep.n - 1) * (rep.k - 1);
  const std::string bound = std::to_string(twice_bound / 2) + (twice_bound % 2 ? ".5" : "");
  os << "n\tk\tr\ttotal\tmembers\tkeyring_ok\tkeyring_failures\tmax_edges_no_long_cycle\teg_bound\t"
        "min_longest_path\tstatus\n";
  auto row = [&](const std::string& r, std::uint64_t ok, std::uint64_t failed) {
    os << rep.n << '\t' << rep.k << '\t' << r << '\t' << rep.total << '\t' << rep.members << '\t' << ok << '\t' << failed
       << '\t' << rep.max_edges_without_long_cycle << '\t' << bound << '\t'
       << (rep.min_longest_path ? std::to_string(*rep.min_longest_path) : "-") << '\t'
       << (rep.passed() ? "pass" : "FAIL") << '\n';
  };
  if (rep.keyrings.empty()) row("-", 0, 0);
  for (const auto& t : rep.keyrings) row(std::to_string(t.r), t.ok, t.failed);
}

}  // namespace avgdeg
