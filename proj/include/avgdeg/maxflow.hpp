#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace avgdeg {

/// Dinic's algorithm on an integer-capacity network.
class FlowNetwork {
 public:
  using Cap = std::int64_t;
  static constexpr Cap kInfinite = std::numeric_limits<Cap>::max() / 4;

  explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1), level_(nodes), iter_(nodes) {}

  int nodes() const noexcept { return static_cast<int>(head_.size()); }

  void add_arc(int from, int to, Cap cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  Cap max_flow(int source, int sink) {
    Cap total = 0;
    while (build_levels(source, sink)) {
      for (int v = 0; v < nodes(); ++v) iter_[v] = head_[v];
      while (Cap pushed = augment(source, sink, kInfinite)) total += pushed;
    }
    return total;
  }

  /// Nodes reachable from `source` in the residual network (the minimal min-cut side).
  std::vector<bool> source_side(int source) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a = head_[x]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    Cap cap;
  };

  bool build_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{source};
    level_[source] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int a = head_[x]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Cap augment(int x, int sink, Cap limit) {
    if (x == sink) return limit;
    for (int& a = iter_[x]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[x] + 1) continue;
      if (Cap got = augment(arc.to, sink, std::min(limit, arc.cap))) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace avgdeg
