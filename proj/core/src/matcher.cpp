// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "provbench/matcher.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "assignment.hpp"
#include "provbench/error.hpp"

namespace provbench {

namespace {

using PropVec = std::vector<std::pair<int, int>>;

class StringPool {
 public:
  int intern(const std::string& s) {
    auto [it, _] = ids_.try_emplace(s, static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<std::string, int> ids_;
};

std::int64_t mismatch(const PropVec& p, const PropVec& h, MatchMode mode) {
  std::int64_t cost = 0;
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < h.size()) {
    if (j == h.size() || (i < p.size() && p[i].first < h[j].first)) {
      ++cost;
      ++i;
    } else if (i == p.size() || h[j].first < p[i].first) {
      if (mode == MatchMode::kExactBijective) ++cost;
      ++j;
    } else {
      if (p[i].second != h[j].second) ++cost;
      ++i;
      ++j;
    }
  }
  return cost;
}

struct Group {
  int label;
  std::vector<int> edges;
};
using Groups = std::vector<Group>;

/// (kind, label) -> count, kind 0 = out, 1 = in, 2 = self loop; sorted.
using DegreeSignature = std::vector<std::pair<std::pair<int, int>, int>>;

struct IndexedGraph {
  std::vector<ElementId> node_ids;
  std::vector<int> node_label;
  std::vector<PropVec> node_props;

  std::vector<ElementId> edge_ids;
  std::vector<int> edge_source;
  std::vector<int> edge_target;
  std::vector<int> edge_label;
  std::vector<PropVec> edge_props;

  std::unordered_map<std::uint64_t, Groups> pair_groups;
  std::vector<std::vector<int>> neighbours;  // excludes self
  std::vector<DegreeSignature> degree;

  int node_count() const { return static_cast<int>(node_ids.size()); }
  int edge_count() const { return static_cast<int>(edge_ids.size()); }

  const Groups* groups(int u, int v) const {
    auto it = pair_groups.find(key(u, v));
    return it == pair_groups.end() ? nullptr : &it->second;
  }

  std::uint64_t key(int u, int v) const {
    return static_cast<std::uint64_t>(u) *
               static_cast<std::uint64_t>(node_ids.size()) +
           static_cast<std::uint64_t>(v);
  }
};

PropVec intern_props(const Properties& props, StringPool& pool) {
  PropVec out;
  out.reserve(props.size());
  for (const auto& [k, v] : props) {
    out.emplace_back(pool.intern(k), pool.intern(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndexedGraph index_graph(const PropertyGraph& g, StringPool& pool) {
  IndexedGraph ig;
  std::unordered_map<std::string, int> node_index;
  for (const auto& [id, node] : g.nodes()) {
    node_index.emplace(id, ig.node_count());
    ig.node_ids.push_back(id);
    ig.node_label.push_back(pool.intern(node.label));
    ig.node_props.push_back(intern_props(node.properties, pool));
  }
  ig.neighbours.resize(ig.node_ids.size());
  std::vector<std::map<std::pair<int, int>, int>> degree(ig.node_ids.size());

  for (const auto& [id, edge] : g.edges()) {
    int e = ig.edge_count();
    int s = node_index.at(edge.source);
    int t = node_index.at(edge.target);
    int label = pool.intern(edge.label);
    ig.edge_ids.push_back(id);
    ig.edge_source.push_back(s);
    ig.edge_target.push_back(t);
    ig.edge_label.push_back(label);
    ig.edge_props.push_back(intern_props(edge.properties, pool));

    Groups& groups = ig.pair_groups[ig.key(s, t)];
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& gr) { return gr.label == label; });
    if (it == groups.end()) {
      groups.push_back({label, {e}});
    } else {
      it->edges.push_back(e);
    }

    if (s == t) {
      ++degree[s][{2, label}];
    } else {
      ++degree[s][{0, label}];
      ++degree[t][{1, label}];
      ig.neighbours[s].push_back(t);
      ig.neighbours[t].push_back(s);
    }
  }
  for (auto& [_, groups] : ig.pair_groups) {
    std::sort(groups.begin(), groups.end(),
              [](const Group& a, const Group& b) { return a.label < b.label; });
  }
  for (auto& n : ig.neighbours) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  ig.degree.resize(ig.node_ids.size());
  for (std::size_t v = 0; v < degree.size(); ++v) {
    ig.degree[v].assign(degree[v].begin(), degree[v].end());
  }
  return ig;
}

bool degree_compatible(const DegreeSignature& p, const DegreeSignature& h,
                       MatchMode mode) {
  if (mode == MatchMode::kExactBijective) return p == h;
  std::size_t j = 0;
  for (const auto& [key, count] : p) {
    while (j < h.size() && h[j].first < key) ++j;
    if (j == h.size() || h[j].first != key || h[j].second < count) {
      return false;
    }
  }
  return true;
}

/// Count-level compatibility of the edges between one pattern pair and one
/// host pair.
bool groups_compatible(const Groups* p, const Groups* h, MatchMode mode) {
  const bool exact = mode == MatchMode::kExactBijective;
  if (!p || p->empty()) return !exact || !h || h->empty();
  if (!h) return false;
  if (exact && p->size() != h->size()) return false;
  std::size_t j = 0;
  for (const auto& pg : *p) {
    while (j < h->size() && (*h)[j].label < pg.label) ++j;
    if (j == h->size() || (*h)[j].label != pg.label) return false;
    const auto& hg = (*h)[j];
    if (exact ? hg.edges.size() != pg.edges.size()
              : hg.edges.size() < pg.edges.size()) {
      return false;
    }
  }
  return true;
}

bool label_multisets_fit(const std::vector<int>& pattern,
                         const std::vector<int>& host, MatchMode mode) {
  std::map<int, std::int64_t> balance;
  for (int l : host) ++balance[l];
  for (int l : pattern) --balance[l];
  for (const auto& [_, b] : balance) {
    if (b < 0) return false;
    if (mode == MatchMode::kExactBijective && b != 0) return false;
  }
  return true;
}

struct StopSearch {};

class Solver {
 public:
  Solver(const PropertyGraph& pattern, const PropertyGraph& host,
         MatchMode mode, const MatchOptions& options, SolveStats* stats)
      : mode_(mode), options_(options), stats_(stats) {
    if (options_.budget == 0) {
      throw Error(ErrorCode::kInvalidArgument, "budget must be positive");
    }
    StringPool pool;
    p_ = index_graph(pattern, pool);
    h_ = index_graph(host, pool);
    feasible_ = prepare();
  }

  std::optional<Matching> optimize() {
    if (!feasible_) return finish(std::nullopt);
    counting_ = false;
    run();
    if (!best_assign_) return finish(std::nullopt);
    return finish(build(*best_assign_));
  }

  std::size_t count(std::uint64_t target, std::size_t limit) {
    if (!feasible_ || limit == 0) return 0;
    counting_ = true;
    count_target_ = static_cast<std::int64_t>(target);
    count_limit_ = limit;
    run();
    return found_;
  }

 private:
  bool prepare() {
    const int np = p_.node_count();
    const int nh = h_.node_count();
    if (mode_ == MatchMode::kExactBijective) {
      if (np != nh || p_.edge_count() != h_.edge_count()) return false;
    } else if (np > nh || p_.edge_count() > h_.edge_count()) {
      return false;
    }
    if (!label_multisets_fit(p_.node_label, h_.node_label, mode_) ||
        !label_multisets_fit(p_.edge_label, h_.edge_label, mode_)) {
      return false;
    }

    candidates_.assign(np, {});
    is_candidate_.assign(np, std::vector<char>(nh, 0));
    node_lb_.assign(np, 0);
    for (int u = 0; u < np; ++u) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (int x = 0; x < nh; ++x) {
        if (p_.node_label[u] != h_.node_label[x]) continue;
        if (!degree_compatible(p_.degree[u], h_.degree[x], mode_)) continue;
        candidates_[u].push_back(x);
        is_candidate_[u][x] = 1;
        best = std::min(best, mismatch(p_.node_props[u], h_.node_props[x], mode_));
      }
      if (candidates_[u].empty()) return false;
      node_lb_[u] = best;
    }

    edge_lb_.assign(p_.edge_count(), 0);
    std::unordered_map<int, std::vector<int>> host_edges_by_label;
    for (int f = 0; f < h_.edge_count(); ++f) {
      host_edges_by_label[h_.edge_label[f]].push_back(f);
    }
    for (int e = 0; e < p_.edge_count(); ++e) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (int f : host_edges_by_label[p_.edge_label[e]]) {
        best = std::min(best, mismatch(p_.edge_props[e], h_.edge_props[f], mode_));
      }
      edge_lb_[e] = best;
    }

    incident_.assign(np, {});
    for (int e = 0; e < p_.edge_count(); ++e) {
      int s = p_.edge_source[e];
      int t = p_.edge_target[e];
      incident_[s].push_back({e, t});
      if (s != t) incident_[t].push_back({e, s});
    }

    build_order();
    return true;
  }

  /// Rarest candidates first, then grow along pattern adjacency.
  void build_order() {
    const int np = p_.node_count();
    std::vector<char> placed(np, 0);
    std::vector<int> links(np, 0);
    auto total_degree = [&](int u) { return incident_[u].size(); };
    order_.clear();
    while (static_cast<int>(order_.size()) < np) {
      int pick = -1;
      for (int u = 0; u < np; ++u) {
        if (placed[u]) continue;
        if (pick < 0) {
          pick = u;
          continue;
        }
        auto key = [&](int v) {
          return std::make_tuple(-links[v], candidates_[v].size(),
                                 -static_cast<long>(total_degree(v)), v);
        };
        if (key(u) < key(pick)) pick = u;
      }
      placed[pick] = 1;
      order_.push_back(pick);
      for (int w : p_.neighbours[pick]) ++links[w];
    }
  }

  void run() {
    assign_.assign(p_.node_count(), -1);
    inverse_.assign(h_.node_count(), -1);
    remaining_lb_ = 0;
    for (auto lb : node_lb_) remaining_lb_ += lb;
    for (auto lb : edge_lb_) remaining_lb_ += lb;
    cost_ = 0;
    try {
      dfs(0);
    } catch (const StopSearch&) {
    }
  }

  bool prune(std::int64_t bound) const {
    if (counting_) return bound > count_target_;
    return best_cost_ && bound >= *best_cost_;
  }

  void dfs(std::size_t depth) {
    if (++expansions_ > options_.budget) {
      if (stats_) stats_->expansions = expansions_;
      throw Error(ErrorCode::kBudgetExceeded,
                  "search exceeded " + std::to_string(options_.budget) +
                      " node expansions");
    }
    if (depth == order_.size()) {
      record_leaf();
      return;
    }
    const int u = order_[depth];
    for (int x : candidates_[u]) {
      if (inverse_[x] >= 0) continue;
      std::int64_t added = 0;
      std::int64_t released = 0;
      if (!extend(u, x, added, released)) continue;
      const std::int64_t bound = cost_ + added + remaining_lb_ - released;
      if (prune(bound)) continue;

      assign_[u] = x;
      inverse_[x] = u;
      if (forward_check(u, x)) {
        cost_ += added;
        remaining_lb_ -= released;
        dfs(depth + 1);
        cost_ -= added;
        remaining_lb_ += released;
      }
      assign_[u] = -1;
      inverse_[x] = -1;
    }
  }

  void record_leaf() {
    if (counting_) {
      if (cost_ == count_target_ && ++found_ >= count_limit_) throw StopSearch{};
      return;
    }
    if (!best_cost_ || cost_ < *best_cost_) {
      best_cost_ = cost_;
      best_assign_ = assign_;
      if (stats_) ++stats_->improvements;
      if (options_.trace) {
        *options_.trace << "matcher: improved cost=" << cost_
                        << " expansions=" << expansions_ << '\n';
      }
    }
  }

  /// Checks u -> x against already-assigned nodes and accumulates the edge
  /// costs that become fixed. `released` is the share of the static lower
  /// bound now replaced by exact costs.
  bool extend(int u, int x, std::int64_t& added, std::int64_t& released) {
    const bool exact = mode_ == MatchMode::kExactBijective;
    added = mismatch(p_.node_props[u], h_.node_props[x], mode_);
    released = node_lb_[u];

    if (!groups_compatible(p_.groups(u, u), h_.groups(x, x), mode_)) {
      return false;
    }
    if (!accumulate_edges(p_.groups(u, u), h_.groups(x, x), added)) {
      return false;
    }

    for (int w : p_.neighbours[u]) {
      const int y = assign_[w];
      if (y < 0) continue;
      const Groups* forward = p_.groups(u, w);
      const Groups* backward = p_.groups(w, u);
      const Groups* host_forward = h_.groups(x, y);
      const Groups* host_backward = h_.groups(y, x);
      if (!groups_compatible(forward, host_forward, mode_) ||
          !groups_compatible(backward, host_backward, mode_)) {
        return false;
      }
      if (!accumulate_edges(forward, host_forward, added) ||
          !accumulate_edges(backward, host_backward, added)) {
        return false;
      }
    }
    for (const auto& [e, other] : incident_[u]) {
      if (other == u || assign_[other] >= 0) released += edge_lb_[e];
    }

    if (exact) {
      // Host edges between x and an image must have a pattern counterpart.
      for (int y : h_.neighbours[x]) {
        const int w = inverse_[y];
        if (w < 0) continue;
        if (!std::binary_search(p_.neighbours[u].begin(),
                                p_.neighbours[u].end(), w)) {
          return false;
        }
      }
    }
    return true;
  }

  bool accumulate_edges(const Groups* p, const Groups* h, std::int64_t& added) {
    if (!p) return true;
    std::size_t j = 0;
    for (const auto& pg : *p) {
      while (j < h->size() && (*h)[j].label < pg.label) ++j;
      const auto& hg = (*h)[j];
      added += assign_group(pg.edges, hg.edges).cost;
    }
    return true;
  }

  detail::Assignment assign_group(const std::vector<int>& pattern_edges,
                                  const std::vector<int>& host_edges) const {
    const int rows = static_cast<int>(pattern_edges.size());
    const int cols = static_cast<int>(host_edges.size());
    std::vector<std::int64_t> matrix(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        matrix[i * cols + j] = mismatch(p_.edge_props[pattern_edges[i]],
                                        h_.edge_props[host_edges[j]], mode_);
      }
    }
    return detail::min_cost_assignment(matrix, rows, cols);
  }

  /// Every unassigned pattern neighbour of u must keep a usable image among
  /// the host neighbours of x.
  bool forward_check(int u, int x) const {
    for (int w : p_.neighbours[u]) {
      if (assign_[w] >= 0) continue;
      const Groups* forward = p_.groups(u, w);
      const Groups* backward = p_.groups(w, u);
      bool found = false;
      for (int y : h_.neighbours[x]) {
        if (inverse_[y] >= 0 || !is_candidate_[w][y]) continue;
        if (groups_compatible(forward, h_.groups(x, y), mode_) &&
            groups_compatible(backward, h_.groups(y, x), mode_)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  Matching build(const std::vector<int>& assign) const {
    Matching m;
    std::int64_t total = 0;
    for (int u = 0; u < p_.node_count(); ++u) {
      m.node_map[p_.node_ids[u]] = h_.node_ids[assign[u]];
      total += mismatch(p_.node_props[u], h_.node_props[assign[u]], mode_);
    }
    for (const auto& [key, groups] : p_.pair_groups) {
      const int u = static_cast<int>(key / p_.node_ids.size());
      const int w = static_cast<int>(key % p_.node_ids.size());
      const Groups* host = h_.groups(assign[u], assign[w]);
      std::size_t j = 0;
      for (const auto& pg : groups) {
        while ((*host)[j].label < pg.label) ++j;
        const auto& hg = (*host)[j];
        auto a = assign_group(pg.edges, hg.edges);
        total += a.cost;
        for (std::size_t i = 0; i < pg.edges.size(); ++i) {
          m.edge_map[p_.edge_ids[pg.edges[i]]] = h_.edge_ids[hg.edges[a.columns[i]]];
        }
      }
    }
    m.cost = static_cast<std::uint64_t>(total);
    return m;
  }

  std::optional<Matching> finish(std::optional<Matching> result) {
    if (stats_) stats_->expansions = expansions_;
    if (options_.trace) {
      *options_.trace << "matcher: done expansions=" << expansions_ << " result="
                      << (result ? "cost " + std::to_string(result->cost)
                                 : std::string("none"))
                      << '\n';
    }
    return result;
  }

  MatchMode mode_;
  MatchOptions options_;
  SolveStats* stats_;
  IndexedGraph p_;
  IndexedGraph h_;
  bool feasible_ = false;

  std::vector<std::vector<int>> candidates_;
  std::vector<std::vector<char>> is_candidate_;
  std::vector<std::int64_t> node_lb_;
  std::vector<std::int64_t> edge_lb_;
  std::vector<std::vector<std::pair<int, int>>> incident_;  // (edge, other end)
  std::vector<int> order_;

  std::vector<int> assign_;
  std::vector<int> inverse_;
  std::int64_t cost_ = 0;
  std::int64_t remaining_lb_ = 0;
  std::uint64_t expansions_ = 0;

  bool counting_ = false;
  std::optional<std::int64_t> best_cost_;
  std::optional<std::vector<int>> best_assign_;
  std::int64_t count_target_ = 0;
  std::size_t count_limit_ = 0;
  std::size_t found_ = 0;
};

}  // namespace

std::optional<Matching> check_similar(const PropertyGraph& g1,
                                      const PropertyGraph& g2,
                                      const MatchOptions& options,
                                      SolveStats* stats) {
  return Solver(g1, g2, MatchMode::kExactBijective, options, stats).optimize();
}

std::optional<Matching> best_subgraph_matching(const PropertyGraph& pattern,
                                               const PropertyGraph& host,
                                               const MatchOptions& options,
                                               SolveStats* stats) {
  return Solver(pattern, host, MatchMode::kSubgraph, options, stats).optimize();
}

std::optional<Matching> solve(const MatchProblem& problem,
                              const MatchOptions& options, SolveStats* stats) {
  MatchOptions effective = options;
  if (problem.budget) {
    if (*problem.budget == 0) {
      throw Error(ErrorCode::kInvalidArgument, "budget must be positive");
    }
    effective.budget = *problem.budget;
  }
  return Solver(problem.pattern, problem.host, problem.mode, effective, stats)
      .optimize();
}

std::size_t count_optimal_embeddings(const PropertyGraph& pattern,
                                     const PropertyGraph& host, MatchMode mode,
                                     std::uint64_t cost, std::size_t limit,
                                     const MatchOptions& options) {
  return Solver(pattern, host, mode, options, nullptr).count(cost, limit);
}

std::uint64_t property_mismatch(const Properties& pattern,
                                const Properties& host, MatchMode mode) {
  std::uint64_t cost = 0;
  for (const auto& [k, v] : pattern) {
    auto it = host.find(k);
    if (it == host.end() || it->second != v) ++cost;
  }
  if (mode == MatchMode::kExactBijective) {
    for (const auto& [k, _] : host) {
      if (!pattern.count(k)) ++cost;
    }
  }
  return cost;
}

}  // namespace provbench
