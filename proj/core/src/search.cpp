#include "shadowlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "shadowlab/canonical.hpp"
#include "shadowlab/clique_degree.hpp"
#include "shadowlab/constructions.hpp"
#include "shadowlab/errors.hpp"

namespace shadowlab {

namespace {

// Fixed so that the task split (and with it every count we report) does not
// depend on the number of threads.
constexpr std::size_t kFrontierTarget = 64;

SearchTask task_at(EdgeString root) {
  SearchTask task;
  task.root = root;
  return task;
}

/// Bound tests and clique bookkeeping on edge strings. Read-only once built,
/// so one instance serves all worker threads.
class Searcher {
 public:
  Searcher(const Parameters& params, bool enumerate)
      : index_(params.n, params.ell), n_(params.n), ell_(params.ell), enumerate_(enumerate) {
    const Integer thr = clique_threshold(params);
    threshold_ = thr > Integer(std::numeric_limits<std::uint32_t>::max())
                     ? std::numeric_limits<std::uint32_t>::max()
                     : static_cast<std::uint32_t>(thr);
    min_degree_ = min_feasible_degree(params);
    incident_.assign(static_cast<std::size_t>(n_), 0);
    for (int p = 0; p < index_.size(); ++p) {
      for (Vertex v : VertexSubset::from_mask(index_.edge(p))) incident_[v - 1] |= index_.bit(p);
    }
    if (params.k <= n_) {
      for_each_subset(prefix_mask(n_), params.k, [&](Mask kset) {
        EdgeString required = 0;
        for_each_subset(kset, ell_, [&](Mask e) { required |= index_.bit(index_.position(e)); });
        ksets_.push_back({kset, required});
      });
    }
  }

  const EdgeIndex& index() const { return index_; }

  bool satisfied(EdgeString s) const {
    std::array<std::uint32_t, kMaxVertices> counts{};
    clique_counts(s, counts);
    for (int v = 0; v < n_; ++v) {
      if (counts[v] < threshold_) return false;
    }
    return true;
  }

  /// Edges that may still be added to a node with e edges without losing
  /// the incumbent; negative when the node itself is already too large.
  std::int64_t budget(std::uint64_t e, std::uint64_t incumbent) const {
    const auto slack = static_cast<std::int64_t>(incumbent) - static_cast<std::int64_t>(e);
    return enumerate_ ? slack : slack - 1;
  }

  /// Can some extension of s by positions after `last` satisfy the
  /// condition within the budget?
  bool viable(EdgeString s, int last, std::int64_t budget) const {
    if (budget < 0) return false;
    const EdgeString future = index_.after(last);
    std::int64_t total = 0;
    for (int v = 0; v < n_; ++v) {
      const auto d = static_cast<std::uint64_t>(std::popcount(s & incident_[v]));
      if (d >= min_degree_) continue;
      const auto need = static_cast<std::int64_t>(min_degree_ - d);
      if (need > budget || need > std::popcount(future & incident_[v])) return false;
      total += need;
    }
    if (total > budget * ell_) return false;
    return satisfied(s | future);
  }

  template <class Fn>
  void for_each_child(EdgeString s, std::uint64_t e, int last, std::uint64_t incumbent, Fn&& fn) const {
    const std::int64_t child_budget = budget(e + 1, incumbent);
    if (child_budget < 0) return;
    for (int q = last + 1; q < index_.size(); ++q) {
      const EdgeString child = s | index_.bit(q);
      if (!viable(child, q, child_budget)) continue;
      if (!is_canonical(child, index_)) continue;
      fn(child, q);
    }
  }

  void explore(SearchTask& task, std::uint64_t seed_bound) const {
    std::uint64_t incumbent = seed_bound;
    task.nodes = 0;
    task.best.reset();
    task.witnesses.clear();
    dfs(task, task.root, static_cast<std::uint64_t>(std::popcount(task.root)), index_.last_position(task.root),
        incumbent);
    std::sort(task.witnesses.begin(), task.witnesses.end(), std::greater<>());
    task.done = true;
  }

 private:
  struct KSet {
    Mask vertices;
    EdgeString required;
  };

  void clique_counts(EdgeString s, std::array<std::uint32_t, kMaxVertices>& counts) const {
    for (const KSet& k : ksets_) {
      if ((s & k.required) != k.required) continue;
      for (Mask rest = k.vertices; rest != 0; rest &= rest - 1) ++counts[std::countr_zero(rest)];
    }
  }

  void dfs(SearchTask& task, EdgeString s, std::uint64_t e, int last, std::uint64_t& incumbent) const {
    ++task.nodes;
    if (satisfied(s)) {
      if (!task.best || e < *task.best) {
        task.best = e;
        task.witnesses.assign(1, s);
        incumbent = e;
      } else if (e == *task.best && enumerate_) {
        task.witnesses.push_back(s);
      }
      return;
    }
    for_each_child(s, e, last, incumbent, [&](EdgeString child, int q) { dfs(task, child, e + 1, q, incumbent); });
  }

  EdgeIndex index_;
  int n_;
  int ell_;
  bool enumerate_;
  std::uint32_t threshold_ = 0;
  std::uint64_t min_degree_ = 0;
  std::vector<EdgeString> incident_;
  std::vector<KSet> ksets_;
};

void check_limits(const Parameters& params, const SearchOptions& options) {
  params.validate();
  const int limit = options.vertex_limit > 0 ? options.vertex_limit : default_vertex_limit(params.ell);
  if (params.n > limit) {
    throw Error(ErrorKind::LimitExceeded, "n = " + std::to_string(params.n) + " exceeds the search limit " +
                                              std::to_string(limit) + " for ell = " + std::to_string(params.ell) +
                                              "; raise it with --limit if you can afford the run");
  }
  if (binomial(params.n, params.ell) > 64) {
    throw Error(ErrorKind::LimitExceeded, "C(n, ell) must be at most 64 for the edge-string search");
  }
}

}  // namespace

int default_vertex_limit(int ell) { return ell == 2 ? 9 : 7; }

std::size_t SearchFrontier::pending() const {
  return static_cast<std::size_t>(std::count_if(tasks.begin(), tasks.end(), [](const SearchTask& t) { return !t.done; }));
}

SearchFrontier make_frontier(const Parameters& params, const SearchOptions& options) {
  check_limits(params, options);
  SearchFrontier frontier;
  frontier.params = params;
  frontier.enumerate = options.enumerate;
  const Searcher searcher(params, options.enumerate);
  const EdgeIndex& index = searcher.index();

  const EdgeString complete = index.size() == 0 ? 0 : ~EdgeString{0} >> (64 - index.size());
  frontier.feasible = Rational(params.n) >= params.t + 1 && searcher.satisfied(complete);
  frontier.seed_bound = static_cast<std::uint64_t>(index.size()) + 1;
  if (!frontier.feasible) return frontier;

  const int t_up = static_cast<int>(ceil(params.t));
  if (params.n >= t_up + 1) {
    const UniformHypergraph upper = construct_upper(params.n, t_up, params.ell);
    if (check_condition(upper, params).satisfied) {
      frontier.upper_bound = upper.edge_count();
      frontier.seed_bound = upper.edge_count();
      frontier.seed_witness = canonical_string(index.encode(upper), index);
    }
  }

  std::vector<EdgeString> level{0};
  while (level.size() < kFrontierTarget) {
    std::vector<EdgeString> next;
    for (EdgeString s : level) {
      if (searcher.satisfied(s)) {
        frontier.tasks.push_back(task_at(s));
        continue;
      }
      ++frontier.expansion_nodes;
      const auto e = static_cast<std::uint64_t>(std::popcount(s));
      searcher.for_each_child(s, e, index.last_position(s), frontier.seed_bound,
                              [&](EdgeString child, int) { next.push_back(child); });
    }
    level = std::move(next);
    if (level.empty()) break;
  }
  for (EdgeString s : level) frontier.tasks.push_back(task_at(s));
  return frontier;
}

void run_frontier(SearchFrontier& frontier, const SearchOptions& options) {
  std::vector<SearchTask*> queue;
  for (SearchTask& task : frontier.tasks) {
    if (!task.done) queue.push_back(&task);
  }
  if (options.max_tasks && queue.size() > *options.max_tasks) queue.resize(*options.max_tasks);
  if (queue.empty()) return;

  const Searcher searcher(frontier.params, frontier.enumerate);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < queue.size(); i = next++) searcher.explore(*queue[i], frontier.seed_bound);
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = queue.size();
    }
  };
  const auto jobs = static_cast<std::size_t>(std::max(1, options.jobs));
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < std::min(jobs, queue.size()); ++j) threads.emplace_back(worker);
  worker();
  for (std::thread& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
}

SearchResult summarize(const SearchFrontier& frontier) {
  const Parameters& params = frontier.params;
  SearchResult result;
  result.params = params;
  result.feasible = frontier.feasible;
  result.lower_bound_used = edge_lower_bound(params.n, params.t, params.ell);
  result.upper_bound_used = frontier.upper_bound;
  result.enumerated = frontier.enumerate;
  result.complete = frontier.pending() == 0;
  result.nodes_explored = frontier.expansion_nodes;
  for (const SearchTask& task : frontier.tasks) result.nodes_explored += task.nodes;
  if (!frontier.feasible) return result;

  std::optional<std::uint64_t> best;
  for (const SearchTask& task : frontier.tasks) {
    if (task.done && task.best && (!best || *task.best < *best)) best = task.best;
  }
  std::vector<EdgeString> strings;
  if (best) {
    for (const SearchTask& task : frontier.tasks) {
      if (task.done && task.best == best) strings.insert(strings.end(), task.witnesses.begin(), task.witnesses.end());
    }
  } else if (frontier.upper_bound) {
    best = frontier.upper_bound;
    strings.push_back(frontier.seed_witness);
  } else {
    if (result.complete) throw std::logic_error("feasible instance without any witness");
    return result;
  }
  std::sort(strings.begin(), strings.end(), std::greater<>());
  strings.erase(std::unique(strings.begin(), strings.end()), strings.end());
  if (!frontier.enumerate) strings.resize(1);

  const EdgeIndex index(params.n, params.ell);
  result.optimum = *best;
  for (EdgeString s : strings) result.witnesses.push_back(index.decode(s));
  return result;
}

SearchResult min_edges(const Parameters& params, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SearchFrontier frontier = make_frontier(params, options);
  run_frontier(frontier, options);
  SearchResult result = summarize(frontier);
  result.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SearchResult enumerate_extremal(const Parameters& params, SearchOptions options) {
  options.enumerate = true;
  return min_edges(params, options);
}

}  // namespace shadowlab
