#pragma once

// Exact maximum-arc search over F_k-free digraphs.
//
// The pruned engine generates digraphs vertex by vertex. Every digraph G on
// m+1 vertices arises from G - v by adding v back, where v is a vertex of
// minimum degree; counting arcs over all vertex-deleted subgraphs gives
//
//     f(G - v) >= ceil((m - 1) f(G) / (m + 1)).
//
// So to list every free digraph of order n with at least T arcs it is enough
// to list, level by level, the free digraphs of order m with at least thr(m)
// arcs, where thr(n) = T and thr(m) = ceil((m-1) thr(m+1) / (m+1)). Each level
// keeps one canonical representative per isomorphism class. Adding a vertex
// is a depth-first search over the new arcs in a fixed pair order, pruned by
// (a) an optimistic completion bound, (b) monotonicity of freeness under arc
// insertion, and (c) the requirement that the new vertex has minimum degree.
//
// The maximum itself is found by testing T from supergraph_bound(n,
// theta(n-1)) downwards; theta(n-1) comes from the same engine one order
// lower, so the bound chain is built from exact smaller-order values.
//
// SearchConfig::prune = false selects the unpruned engine: a plain row-major
// depth-first search over all ordered pairs with no bounds and no symmetry
// breaking, used to cross-check the pruned engine on small orders.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "walkex/bit_matrix.hpp"
#include "walkex/canonical.hpp"
#include "walkex/constructions.hpp"
#include "walkex/formulas.hpp"
#include "walkex/walks.hpp"

namespace walkex {

inline constexpr int kMaxEnumerateOrder = 13;

struct SearchConfig {
  int n = 1;
  int k = 1;
  bool loops = false;
  bool enumerate = false;
  /// Wall-clock cap; nullopt means unlimited.
  std::optional<double> budget_seconds = 600.0;
  int threads = 1;
  /// Debug switch: false runs the unpruned row-major search.
  bool prune = true;
};

enum class SearchStatus { exact, budget_exhausted };

inline std::string_view to_string(SearchStatus s) { return s == SearchStatus::exact ? "exact" : "budget_exhausted"; }

struct SearchReport {
  SearchConfig config;
  int max_arcs = 0;
  SearchStatus status = SearchStatus::exact;
  int upper_bound_active = 0;
  /// Canonical representatives sorted by canonical form: every extremal
  /// class in enumerate mode, one otherwise.
  std::vector<BitMatrix> witnesses;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

namespace detail {

inline int max_pairs(int n, bool loops) { return n * (n - 1) + (loops ? n : 0); }

inline int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

struct BudgetExhausted {};

class SearchContext {
 public:
  explicit SearchContext(std::optional<double> budget) : start_(std::chrono::steady_clock::now())
  {
    if (budget)
      deadline_ = start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(*budget));
  }

  /// Adds to the node counter; throws BudgetExhausted once past the deadline.
  void tick(std::uint64_t nodes)
  {
    nodes_.fetch_add(nodes, std::memory_order_relaxed);
    if (stop_.load(std::memory_order_relaxed)) throw BudgetExhausted{};
    if (deadline_ && std::chrono::steady_clock::now() >= *deadline_) {
      stop_.store(true);
      throw BudgetExhausted{};
    }
  }

  void count(std::uint64_t nodes) { nodes_.fetch_add(nodes, std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(); }

  double elapsed() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

  /// Monotone incumbent shared by all workers; stale reads are harmless.
  void offer(int arcs)
  {
    int cur = incumbent_.load(std::memory_order_relaxed);
    while (arcs > cur && !incumbent_.compare_exchange_weak(cur, arcs, std::memory_order_relaxed)) {
    }
  }
  int incumbent() const { return incumbent_.load(std::memory_order_relaxed); }

 private:
  std::chrono::steady_clock::time_point start_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<int> incumbent_{-1};
};

/// Batches node counts so the shared counter and the clock are touched once
/// every few thousand nodes.
class NodeMeter {
 public:
  explicit NodeMeter(SearchContext& ctx) : ctx_(ctx) {}
  NodeMeter(const NodeMeter&) = delete;
  NodeMeter& operator=(const NodeMeter&) = delete;
  ~NodeMeter() { ctx_.count(pending_); }

  void operator()()
  {
    if (++pending_ == kBatch) {
      pending_ = 0;
      ctx_.tick(kBatch);
    }
  }

 private:
  static constexpr std::uint64_t kBatch = 4096;
  SearchContext& ctx_;
  std::uint64_t pending_ = 0;
};

/// One isomorphism class: canonical rows and arc count.
struct Member {
  std::vector<Row> rows;
  int arcs = 0;
};

inline BitMatrix to_matrix(const std::vector<Row>& rows, bool loops)
{
  BitMatrix m(static_cast<int>(rows.size()), loops);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
  return m;
}

/// Depth-first search over the arcs joining a new vertex to a fixed prefix.
class Extender {
 public:
  /// Return false to stop the search.
  using Sink = std::function<bool(const std::vector<Row>& rows, int arcs)>;

  Extender(int k, bool loops, SearchContext& ctx) : k_(k), loops_(loops), meter_(ctx) {}

  /// Visits every free extension of `base` (order m) by vertex m whose total
  /// arc count is at least `need` and whose new vertex has minimum degree.
  /// Returns false if the sink asked to stop.
  bool extend(const Member& base, int need, const Sink& sink)
  {
    m_ = static_cast<int>(base.rows.size());
    rows_.assign(base.rows.begin(), base.rows.end());
    rows_.push_back(0);
    scratch_.assign(4 * rows_.size(), 0);
    base_arcs_ = base.arcs;
    need_new_ = need - base.arcs;
    sink_ = &sink;
    halted_ = false;

    pairs_.clear();
    for (int j = 0; j < m_; ++j) pairs_.push_back({j, m_});
    for (int j = 0; j < m_; ++j) pairs_.push_back({m_, j});
    if (loops_) pairs_.push_back({m_, m_});

    degree_.assign(static_cast<std::size_t>(m_), 0);
    int min_degree = max_pairs(m_ + 1, true);
    for (int v = 0; v < m_; ++v) {
      int in = 0;
      for (int u = 0; u < m_; ++u) in += static_cast<int>((rows_[u] >> v) & 1U);
      const int loop = static_cast<int>((rows_[v] >> v) & 1U);
      degree_[v] = std::popcount(rows_[v]) + in - loop;
      min_degree = std::min(min_degree, degree_[v]);
    }
    degree_cap_ = min_degree + 2;

    if (need_new_ <= static_cast<int>(pairs_.size())) dfs(0, 0);
    return !halted_;
  }

 private:
  struct Pair {
    int r, c;
  };

  void dfs(std::size_t idx, int added)
  {
    meter_();
    if (halted_) return;
    if (added + static_cast<int>(pairs_.size() - idx) < need_new_) return;
    if (idx == pairs_.size()) {
      leaf(added);
      return;
    }
    const auto [r, c] = pairs_[idx];
    if (added < degree_cap_) {
      rows_[r] |= bit(c);
      if (free_rows(m_ + 1, rows_.data(), k_, scratch_.data())) dfs(idx + 1, added + 1);
      rows_[r] &= ~bit(c);
      if (halted_) return;
    }
    dfs(idx + 1, added);
  }

  void leaf(int added)
  {
    for (int v = 0; v < m_; ++v) {
      const int deg = degree_[v] + static_cast<int>((rows_[v] >> m_) & 1U) + static_cast<int>((rows_[m_] >> v) & 1U);
      if (deg < added) return;
    }
    if (!(*sink_)(rows_, base_arcs_ + added)) halted_ = true;
  }

  int k_;
  bool loops_;
  NodeMeter meter_;
  int m_ = 0;
  int base_arcs_ = 0;
  int need_new_ = 0;
  int degree_cap_ = 0;
  bool halted_ = false;
  const Sink* sink_ = nullptr;
  std::vector<Row> rows_;
  std::vector<Row> scratch_;
  std::vector<Pair> pairs_;
  std::vector<int> degree_;
};

/// Largest free digraph found by randomized greedy arc insertion, seeded
/// with the completely transitive tournament when it fits.
inline BitMatrix greedy_free(int n, int k, bool loops, int restarts = 16)
{
  std::vector<std::pair<int, int>> pairs;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c || loops) pairs.emplace_back(r, c);

  std::vector<BitMatrix> seeds{BitMatrix(n, loops)};
  const int s = n / k;
  const int t = n % k;
  if ((s + 1) * k <= kMaxOrder && s * k + t >= 1)
    seeds.push_back(build_completely_transitive(s, k, t, VertexSet::interval(s * k + t + 1, s * k + k))
                        .with_loops_allowed(loops));

  std::mt19937 rng(0x5eed);
  std::vector<Row> scratch(4 * static_cast<std::size_t>(n));
  BitMatrix best(n, loops);
  int best_arcs = -1;
  for (int attempt = 0; attempt < restarts; ++attempt) {
    std::vector<Row> rows(seeds[attempt % seeds.size()].rows().begin(), seeds[attempt % seeds.size()].rows().end());
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (auto [r, c] : pairs) {
      if ((rows[r] >> c) & 1U) continue;
      rows[r] |= bit(c);
      if (!free_rows(n, rows.data(), k, scratch.data())) rows[r] &= ~bit(c);
    }
    BitMatrix candidate = to_matrix(rows, loops);
    const int arcs = count_ones(candidate);
    if (arcs > best_arcs) {
      best_arcs = arcs;
      best = std::move(candidate);
    }
  }
  return best;
}

class PrunedEngine {
 public:
  PrunedEngine(const SearchConfig& cfg, SearchContext& ctx)
      : cfg_(cfg), ctx_(ctx), theta_(static_cast<std::size_t>(cfg.n) + 1), ub_(static_cast<std::size_t>(cfg.n) + 1)
  {
    for (int m = 0; m <= cfg.n; ++m) ub_[m] = max_pairs(m, cfg.loops);
  }

  /// Upper bound on theta(n) proven so far: per-order bounds chained
  /// through supergraph_bound.
  int upper_bound() const
  {
    int u = ub_[1];
    for (int m = 2; m <= cfg_.n; ++m)
      u = m >= 3 ? std::min<int>(ub_[m], static_cast<int>(supergraph_bound(m, u))) : ub_[m];
    return u;
  }

  /// Largest order-n class seen so far, if any.
  std::optional<Member> best_seen() const
  {
    std::lock_guard lock(best_mutex_);
    return best_seen_;
  }

  /// Extremal classes at order n (all, or one unless cfg.enumerate).
  std::vector<Member> solve()
  {
    const int n = cfg_.n;
    int lo = 0;
    if (n >= 2) {
      lo = theta(n - 1);
      if (n >= 3) ub_[n] = std::min<int>(ub_[n], static_cast<int>(supergraph_bound(n, lo)));
    }
    for (int target = ub_[n]; target >= lo; --target) {
      ub_[n] = target;
      auto found = at_least(n, target, !cfg_.enumerate);
      if (!found.empty()) return found;
    }
    throw std::logic_error("max_search: no digraph at the lower bound");
  }

 private:
  int theta(int n)
  {
    if (theta_[n]) return *theta_[n];
    int lo = 0;
    if (n >= 2) {
      lo = theta(n - 1);
      if (n >= 3) ub_[n] = std::min<int>(ub_[n], static_cast<int>(supergraph_bound(n, lo)));
    }
    for (int target = ub_[n]; target >= lo; --target) {
      ub_[n] = target;
      auto found = at_least(n, target, true);
      if (!found.empty()) {
        theta_[n] = found.front().arcs;
        ub_[n] = *theta_[n];
        return *theta_[n];
      }
    }
    throw std::logic_error("max_search: no digraph at the lower bound");
  }

  /// Every free class of order n with at least `target` arcs (or just one).
  std::vector<Member> at_least(int n, int target, bool first_only)
  {
    std::vector<int> thr(static_cast<std::size_t>(n) + 1, 0);
    thr[n] = target;
    for (int m = n - 1; m >= 1; --m) thr[m] = std::max(0, ceil_div(static_cast<long long>(m - 1) * thr[m + 1], m + 1));
    for (int m = 1; m <= n; ++m) {
      if (thr[m] > max_pairs(m, cfg_.loops)) return {};
      if (m < n && theta_[m] && thr[m] > *theta_[m]) return {};
    }

    std::vector<Member> level;
    level.push_back({{Row{0}}, 0});
    if (cfg_.loops) level.push_back({{Row{1}}, 1});
    std::erase_if(level, [&](const Member& x) { return x.arcs < thr[1]; });

    for (int m = 1; m < n && !level.empty(); ++m) level = expand(level, thr[m + 1], first_only && m + 1 == n);
    return level;
  }

  std::vector<Member> expand(const std::vector<Member>& level, int need, bool first_only)
  {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> done{false};
    std::atomic<bool> exhausted{false};
    const int workers = std::max(1, std::min<int>(cfg_.threads, static_cast<int>(level.size())));
    std::vector<std::map<std::string, Member>> found(static_cast<std::size_t>(workers));

    auto work = [&](int id) {
      try {
        Extender ext(cfg_.k, cfg_.loops, ctx_);
        auto& local = found[static_cast<std::size_t>(id)];
        const Extender::Sink sink = [&](const std::vector<Row>& rows, int arcs) {
          const BitMatrix canon = canonical_matrix(to_matrix(rows, cfg_.loops));
          Member member{{canon.rows().begin(), canon.rows().end()}, arcs};
          if (static_cast<int>(rows.size()) == cfg_.n) remember(member);
          local.try_emplace(row_major_string(canon), std::move(member));
          if (first_only) done = true;
          return !done.load();
        };
        for (std::size_t i = next++; i < level.size() && !done; i = next++) ext.extend(level[i], need, sink);
      } catch (const BudgetExhausted&) {
        exhausted = true;
        done = true;
      }
    };

    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
      for (auto& th : pool) th.join();
    }
    if (exhausted) throw BudgetExhausted{};

    std::map<std::string, Member> merged;
    for (auto& local : found) merged.merge(local);
    std::vector<Member> out;
    out.reserve(merged.size());
    for (auto& [key, member] : merged) out.push_back(std::move(member));
    if (first_only && out.size() > 1) out.resize(1);
    return out;
  }

  void remember(const Member& m)
  {
    ctx_.offer(m.arcs);
    std::lock_guard lock(best_mutex_);
    if (!best_seen_ || m.arcs > best_seen_->arcs) best_seen_ = m;
  }

  const SearchConfig& cfg_;
  SearchContext& ctx_;
  std::vector<std::optional<int>> theta_;
  // ub_[m]: proven upper bound on theta(m) from that order alone.
  std::vector<int> ub_;
  mutable std::mutex best_mutex_;
  std::optional<Member> best_seen_;
};

/// Row-major depth-first search over every ordered pair, no pruning beyond
/// the freeness test itself.
class PlainEngine {
 public:
  PlainEngine(const SearchConfig& cfg, SearchContext& ctx) : cfg_(cfg), meter_(ctx), ctx_(ctx)
  {
    for (int r = 0; r < cfg.n; ++r)
      for (int c = 0; c < cfg.n; ++c)
        if (r != c || cfg.loops) pairs_.push_back({r, c});
    rows_.assign(static_cast<std::size_t>(cfg.n), 0);
    scratch_.assign(4 * rows_.size(), 0);
  }

  void run() { dfs(0, 0); }

  int best() const { return best_; }

  std::vector<BitMatrix> witnesses() const
  {
    std::vector<BitMatrix> out;
    for (const auto& [key, m] : found_) out.push_back(m);
    return out;
  }

 private:
  struct Pair {
    int r, c;
  };

  void dfs(std::size_t idx, int arcs)
  {
    meter_();
    if (idx == pairs_.size()) {
      if (arcs > best_) {
        best_ = arcs;
        found_.clear();
        ctx_.offer(arcs);
      }
      if (arcs == best_ && (found_.empty() || cfg_.enumerate)) {
        const BitMatrix canon = canonical_matrix(to_matrix(rows_, cfg_.loops));
        found_.try_emplace(row_major_string(canon), canon);
      }
      return;
    }
    const auto [r, c] = pairs_[idx];
    rows_[r] |= bit(c);
    if (free_rows(cfg_.n, rows_.data(), cfg_.k, scratch_.data())) dfs(idx + 1, arcs + 1);
    rows_[r] &= ~bit(c);
    dfs(idx + 1, arcs);
  }

  const SearchConfig& cfg_;
  NodeMeter meter_;
  SearchContext& ctx_;
  std::vector<Pair> pairs_;
  std::vector<Row> rows_;
  std::vector<Row> scratch_;
  int best_ = -1;
  std::map<std::string, BitMatrix> found_;
};

inline void validate(const SearchConfig& cfg)
{
  if (cfg.n < 1 || cfg.n > kMaxOrder) throw std::invalid_argument("max_search: need 1 <= n <= 64");
  if (cfg.k < 1) throw std::invalid_argument("max_search: need k >= 1");
  if (cfg.enumerate && cfg.n > kMaxEnumerateOrder) throw std::invalid_argument("max_search: enumerate mode needs n <= 13");
  if (cfg.budget_seconds && *cfg.budget_seconds < 1.0) throw std::invalid_argument("max_search: budget must be >= 1 s");
  if (cfg.threads < 1) throw std::invalid_argument("max_search: need threads >= 1");
}

}  // namespace detail

/// theta(n, k): the maximum number of arcs of an F_k-free digraph of order n
/// in the requested mode, with the extremal digraphs up to isomorphism.
inline SearchReport max_search(const SearchConfig& cfg)
{
  detail::validate(cfg);
  detail::SearchContext ctx(cfg.budget_seconds);
  SearchReport report;
  report.config = cfg;

  BitMatrix fallback = detail::greedy_free(cfg.n, cfg.k, cfg.loops);
  ctx.offer(count_ones(fallback));

  auto finish_exhausted = [&](int upper, const std::optional<BitMatrix>& seen) {
    if (seen && count_ones(*seen) > count_ones(fallback)) fallback = *seen;
    report.status = SearchStatus::budget_exhausted;
    report.max_arcs = count_ones(fallback);
    report.witnesses = {canonical_matrix(fallback)};
    report.upper_bound_active = std::max(upper, report.max_arcs);
  };

  if (cfg.prune) {
    detail::PrunedEngine engine(cfg, ctx);
    try {
      const auto classes = engine.solve();
      report.max_arcs = classes.front().arcs;
      report.upper_bound_active = report.max_arcs;
      for (const auto& c : classes) report.witnesses.push_back(detail::to_matrix(c.rows, cfg.loops));
    } catch (const detail::BudgetExhausted&) {
      const auto seen = engine.best_seen();
      finish_exhausted(engine.upper_bound(),
                       seen ? std::optional<BitMatrix>(detail::to_matrix(seen->rows, cfg.loops)) : std::nullopt);
    }
  } else {
    detail::PlainEngine engine(cfg, ctx);
    try {
      engine.run();
      report.max_arcs = engine.best();
      report.upper_bound_active = report.max_arcs;
      report.witnesses = engine.witnesses();
    } catch (const detail::BudgetExhausted&) {
      const auto seen = engine.witnesses();
      finish_exhausted(detail::max_pairs(cfg.n, cfg.loops),
                       seen.empty() ? std::nullopt : std::optional<BitMatrix>(seen.front()));
    }
  }

  report.nodes_explored = ctx.nodes();
  report.elapsed_seconds = ctx.elapsed();
  return report;
}

}  // namespace walkex
