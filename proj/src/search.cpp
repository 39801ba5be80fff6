#include "matchfactory/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <chrono>
#include <cstring>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matchfactory {

namespace {

// ---------------------------------------------------------------------------
// General maximum matching (Edmonds blossoms, O(V^3)). Buffers are reused
// across calls; one instance per thread.
class BlossomMatcher {
 public:
  void reset(int n) {
    n_ = n;
    adj_.assign(n, {});
    match_.assign(n, -1);
  }

  void add_edge(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  // Number of matched pairs.
  int run() {
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0)
        for (int u : adj_[v])
          if (match_[u] < 0) {
            match_[v] = u;
            match_[u] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0) try_augment(v);
    int covered = 0;
    for (int v = 0; v < n_; ++v)
      if (match_[v] >= 0) ++covered;
    return covered / 2;
  }

  const std::vector<int>& mates() const { return match_; }

 private:
  bool try_augment(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    std::queue<int> q;
    q.push(root);
    used_[root] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          // Odd cycle: contract the blossom up to the common base.
          int curbase = lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = curbase;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) {
            augment(to);
            return true;
          }
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return false;
  }

  int lca(int a, int b) {
    seen_.assign(n_, 0);
    a = base_[a];
    while (true) {
      seen_[a] = 1;
      if (match_[a] == -1) break;
      a = base_[parent_[match_[a]]];
    }
    b = base_[b];
    while (!seen_[b]) b = base_[parent_[match_[b]]];
    return b;
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  void augment(int to) {
    while (to != -1) {
      int pv = parent_[to];
      int next = match_[pv];
      match_[to] = pv;
      match_[pv] = to;
      to = next;
    }
  }

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, seen_, in_blossom_;
};

// ---------------------------------------------------------------------------
// Open-addressing map from a fixed-width support footprint to a tri-state
// answer. Keys are stored contiguously; linear probing.
class FootprintMap {
 public:
  explicit FootprintMap(int words) : words_(std::max(words, 1)) {
    rehash(std::size_t{1} << 12);
  }

  // 0 = unknown, 1 = no, 2 = yes
  std::uint8_t lookup(const std::uint64_t* key) const {
    std::size_t i = probe_start(key);
    while (vals_[i]) {
      if (key_equals(i, key)) return vals_[i];
      i = (i + 1) & mask_;
    }
    return 0;
  }

  void insert(const std::uint64_t* key, bool yes) {
    if ((size_ + 1) * 2 > cap_) grow();
    std::size_t i = probe_start(key);
    while (vals_[i]) {
      if (key_equals(i, key)) return;
      i = (i + 1) & mask_;
    }
    std::memcpy(&keys_[i * words_], key, words_ * sizeof(std::uint64_t));
    vals_[i] = yes ? 2 : 1;
    ++size_;
  }

 private:
  std::size_t probe_start(const std::uint64_t* key) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int w = 0; w < words_; ++w) {
      h ^= key[w];
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 33;
    }
    return static_cast<std::size_t>(h) & mask_;
  }

  bool key_equals(std::size_t slot, const std::uint64_t* key) const {
    return std::memcmp(&keys_[slot * words_], key,
                       words_ * sizeof(std::uint64_t)) == 0;
  }

  void rehash(std::size_t cap) {
    cap_ = cap;
    mask_ = cap - 1;
    keys_.assign(cap * words_, 0);
    vals_.assign(cap, 0);
    size_ = 0;
  }

  void grow() {
    std::vector<std::uint64_t> old_keys = std::move(keys_);
    std::vector<std::uint8_t> old_vals = std::move(vals_);
    std::size_t old_cap = cap_;
    rehash(cap_ * 2);
    for (std::size_t i = 0; i < old_cap; ++i)
      if (old_vals[i]) {
        std::size_t j = probe_start(&old_keys[i * words_]);
        while (vals_[j]) j = (j + 1) & mask_;
        std::memcpy(&keys_[j * words_], &old_keys[i * words_],
                    words_ * sizeof(std::uint64_t));
        vals_[j] = old_vals[i];
        ++size_;
      }
  }

  int words_;
  std::size_t cap_ = 0, mask_ = 0, size_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint8_t> vals_;
};

// ---------------------------------------------------------------------------
// Shared immutable view of the host used by all search entry points.
struct SearchCore {
  struct Arc {
    VertexId to;
    EdgeId e;
    std::uint32_t cls;
  };

  explicit SearchCore(const Multigraph& graph)
      : g(graph), pc(pair_classes(graph)) {
    n = static_cast<int>(g.vertex_count());
    vwords = std::max((n + 63) / 64, 1);
    cwords = std::max((static_cast<int>(pc.count()) + 63) / 64, 1);
    arcs.resize(n);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      arcs[ed.a].push_back({ed.b, e, pc.class_of[e]});
      arcs[ed.b].push_back({ed.a, e, pc.class_of[e]});
    }
  }

  const Multigraph& g;
  PairClasses pc;
  int n = 0, vwords = 0, cwords = 0;
  std::vector<std::vector<Arc>> arcs;
};

// Mutable per-thread search state over one SearchCore.
struct SearchState {
  explicit SearchState(const SearchCore& core_) : core(core_) {
    blocked.assign(core.g.edge_count(), 0);
    class_left.resize(core.pc.count());
    for (std::uint32_t c = 0; c < core.pc.count(); ++c)
      class_left[c] = static_cast<std::uint32_t>(core.pc.members[c].size());
    support.assign(core.cwords, 0);
    for (std::uint32_t c = 0; c < core.pc.count(); ++c)
      if (class_left[c]) support[c >> 6] |= 1ull << (c & 63);
  }

  void block(EdgeId e) {
    blocked[e] = 1;
    std::uint32_t c = core.pc.class_of[e];
    if (--class_left[c] == 0) support[c >> 6] &= ~(1ull << (c & 63));
  }

  void unblock(EdgeId e) {
    blocked[e] = 0;
    std::uint32_t c = core.pc.class_of[e];
    if (class_left[c]++ == 0) support[c >> 6] |= 1ull << (c & 63);
  }

  // Perfect matching existence on the support graph (classes with a free
  // copy). Depends only on `support`, which is what makes memoization exact:
  // whether a multigraph has a perfect matching is a property of the set of
  // endpoint pairs that still carry at least one free copy.
  bool support_has_pm(BlossomMatcher& bm) const {
    if (core.n % 2 != 0) return false;
    bm.reset(core.n);
    for (std::uint32_t c = 0; c < core.pc.count(); ++c)
      if (class_left[c])
        bm.add_edge(static_cast<int>(core.pc.pair_of[c].first),
                    static_cast<int>(core.pc.pair_of[c].second));
    return bm.run() * 2 == core.n;
  }

  // Lift the blossom mates to lowest free EdgeIds. Requires a perfect run.
  std::vector<EdgeId> lift(const BlossomMatcher& bm) const {
    std::unordered_map<std::uint64_t, std::uint32_t> cls_of_pair;
    for (std::uint32_t c = 0; c < core.pc.count(); ++c)
      if (class_left[c])
        cls_of_pair[pair_key(core.pc.pair_of[c].first,
                             core.pc.pair_of[c].second)] = c;
    std::vector<EdgeId> out;
    const auto& mates = bm.mates();
    for (int v = 0; v < core.n; ++v) {
      int u = mates[v];
      if (u < 0 || u < v) continue;
      std::uint32_t c = cls_of_pair.at(pair_key(v, u));
      EdgeId pick = kNoEdge;
      for (EdgeId e : core.pc.members[c])
        if (!blocked[e]) {
          pick = e;
          break;
        }
      assert(pick != kNoEdge);
      out.push_back(pick);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  static std::uint64_t pair_key(std::uint64_t a, std::uint64_t b) {
    return (a << 32) | b;
  }

  const SearchCore& core;
  std::vector<char> blocked;            // per edge: forbidden or used above
  std::vector<std::uint32_t> class_left;
  std::vector<std::uint64_t> support;   // bit per class with a free copy
};

// ---------------------------------------------------------------------------
// Backtracking enumeration of perfect matchings over the unblocked edges.
// Pivot = lowest uncovered vertex, candidate edges in ascending EdgeId, so
// matchings stream in lexicographic order of the chosen id sequence.
class PmEnumerator {
 public:
  using Tick = bool (*)(void*);  // returns false to abort

  PmEnumerator(const SearchCore& core, SearchState& state)
      : core_(core), state_(state), covered_(core.vwords, 0) {
    if (core_.n % 64 != 0)
      covered_.back() = ~0ull << (core_.n % 64);
    if (core_.n == 0) covered_[0] = ~0ull;
  }

  void set_tick(Tick tick, void* ctx) {
    tick_ = tick;
    tick_ctx_ = ctx;
  }

  // cb(chosen) on every complete matching; cb returning false aborts.
  // depth_cap >= 0 emits partial sequences of exactly that length instead
  // (used to carve the tree into independently explorable branches).
  // Returns false iff aborted. Odd-order hosts have no perfect matchings
  // and return immediately.
  template <typename Callback>
  bool enumerate(Callback&& cb, std::uint64_t* node_counter,
                 int depth_cap = -1) {
    if (core_.n % 2 != 0 && depth_cap < 0) return true;
    return walk(cb, node_counter, depth_cap);
  }

  void choose(EdgeId e) {
    const Edge& ed = core_.g.edge(e);
    covered_[ed.a >> 6] |= 1ull << (ed.a & 63);
    covered_[ed.b >> 6] |= 1ull << (ed.b & 63);
    chosen_.push_back(e);
  }

  void unchoose() {
    EdgeId e = chosen_.back();
    chosen_.pop_back();
    const Edge& ed = core_.g.edge(e);
    covered_[ed.a >> 6] &= ~(1ull << (ed.a & 63));
    covered_[ed.b >> 6] &= ~(1ull << (ed.b & 63));
  }

  const std::vector<EdgeId>& chosen() const { return chosen_; }

 private:
  int lowest_uncovered() const {
    for (int w = 0; w < static_cast<int>(covered_.size()); ++w)
      if (~covered_[w])
        return w * 64 + std::countr_one(covered_[w]);
    return -1;
  }

  template <typename Callback>
  bool walk(Callback& cb, std::uint64_t* node_counter, int depth_cap) {
    int pivot = lowest_uncovered();
    if (pivot < 0) return cb(chosen_);
    if (depth_cap >= 0 && static_cast<int>(chosen_.size()) == depth_cap)
      return cb(chosen_);
    if ((++*node_counter & 0x1FFF) == 0 && tick_ && !tick_(tick_ctx_))
      return false;
    for (const SearchCore::Arc& arc : core_.arcs[pivot]) {
      if (state_.blocked[arc.e]) continue;
      if (covered_[arc.to >> 6] >> (arc.to & 63) & 1) continue;
      choose(arc.e);
      bool keep_going = walk(cb, node_counter, depth_cap);
      unchoose();
      if (!keep_going) return false;
    }
    return true;
  }

  const SearchCore& core_;
  SearchState& state_;
  std::vector<std::uint64_t> covered_;
  std::vector<EdgeId> chosen_;
  Tick tick_ = nullptr;
  void* tick_ctx_ = nullptr;
};

void check_forbidden(const Multigraph& g, const std::vector<EdgeId>& ids) {
  for (EdgeId e : ids)
    if (e >= g.edge_count())
      throw std::invalid_argument("forbidden edge id out of range");
}

bool is_perfect_matching(const Multigraph& g, const std::vector<EdgeId>& pm) {
  std::vector<char> covered(g.vertex_count(), 0);
  for (EdgeId e : pm) {
    if (e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (covered[ed.a] || covered[ed.b]) return false;
    covered[ed.a] = covered[ed.b] = 1;
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](char c) { return c != 0; });
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUnknown: return "unknown";
  }
  return "?";
}

std::optional<std::vector<EdgeId>> find_perfect_matching(
    const Multigraph& g, const std::vector<EdgeId>& forbidden) {
  check_forbidden(g, forbidden);
  if (g.vertex_count() % 2 != 0) return std::nullopt;
  SearchCore core(g);
  SearchState state(core);
  for (EdgeId e : forbidden)
    if (!state.blocked[e]) state.block(e);
  BlossomMatcher bm;
  if (!state.support_has_pm(bm)) return std::nullopt;
  return state.lift(bm);
}

bool for_each_perfect_matching(
    const Multigraph& g, const std::vector<EdgeId>& forbidden,
    const std::function<bool(const std::vector<EdgeId>&)>& cb) {
  check_forbidden(g, forbidden);
  SearchCore core(g);
  SearchState state(core);
  for (EdgeId e : forbidden)
    if (!state.blocked[e]) state.block(e);
  PmEnumerator en(core, state);
  std::uint64_t nodes = 0;
  return en.enumerate([&](const std::vector<EdgeId>& pm) { return cb(pm); },
                      &nodes);
}

EnumerateResult enumerate_perfect_matchings(const Multigraph& g,
                                            std::uint64_t cap) {
  if (cap < 1) throw std::invalid_argument("enumerate: cap must be >= 1");
  EnumerateResult res;
  for_each_perfect_matching(g, {}, [&](const std::vector<EdgeId>& pm) {
    if (res.matchings.size() == cap) {
      res.truncated = true;
      return false;
    }
    std::vector<EdgeId> sorted = pm;
    std::sort(sorted.begin(), sorted.end());
    res.matchings.push_back(std::move(sorted));
    return true;
  });
  return res;
}

namespace {

struct WorkerResult {
  bool found = false;
  std::vector<std::vector<EdgeId>> family;
  SearchStats stats;
};

// One worker's depth-first continuation below a fixed level-0 prefix.
class DisjointWorker {
 public:
  DisjointWorker(const SearchCore& core, std::uint32_t m, bool memoize,
                 std::atomic<bool>* stop,
                 std::atomic<std::uint64_t>* shared_nodes,
                 const SearchBudget& budget,
                 std::chrono::steady_clock::time_point t0)
      : core_(core),
        state_(core),
        m_(m),
        memoize_(memoize),
        stop_(stop),
        shared_nodes_(shared_nodes),
        budget_(budget),
        t0_(t0),
        memo_(core.cwords) {
    levels_.resize(m);
  }

  // Explore all completions of `prefix` at level 0 (empty prefix = whole
  // tree). Returns true iff the subtree was fully exhausted without a hit.
  bool run(const std::vector<EdgeId>& prefix, WorkerResult* out) {
    out_ = out;
    bool complete;
    if (m_ == 1) {
      complete = last_level();
    } else {
      PmEnumerator en(core_, state_);
      en.set_tick(&DisjointWorker::tick_thunk, this);
      for (EdgeId e : prefix) en.choose(e);
      complete = en.enumerate(
          [&](const std::vector<EdgeId>& pm) { return on_level_pm(0, pm); },
          &out_->stats.nodes);
    }
    flush();
    return complete && !out_->found;
  }

  bool budget_hit() const { return budget_hit_; }

 private:
  static bool tick_thunk(void* self) {
    return !static_cast<DisjointWorker*>(self)->checkpoint();
  }

  bool on_level_pm(std::uint32_t level, const std::vector<EdgeId>& pm) {
    ++out_->stats.matchings_enumerated;
    if (checkpoint()) return false;
    levels_[level] = pm;
    for (EdgeId e : pm) state_.block(e);
    bool keep_going;
    if (level + 2 == m_) {
      keep_going = last_level();
    } else {
      PmEnumerator en(core_, state_);
      en.set_tick(&DisjointWorker::tick_thunk, this);
      keep_going = en.enumerate(
          [&](const std::vector<EdgeId>& deeper) {
            return on_level_pm(level + 1, deeper);
          },
          &out_->stats.nodes);
    }
    for (EdgeId e : pm) state_.unblock(e);
    return keep_going;
  }

  // Existence of one more disjoint perfect matching; memoized on the
  // remaining support footprint.
  bool last_level() {
    ++out_->stats.nodes;
    if (checkpoint()) return false;
    bool yes;
    std::uint8_t cached = memoize_ ? memo_.lookup(state_.support.data()) : 0;
    if (cached) {
      yes = cached == 2;
    } else {
      yes = state_.support_has_pm(bm_);
      if (memoize_) memo_.insert(state_.support.data(), yes);
    }
    if (!yes) return true;
    // Certificate: rerun the matcher (cache hits bypass it otherwise).
    if (!state_.support_has_pm(bm_))
      throw std::logic_error("support cache inconsistent");
    levels_[m_ - 1] = state_.lift(bm_);
    out_->found = true;
    out_->family = levels_;
    return false;
  }

  // True when the worker should stop.
  bool checkpoint() {
    if (++ticks_ % 512 == 0) flush();
    return stop_->load(std::memory_order_relaxed);
  }

  void flush() {
    std::uint64_t delta = out_->stats.nodes - flushed_;
    flushed_ = out_->stats.nodes;
    std::uint64_t total =
        shared_nodes_->fetch_add(delta, std::memory_order_relaxed) + delta;
    bool over_nodes = total > budget_.max_nodes;
    bool over_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
            .count() > budget_.max_seconds;
    if (over_nodes || over_time) {
      budget_hit_ = true;
      stop_->store(true, std::memory_order_relaxed);
    }
  }

  const SearchCore& core_;
  SearchState state_;
  std::uint32_t m_;
  bool memoize_;
  std::atomic<bool>* stop_;
  std::atomic<std::uint64_t>* shared_nodes_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point t0_;
  FootprintMap memo_;
  BlossomMatcher bm_;
  std::vector<std::vector<EdgeId>> levels_;
  WorkerResult* out_ = nullptr;
  std::uint64_t ticks_ = 0, flushed_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

DisjointFamilyDecision has_disjoint_pms(const Multigraph& g, std::uint32_t m,
                                        const DisjointSearchOptions& opts) {
  if (m < 1) throw std::invalid_argument("has_disjoint_pms: m must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  DisjointFamilyDecision decision;

  if (g.vertex_count() % 2 != 0) {
    // Odd order: no perfect matching exists at all.
    decision.verdict = Verdict::kNo;
    return decision;
  }

  SearchCore core(g);
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> shared_nodes{0};
  int workers = std::max(opts.workers, 1);

  std::vector<std::vector<EdgeId>> prefixes;
  if (workers > 1 && m >= 2 && core.n >= 2) {
    // Carve the level-0 tree at a fixed depth; every complete matching
    // passes through exactly one depth-d node, so the branches partition
    // the leaf set.
    int limit = 32 * workers;
    int max_depth = std::min(8, core.n / 2);
    SearchState probe(core);
    for (int depth = 1; depth <= max_depth; ++depth) {
      prefixes.clear();
      std::uint64_t scratch = 0;
      PmEnumerator en(core, probe);
      en.enumerate(
          [&](const std::vector<EdgeId>& partial) {
            prefixes.push_back(partial);
            return true;
          },
          &scratch, depth);
      if (static_cast<int>(prefixes.size()) >= limit) break;
    }
  }

  bool exhausted = true;
  bool budget_hit = false;

  if (prefixes.size() <= 1) {
    DisjointWorker worker(core, m, opts.memoize_last_level, &stop,
                          &shared_nodes, opts.budget, t0);
    WorkerResult res;
    exhausted = worker.run({}, &res);
    budget_hit = worker.budget_hit();
    decision.stats = res.stats;
    if (res.found) decision.family = std::move(res.family);
  } else {
    std::vector<WorkerResult> results(prefixes.size());
    std::vector<char> completed(prefixes.size(), 0);
    bool any_budget_hit = false;
#ifdef _OPENMP
#pragma omp parallel num_threads(workers) reduction(|| : any_budget_hit)
#endif
    {
      DisjointWorker worker(core, m, opts.memoize_last_level, &stop,
                            &shared_nodes, opts.budget, t0);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(prefixes.size());
           ++i) {
        if (stop.load(std::memory_order_relaxed)) continue;
        completed[i] = worker.run(prefixes[i], &results[i]) ? 1 : 0;
        if (results[i].found) stop.store(true, std::memory_order_relaxed);
      }
      any_budget_hit = any_budget_hit || worker.budget_hit();
    }
    budget_hit = any_budget_hit;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
      decision.stats.nodes += results[i].stats.nodes;
      decision.stats.matchings_enumerated +=
          results[i].stats.matchings_enumerated;
      if (results[i].found && decision.family.empty())
        decision.family = std::move(results[i].family);
      if (!completed[i] && !results[i].found) exhausted = false;
    }
  }

  decision.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  if (!decision.family.empty()) {
    // Revalidate the certificate before reporting it.
    std::vector<char> seen(g.edge_count(), 0);
    for (const auto& pm : decision.family) {
      if (!is_perfect_matching(g, pm))
        throw std::logic_error("certificate failed revalidation");
      for (EdgeId e : pm) {
        if (seen[e]) throw std::logic_error("certificate family overlaps");
        seen[e] = 1;
      }
    }
    if (decision.family.size() != m)
      throw std::logic_error("certificate has wrong family size");
    decision.verdict = Verdict::kYes;
  } else if (exhausted && !budget_hit) {
    decision.verdict = Verdict::kNo;
  } else {
    decision.verdict = Verdict::kUnknown;
  }
  return decision;
}

}  // namespace matchfactory
