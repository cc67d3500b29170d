#include "zsum/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstring>
#include <mutex>
#include <thread>

#include "zsum/numbers.hpp"

namespace zsum {

namespace {

std::uint64_t mask_of(std::uint64_t order) {
  return order == 64 ? ~0ull : (1ull << order) - 1;
}

unsigned effective_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Run fn(task_index) over [0, count) on `threads` workers, pulling from a
/// shared counter. Result aggregation is the caller's problem.
template <typename Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < count;) fn(i);
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<std::uint64_t>(threads, count);
  pool.reserve(n - 1);
  for (unsigned t = 0; t + 1 < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

void raise_max(std::atomic<std::uint32_t>& best, std::uint32_t v) {
  std::uint32_t cur = best.load(std::memory_order_relaxed);
  while (v > cur && !best.compare_exchange_weak(cur, v)) {
  }
}

void check_budget(const GroupSpec& G, std::uint64_t cap, const char* what) {
  if (G.order() > cap)
    throw BudgetExceeded(std::string(what) + ": |G| = " + std::to_string(G.order()) +
                         " exceeds search budget " + std::to_string(cap));
}

}  // namespace

GroupTable::GroupTable(const GroupSpec& G) : spec_(G) {
  if (G.order() > 64) throw BudgetExceeded("GroupTable: group order exceeds 64");
  moduli_ = G.invariant_factors();
  order_ = G.order();
  exponent_ = G.exponent();
  universe_ = mask_of(order_);

  const std::size_t r = moduli_.size();
  std::vector<std::uint64_t> stride(r, 1);
  for (std::size_t i = 1; i < r; ++i) stride[i] = stride[i - 1] * moduli_[i - 1];

  auto digit = [&](std::uint64_t idx, std::size_t i) { return idx / stride[i] % moduli_[i]; };

  ordv_.resize(order_);
  negv_.resize(order_);
  addv_.resize(order_ * order_);
  for (std::uint64_t a = 0; a < order_; ++a) {
    GroupElement ea(r);
    for (std::size_t i = 0; i < r; ++i) ea[i] = digit(a, i);
    ordv_[a] = static_cast<std::uint8_t>(element_order(ea, spec_));
    std::uint64_t neg = 0;
    for (std::size_t i = 0; i < r; ++i)
      neg += (moduli_[i] - ea[i]) % moduli_[i] * stride[i];
    negv_[a] = static_cast<std::uint8_t>(neg);
    for (std::uint64_t b = 0; b < order_; ++b) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < r; ++i) s += (ea[i] + digit(b, i)) % moduli_[i] * stride[i];
      addv_[a * order_ + b] = static_cast<std::uint8_t>(s);
    }
  }

  // Per-dimension rotation masks: indices whose i-th digit stays below
  // n_i - a move up by a*stride, the rest wrap down.
  std::vector<std::vector<std::uint64_t>> low(r);
  for (std::size_t i = 0; i < r; ++i) {
    low[i].assign(moduli_[i], 0);
    for (std::uint64_t a = 1; a < moduli_[i]; ++a)
      for (std::uint64_t x = 0; x < order_; ++x)
        if (digit(x, i) < moduli_[i] - a) low[i][a] |= 1ull << x;
  }
  rots_.resize(order_);
  for (std::uint64_t g = 0; g < order_; ++g) {
    for (std::size_t i = 0; i < r; ++i) {
      const std::uint64_t a = digit(g, i);
      if (a == 0) continue;
      rots_[g].push_back({low[i][a], static_cast<unsigned>(a * stride[i]),
                          static_cast<unsigned>((moduli_[i] - a) * stride[i])});
    }
  }
}

std::uint64_t GroupTable::index_of(const GroupElement& g) const {
  if (g.size() != moduli_.size())
    throw std::invalid_argument("GroupTable::index_of: wrong coordinate count");
  std::uint64_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    idx += g[i] % moduli_[i] * stride;
    stride *= moduli_[i];
  }
  return idx;
}

GroupElement GroupTable::element_at(std::uint64_t idx) const {
  GroupElement g(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    g[i] = idx % moduli_[i];
    idx /= moduli_[i];
  }
  return g;
}

SumsetState sumset(const GroupSpec& G, const ElementSequence& S) {
  GroupTable t(G);
  SumsetState st;
  st.min_length.assign(t.order(), 0xFF);
  for (const GroupElement& e : S.elements()) {
    const std::uint64_t g = t.index_of(e);
    st.bits |= t.shift(st.bits, g) | (1ull << g);
    std::vector<std::uint8_t> next = st.min_length;
    for (std::uint64_t s = 0; s < t.order(); ++s) {
      const std::uint8_t via = st.min_length[t.sub(s, g)];
      if (via != 0xFF && via + 1 < next[s]) next[s] = static_cast<std::uint8_t>(via + 1);
    }
    if (next[g] > 1) next[g] = 1;
    st.min_length = std::move(next);
  }
  return st;
}

// ---------------------------------------------------------------------------
// Davenport constant.
//
// Enumerates zero-sumfree multisets in canonical (sorted) order, carrying the
// sumset bitmap. Appending g to zero-sumfree S keeps it zero-sumfree iff
// -g is not in Sigma(S). Pruning uses the extension bound: appending any
// element to a zero-sumfree sequence grows the sumset by at least one (it
// newly contains sigma(S) + g), so a node with sumset size c and length l
// roots sequences of length at most l + (|G| - 1 - c).
// ---------------------------------------------------------------------------

namespace {

struct DavenportSearch {
  const GroupTable& t;
  bool prune;
  std::atomic<std::uint32_t>& best;

  void dfs(std::uint64_t bits, std::uint32_t len, std::uint64_t start) {
    for (std::uint64_t g = start; g < t.order(); ++g) {
      if ((bits >> t.neg(g)) & 1ull) continue;
      const std::uint64_t nb = bits | t.shift(bits, g) | (1ull << g);
      const std::uint32_t nlen = len + 1;
      raise_max(best, nlen);
      if (prune && nlen + (t.order() - 1 - std::popcount(nb)) <=
                       best.load(std::memory_order_relaxed))
        continue;
      dfs(nb, nlen, g);
    }
  }
};

struct PrefixTask {
  std::uint64_t bits;
  std::uint64_t minlen_extra;  // eta only: packed copy slot, unused here
  std::uint32_t len;
  std::uint64_t start;
};

std::uint32_t max_zero_sumfree_length(const GroupTable& t, const SearchOptions& opts) {
  std::atomic<std::uint32_t> best{0};
  DavenportSearch search{t, opts.use_pruning, best};
  const unsigned threads = effective_threads(opts.threads);
  if (threads <= 1 || t.order() <= 8) {
    search.dfs(0, 0, 1);
    return best.load();
  }
  // Split at depth two; prefix lengths are folded into `best` up front.
  std::vector<PrefixTask> tasks;
  for (std::uint64_t g1 = 1; g1 < t.order(); ++g1) {
    const std::uint64_t b1 = 1ull << g1;
    raise_max(best, 1);
    for (std::uint64_t g2 = g1; g2 < t.order(); ++g2) {
      if ((b1 >> t.neg(g2)) & 1ull) continue;
      raise_max(best, 2);
      tasks.push_back({b1 | t.shift(b1, g2) | (1ull << g2), 0, 2, g2});
    }
  }
  parallel_for(tasks.size(), threads, [&](std::uint64_t i) {
    DavenportSearch s{t, opts.use_pruning, best};
    s.dfs(tasks[i].bits, tasks[i].len, tasks[i].start);
  });
  return best.load();
}

}  // namespace

std::uint64_t davenport_exact(const GroupSpec& G, const SearchOptions& opts) {
  check_budget(G, std::min<std::uint64_t>(opts.max_order, 64), "davenport_exact");
  if (G.is_trivial()) return 1;
  GroupTable t(G);
  return max_zero_sumfree_length(t, opts) + 1;
}

// ---------------------------------------------------------------------------
// eta.
//
// Enumerates "short-zero-sum-free" multisets with a per-sum minimal-length
// table, saturated at exp+1 (only "<= exp" matters). A value v can appear at
// most ord(v)-1 times, which both bounds the search and yields the capacity
// prune len + sum_{v >= start}(ord(v)-1) <= best.
//
// Shortcut: if the Davenport search finds D(G) <= exp(G), then eta(G) = D(G):
// sequences of length <= exp are short-zero-sum-free iff zero-sumfree, and
// nothing longer than D-1 <= exp-1 can avoid zero-sums.
// ---------------------------------------------------------------------------

namespace {

struct EtaSearch {
  const GroupTable& t;
  std::uint8_t cap;  // exp + 1
  bool prune;
  std::atomic<std::uint32_t>& best;
  std::vector<std::uint32_t> suffix_cap;

  using MinLen = std::array<std::uint8_t, 64>;

  // Returns false (and leaves `out` unspecified) if appending g creates a
  // zero-sum of length <= exp.
  bool extend(const MinLen& ml, std::uint64_t g, MinLen& out) const {
    const std::uint64_t n = t.order();
    for (std::uint64_t s = 0; s < n; ++s) {
      std::uint8_t v = ml[s];
      const std::uint8_t via = ml[t.sub(s, g)];
      if (via + 1 < v) v = static_cast<std::uint8_t>(via + 1);
      if (v > cap) v = cap;
      out[s] = v;
    }
    if (out[g] > 1) out[g] = 1;
    return out[0] >= cap;
  }

  void dfs(const MinLen& ml, std::uint32_t len, std::uint64_t start) {
    MinLen next;
    for (std::uint64_t g = start; g < t.order(); ++g) {
      if (!extend(ml, g, next)) continue;
      const std::uint32_t nlen = len + 1;
      raise_max(best, nlen);
      if (prune && nlen + suffix_cap[g] <= best.load(std::memory_order_relaxed)) continue;
      dfs(next, nlen, g);
    }
  }
};

}  // namespace

std::uint64_t eta_exact(const GroupSpec& G, const SearchOptions& opts) {
  check_budget(G, std::min<std::uint64_t>(opts.max_order, 64), "eta_exact");
  if (G.is_trivial()) return 1;
  const std::uint64_t dav = davenport_exact(G, opts);
  if (dav <= G.exponent()) return dav;

  GroupTable t(G);
  std::atomic<std::uint32_t> best{0};
  EtaSearch search{t, static_cast<std::uint8_t>(G.exponent() + 1), opts.use_pruning, best, {}};
  search.suffix_cap.assign(t.order() + 1, 0);
  for (std::uint64_t g = t.order(); g-- > 1;)
    search.suffix_cap[g] = search.suffix_cap[g + 1] + static_cast<std::uint32_t>(t.order_of(g) - 1);

  EtaSearch::MinLen root;
  root.fill(search.cap);

  const unsigned threads = effective_threads(opts.threads);
  if (threads <= 1 || t.order() <= 8) {
    search.dfs(root, 0, 1);
    return best.load() + 1;
  }
  struct Task {
    EtaSearch::MinLen ml;
    std::uint64_t start;
  };
  std::vector<Task> tasks;
  EtaSearch::MinLen one, two;
  for (std::uint64_t g1 = 1; g1 < t.order(); ++g1) {
    if (!search.extend(root, g1, one)) continue;
    raise_max(best, 1);
    for (std::uint64_t g2 = g1; g2 < t.order(); ++g2) {
      if (!search.extend(one, g2, two)) continue;
      raise_max(best, 2);
      tasks.push_back({two, g2});
    }
  }
  parallel_for(tasks.size(), threads, [&](std::uint64_t i) {
    EtaSearch s = search;
    s.dfs(tasks[i].ml, 2, tasks[i].start);
  });
  return best.load() + 1;
}

// ---------------------------------------------------------------------------
// Relative constants over the subgroup G_d = {x : dx = 0}, measuring escape
// from the target T = G_{d/d'} = {x in G_d : (d/d')x = 0}.
// ---------------------------------------------------------------------------

namespace {

struct RelativeContext {
  GroupTable table;
  std::uint64_t target = 0;  // bitmap of T inside G_d
  std::uint64_t ratio = 1;   // d / d'
};

RelativeContext relative_context(const GroupSpec& G, std::uint64_t d_prime, std::uint64_t d,
                                 std::uint64_t cap, const char* what) {
  if (d == 0 || d_prime == 0 || G.exponent() % d != 0 || d % d_prime != 0)
    throw std::invalid_argument(std::string(what) + ": need d' | d | exp(G)");
  std::vector<std::uint64_t> sub;
  for (std::uint64_t m : subgroup_factors(G, d))
    if (m > 1) sub.push_back(m);
  const GroupSpec Gd = GroupSpec::from_moduli(sub);
  check_budget(Gd, std::min<std::uint64_t>(cap, 64), what);
  RelativeContext ctx{GroupTable(Gd), 0, d / d_prime};
  for (std::uint64_t x = 0; x < ctx.table.order(); ++x)
    if (ctx.ratio % ctx.table.order_of(x) == 0) ctx.target |= 1ull << x;
  return ctx;
}

// Zero-sumfree-style search where "forbidden" means the sumset touches T.
struct RelativeDSearch {
  const GroupTable& t;
  std::uint64_t target;
  bool prune;
  std::uint32_t best = 0;

  void dfs(std::uint64_t bits, std::uint32_t len, std::uint64_t start) {
    for (std::uint64_t g = start; g < t.order(); ++g) {
      if ((target >> g) & 1ull) continue;
      const std::uint64_t nb = bits | t.shift(bits, g) | (1ull << g);
      if (nb & target) continue;
      const std::uint32_t nlen = len + 1;
      best = std::max(best, nlen);
      if (prune && nlen + (t.order() - std::popcount(nb | target)) <= best) continue;
      dfs(nb, nlen, g);
    }
  }
};

struct RelativeEtaSearch {
  const GroupTable& t;
  std::uint64_t target;
  std::uint8_t cap;  // d' + 1
  std::uint32_t best = 0;
  std::vector<std::uint32_t> suffix_cap;
  bool prune;

  using MinLen = std::array<std::uint8_t, 64>;

  bool extend(const MinLen& ml, std::uint64_t g, MinLen& out) const {
    for (std::uint64_t s = 0; s < t.order(); ++s) {
      std::uint8_t v = ml[s];
      const std::uint8_t via = ml[t.sub(s, g)];
      if (via + 1 < v) v = static_cast<std::uint8_t>(via + 1);
      if (v > cap) v = cap;
      out[s] = v;
    }
    if (out[g] > 1) out[g] = 1;
    for (std::uint64_t s = 0; s < t.order(); ++s)
      if (((target >> s) & 1ull) && out[s] < cap) return false;
    return true;
  }

  void dfs(const MinLen& ml, std::uint32_t len, std::uint64_t start) {
    MinLen next;
    for (std::uint64_t g = start; g < t.order(); ++g) {
      if (!extend(ml, g, next)) continue;
      const std::uint32_t nlen = len + 1;
      best = std::max(best, nlen);
      if (prune && nlen + suffix_cap[g] <= best) continue;
      dfs(next, nlen, g);
    }
  }
};

}  // namespace

std::uint64_t d_relative_exact(const GroupSpec& G, std::uint64_t d_prime, std::uint64_t d,
                               const SearchOptions& opts) {
  RelativeContext ctx = relative_context(G, d_prime, d, opts.max_order, "d_relative_exact");
  RelativeDSearch search{ctx.table, ctx.target, opts.use_pruning};
  search.dfs(0, 0, 0);
  return search.best + 1;
}

std::uint64_t eta_relative_exact(const GroupSpec& G, std::uint64_t d_prime, std::uint64_t d,
                                 const SearchOptions& opts) {
  RelativeContext ctx = relative_context(G, d_prime, d, opts.max_order, "eta_relative_exact");
  RelativeEtaSearch search{ctx.table, ctx.target, static_cast<std::uint8_t>(d_prime + 1),
                           0,         {},         opts.use_pruning};
  search.suffix_cap.assign(ctx.table.order() + 1, 0);
  for (std::uint64_t g = ctx.table.order(); g-- > 0;)
    search.suffix_cap[g] =
        search.suffix_cap[g + 1] +
        (((ctx.target >> g) & 1ull) ? 0u
                                    : static_cast<std::uint32_t>(
                                          std::min<std::uint64_t>(ctx.table.order_of(g), d_prime + 1) - 1));
  RelativeEtaSearch::MinLen root;
  root.fill(search.cap);
  search.dfs(root, 0, 0);
  return search.best + 1;
}

// ---------------------------------------------------------------------------
// Cross numbers. Contributions 1/ord(g) are tracked as integers scaled by
// exp(G); every order divides exp, so k(S) * exp is integral. Pruning uses
// the exact per-element maximum exp/P^-(exp) and the Davenport length cap.
// ---------------------------------------------------------------------------

namespace {

struct CrossIncumbent {
  std::mutex mu;
  std::atomic<std::uint64_t> best_t{0};
  std::uint32_t best_len = 0;
  bool seeded = false;
  std::vector<std::vector<std::uint8_t>> paths;

  void offer(std::uint64_t tval, const std::vector<std::uint8_t>& path) {
    std::scoped_lock lock(mu);
    const auto len = static_cast<std::uint32_t>(path.size());
    if (seeded) {
      const std::uint64_t cur = best_t.load(std::memory_order_relaxed);
      if (tval < cur || (tval == cur && len > best_len)) return;
      if (tval == cur && len == best_len) {
        paths.push_back(path);
        return;
      }
    }
    seeded = true;
    best_t.store(tval, std::memory_order_relaxed);
    best_len = len;
    paths.clear();
    paths.push_back(path);
  }
};

struct LittleCrossSearch {
  const GroupTable& t;
  std::uint64_t max_inc;   // exp / P^-(exp), times-exp scale
  std::uint32_t max_len;   // D(G) - 1
  bool prune;
  CrossIncumbent& inc;
  std::vector<std::uint8_t> path;

  void dfs(std::uint64_t bits, std::uint64_t tval, std::uint64_t start) {
    const auto len = static_cast<std::uint32_t>(path.size());
    if (len >= max_len) return;
    for (std::uint64_t g = start; g < t.order(); ++g) {
      if ((bits >> t.neg(g)) & 1ull) continue;
      const std::uint64_t nb = bits | t.shift(bits, g) | (1ull << g);
      const std::uint64_t nt = tval + t.exponent() / t.order_of(g);
      path.push_back(static_cast<std::uint8_t>(g));
      inc.offer(nt, path);
      const std::uint64_t slots =
          std::min<std::uint64_t>(max_len - len - 1, t.order() - 1 - std::popcount(nb));
      if (!prune || nt + slots * max_inc >= inc.best_t.load(std::memory_order_relaxed))
        dfs(nb, nt, g);
      path.pop_back();
    }
  }
};

struct CrossSearch {
  const GroupTable& t;
  std::uint64_t max_inc;
  std::uint32_t max_len;
  bool prune;
  std::atomic<std::uint64_t>& best;

  void raise(std::uint64_t v) {
    std::uint64_t cur = best.load(std::memory_order_relaxed);
    while (v > cur && !best.compare_exchange_weak(cur, v)) {
    }
  }

  void dfs(std::uint64_t bits, std::uint64_t sum, std::uint64_t tval, std::uint32_t len,
           std::uint64_t start) {
    if (len >= max_len) return;
    for (std::uint64_t g = start; g < t.order(); ++g) {
      if ((bits >> t.neg(g)) & 1ull) continue;
      const std::uint64_t nb = bits | t.shift(bits, g) | (1ull << g);
      const std::uint64_t ns = t.add(sum, g);
      const std::uint64_t nt = tval + t.exponent() / t.order_of(g);
      raise(nt + t.exponent() / t.order_of(t.neg(ns)));
      const std::uint64_t slots =
          std::min<std::uint64_t>(max_len - len - 1, t.order() - 1 - std::popcount(nb));
      if (!prune ||
          nt + (slots + 1) * max_inc >= best.load(std::memory_order_relaxed))
        dfs(nb, ns, nt, len + 1, g);
    }
  }
};

}  // namespace

LittleCrossResult little_cross_exact(const GroupSpec& G, const SearchOptions& opts) {
  check_budget(G, std::min<std::uint64_t>(opts.max_order_cross, 64), "little_cross_exact");
  SearchOptions dopts = opts;
  dopts.max_order = std::max(opts.max_order, opts.max_order_cross);
  const std::uint64_t dav = davenport_exact(G, dopts);
  if (G.is_trivial())
    return {Rational(0), {{ElementSequence{}, Rational(0), {}}}, dav};

  GroupTable t(G);
  const std::uint64_t exp = t.exponent();
  CrossIncumbent inc;
  inc.offer(0, {});  // the empty sequence is zero-sumfree with k = 0
  LittleCrossSearch search{
      t, exp / pminus(exp), static_cast<std::uint32_t>(dav - 1), opts.use_pruning, inc, {}};

  const unsigned threads = effective_threads(opts.threads);
  if (threads <= 1 || t.order() <= 8) {
    search.dfs(0, 0, 1);
  } else {
    struct Task {
      std::uint64_t bits, tval;
      std::vector<std::uint8_t> path;
    };
    std::vector<Task> tasks;
    for (std::uint64_t g1 = 1; g1 < t.order() && dav >= 2; ++g1) {
      const std::uint64_t b1 = 1ull << g1;
      const std::uint64_t t1 = exp / t.order_of(g1);
      inc.offer(t1, {static_cast<std::uint8_t>(g1)});
      for (std::uint64_t g2 = g1; g2 < t.order() && dav >= 3; ++g2) {
        if ((b1 >> t.neg(g2)) & 1ull) continue;
        const std::uint64_t t2 = t1 + exp / t.order_of(g2);
        Task task{b1 | t.shift(b1, g2) | (1ull << g2),
                  t2,
                  {static_cast<std::uint8_t>(g1), static_cast<std::uint8_t>(g2)}};
        inc.offer(t2, task.path);
        tasks.push_back(std::move(task));
      }
    }
    parallel_for(tasks.size(), threads, [&](std::uint64_t i) {
      LittleCrossSearch s{t,    exp / pminus(exp), static_cast<std::uint32_t>(dav - 1),
                          opts.use_pruning, inc,  tasks[i].path};
      s.dfs(tasks[i].bits, tasks[i].tval, tasks[i].path.back());
    });
  }

  std::sort(inc.paths.begin(), inc.paths.end());
  LittleCrossResult result;
  result.value = make_rational(Integer(static_cast<unsigned long>(inc.best_t.load())),
                               Integer(static_cast<unsigned long>(exp)));
  result.davenport = dav;
  for (const auto& path : inc.paths) {
    ExtremalWitness w;
    w.cross = Rational(0);
    for (std::uint8_t g : path) {
      w.sequence.push(t.element_at(g));
      w.profile[t.order_of(g)] += 1;
      w.cross += make_rational(1, static_cast<long>(t.order_of(g)));
    }
    result.witnesses.push_back(std::move(w));
  }
  return result;
}

Rational cross_exact(const GroupSpec& G, const SearchOptions& opts) {
  check_budget(G, std::min<std::uint64_t>(opts.max_order_cross, 64), "cross_exact");
  if (G.is_trivial()) return Rational(1);
  SearchOptions dopts = opts;
  dopts.max_order = std::max(opts.max_order, opts.max_order_cross);
  const std::uint64_t dav = davenport_exact(G, dopts);

  GroupTable t(G);
  const std::uint64_t exp = t.exponent();
  std::atomic<std::uint64_t> best{0};
  CrossSearch search{t, exp / pminus(exp), static_cast<std::uint32_t>(dav), opts.use_pruning,
                     best};

  const unsigned threads = effective_threads(opts.threads);
  if (threads <= 1 || t.order() <= 8) {
    search.dfs(0, 0, 0, 0, 1);
  } else {
    struct Task {
      std::uint64_t bits, sum, tval;
      std::uint32_t len;
      std::uint64_t start;
    };
    std::vector<Task> tasks;
    for (std::uint64_t g1 = 1; g1 < t.order(); ++g1) {
      const std::uint64_t b1 = 1ull << g1;
      const std::uint64_t t1 = exp / t.order_of(g1);
      search.raise(t1 + exp / t.order_of(t.neg(g1)));
      for (std::uint64_t g2 = g1; g2 < t.order() && dav >= 2; ++g2) {
        if ((b1 >> t.neg(g2)) & 1ull) continue;
        const std::uint64_t s2 = t.add(g1, g2);
        const std::uint64_t t2 = t1 + exp / t.order_of(g2);
        search.raise(t2 + exp / t.order_of(t.neg(s2)));
        tasks.push_back({b1 | t.shift(b1, g2) | (1ull << g2), s2, t2, 2, g2});
      }
    }
    parallel_for(tasks.size(), threads, [&](std::uint64_t i) {
      CrossSearch s = search;
      s.dfs(tasks[i].bits, tasks[i].sum, tasks[i].tval, tasks[i].len, tasks[i].start);
    });
  }
  return make_rational(Integer(static_cast<unsigned long>(best.load())),
                       Integer(static_cast<unsigned long>(exp)));
}

}  // namespace zsum
