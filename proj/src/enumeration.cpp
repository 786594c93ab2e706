#include "spectra/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <thread>
#include <unordered_set>

#include "spectra/charpoly.hpp"
#include "spectra/errors.hpp"

namespace spectra {

int default_thread_count() {
  if (const char* env = std::getenv("SPECTRA_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Arc slots enumerate the n(n-1) ordered pairs (u,v), u != v, in
// lexicographic order; slot masks keep the hot scan free of Digraph
// construction until a survivor needs canonicalization.
struct SlotSpace {
  int n;
  std::vector<Arc> slot_arc;
  std::vector<std::uint64_t> out_slots, in_slots;  // per-vertex slot masks

  explicit SlotSpace(int n_) : n(n_), out_slots(n_), in_slots(n_) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const int s = static_cast<int>(slot_arc.size());
        slot_arc.push_back({u, v});
        out_slots[u] |= std::uint64_t(1) << s;
        in_slots[v] |= std::uint64_t(1) << s;
      }
  }
  int slots() const { return n * (n - 1); }

  bool strongly_connected(std::uint64_t mask) const {
    for (int v = 0; v < n; ++v)
      if (!(mask & out_slots[v]) || !(mask & in_slots[v])) return false;
    std::uint64_t out[8] = {};
    std::uint64_t rem = mask;
    while (rem) {
      const int s = std::countr_zero(rem);
      rem &= rem - 1;
      out[slot_arc[s].from] |= std::uint64_t(1) << slot_arc[s].to;
    }
    const std::uint64_t all = (std::uint64_t(1) << n) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for_each_bit(frontier, [&](int v) { next |= out[v]; });
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != all) return false;
    // reverse reachability over the same rows
    seen = 1;
    frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for_each_bit(~seen & all, [&](int v) {
        if (out[v] & frontier) next |= std::uint64_t(1) << v;
      });
      frontier = next;
      seen |= next;
    }
    return seen == all;
  }

  Digraph materialize(std::uint64_t mask) const {
    std::vector<Arc> arcs;
    arcs.reserve(std::popcount(mask));
    for_each_bit(mask, [&](int s) { arcs.push_back(slot_arc[s]); });
    return Digraph(n, std::move(arcs));
  }
};

void scan_range(const SlotSpace& ss, std::uint64_t begin, std::uint64_t end,
                std::optional<int> m, std::unordered_set<std::uint64_t>& keys) {
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    if (m && std::popcount(mask) != *m) continue;
    if (!ss.strongly_connected(mask)) continue;
    keys.insert(canonical_form(ss.materialize(mask)).bits);
  }
}

// Fixed-arc-count generation for n in {6,7}: assign each vertex a nonempty
// out-neighborhood, pruning on remaining arc budget, then filter.
void compose_rows(const SlotSpace& ss, int v, int arcs_left,
                  std::uint64_t chosen, std::uint64_t in_cover,
                  std::unordered_set<std::uint64_t>& keys) {
  const int n = ss.n;
  if (v == n) {
    if (arcs_left == 0 && in_cover == (std::uint64_t(1) << n) - 1 &&
        ss.strongly_connected(chosen))
      keys.insert(canonical_form(ss.materialize(chosen)).bits);
    return;
  }
  const int rest = n - v - 1;  // vertices after v still need >= 1 arc each
  const int max_here = std::min(arcs_left - rest, n - 1);
  const std::uint64_t targets = ((std::uint64_t(1) << n) - 1) & ~(std::uint64_t(1) << v);
  for (std::uint64_t sub = targets; sub; sub = (sub - 1) & targets) {
    const int deg = std::popcount(sub);
    if (deg > max_here) continue;
    std::uint64_t row = 0;
    for_each_bit(sub, [&](int w) {
      row |= ss.out_slots[v] & ss.in_slots[w];
    });
    compose_rows(ss, v + 1, arcs_left - deg, chosen | row, in_cover | sub, keys);
  }
}

}  // namespace

std::vector<Digraph> enumerate_strongly_connected(int n, std::optional<int> m,
                                                  int threads) {
  if (n < 1) throw PreconditionError("order must be positive");
  if (threads < 1) threads = 1;
  if (n == 1) {
    std::vector<Digraph> out;
    if (!m || *m == 0) out.push_back(Digraph(1, {}));
    return out;
  }
  if (n > 7) throw CapExceededError("enumeration capped at order 7");
  if (n > 5 && (!m || *m > n + 1))
    throw CapExceededError(
        "orders 6 and 7 require a fixed arc count of at most n+1");

  const SlotSpace ss(n);
  std::unordered_set<std::uint64_t> keys;

  if (n <= 5) {
    const std::uint64_t total = std::uint64_t(1) << ss.slots();
    threads = static_cast<int>(
        std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total >> 10, 1)));
    if (threads == 1) {
      scan_range(ss, 0, total, m, keys);
    } else {
      std::vector<std::unordered_set<std::uint64_t>> parts(threads);
      std::vector<std::thread> pool;
      const std::uint64_t chunk = total / threads + 1;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          scan_range(ss, t * chunk, std::min(total, (t + 1) * chunk), m,
                     parts[t]);
        });
      for (auto& th : pool) th.join();
      for (auto& part : parts) keys.merge(part);
    }
  } else {
    if (*m < n) return {};
    compose_rows(ss, 0, *m, 0, 0, keys);
  }

  std::vector<std::uint64_t> sorted(keys.begin(), keys.end());
  std::sort(sorted.begin(), sorted.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  std::vector<Digraph> out;
  out.reserve(sorted.size());
  for (std::uint64_t bits : sorted)
    out.push_back(digraph_from_canonical(CanonicalForm{n, bits}));
  return out;
}

namespace {

bool before(const RankedEntry& x, const RankedEntry& y) {
  if (x.estimate.value != y.estimate.value)
    return x.estimate.value < y.estimate.value;
  if (x.digraph.order() != y.digraph.order())
    return x.digraph.order() < y.digraph.order();
  return x.digraph.arcs() < y.digraph.arcs();
}

}  // namespace

std::vector<RankedEntry> rank_by_rho(const std::vector<Digraph>& ds, int top_k) {
  std::vector<RankedEntry> entries;
  entries.reserve(ds.size());
  for (const Digraph& d : ds) entries.push_back({d, rho(d), false});
  std::sort(entries.begin(), entries.end(), before);

  const int limit = std::min<int>(top_k + 1, static_cast<int>(entries.size()));
  if (limit < 2) return entries;

  std::vector<Polynomial> polys(limit);
  std::vector<RootBracket> brackets(limit);
  for (int i = 0; i < limit; ++i) {
    polys[i] = charpoly_det(entries[i].digraph);
    brackets[i] = entries[i].estimate.bracket;
  }
  auto certified = [&](int i, int j) {
    CompareOutcome out = compare_bracketed(polys[i], brackets[i], polys[j], brackets[j]);
    brackets[i] = out.left;
    brackets[j] = out.right;
    return out.order;
  };
  // The double sort is already correct in practice; the certified insertion
  // pass both repairs any misordering and proves the final chain.
  for (int i = 1; i < limit; ++i) {
    for (int j = i; j > 0; --j) {
      if (certified(j - 1, j) != Ordering::greater) break;
      std::swap(entries[j - 1], entries[j]);
      std::swap(polys[j - 1], polys[j]);
      std::swap(brackets[j - 1], brackets[j]);
    }
  }
  for (int i = 1; i < limit; ++i)
    entries[i].tied_with_prev = certified(i - 1, i) == Ordering::equal;
  return entries;
}

}  // namespace spectra
