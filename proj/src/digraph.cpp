#include "spectra/digraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "spectra/errors.hpp"

namespace spectra {

Digraph::Digraph(int order, std::vector<Arc> arcs)
    : order_(order), arcs_(std::move(arcs)) {
  if (order_ < 1 || order_ > 64)
    throw PreconditionError("digraph order must be in [1, 64]");
  std::sort(arcs_.begin(), arcs_.end());
  out_.assign(order_, 0);
  in_.assign(order_, 0);
  const Arc* prev = nullptr;
  for (const Arc& a : arcs_) {
    if (a.from < 0 || a.from >= order_ || a.to < 0 || a.to >= order_)
      throw PreconditionError("arc endpoint out of range");
    if (a.from == a.to) throw PreconditionError("loops are not allowed");
    if (prev && *prev == a) throw PreconditionError("duplicate arc");
    prev = &a;
    out_[a.from] |= std::uint64_t(1) << a.to;
    in_[a.to] |= std::uint64_t(1) << a.from;
  }
}

Digraph Digraph::with_arc(int u, int v) const {
  std::vector<Arc> arcs = arcs_;
  arcs.push_back({u, v});
  return Digraph(order_, std::move(arcs));
}

Digraph Digraph::without_arc(int u, int v) const {
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  bool found = false;
  for (const Arc& a : arcs_) {
    if (a.from == u && a.to == v) {
      found = true;
      continue;
    }
    arcs.push_back(a);
  }
  if (!found) throw PreconditionError("arc not present");
  return Digraph(order_, std::move(arcs));
}

Digraph Digraph::induced(std::uint64_t vertices) const {
  std::vector<int> newid(order_, -1);
  int k = 0;
  for_each_bit(vertices, [&](int v) { newid[v] = k++; });
  if (k == 0) throw PreconditionError("induced subdigraph must be nonempty");
  std::vector<Arc> arcs;
  for (const Arc& a : arcs_)
    if (newid[a.from] >= 0 && newid[a.to] >= 0)
      arcs.push_back({newid[a.from], newid[a.to]});
  return Digraph(k, std::move(arcs));
}

Digraph Digraph::relabeled(const std::vector<int>& perm) const {
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  for (const Arc& a : arcs_) arcs.push_back({perm[a.from], perm[a.to]});
  return Digraph(order_, std::move(arcs));
}

namespace {

std::uint64_t reach_mask(const Digraph& d, int start, bool forward) {
  std::uint64_t seen = std::uint64_t(1) << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for_each_bit(frontier, [&](int v) {
      next |= forward ? d.out_mask(v) : d.in_mask(v);
    });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  const std::uint64_t all =
      d.order() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << d.order()) - 1;
  return reach_mask(d, 0, true) == all && reach_mask(d, 0, false) == all;
}

std::vector<int> bfs_distances(const Digraph& d, int start, bool forward) {
  std::vector<int> dist(d.order(), -1);
  dist[start] = 0;
  std::vector<int> queue{start};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    for_each_bit(forward ? d.out_mask(v) : d.in_mask(v), [&](int w) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

// Greedy walk over the shortest-path DAG: at each step take the least
// successor that still lies on some shortest path to the target.
std::vector<int> lex_min_shortest_path(const Digraph& d, int from, int to) {
  const std::vector<int> from_s = bfs_distances(d, from, true);
  const std::vector<int> to_t = bfs_distances(d, to, false);
  const int total = from_s[to];
  if (total < 0) return {};
  std::vector<int> path{from};
  int cur = from;
  while (cur != to) {
    int best = -1;
    for_each_bit(d.out_mask(cur), [&](int w) {
      if (best == -1 && from_s[w] == from_s[cur] + 1 && to_t[w] >= 0 &&
          from_s[w] + to_t[w] == total)
        best = w;
    });
    path.push_back(best);
    cur = best;
  }
  return path;
}

CycleWitness shortest_directed_cycle(const Digraph& d) {
  int best_len = -1;
  int best_start = -1;
  for (int s = 0; s < d.order(); ++s) {
    const std::vector<int> dist = bfs_distances(d, s, true);
    for_each_bit(d.in_mask(s), [&](int u) {
      if (dist[u] >= 0 && (best_len < 0 || dist[u] + 1 < best_len)) {
        best_len = dist[u] + 1;
        best_start = s;
      }
    });
  }
  if (best_start == -1) throw PreconditionError("digraph is acyclic");

  // Among closing arcs u->s of minimal total length, take the least path.
  const std::vector<int> dist = bfs_distances(d, best_start, true);
  std::vector<int> best_path;
  for_each_bit(d.in_mask(best_start), [&](int u) {
    if (dist[u] < 0 || dist[u] + 1 != best_len) return;
    std::vector<int> path = lex_min_shortest_path(d, best_start, u);
    if (best_path.empty() || path < best_path) best_path = std::move(path);
  });
  return CycleWitness{std::move(best_path)};
}

namespace {

std::uint64_t grid_bits(const Digraph& d, const std::vector<int>& perm) {
  const int n = d.order();
  std::uint64_t bits = 0;
  for (const Arc& a : d.arcs())
    bits |= std::uint64_t(1) << (perm[a.from] * n + perm[a.to]);
  return bits;
}

}  // namespace

CanonicalForm canonical_form(const Digraph& d, int max_order) {
  const int n = d.order();
  if (max_order > 8) max_order = 8;  // encoding limit: n^2 <= 64 bits
  if (n > max_order) throw CapExceededError("canonical_form order cap exceeded");

  // Group vertices by (out,in) degree; isomorphisms preserve the classes,
  // so minimizing over class-respecting relabelings is still canonical and
  // prunes the permutation search to the product of class factorials.
  std::vector<int> arrangement(n);
  std::iota(arrangement.begin(), arrangement.end(), 0);
  auto cls = [&](int v) { return std::pair(d.out_degree(v), d.in_degree(v)); };
  std::stable_sort(arrangement.begin(), arrangement.end(),
                   [&](int x, int y) { return cls(x) > cls(y); });

  std::vector<std::pair<int, int>> blocks;  // [begin, end) runs of one class
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && cls(arrangement[j]) == cls(arrangement[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  // Odometer over per-block permutations; arrangement[i] gets new label i.
  std::uint64_t best = ~std::uint64_t(0);
  std::vector<int> perm(n);
  bool more = true;
  while (more) {
    for (int i = 0; i < n; ++i) perm[arrangement[i]] = i;
    best = std::min(best, grid_bits(d, perm));
    more = false;
    for (const auto& [b, e] : blocks) {
      if (std::next_permutation(arrangement.begin() + b, arrangement.begin() + e)) {
        more = true;
        break;
      }
    }
  }
  return CanonicalForm{n, best};
}

Digraph digraph_from_canonical(const CanonicalForm& cf) {
  std::vector<Arc> arcs;
  for_each_bit(cf.bits, [&](int b) {
    arcs.push_back({b / cf.order, b % cf.order});
  });
  return Digraph(cf.order, std::move(arcs));
}

Digraph read_digraph(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("expected header line \"n m\"");
  if (n < 1 || n > 64) throw ParseError("order out of range");
  if (m < 0) throw ParseError("negative arc count");
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw ParseError("truncated arc list");
    arcs.push_back({u, v});
  }
  try {
    return Digraph(n, std::move(arcs));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  Digraph d = read_digraph(in);
  std::string rest;
  if (in >> rest) throw ParseError("trailing content after arc list");
  return d;
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.from << ' ' << a.to << '\n';
}

std::string to_text(const Digraph& d) {
  std::ostringstream out;
  write_digraph(out, d);
  return out.str();
}

}  // namespace spectra
