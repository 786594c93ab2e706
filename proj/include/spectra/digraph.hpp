#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spectra {

struct Arc {
  int from = 0;
  int to = 0;
  auto operator<=>(const Arc&) const = default;
};

/// Loop-free simple digraph on vertices 0..n-1, stored as a sorted arc set
/// with per-vertex successor/predecessor bitmasks. Immutable after
/// construction and safe to share across threads.
///
/// Order is capped at 64 so that vertex sets fit in a machine word; every
/// computation in this project lives far below that.
class Digraph {
 public:
  Digraph(int order, std::vector<Arc> arcs);

  int order() const { return order_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_arc(int u, int v) const { return (out_[u] >> v) & 1u; }
  std::uint64_t out_mask(int v) const { return out_[v]; }
  std::uint64_t in_mask(int v) const { return in_[v]; }
  int out_degree(int v) const { return std::popcount(out_[v]); }
  int in_degree(int v) const { return std::popcount(in_[v]); }

  Digraph with_arc(int u, int v) const;
  Digraph without_arc(int u, int v) const;
  /// Subdigraph induced on the set bits of `vertices`, relabeled densely
  /// in increasing original-index order.
  Digraph induced(std::uint64_t vertices) const;
  /// Relabel vertex v to perm[v].
  Digraph relabeled(const std::vector<int>& perm) const;

  bool operator==(const Digraph& other) const {
    return order_ == other.order_ && arcs_ == other.arcs_;
  }

 private:
  int order_;
  std::vector<Arc> arcs_;
  std::vector<std::uint64_t> out_, in_;
};

template <typename F>
void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask) {
    f(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

bool is_strongly_connected(const Digraph& d);

/// BFS distances from `start`, along arcs (forward) or against them;
/// -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Digraph& d, int start, bool forward);

/// Lexicographically least among the shortest directed paths from `from`
/// to `to`, as an inclusive vertex list; empty if unreachable.
std::vector<int> lex_min_shortest_path(const Digraph& d, int from, int to);

/// Directed cycle listed as its vertex sequence; consecutive entries
/// (cyclically) are arcs of the host digraph.
struct CycleWitness {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

/// A shortest directed cycle (the girth witness). Deterministic: among all
/// shortest cycles, the one with the lowest starting vertex and then the
/// lexicographically least vertex list. Throws PreconditionError on
/// acyclic input.
CycleWitness shortest_directed_cycle(const Digraph& d);

/// Isomorphism-invariant encoding: the adjacency matrix, read row-major as
/// an order^2-bit integer, minimized over all relabelings compatible with
/// the (out,in)-degree classes. Two digraphs have equal canonical forms iff
/// they are isomorphic.
struct CanonicalForm {
  int order = 0;
  std::uint64_t bits = 0;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// Throws CapExceededError when d.order() > max_order (default 8, the
/// largest order whose adjacency grid fits the 64-bit encoding).
CanonicalForm canonical_form(const Digraph& d, int max_order = 8);

/// Rebuild the canonical representative digraph from its encoding.
Digraph digraph_from_canonical(const CanonicalForm& cf);

/// Text format: first line "n m", then m lines "u v" (0-based). Loops,
/// duplicate arcs, and out-of-range vertices are parse errors.
Digraph read_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
void write_digraph(std::ostream& out, const Digraph& d);
std::string to_text(const Digraph& d);

}  // namespace spectra
