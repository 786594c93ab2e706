#pragma once

#include <optional>
#include <vector>

#include "spectra/digraph.hpp"
#include "spectra/perron.hpp"

namespace spectra {

/// Number of worker threads for the enumeration scan: SPECTRA_THREADS when
/// set, otherwise the hardware concurrency.
int default_thread_count();

/// Every strongly connected simple digraph of order n with m arcs (all arc
/// counts when m is empty), exactly one canonical representative per
/// isomorphism class, sorted by (arc count, canonical encoding).
///
/// Caps: n <= 5 for the full 2^(n(n-1)) scan, n <= 7 for fixed m <= n+1.
/// The scan partitions the arc-subset space across threads and merges the
/// per-partition canonical sets, so results do not depend on scheduling.
std::vector<Digraph> enumerate_strongly_connected(int n, std::optional<int> m,
                                                  int threads = 1);

struct RankedEntry {
  Digraph digraph;
  PerronEstimate estimate;
  bool tied_with_prev = false;  // certified equal spectral radii
};

/// Sorts the inputs by spectral radius, ascending, certifying the pairwise
/// order among the first top_k+1 entries with exact-sign comparisons of
/// their characteristic polynomials. Input order does not matter; ties are
/// flagged explicitly. All inputs must be strongly connected.
std::vector<RankedEntry> rank_by_rho(const std::vector<Digraph>& ds, int top_k);

}  // namespace spectra
