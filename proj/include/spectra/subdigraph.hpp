#pragma once

#include <set>
#include <vector>

#include "spectra/digraph.hpp"
#include "spectra/families.hpp"

namespace spectra {

/// Occurrence of a theta- or infty-digraph inside a host: vertex_map sends
/// vertex i of the abstract family digraph (as numbered by build_theta /
/// build_infty) to a host vertex, and every family arc maps to a host arc.
struct SubdigraphWitness {
  FamilyParams params;
  std::vector<int> vertex_map;

  bool is_theta() const { return std::holds_alternative<ThetaParams>(params); }
  Digraph family_digraph() const;
  /// Host arcs used by the witness.
  std::vector<Arc> mapped_arcs() const;
};

/// The structural construction behind the small-spectral-radius bound for
/// non-bicyclic digraphs: take a shortest directed cycle C, a vertex u off
/// C with an arc u->v into C, and a shortest directed path P from C back
/// to u, entering at the cycle vertex w nearest to u (so P meets C only at
/// w). C, P and the arc u->v form a theta-subdigraph when w != v and an
/// infty-subdigraph when w == v.
///
/// Deterministic: lowest-index tie-breaking for u, v, w and the
/// lexicographically least shortest paths. Requires d strongly connected
/// with at least order()+1 arcs; a bicyclic input returns itself up to
/// relabeling.
SubdigraphWitness find_theta_or_infty_subdigraph(const Digraph& d);

/// Every theta parameter triple (any order >= 3) that embeds in d as a
/// subdigraph. Exhaustive path search; meant for small hosts.
std::set<ThetaParams> all_theta_subdigraphs(const Digraph& d);

}  // namespace spectra
