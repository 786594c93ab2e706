#include "spectra/subdigraph.hpp"

#include <algorithm>

#include "spectra/errors.hpp"

namespace spectra {

Digraph SubdigraphWitness::family_digraph() const {
  if (const auto* t = std::get_if<ThetaParams>(&params)) return build_theta(*t);
  return build_infty(std::get<InftyParams>(params));
}

std::vector<Arc> SubdigraphWitness::mapped_arcs() const {
  const Digraph family = family_digraph();
  std::vector<Arc> out;
  out.reserve(family.arc_count());
  for (const Arc& a : family.arcs())
    out.push_back({vertex_map[a.from], vertex_map[a.to]});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Rotates the cycle list to start at `v` and returns the vertices strictly
// between `from` and `to` when walking the cycle forward.
std::vector<int> cycle_segment_interior(const std::vector<int>& cycle,
                                        int from, int to) {
  const int len = static_cast<int>(cycle.size());
  int pos = 0;
  while (cycle[pos] != from) ++pos;
  std::vector<int> interior;
  for (int i = (pos + 1) % len; cycle[i] != to; i = (i + 1) % len)
    interior.push_back(cycle[i]);
  return interior;
}

}  // namespace

SubdigraphWitness find_theta_or_infty_subdigraph(const Digraph& d) {
  if (!is_strongly_connected(d))
    throw PreconditionError("subdigraph construction requires strong connectivity");
  if (d.arc_count() < d.order() + 1)
    throw PreconditionError("subdigraph construction requires a non-cycle digraph");

  const CycleWitness cycle = shortest_directed_cycle(d);
  std::uint64_t cycle_mask = 0;
  for (int v : cycle.vertices) cycle_mask |= std::uint64_t(1) << v;

  // Lowest vertex off the cycle with an arc into it; then its lowest target.
  int u = -1, v = -1;
  for (int cand = 0; cand < d.order() && u < 0; ++cand) {
    if ((cycle_mask >> cand) & 1) continue;
    const std::uint64_t into = d.out_mask(cand) & cycle_mask;
    if (into) {
      u = cand;
      v = std::countr_zero(into);
    }
  }
  if (u < 0)
    throw PreconditionError("no arc into a shortest cycle from outside");

  // Cycle vertex nearest to u; any shortest path from it meets the cycle
  // only at its start, since an interior cycle vertex would be nearer.
  const std::vector<int> to_u = bfs_distances(d, u, false);
  int w = -1;
  for (int cand : cycle.vertices)
    if (w < 0 || to_u[cand] < to_u[w] || (to_u[cand] == to_u[w] && cand < w))
      w = cand;
  const std::vector<int> path = lex_min_shortest_path(d, w, u);
  const int p = static_cast<int>(path.size()) - 1;  // arcs w -> ... -> u

  std::vector<int> vertex_map;
  if (w == v) {
    // Two cycles sharing exactly v: the host cycle and v ->P-> u -> v.
    const int k_host = cycle.length();
    const int k_new = p + 1;
    InftyParams params(std::min(k_host, k_new), std::max(k_host, k_new));
    std::vector<int> host_interior = cycle_segment_interior(cycle.vertices, v, v);
    std::vector<int> new_interior(path.begin() + 1, path.end());
    vertex_map.push_back(v);
    const auto& first = k_host <= k_new ? host_interior : new_interior;
    const auto& second = k_host <= k_new ? new_interior : host_interior;
    vertex_map.insert(vertex_map.end(), first.begin(), first.end());
    vertex_map.insert(vertex_map.end(), second.begin(), second.end());
    return SubdigraphWitness{FamilyParams(params), std::move(vertex_map)};
  }

  // Hubs w and v: two forward paths w->v (cycle segment of length r, and
  // P extended by the arc u->v, of length p+1) and the cycle segment v->w.
  std::vector<int> seg_wv = cycle_segment_interior(cycle.vertices, w, v);
  std::vector<int> seg_vw = cycle_segment_interior(cycle.vertices, v, w);
  const int r = static_cast<int>(seg_wv.size()) + 1;
  std::vector<int> via_u(path.begin() + 1, path.end());  // interior incl. u
  const int s = p + 1;
  const auto& a_interior = r <= s ? seg_wv : via_u;
  const auto& b_interior = r <= s ? via_u : seg_wv;
  ThetaParams params(std::min(r, s) - 1, std::max(r, s) - 1,
                     static_cast<int>(seg_vw.size()));
  vertex_map.push_back(w);
  vertex_map.push_back(v);
  vertex_map.insert(vertex_map.end(), a_interior.begin(), a_interior.end());
  vertex_map.insert(vertex_map.end(), b_interior.begin(), b_interior.end());
  vertex_map.insert(vertex_map.end(), seg_vw.begin(), seg_vw.end());
  return SubdigraphWitness{FamilyParams(params), std::move(vertex_map)};
}

namespace {

struct PathRecord {
  std::uint64_t interior = 0;  // vertices strictly between the endpoints
  int length = 0;              // arcs
};

void collect_paths(const Digraph& d, int cur, int target, std::uint64_t used,
                   int len, std::vector<PathRecord>& out) {
  for_each_bit(d.out_mask(cur), [&](int nxt) {
    if (nxt == target) {
      out.push_back({used, len + 1});
      return;
    }
    if ((used >> nxt) & 1) return;
    collect_paths(d, nxt, target, used | (std::uint64_t(1) << nxt), len + 1, out);
  });
}

// All simple directed paths s -> t; interiors exclude both endpoints.
std::vector<PathRecord> simple_paths(const Digraph& d, int s, int t) {
  std::vector<PathRecord> out;
  collect_paths(d, s, t, std::uint64_t(1) << s, 0, out);
  for (PathRecord& p : out) p.interior &= ~(std::uint64_t(1) << s);
  return out;
}

}  // namespace

std::set<ThetaParams> all_theta_subdigraphs(const Digraph& d) {
  std::set<ThetaParams> found;
  const int n = d.order();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      const std::vector<PathRecord> fwd = simple_paths(d, s, t);
      if (fwd.size() < 2) continue;
      const std::vector<PathRecord> back = simple_paths(d, t, s);
      if (back.empty()) continue;
      const std::uint64_t hubs =
          (std::uint64_t(1) << s) | (std::uint64_t(1) << t);
      for (size_t i = 0; i < fwd.size(); ++i)
        for (size_t j = i + 1; j < fwd.size(); ++j) {
          if (fwd[i].interior & fwd[j].interior) continue;
          const std::uint64_t used = fwd[i].interior | fwd[j].interior | hubs;
          for (const PathRecord& ret : back) {
            if (ret.interior & used) continue;
            const int la = std::min(fwd[i].length, fwd[j].length);
            const int lb = std::max(fwd[i].length, fwd[j].length);
            found.insert(ThetaParams(la - 1, lb - 1, ret.length - 1));
          }
        }
    }
  return found;
}

}  // namespace spectra
