#include "spectra/charpoly.hpp"

#include <vector>

#include "spectra/errors.hpp"

namespace spectra {

Eigen::MatrixXd adjacency_matrix(const Digraph& d) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d.order(), d.order());
  for (const Arc& arc : d.arcs()) a(arc.from, arc.to) = 1.0;
  return a;
}

namespace {

// Row-major exact integer matrix just big enough for the recurrence;
// boost 1.74's Eigen NumTraits bridge miscompiles with cpp_int, so the
// exact path stays off Eigen.
struct IntMatrix {
  int n;
  std::vector<Int> v;
  explicit IntMatrix(int n_) : n(n_), v(n_ * n_) {}
  Int& at(int i, int j) { return v[i * n + j]; }
  const Int& at(int i, int j) const { return v[i * n + j]; }
};

// product = A * M where A is the 0/1 adjacency of d; exploits sparsity.
IntMatrix adj_times(const Digraph& d, const IntMatrix& m) {
  IntMatrix out(m.n);
  for (int i = 0; i < m.n; ++i)
    for_each_bit(d.out_mask(i), [&](int k) {
      for (int j = 0; j < m.n; ++j) out.at(i, j) += m.at(k, j);
    });
  return out;
}

}  // namespace

Polynomial charpoly_det(const Digraph& d) {
  const int n = d.order();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  // Faddeev-LeVerrier: M_1 = I, M_k = A M_{k-1} + c_{n-k+1} I, and
  // c_{n-k} = -tr(A M_k)/k. Every division is exact over the integers.
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      m = adj_times(d, m);
      for (int i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    }
    Int trace(0);  // tr(A M_k) read off the arc set
    for (const Arc& a : d.arcs()) trace += m.at(a.to, a.from);
    c[n - k] = -trace / k;
  }
  return Polynomial(std::move(c));
}

namespace {

struct CycleCountState {
  const Digraph* d;
  std::vector<Int>* coeff;  // coeff[i] accumulates x^(n-i) contributions
  std::uint64_t used = 0;
  int cycles = 0;
  int covered = 0;
};

void pack_cycles(CycleCountState& st, int min_anchor);

// Extends a path anchor -> ... -> cur of vertices > anchor; closing back to
// the anchor completes one directed cycle of the current linear subdigraph.
void extend_cycle(CycleCountState& st, int anchor, int cur, int len) {
  for_each_bit(st.d->out_mask(cur), [&](int nxt) {
    if (nxt == anchor) {
      st.cycles += 1;
      st.covered += len;
      pack_cycles(st, anchor + 1);
      st.cycles -= 1;
      st.covered -= len;
      return;
    }
    if (nxt < anchor || ((st.used >> nxt) & 1)) return;
    st.used |= std::uint64_t(1) << nxt;
    extend_cycle(st, anchor, nxt, len + 1);
    st.used &= ~(std::uint64_t(1) << nxt);
  });
}

// Each linear subdigraph is generated exactly once: its cycles are anchored
// at their minimum vertices, and anchors are chosen in increasing order.
void pack_cycles(CycleCountState& st, int min_anchor) {
  (*st.coeff)[st.covered] += (st.cycles & 1) ? -1 : 1;
  for (int anchor = min_anchor; anchor < st.d->order(); ++anchor) {
    if ((st.used >> anchor) & 1) continue;
    st.used |= std::uint64_t(1) << anchor;
    extend_cycle(st, anchor, anchor, 1);
    st.used &= ~(std::uint64_t(1) << anchor);
  }
}

}  // namespace

Polynomial charpoly_cycles(const Digraph& d, int max_order) {
  const int n = d.order();
  if (n > max_order)
    throw CapExceededError("charpoly_cycles order cap exceeded");
  std::vector<Int> by_cover(n + 1);
  CycleCountState st{&d, &by_cover};
  pack_cycles(st, 0);
  std::vector<Int> c(n + 1);
  for (int i = 0; i <= n; ++i) c[n - i] = by_cover[i];
  return Polynomial(std::move(c));
}

}  // namespace spectra
