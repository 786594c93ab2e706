#pragma once

#include <Eigen/Core>

#include "spectra/digraph.hpp"
#include "spectra/polynomial.hpp"

namespace spectra {

/// Dense 0/1 adjacency matrix view.
Eigen::MatrixXd adjacency_matrix(const Digraph& d);

/// Exact characteristic polynomial det(xI - A) via the Faddeev-LeVerrier
/// recurrence carried in arbitrary-precision integers. Monic of degree
/// order(); the x^(n-1) coefficient is zero for loop-free digraphs.
Polynomial charpoly_det(const Digraph& d);

/// Exact characteristic polynomial from the digraph coefficients theorem:
/// the x^(n-i) coefficient is the sum of (-1)^(#cycles) over all linear
/// subdigraphs (vertex-disjoint unions of directed cycles) covering i
/// vertices. Enumerates linear subdigraphs directly; independent of the
/// determinant engine. Throws CapExceededError above max_order.
Polynomial charpoly_cycles(const Digraph& d, int max_order = 12);

}  // namespace spectra
