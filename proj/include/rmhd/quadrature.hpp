//========================================================================================
// rmhd1d - a 1D slab-geometry radiation-magnetohydrodynamics solver
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file quadrature.hpp
//  \brief Gauss-Legendre angular discretization of n in [-1,1] and the moment operators.
//
// Slab geometry: <n^k f> = (1/2) sum_m w_m n_m^k f_m. Weights sum to 2, nodes are
// symmetric about 0, and full-range moments of polynomials are exact up to degree
// 2*order-1.

#ifndef RMHD_QUADRATURE_HPP_
#define RMHD_QUADRATURE_HPP_

#include <cmath>
#include <span>
#include <vector>

#include "core.hpp"

namespace rmhd {

struct Quadrature {
  int order = 0;                 // number of ordinates
  std::vector<double> nodes;     // strictly increasing, symmetric about 0
  std::vector<double> weights;   // positive, symmetric, sum = 2
};

//! Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_order.
inline Quadrature build_quadrature(int order) {
  if (order < 2 || order % 2 != 0)
    throw invalid_argument_error("build_quadrature: order must be even and >= 2");
  Quadrature q;
  q.order = order;
  q.nodes.assign(order, 0.0);
  q.weights.assign(order, 0.0);
  const int m = order / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-like initial guess for the i-th positive root (descending)
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_order(x) and derivative
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[order - 1 - i] = x;
    q.nodes[i] = -x;
    q.weights[i] = w;
    q.weights[order - 1 - i] = w;
  }
  return q;
}

//! <n^k f> = (1/2) sum w_m n_m^k f_m, k in 0..3
inline double moment(std::span<const double> values, int k, const Quadrature& quad) {
  if (static_cast<int>(values.size()) != quad.order)
    throw invalid_argument_error("moment: values length does not match quadrature order");
  if (k < 0 || k > 3) throw invalid_argument_error("moment: k must be in 0..3");
  double s = 0.0;
  for (int m = 0; m < quad.order; ++m) {
    double nk = 1.0;
    for (int j = 0; j < k; ++j) nk *= quad.nodes[m];
    s += quad.weights[m] * nk * values[m];
  }
  return 0.5 * s;
}

//! plain half-range sums sum_{n_m>0} w_m n_m^k f_m (and the n<0 counterpart);
//! these are the building blocks of the upwinded interface flux moments.
inline double half_sum_pos(std::span<const double> f, int k, const Quadrature& quad) {
  double s = 0.0;
  for (int m = 0; m < quad.order; ++m) {
    if (quad.nodes[m] > 0.0) {
      double nk = 1.0;
      for (int j = 0; j < k; ++j) nk *= quad.nodes[m];
      s += quad.weights[m] * nk * f[m];
    }
  }
  return s;
}

inline double half_sum_neg(std::span<const double> f, int k, const Quadrature& quad) {
  double s = 0.0;
  for (int m = 0; m < quad.order; ++m) {
    if (quad.nodes[m] < 0.0) {
      double nk = 1.0;
      for (int j = 0; j < k; ++j) nk *= quad.nodes[m];
      s += quad.weights[m] * nk * f[m];
    }
  }
  return s;
}

//! sum_m w_m n_m^k (f_pos on n>0, f_neg on n<0): the upwind A-term integral of Eq-type
//! fluxes, evaluated with the same quadrature everywhere so that per-ordinate and
//! moment forms agree to rounding.
inline double upwind_sum(std::span<const double> f_pos, std::span<const double> f_neg,
                         int k, const Quadrature& quad) {
  return half_sum_pos(f_pos, k, quad) + half_sum_neg(f_neg, k, quad);
}

}  // namespace rmhd

#endif  // RMHD_QUADRATURE_HPP_
