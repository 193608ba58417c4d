//========================================================================================
// rmhd1d - a 1D slab-geometry radiation-magnetohydrodynamics solver
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file core.hpp
//  \brief shared parameter/mesh types, error taxonomy and small dense linear algebra.

#ifndef RMHD_CORE_HPP_
#define RMHD_CORE_HPP_

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmhd {

//----------------------------------------------------------------------------------------
// error taxonomy

//! base class for all solver errors
class solver_error : public std::runtime_error {
 public:
  explicit solver_error(const std::string& what_arg, std::string category)
      : std::runtime_error(what_arg), category_(std::move(category)) {}
  const std::string& category() const { return category_; }

 private:
  std::string category_;
};

class invalid_argument_error : public solver_error {
 public:
  explicit invalid_argument_error(const std::string& msg)
      : solver_error(msg, "invalid-argument") {}
};

class config_error : public solver_error {
 public:
  explicit config_error(const std::string& msg) : solver_error(msg, "config") {}
};

//! loss of positivity in density/pressure/temperature; carries the offending cell
class positivity_error : public solver_error {
 public:
  positivity_error(const std::string& msg, int cell)
      : solver_error(msg + " (cell " + std::to_string(cell) + ")", "positivity"),
        cell_(cell) {}
  int cell() const { return cell_; }

 private:
  int cell_;
};

//! nonlinear iteration failed to reach tolerance; carries the final residual
class convergence_error : public solver_error {
 public:
  convergence_error(const std::string& msg, double residual)
      : solver_error(msg + " (residual " + std::to_string(residual) + ")", "convergence"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class numeric_error : public solver_error {
 public:
  explicit numeric_error(const std::string& msg) : solver_error(msg, "numeric") {}
};

class io_error : public solver_error {
 public:
  explicit io_error(const std::string& msg) : solver_error(msg, "io") {}
};

//----------------------------------------------------------------------------------------
// nondimensional parameter set

enum class Regime { non_equilibrium, equilibrium, unit_scaled };

//! scaling triple (La, Ls, curlyC) for a regime; unit_scaled returns inputs untouched
struct RegimeScaling {
  double La, Ls, curlyC;
};

inline RegimeScaling derive_regime(Regime regime, double eps, double c) {
  if (!(eps > 0.0) || !(c > 0.0))
    throw invalid_argument_error("derive_regime: eps and c must be positive");
  switch (regime) {
    case Regime::non_equilibrium:
      return {eps, 1.0 / eps, c / eps};
    case Regime::equilibrium:
      return {1.0 / eps, eps, c / eps};
    case Regime::unit_scaled:
    default:
      return {1.0, 1.0, c};
  }
}

//! nondimensional constants of the scaled system
struct NondimParams {
  double curlyC = 1.0;   // scaled light speed
  double P0 = 0.0;       // radiation-flow coupling a_r T^4 / (rho a^2)
  double La = 1.0;       // absorption opacity scaling
  double Ls = 1.0;       // scattering opacity scaling
  double eps = 1.0;      // regime parameter, curlyC*eps = c
  double c = 1.0;        // reduced speed
  double gamma = 5.0 / 3.0;
  double R_ideal = 1.0;

  double a_coeff() const { return R_ideal / (gamma - 1.0); }  // internal energy = a*rho*T

  static NondimParams make(Regime regime, double eps, double c, double P0, double gamma,
                           double R_ideal) {
    NondimParams p;
    const RegimeScaling s = derive_regime(regime, eps, c);
    p.La = s.La;
    p.Ls = s.Ls;
    p.curlyC = s.curlyC;
    p.eps = (regime == Regime::unit_scaled) ? 1.0 : eps;
    p.c = (regime == Regime::unit_scaled) ? c : c;
    p.P0 = P0;
    p.gamma = gamma;
    p.R_ideal = R_ideal;
    return p;
  }
};

//----------------------------------------------------------------------------------------
// uniform 1D mesh

struct Mesh1D {
  double a = 0.0, b = 1.0;
  int nx = 0;
  double dx = 0.0;

  Mesh1D() = default;
  Mesh1D(double a_, double b_, int nx_) : a(a_), b(b_), nx(nx_) {
    if (nx_ < 1 || !(b_ > a_))
      throw invalid_argument_error("Mesh1D: need nx >= 1 and b > a");
    dx = (b - a) / nx;
  }

  double center(int i) const { return a + (i + 0.5) * dx; }     // i = 0..nx-1
  double interface(int i) const { return a + i * dx; }          // i = 0..nx
  int n_interfaces() const { return nx + 1; }
};

//----------------------------------------------------------------------------------------
// dense NxN solve with partial pivoting (tiny systems: Roe waves, macro blocks)

template <int N>
bool lu_solve_inplace(std::array<std::array<double, N>, N>& A, std::array<double, N>& b) {
  std::array<int, N> piv;
  for (int i = 0; i < N; ++i) piv[i] = i;
  for (int k = 0; k < N; ++k) {
    int p = k;
    double amax = std::abs(A[k][k]);
    for (int i = k + 1; i < N; ++i) {
      if (std::abs(A[i][k]) > amax) {
        amax = std::abs(A[i][k]);
        p = i;
      }
    }
    if (!(amax > 0.0) || !std::isfinite(amax)) return false;
    if (p != k) {
      std::swap(A[p], A[k]);
      std::swap(b[p], b[k]);
    }
    const double inv = 1.0 / A[k][k];
    for (int i = k + 1; i < N; ++i) {
      const double m = A[i][k] * inv;
      if (m == 0.0) continue;
      A[i][k] = m;
      for (int j = k + 1; j < N; ++j) A[i][j] -= m * A[k][j];
      b[i] -= m * b[k];
    }
  }
  for (int i = N - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < N; ++j) s -= A[i][j] * b[j];
    b[i] = s / A[i][i];
    if (!std::isfinite(b[i])) return false;
  }
  return true;
}

//----------------------------------------------------------------------------------------
// block-tridiagonal direct solver (block Thomas), block size B
//
// Solves L_i x_{i-1} + D_i x_i + U_i x_{i+1} = r_i, i = 0..n-1 (L_0 = U_{n-1} = 0).
// Deterministic, sequential over cells.

template <int B>
class BlockTridiag {
 public:
  using Block = std::array<std::array<double, B>, B>;
  using Vec = std::array<double, B>;

  void resize(int n) {
    n_ = n;
    lower_.assign(n, Block{});
    diag_.assign(n, Block{});
    upper_.assign(n, Block{});
    rhs_.assign(n, Vec{});
  }

  int size() const { return n_; }
  Block& lower(int i) { return lower_[i]; }
  Block& diag(int i) { return diag_[i]; }
  Block& upper(int i) { return upper_[i]; }
  Vec& rhs(int i) { return rhs_[i]; }

  void zero() {
    for (int i = 0; i < n_; ++i) {
      lower_[i] = Block{};
      diag_[i] = Block{};
      upper_[i] = Block{};
      rhs_[i] = Vec{};
    }
  }

  //! forward elimination + back substitution; solution overwrites rhs. False on breakdown.
  bool solve() {
    // forward sweep: D_i' = D_i - L_i D_{i-1}'^{-1} U_{i-1}, r_i' = r_i - L_i D'^{-1} r'
    for (int i = 0; i < n_; ++i) {
      if (i > 0) {
        // W = L_i * inv(D_{i-1}); apply to U_{i-1} and rhs_{i-1}
        Block W{};
        for (int r = 0; r < B; ++r) {
          Block Dc = diag_[i - 1];
          Vec e{};
          for (int c = 0; c < B; ++c) e[c] = lower_[i][r][c];
          // solve Dc^T y = e  => y^T = row of L_i * inv(D_{i-1})
          Block Dt{};
          for (int r2 = 0; r2 < B; ++r2)
            for (int c2 = 0; c2 < B; ++c2) Dt[r2][c2] = Dc[c2][r2];
          if (!lu_solve_inplace<B>(Dt, e)) return false;
          W[r] = e;
        }
        for (int r = 0; r < B; ++r) {
          for (int c = 0; c < B; ++c) {
            double s = 0.0;
            for (int k = 0; k < B; ++k) s += W[r][k] * upper_[i - 1][k][c];
            diag_[i][r][c] -= s;
          }
          double s = 0.0;
          for (int k = 0; k < B; ++k) s += W[r][k] * rhs_[i - 1][k];
          rhs_[i][r] -= s;
        }
      }
    }
    // back substitution
    for (int i = n_ - 1; i >= 0; --i) {
      Vec r = rhs_[i];
      if (i < n_ - 1) {
        for (int r2 = 0; r2 < B; ++r2) {
          double s = 0.0;
          for (int k = 0; k < B; ++k) s += upper_[i][r2][k] * rhs_[i + 1][k];
          r[r2] -= s;
        }
      }
      Block D = diag_[i];
      if (!lu_solve_inplace<B>(D, r)) return false;
      rhs_[i] = r;
    }
    return true;
  }

 private:
  int n_ = 0;
  std::vector<Block> lower_, diag_, upper_;
  std::vector<Vec> rhs_;
};

//----------------------------------------------------------------------------------------
// scalar tridiagonal solvers (plain and cyclic) for the reduced radiation-only paths

inline bool tridiag_solve(std::vector<double>& lo, std::vector<double>& di,
                          std::vector<double>& up, std::vector<double>& rhs) {
  const int n = static_cast<int>(di.size());
  for (int i = 1; i < n; ++i) {
    if (di[i - 1] == 0.0) return false;
    const double m = lo[i] / di[i - 1];
    di[i] -= m * up[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  if (di[n - 1] == 0.0) return false;
  rhs[n - 1] /= di[n - 1];
  for (int i = n - 2; i >= 0; --i) rhs[i] = (rhs[i] - up[i] * rhs[i + 1]) / di[i];
  return true;
}

//! cyclic variant via the Sherman-Morrison correction; corner couplings (c_first, c_last)
inline bool cyclic_tridiag_solve(std::vector<double> lo, std::vector<double> di,
                                 std::vector<double> up, std::vector<double> rhs,
                                 double c_first, double c_last,
                                 std::vector<double>& out) {
  const int n = static_cast<int>(di.size());
  if (n < 3) return false;
  const double gamma = -di[0];
  di[0] -= gamma;
  di[n - 1] -= c_first * c_last / gamma;
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = c_last;
  std::vector<double> lo1 = lo, di1 = di, up1 = up, y = rhs;
  if (!tridiag_solve(lo1, di1, up1, y)) return false;
  lo1 = lo;
  di1 = di;
  up1 = up;
  std::vector<double> z = u;
  if (!tridiag_solve(lo1, di1, up1, z)) return false;
  const double vy = y[0] + (c_first / gamma) * y[n - 1];
  const double vz = 1.0 + z[0] + (c_first / gamma) * z[n - 1];
  if (vz == 0.0) return false;
  const double f = vy / vz;
  out.resize(n);
  for (int i = 0; i < n; ++i) out[i] = y[i] - f * z[i];
  return true;
}

//----------------------------------------------------------------------------------------
// worker budget: RMHD_THREADS caps the worker count (all kernels are deterministic and
// currently run on one worker; the cap is honored by clamping)

inline int thread_budget() {
  const char* env = std::getenv("RMHD_THREADS");
  if (env == nullptr) return 1;
  const int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

}  // namespace rmhd

#endif  // RMHD_CORE_HPP_
