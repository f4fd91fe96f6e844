#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "defenselab/linalg.hpp"
#include "defenselab/probability.hpp"

namespace defenselab {

/// Finite zero-sum matrix game. Entry (h, k) is the cost the row player pays
/// (and the column player collects) under row h and column k: the row player
/// minimizes, the column player maximizes.
class MatrixGame {
public:
  explicit MatrixGame(Matrix cost) : cost_(std::move(cost)) {
    if (cost_.rows() == 0 || cost_.cols() == 0)
      throw std::invalid_argument("MatrixGame: empty matrix");
    for (double x : cost_.data())
      if (!std::isfinite(x)) throw std::invalid_argument("MatrixGame: non-finite entry");
  }

  const Matrix& cost() const { return cost_; }
  std::size_t rows() const { return cost_.rows(); }
  std::size_t cols() const { return cost_.cols(); }

private:
  Matrix cost_;
};

struct ZeroSumSolution {
  ProbabilityVector row_strategy;
  ProbabilityVector col_strategy;
  double value = 0.0;
};

namespace detail {

// Primal simplex, maximization, slack start. Solves
//   max 1'y  s.t.  A y <= 1, y >= 0
// and reads the dual solution off the slack reduced costs. Bland's rule keeps
// the tiny tableaus cycle-free.
struct SimplexResult {
  std::vector<double> primal;
  std::vector<double> dual;
  double objective = 0.0;
};

inline SimplexResult maximize_sum_under_unit_rhs(const Matrix& a) {
  const std::size_t n_rows = a.rows();
  const std::size_t n_vars = a.cols();
  const std::size_t width = n_vars + n_rows + 1;  // vars, slacks, rhs
  constexpr double kTol = 1e-11;

  std::vector<std::vector<double>> t(n_rows, std::vector<double>(width, 0.0));
  std::vector<std::size_t> basis(n_rows);
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (std::size_t j = 0; j < n_vars; ++j) t[r][j] = a(r, j);
    t[r][n_vars + r] = 1.0;
    t[r][width - 1] = 1.0;
    basis[r] = n_vars + r;
  }
  std::vector<double> obj(width, 0.0);
  for (std::size_t j = 0; j < n_vars; ++j) obj[j] = -1.0;

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (obj[j] < -kTol) { enter = j; break; }
    if (enter == width) break;

    std::size_t leave = n_rows;
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (t[r][enter] <= kTol) continue;
      const double ratio = t[r][width - 1] / t[r][enter];
      if (leave == n_rows || ratio < best_ratio - kTol ||
          (ratio < best_ratio + kTol && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == n_rows)
      throw std::logic_error("zero-sum LP unbounded; matrix shift failed");

    const double pivot = t[leave][enter];
    for (double& x : t[leave]) x /= pivot;
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (r == leave) continue;
      const double factor = t[r][enter];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t[r][j] -= factor * t[leave][j];
    }
    const double ofac = obj[enter];
    if (ofac != 0.0)
      for (std::size_t j = 0; j < width; ++j) obj[j] -= ofac * t[leave][j];
    basis[leave] = enter;
  }

  SimplexResult out;
  out.primal.assign(n_vars, 0.0);
  for (std::size_t r = 0; r < n_rows; ++r)
    if (basis[r] < n_vars) out.primal[basis[r]] = t[r][width - 1];
  out.dual.assign(n_rows, 0.0);
  for (std::size_t r = 0; r < n_rows; ++r) out.dual[r] = std::max(0.0, obj[n_vars + r]);
  out.objective = obj[width - 1];
  return out;
}

}  // namespace detail

/// Mixed saddle point of a zero-sum matrix game via the standard LP
/// transformation: shift costs positive, solve max 1'y s.t. M'y <= 1 for the
/// column player and recover the row player from the dual.
inline ZeroSumSolution solve_zero_sum(const MatrixGame& game) {
  const Matrix& m = game.cost();
  double lo = m.data()[0];
  for (double x : m.data()) lo = std::min(lo, x);
  const double shift = 1.0 - lo;

  // Constraint matrix for the row player's normalized LP: rows are attacker
  // columns, variables are defender rows.
  Matrix a(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) a(k, i) = m(i, k) + shift;

  const auto lp = detail::maximize_sum_under_unit_rhs(a);
  if (lp.objective <= 0.0)
    throw std::logic_error("zero-sum LP produced non-positive objective");
  const double value = 1.0 / lp.objective;

  auto normalize = [](std::vector<double> w) {
    double sum = 0.0;
    for (double& x : w) {
      x = std::max(0.0, x);
      sum += x;
    }
    for (double& x : w) x /= sum;
    return ProbabilityVector(std::move(w));
  };

  ZeroSumSolution sol;
  sol.row_strategy = normalize(lp.primal);
  sol.col_strategy = normalize(lp.dual);
  sol.value = value - shift;
  return sol;
}

/// Worst the column player can extract against a fixed row strategy, and the
/// best the row player can guarantee against a fixed column strategy. Used to
/// check the saddle inequalities against all pure deviations.
inline double best_pure_column_response(const MatrixGame& game, const ProbabilityVector& f) {
  const Matrix& m = game.cost();
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m.cols(); ++k) {
    double cost = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) cost += f[i] * m(i, k);
    best = std::max(best, cost);
  }
  return best;
}

inline double best_pure_row_response(const MatrixGame& game, const ProbabilityVector& g) {
  const Matrix& m = game.cost();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double cost = 0.0;
    for (std::size_t k = 0; k < m.cols(); ++k) cost += g[k] * m(i, k);
    best = std::min(best, cost);
  }
  return best;
}

inline double game_cost(const MatrixGame& game, const ProbabilityVector& f,
                        const ProbabilityVector& g) {
  const Matrix& m = game.cost();
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) acc += f[i] * g[k] * m(i, k);
  return acc;
}

}  // namespace defenselab
