#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "defenselab/errors.hpp"
#include "defenselab/linalg.hpp"
#include "defenselab/probability.hpp"

namespace defenselab {

/// Two-player general-sum game in normal form. The row player maximizes A,
/// the column player maximizes B.
class BimatrixGame {
public:
  BimatrixGame(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() == 0 || a_.cols() == 0)
      throw std::invalid_argument("BimatrixGame: empty payoff table");
    if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
      throw std::invalid_argument("BimatrixGame: payoff shapes disagree");
    for (double x : a_.data())
      if (!std::isfinite(x)) throw std::invalid_argument("BimatrixGame: non-finite entry");
    for (double x : b_.data())
      if (!std::isfinite(x)) throw std::invalid_argument("BimatrixGame: non-finite entry");
  }

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  std::size_t rows() const { return a_.rows(); }
  std::size_t cols() const { return a_.cols(); }

private:
  Matrix a_, b_;
};

struct BimatrixEquilibrium {
  ProbabilityVector row_strategy;
  ProbabilityVector col_strategy;
  double row_payoff = 0.0;
  double col_payoff = 0.0;
};

namespace detail {

// All nonempty subsets of {0..n-1} as sorted index lists, in lexicographic
// order of the lists ({0} < {0,1} < {0,2} < {1} < ...). Iterating supports in
// this order makes the returned equilibrium list deterministic with the
// lexicographically smallest support first.
inline std::vector<std::vector<std::size_t>> supports_in_lex_order(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      out.push_back(cur);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Mixes `weights` over `support` into a full-length strategy, clamping the
// rounding dust. Returns false when any weight is clearly negative.
inline bool expand_support(const std::vector<std::size_t>& support,
                           const std::vector<double>& weights, std::size_t n,
                           std::vector<double>& out) {
  out.assign(n, 0.0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (weights[i] < -1e-9) return false;
    out[support[i]] = std::max(0.0, weights[i]);
  }
  double sum = 0.0;
  for (double x : out) sum += x;
  if (sum <= 0.0) return false;
  for (double& x : out) x /= sum;
  return true;
}

}  // namespace detail

inline double bimatrix_payoff(const Matrix& m, const ProbabilityVector& x,
                              const ProbabilityVector& y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) acc += x[i] * y[j] * m(i, j);
  return acc;
}

/// Largest gain available to either player from a unilateral pure deviation.
inline double nash_residual(const BimatrixGame& g, const ProbabilityVector& x,
                            const ProbabilityVector& y) {
  const double row_now = bimatrix_payoff(g.a(), x, y);
  const double col_now = bimatrix_payoff(g.b(), x, y);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    double dev = 0.0;
    for (std::size_t j = 0; j < g.cols(); ++j) dev += y[j] * g.a()(i, j);
    worst = std::max(worst, dev - row_now);
  }
  for (std::size_t j = 0; j < g.cols(); ++j) {
    double dev = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i) dev += x[i] * g.b()(i, j);
    worst = std::max(worst, dev - col_now);
  }
  return worst;
}

/// Nash equilibria of a small bimatrix game by support enumeration over
/// equal-size supports. Each candidate solves the two indifference systems
///   sum_j A(i,j) y_j = v  (i in S1),   sum_i B(i,j) x_i = w  (j in S2)
/// and is kept only if it survives the full best-response check at 1e-8.
inline std::vector<BimatrixEquilibrium> solve_bimatrix(const BimatrixGame& g,
                                                       std::size_t enumeration_bound = 8) {
  const std::size_t m = g.rows(), n = g.cols();
  if (m > enumeration_bound || n > enumeration_bound)
    throw CapacityError("solve_bimatrix: " + std::to_string(m) + "x" + std::to_string(n) +
                        " exceeds enumeration bound " + std::to_string(enumeration_bound));

  const auto row_supports = detail::supports_in_lex_order(m);
  const auto col_supports = detail::supports_in_lex_order(n);
  std::vector<BimatrixEquilibrium> found;

  for (const auto& s1 : row_supports) {
    for (const auto& s2 : col_supports) {
      if (s1.size() != s2.size()) continue;
      const std::size_t k = s1.size();

      // Column mix keeping the row player indifferent across s1.
      Matrix sys_y(k + 1, k + 1);
      std::vector<double> rhs_y(k + 1, 0.0);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) sys_y(r, c) = g.a()(s1[r], s2[c]);
        sys_y(r, k) = -1.0;
      }
      for (std::size_t c = 0; c < k; ++c) sys_y(k, c) = 1.0;
      rhs_y[k] = 1.0;
      const auto sol_y = linalg::solve(sys_y, rhs_y);
      if (!sol_y) continue;

      // Row mix keeping the column player indifferent across s2.
      Matrix sys_x(k + 1, k + 1);
      std::vector<double> rhs_x(k + 1, 0.0);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) sys_x(r, c) = g.b()(s1[c], s2[r]);
        sys_x(r, k) = -1.0;
      }
      for (std::size_t c = 0; c < k; ++c) sys_x(k, c) = 1.0;
      rhs_x[k] = 1.0;
      const auto sol_x = linalg::solve(sys_x, rhs_x);
      if (!sol_x) continue;

      std::vector<double> xw, yw;
      if (!detail::expand_support(s1, {sol_x->begin(), sol_x->begin() + k}, m, xw)) continue;
      if (!detail::expand_support(s2, {sol_y->begin(), sol_y->begin() + k}, n, yw)) continue;

      BimatrixEquilibrium eq;
      eq.row_strategy = ProbabilityVector(std::move(xw));
      eq.col_strategy = ProbabilityVector(std::move(yw));
      if (nash_residual(g, eq.row_strategy, eq.col_strategy) > 1e-8) continue;

      bool duplicate = false;
      for (const auto& prev : found) {
        if (linf_distance(prev.row_strategy, eq.row_strategy) < 1e-8 &&
            linf_distance(prev.col_strategy, eq.col_strategy) < 1e-8) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;

      eq.row_payoff = bimatrix_payoff(g.a(), eq.row_strategy, eq.col_strategy);
      eq.col_payoff = bimatrix_payoff(g.b(), eq.row_strategy, eq.col_strategy);
      found.push_back(std::move(eq));
    }
  }

  if (found.empty())
    throw std::logic_error("solve_bimatrix: no equilibrium survived enumeration "
                           "(degenerate game outside the supported class)");
  return found;
}

}  // namespace defenselab
