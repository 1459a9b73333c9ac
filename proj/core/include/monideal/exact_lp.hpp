#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace monideal::lp {

using Rational = mpq_class;

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct FeasibilityResult {
  bool feasible = false;
  /// A basic feasible solution (one entry per column) when feasible.
  std::vector<Rational> x;
  /// When infeasible: y with yᵀA <= 0 componentwise and yᵀb > 0.
  std::vector<Rational> farkas;
  std::size_t pivots = 0;
};

/// Decides {x >= 0 : A x = b} exactly with a phase-one simplex under Bland's
/// rule, so it terminates without cycling. Columns equal to a unit vector
/// seed the starting basis; the remaining rows get artificial variables.
FeasibilityResult solve_feasibility(const Matrix& A, std::span<const Rational> b);

}  // namespace monideal::lp
