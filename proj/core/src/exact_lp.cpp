#include "monideal/exact_lp.hpp"

#include <optional>

#include "monideal/error.hpp"
#include "monideal/runtime.hpp"

namespace monideal::lp {

namespace {

bool is_unit_column(const Matrix& A, std::size_t col, std::size_t row) {
  for (std::size_t r = 0; r < A.rows(); ++r) {
    const auto& v = A(r, col);
    if (r == row ? v != 1 : v != 0) return false;
  }
  return true;
}

}  // namespace

FeasibilityResult solve_feasibility(const Matrix& A, std::span<const Rational> b) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  if (b.size() != m) throw DimensionMismatch(m, b.size());

  // Normalize to b >= 0 by negating rows; the Farkas vector is mapped back.
  std::vector<int> sign(m, 1);
  for (std::size_t r = 0; r < m; ++r) {
    if (sgn(b[r]) < 0) sign[r] = -1;
  }

  // Pick a starting basic column per row: an existing unit column if any,
  // else an artificial.
  std::vector<std::optional<std::size_t>> seed(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (sign[r] < 0) continue;
    for (std::size_t c = 0; c < n && !seed[r]; ++c) {
      if (is_unit_column(A, c, r)) seed[r] = c;
    }
  }
  std::size_t artificials = 0;
  for (const auto& s : seed) {
    if (!s) ++artificials;
  }
  const std::size_t width = n + artificials;

  Matrix T(m, width);
  std::vector<Rational> rhs(m);
  std::vector<std::size_t> basis(m);
  std::vector<std::size_t> initial(m);
  std::vector<Rational> cost(width, 0);
  {
    std::size_t next_art = n;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) T(r, c) = sign[r] * A(r, c);
      rhs[r] = sign[r] * b[r];
      if (seed[r]) {
        basis[r] = *seed[r];
      } else {
        T(r, next_art) = 1;
        cost[next_art] = 1;
        basis[r] = next_art++;
      }
      initial[r] = basis[r];
    }
  }

  // Reduced costs z_j = c_j - sum_r c_{B(r)} T(r, j) and objective value.
  std::vector<Rational> z(cost);
  Rational objective = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (cost[basis[r]] == 0) continue;
    for (std::size_t c = 0; c < width; ++c) z[c] -= T(r, c);
    objective += rhs[r];
  }

  FeasibilityResult result;
  while (true) {
    poll_deadline();
    // Bland: lowest-index improving column.
    std::optional<std::size_t> enter;
    for (std::size_t c = 0; c < width; ++c) {
      if (sgn(z[c]) < 0) {
        enter = c;
        break;
      }
    }
    if (!enter) break;

    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(T(r, *enter)) <= 0) continue;
      Rational ratio = rhs[r] / T(r, *enter);
      if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
        leave = r;
        best = ratio;
      }
    }
    // The phase-one objective is bounded below by zero.
    if (!leave) throw InternalError("phase-one simplex reported unboundedness");

    const std::size_t pr = *leave;
    const Rational pivot = T(pr, *enter);
    for (std::size_t c = 0; c < width; ++c) T(pr, c) /= pivot;
    rhs[pr] /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pr) continue;
      const Rational f = T(r, *enter);
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < width; ++c) T(r, c) -= f * T(pr, c);
      rhs[r] -= f * rhs[pr];
    }
    {
      const Rational f = z[*enter];
      for (std::size_t c = 0; c < width; ++c) z[c] -= f * T(pr, c);
      objective += f * rhs[pr];
    }
    basis[pr] = *enter;
    ++result.pivots;
  }

  result.feasible = sgn(objective) == 0;
  if (result.feasible) {
    result.x.assign(n, 0);
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < n) result.x[basis[r]] = rhs[r];
    }
  } else {
    // y_r = c_{initial(r)} - z_{initial(r)}; the initial columns form the
    // identity, so this reads off the phase-one duals.
    result.farkas.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
      result.farkas[r] = sign[r] * (cost[initial[r]] - z[initial[r]]);
    }
  }
  return result;
}

}  // namespace monideal::lp
