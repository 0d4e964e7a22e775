#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hamburn {

// Dense row-major matrix of exact rationals. Small by construction: the
// constraint systems solved here never exceed a few dozen rows.
struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;  // rows * cols entries

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;  // ordered pivot columns; rank = pivots.size()
};

// Gauss-Jordan with exact arithmetic. Pivot choice (topmost nonzero row in the
// leftmost unfinished column) is deterministic; the reduced form is unique.
inline RrefResult rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols && pr < m.rows; ++c) {
    std::size_t sel = pr;
    while (sel < m.rows && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != pr)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(sel, j));
    // Columns left of c are already zero on rows >= pr.
    if (m.at(pr, c) != 1) {
      Rational inv = m.at(pr, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(pr, j) /= inv;
    }
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == pr || m.at(r, c) == 0) continue;
      Rational f = m.at(r, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) -= f * m.at(pr, j);
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(m), std::move(pivots)};
}

// Nonzero y with m*y = 0 when one exists, chosen deterministically: the lowest
// free column is set to 1, every other free column to 0, and pivot entries are
// read off the reduced form. Returns nullopt iff the kernel is trivial.
inline std::optional<std::vector<Rational>> kernel_vector(const RatMatrix& m) {
  RrefResult red = rref(m);
  if (red.pivots.size() == m.cols) return std::nullopt;
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::size_t free0 = 0;
  while (free0 < m.cols && is_pivot[free0]) ++free0;
  std::vector<Rational> y(m.cols, Rational(0));
  y[free0] = 1;
  for (std::size_t r = 0; r < red.pivots.size(); ++r) y[red.pivots[r]] = -red.matrix.at(r, free0);
  return y;
}

// m*y, used by callers asserting kernel membership.
inline std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& y) {
  if (y.size() != m.cols) throw DimensionError("mat_vec: size mismatch");
  std::vector<Rational> out(m.rows, Rational(0));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0 && y[c] != 0) out[r] += m.at(r, c) * y[c];
  return out;
}

}  // namespace hamburn
