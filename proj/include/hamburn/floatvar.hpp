#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "colorcode.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace hamburn {

// Per-entry classification of a rounding state. An entry is fixed exactly when
// its value is -1/q or 1-1/q; fixed entries never move again.
struct Classification {
  std::vector<std::uint8_t> fixed;  // qn flags
  std::vector<int> block_fixed;     // per-block count of fixed entries
  std::vector<int> f;               // f[r] = number of blocks with r fixed entries, r = 0..q
};

// Value-scan classification. Also checks the state invariants that every
// reachable x satisfies: block sums zero, entries in [-1/q, 1-1/q], and no
// block with exactly q-1 fixed entries (the remaining entry would already sit
// on a boundary, so a q-1 count means the scan itself is broken).
inline Classification classify(const CodeVector& x) {
  const int q = x.q;
  const Rational lo = make_rational(-1, q);
  const Rational hi = make_rational(q - 1, q);
  Classification cls;
  cls.fixed.assign(x.e.size(), 0);
  cls.block_fixed.assign(static_cast<std::size_t>(x.n), 0);
  cls.f.assign(static_cast<std::size_t>(q) + 1, 0);
  for (int j = 0; j < x.n; ++j) {
    Rational sum(0);
    int count = 0;
    for (int p = 0; p < q; ++p) {
      const Rational& z = x.at(j, p);
      if (z < lo || z > hi)
        throw StateError("classify: entry outside [-1/q, 1-1/q] in block " + std::to_string(j));
      sum += z;
      if (z == lo || z == hi) {
        cls.fixed[static_cast<std::size_t>(j * q + p)] = 1;
        ++count;
      }
    }
    if (sum != 0) throw StateError("classify: block " + std::to_string(j) + " sum is nonzero");
    if (count == q - 1)
      throw StateError("classify: block " + std::to_string(j) + " has q-1 fixed entries");
    cls.block_fixed[static_cast<std::size_t>(j)] = count;
    ++cls.f[static_cast<std::size_t>(count)];
  }
  return cls;
}

// The homogeneous step-s system over the floating columns only: one row per
// remaining inner-product constraint (i = 1..n-s) and one all-ones row per
// block that still has floating entries. Fixed entries are constants, so
// directions must vanish there and contribute nothing here.
inline RatMatrix build_system(const std::vector<CodeVector>& a,
                              const std::vector<std::uint8_t>& fixed, int s, int fq) {
  const int n = static_cast<int>(a.size());
  if (s < 1 || s > n) throw std::invalid_argument("build_system: s outside 1..n");
  const int q = a.front().q;
  std::vector<std::size_t> cols;  // global index of each floating column
  for (std::size_t k = 0; k < fixed.size(); ++k)
    if (!fixed[k]) cols.push_back(k);
  std::vector<int> block_floating(static_cast<std::size_t>(n), 0);
  for (std::size_t k : cols) ++block_floating[k / static_cast<std::size_t>(q)];
  int open_blocks = 0;
  for (int c : block_floating)
    if (c > 0) ++open_blocks;
  if (n - open_blocks != fq) throw StateError("build_system: fully-fixed block count mismatch");

  RatMatrix m(static_cast<std::size_t>(n - s) + static_cast<std::size_t>(open_blocks), cols.size());
  for (int i = 0; i < n - s; ++i)
    for (std::size_t t = 0; t < cols.size(); ++t)
      m.at(static_cast<std::size_t>(i), t) = a[static_cast<std::size_t>(i)].e[cols[t]];
  std::size_t row = static_cast<std::size_t>(n - s);
  for (int j = 0; j < n; ++j) {
    if (block_floating[static_cast<std::size_t>(j)] == 0) continue;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (static_cast<int>(cols[t] / static_cast<std::size_t>(q)) == j) m.at(row, t) = 1;
    ++row;
  }
  return m;
}

// Longest admissible move along dir from x: the first lambda > 0 at which some
// floating entry reaches -1/q or 1-1/q. Finite because the box is bounded and
// dir is nonzero on floating entries.
inline Rational max_step(const CodeVector& x, const std::vector<std::uint8_t>& fixed,
                         const std::vector<Rational>& dir) {
  if (dir.size() != x.e.size()) throw DimensionError("max_step: direction size mismatch");
  const Rational lo = make_rational(-1, x.q);
  const Rational hi = make_rational(x.q - 1, x.q);
  bool found = false;
  Rational best(0);
  for (std::size_t k = 0; k < dir.size(); ++k) {
    if (fixed[k]) {
      if (dir[k] != 0) throw StateError("max_step: direction moves a fixed entry");
      continue;
    }
    if (dir[k] == 0) continue;
    Rational cand = (dir[k] > 0) ? Rational((hi - x.e[k]) / dir[k]) : Rational((lo - x.e[k]) / dir[k]);
    if (!found || cand < best) {
      best = cand;
      found = true;
    }
  }
  if (!found) throw StateError("max_step: direction vanishes on all floating entries");
  if (best <= 0) throw StateError("max_step: step is not strictly positive");
  return best;
}

struct TraceRecord {
  int s = 0;            // step being worked on
  int full_blocks = 0;  // |F_q| before the move
  Rational lambda;      // step length used
};

// Output of the rounding procedure, self-checked with exact arithmetic.
struct FvCertificate {
  CodeVector x_final;                // in Q^n
  std::vector<Rational> inner_abs;   // |a_i . x_final|, index i-1
  std::vector<int> bound;            // the strict bound i
  std::vector<TraceRecord> trace;
};

// Working state, kept around for auditing: snapshots[s] is the determined x_s
// (deep copies; snapshot 0 is the origin).
struct FloatState {
  CodeVector x;
  std::vector<std::uint8_t> fixed;
  int step_index = 0;
  std::vector<CodeVector> snapshots;
};

namespace detail {

inline void check_inputs(const std::vector<CodeVector>& a) {
  if (a.empty()) throw DimensionError("run: need at least one constraint vector");
  const int n = static_cast<int>(a.size());
  const int q = a.front().q;
  if (q < 3) throw UnsupportedError("run: q must be >= 3");
  for (const CodeVector& v : a) {
    if (v.n != n || v.q != q) throw DimensionError("run: constraint vectors disagree on (n, q)");
    if (!in_code(v)) throw CodewordError("run: constraint vector not in Q^n");
  }
}

}  // namespace detail

// The multicolor floating-variable procedure. Starting from the origin, move
// along kernel directions of the step-s system, fixing at least one entry per move, and
// snapshot x_s as soon as |F_q| reaches s. The returned point satisfies
// |a_i . x| < i for every i; every claim the certificate makes is recomputed
// exactly before returning.
inline std::pair<FvCertificate, FloatState> run_detailed(const std::vector<CodeVector>& a) {
  detail::check_inputs(a);
  const int n = static_cast<int>(a.size());
  const int q = a.front().q;

  FloatState st;
  st.x = zero_codevector(n, q);
  st.snapshots.assign(static_cast<std::size_t>(n) + 1, CodeVector{});
  st.snapshots[0] = st.x;
  st.step_index = 1;
  FvCertificate cert;

  int prev_fixed_total = 0;
  const int max_moves = n * q + 1;
  for (int moves = 0;; ++moves) {
    if (moves > max_moves) throw StateError("run: move budget exceeded, no progress");
    Classification cls = classify(st.x);
    st.fixed = cls.fixed;
    int fq = cls.f[static_cast<std::size_t>(q)];
    while (st.step_index <= n && fq >= st.step_index) {
      st.snapshots[static_cast<std::size_t>(st.step_index)] = st.x;
      ++st.step_index;
    }
    if (st.step_index > n) break;

    RatMatrix m = build_system(a, cls.fixed, st.step_index, fq);
    // The counting argument guarantees a nontrivial kernel: floating variables
    // exceed rows by at least one.
    if (m.cols < m.rows + 1) throw StateError("run: dimension count violated");
    auto y = kernel_vector(m);
    if (!y) throw StateError("run: no kernel direction despite dimension count");

    std::vector<Rational> dir(st.x.e.size(), Rational(0));
    std::size_t t = 0;
    for (std::size_t k = 0; k < st.x.e.size(); ++k)
      if (!cls.fixed[k]) dir[k] = (*y)[t++];
    Rational lambda = max_step(st.x, cls.fixed, dir);
    for (std::size_t k = 0; k < st.x.e.size(); ++k)
      if (dir[k] != 0) st.x.e[k] += lambda * dir[k];
    cert.trace.push_back({st.step_index, fq, lambda});

    // The move must keep a_i . x = 0 for i <= n - s and fix something new.
    for (int i = 0; i < n - st.step_index; ++i)
      if (inner(a[static_cast<std::size_t>(i)], st.x) != 0)
        throw StateError("run: constraint " + std::to_string(i + 1) + " broken by move");
    Classification after = classify(st.x);
    int fixed_total = 0;
    for (std::uint8_t b : after.fixed) fixed_total += b;
    if (fixed_total <= prev_fixed_total) throw StateError("run: move fixed no entry");
    prev_fixed_total = fixed_total;
  }

  cert.x_final = st.snapshots[static_cast<std::size_t>(n)];
  if (!in_code(cert.x_final)) throw StateError("run: final point not in Q^n");
  for (int s = 1; s <= n; ++s)
    if (classify(st.snapshots[static_cast<std::size_t>(s)]).f[static_cast<std::size_t>(q)] < s)
      throw StateError("run: snapshot " + std::to_string(s) + " has too few full blocks");
  for (int i = 1; i <= n; ++i) {
    if (inner(a[static_cast<std::size_t>(i - 1)], st.snapshots[static_cast<std::size_t>(n - i)]) != 0)
      throw StateError("run: a_" + std::to_string(i) + " . x_{n-i} is nonzero");
    Rational v = abs(inner(a[static_cast<std::size_t>(i - 1)], cert.x_final));
    if (v >= i)
      throw StateError("run: |a_" + std::to_string(i) + " . x| = " + to_fraction_string(v) +
                       " not below " + std::to_string(i));
    cert.inner_abs.push_back(v);
    cert.bound.push_back(i);
  }
  return {std::move(cert), std::move(st)};
}

inline FvCertificate run(const std::vector<CodeVector>& a) { return run_detailed(a).first; }

// |a.x - a.y| for color-vector a, x and hull member y. The suite uses this to
// probe the per-block gap bound of 1 and its equality cases.
inline Rational block_gap(const Block& a, const Block& x, const Block& y, int q) {
  if (!is_color_vector(a, q) || !is_color_vector(x, q))
    throw std::domain_error("block_gap: a and x must be color vectors");
  if (!in_hull(y, q)) throw std::domain_error("block_gap: y must lie in the hull");
  Rational g = block_inner(a, x) - block_inner(a, y);
  return abs(g);
}

}  // namespace hamburn
