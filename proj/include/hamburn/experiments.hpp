#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "hamming.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace hamburn {

// This module follows the 0-based symbol convention {0,1,2} for q = 3; the
// conversion to the 1-based Vertex convention happens only at call boundaries.
using Vertex0 = std::vector<int>;

inline void validate_vertex0(const Vertex0& v) {
  if (v.empty()) throw DimensionError("vertex0: n must be >= 1");
  for (int s : v)
    if (s < 0 || s > 2) throw UnsupportedError("vertex0: symbols must lie in {0,1,2}");
}

inline Vertex to_one_based(const Vertex0& v) {
  validate_vertex0(v);
  Vertex out{v, 3};
  for (int& s : out.sym) ++s;
  return out;
}

inline Vertex0 to_zero_based(const Vertex& v) {
  validate_vertex(v);
  if (v.q != 3) throw UnsupportedError("to_zero_based: q must be 3");
  Vertex0 out = v.sym;
  for (int& s : out) --s;
  return out;
}

inline int hdist0(const Vertex0& u, const Vertex0& v) {
  if (u.size() != v.size()) throw DimensionError("hdist0: length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) ++d;
  return d;
}

// Adds t to every coordinate mod 3.
inline Vertex0 shift(const Vertex0& v, int t) {
  validate_vertex0(v);
  if (t < 0 || t > 2) throw std::invalid_argument("shift: t must be in {0,1,2}");
  Vertex0 out = v;
  for (int& s : out) s = (s + t) % 3;
  return out;
}

// f(u, v) = |(2/3)(3k+1) - d(u, v)|, exact.
inline Rational f_value(const Vertex0& u, const Vertex0& v, int k) {
  if (k < 1) throw std::invalid_argument("f_value: k must be >= 1");
  const int n = 3 * k + 1;
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw DimensionError("f_value: vertices must have length 3k+1");
  validate_vertex0(u);
  validate_vertex0(v);
  Rational r = make_rational(2 * n, 3) - hdist0(u, v);
  return abs(r);
}

// g(u, v) = max over the mod-3 shift orbit of v.
inline Rational g_value(const Vertex0& u, const Vertex0& v, int k) {
  Rational best = f_value(u, v, k);
  for (int t = 1; t <= 2; ++t) {
    Rational cand = f_value(u, shift(v, t), k);
    if (cand > best) best = cand;
  }
  return best;
}

enum class SearchMode { exhaustive, randomized };

inline std::string to_string(SearchMode m) {
  return m == SearchMode::exhaustive ? "exhaustive" : "randomized";
}

// Outcome of the evading-vertex search over H(3k+1, 3): for every instance
// (u_1..u_n), is there a w with g(u_i, w) < i for all i? Counterexamples are
// instances with no such w; witness_stats is the distribution of per-instance
// feasible-w counts. Every found witness is re-verified through the exact
// Rational g_value path.
struct OpenProblemReport {
  int k = 0;
  int n = 0;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t instances_checked = 0;
  std::vector<std::vector<Vertex0>> counterexamples;  // sorted lexicographically
  std::vector<std::pair<int, std::uint64_t>> witness_stats;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t witnesses_verified = 0;
  std::uint64_t verification_failures = 0;
};

namespace detail {

inline Vertex0 vertex0_of_index(std::uint64_t idx, int n) {
  Vertex0 v(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = static_cast<int>(idx % 3);
    idx /= 3;
  }
  return v;
}

// True iff g(u_i, w) < i for all i, on the integer scale: f < i iff
// |2n - 3 d| < 3i. The three orbit distances always sum to 2n (each coordinate
// of w's orbit hits u_i's symbol exactly once), which saves one distance scan.
inline bool feasible_w(const std::vector<Vertex0>& us, const Vertex0& w, const Vertex0& w1) {
  const int n = static_cast<int>(w.size());
  for (int i = 1; i <= static_cast<int>(us.size()); ++i) {
    const Vertex0& u = us[static_cast<std::size_t>(i - 1)];
    const int d0 = hdist0(u, w);
    const int d1 = hdist0(u, w1);
    const int d2 = 2 * n - d0 - d1;
    const int lim = 3 * i;
    if (std::abs(2 * n - 3 * d0) >= lim || std::abs(2 * n - 3 * d1) >= lim ||
        std::abs(2 * n - 3 * d2) >= lim)
      return false;
  }
  return true;
}

inline bool reverify_witness(const std::vector<Vertex0>& us, const Vertex0& w, int k) {
  for (int i = 1; i <= static_cast<int>(us.size()); ++i)
    if (g_value(us[static_cast<std::size_t>(i - 1)], w, k) >= i) return false;
  // Shift-orbit distance identity, checked on the first instance vertex.
  const int n = 3 * k + 1;
  const int sum = hdist0(us[0], w) + hdist0(us[0], shift(w, 1)) + hdist0(us[0], shift(w, 2));
  return sum == 2 * n;
}

struct InstanceOutcome {
  int feasible = 0;
  bool verify_attempted = false;
  bool verify_ok = false;
};

// k = 1 exhaustive sweep with u_1 fixed to the all-zero vertex (valid by
// vertex-transitivity and g's shift invariance). Feasibility per (u, w) is
// precomputed into 81-bit masks, so an instance costs a few word operations.
inline OpenProblemReport exhaustive_k1(std::uint64_t seed, unsigned workers) {
  const int k = 1;
  const int n = 4;
  const int N = 81;
  OpenProblemReport rep;
  rep.k = k;
  rep.n = n;
  rep.mode = SearchMode::exhaustive;
  rep.seed = seed;
  rep.instances_checked = static_cast<std::uint64_t>(N) * N * N;

  std::vector<Vertex0> verts(static_cast<std::size_t>(N));
  for (int v = 0; v < N; ++v) verts[static_cast<std::size_t>(v)] = vertex0_of_index(v, n);
  std::vector<int> shift1(static_cast<std::size_t>(N));
  for (int v = 0; v < N; ++v) {
    std::uint64_t idx = 0;
    for (int c = 0; c < n; ++c)
      idx = idx * 3 + static_cast<std::uint64_t>((verts[static_cast<std::size_t>(v)]
                                                      [static_cast<std::size_t>(c)] +
                                                  1) %
                                                 3);
    shift1[static_cast<std::size_t>(v)] = static_cast<int>(idx);
  }

  using Mask = std::array<std::uint64_t, 2>;
  auto and_mask = [](const Mask& a, const Mask& b) {
    return Mask{a[0] & b[0], a[1] & b[1]};
  };
  auto popcount = [](const Mask& a) {
    return __builtin_popcountll(a[0]) + __builtin_popcountll(a[1]);
  };

  // masks[i-1][u] = set of w with g(u, w) < i.
  std::vector<std::array<Mask, 4>> masks(static_cast<std::size_t>(N), {Mask{0, 0}, Mask{0, 0},
                                                                       Mask{0, 0}, Mask{0, 0}});
  for (int u = 0; u < N; ++u) {
    for (int w = 0; w < N; ++w) {
      const int w1 = shift1[static_cast<std::size_t>(w)];
      const int d0 = hdist0(verts[static_cast<std::size_t>(u)], verts[static_cast<std::size_t>(w)]);
      const int d1 = hdist0(verts[static_cast<std::size_t>(u)], verts[static_cast<std::size_t>(w1)]);
      const int d2 = 2 * n - d0 - d1;
      const int g3 = std::max({std::abs(2 * n - 3 * d0), std::abs(2 * n - 3 * d1),
                               std::abs(2 * n - 3 * d2)});  // 3 * g(u, w)
      for (int i = 1; i <= 4; ++i)
        if (g3 < 3 * i)
          masks[static_cast<std::size_t>(u)][static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(w >> 6)] |=
              1ULL << (w & 63);
    }
  }

  struct Slot {
    std::array<std::uint64_t, 82> stats{};
    std::vector<std::vector<Vertex0>> counterexamples;
    std::uint64_t verified = 0;
    std::uint64_t failed = 0;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(N));
  parallel_for(static_cast<std::size_t>(N), workers, [&](std::size_t u2) {
    Slot& slot = slots[u2];
    const Mask m1 = masks[0][0];  // u_1 = all-zero vertex
    const Mask m2 = and_mask(m1, masks[u2][1]);
    for (int u3 = 0; u3 < N; ++u3) {
      const Mask m3 = and_mask(m2, masks[static_cast<std::size_t>(u3)][2]);
      for (int u4 = 0; u4 < N; ++u4) {
        const Mask m4 = and_mask(m3, masks[static_cast<std::size_t>(u4)][3]);
        const int count = popcount(m4);
        ++slot.stats[static_cast<std::size_t>(count)];
        std::vector<Vertex0> us{verts[0], verts[u2], verts[static_cast<std::size_t>(u3)],
                                verts[static_cast<std::size_t>(u4)]};
        if (count == 0) {
          slot.counterexamples.push_back(std::move(us));
        } else {
          const int w = (m4[0] != 0) ? __builtin_ctzll(m4[0]) : 64 + __builtin_ctzll(m4[1]);
          if (reverify_witness(us, verts[static_cast<std::size_t>(w)], k))
            ++slot.verified;
          else
            ++slot.failed;
        }
      }
    }
  });

  std::map<int, std::uint64_t> stats;
  for (const Slot& slot : slots) {
    for (int c = 0; c <= 81; ++c)
      if (slot.stats[static_cast<std::size_t>(c)]) stats[c] += slot.stats[static_cast<std::size_t>(c)];
    for (const auto& ce : slot.counterexamples) rep.counterexamples.push_back(ce);
    rep.witnesses_verified += slot.verified;
    rep.verification_failures += slot.failed;
  }
  rep.witness_stats.assign(stats.begin(), stats.end());
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
  return rep;
}

inline OpenProblemReport randomized_search(int k, std::uint64_t budget, std::uint64_t seed,
                                           unsigned workers) {
  const int n = 3 * k + 1;
  const std::uint64_t N = vertex_count_checked(n, 3, kDefaultVertexBudget);
  OpenProblemReport rep;
  rep.k = k;
  rep.n = n;
  rep.mode = SearchMode::randomized;
  rep.seed = seed;
  rep.budget = budget;
  rep.instances_checked = budget;

  std::vector<InstanceOutcome> outcomes(budget);
  std::vector<std::vector<Vertex0>> instances(budget);
  parallel_for(budget, workers, [&](std::size_t t) {
    SplitMix64 g = stream_for(seed, t);
    std::vector<Vertex0>& us = instances[t];
    us.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) us.push_back(vertex0_of_index(g.below(N), n));

    int count = 0;
    std::optional<Vertex0> first;
    Vertex0 w(static_cast<std::size_t>(n), 0);
    for (std::uint64_t wi = 0; wi < N; ++wi) {
      if (wi > 0) {
        // Odometer increment keeps digit extraction O(1) amortized.
        int c = n - 1;
        while (w[static_cast<std::size_t>(c)] == 2) w[static_cast<std::size_t>(c--)] = 0;
        ++w[static_cast<std::size_t>(c)];
      }
      Vertex0 w1 = shift(w, 1);
      if (feasible_w(us, w, w1)) {
        if (!first) first = w;
        ++count;
      }
    }
    InstanceOutcome& out = outcomes[t];
    out.feasible = count;
    if (first) {
      out.verify_attempted = true;
      out.verify_ok = reverify_witness(us, *first, k);
    }
  });

  std::map<int, std::uint64_t> stats;
  for (std::size_t t = 0; t < budget; ++t) {
    const InstanceOutcome& out = outcomes[t];
    ++stats[out.feasible];
    if (out.feasible == 0) {
      rep.counterexamples.push_back(instances[t]);
    } else if (out.verify_ok) {
      ++rep.witnesses_verified;
    } else {
      ++rep.verification_failures;
    }
  }
  rep.witness_stats.assign(stats.begin(), stats.end());
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
  return rep;
}

}  // namespace detail

inline OpenProblemReport open_problem_search(int k, SearchMode mode, std::uint64_t budget,
                                             std::uint64_t seed, unsigned workers = 1) {
  if (k < 1) throw std::invalid_argument("open_problem_search: k must be >= 1");
  if (mode == SearchMode::exhaustive) {
    if (k != 1)
      throw CapacityError("open_problem_search: exhaustive mode is only tractable at k = 1");
    return detail::exhaustive_k1(seed, workers);
  }
  return detail::randomized_search(k, budget, seed, workers);
}

// Two-color existence oracle: for sign vectors a_1..a_n, find x in {-1,1}^n
// with |a_i . x| < 2i for all i by scanning all 2^n candidates. A nullopt
// would falsify the guarantee this checks, so callers treat it as a failure.
inline std::optional<std::vector<int>> bs_existence(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw DimensionError("bs_existence: need at least one vector");
  if (n > 20) throw CapacityError("bs_existence: n > 20 exceeds the 2^n scan budget");
  std::vector<std::uint32_t> mask(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[static_cast<std::size_t>(i)].size()) != n)
      throw DimensionError("bs_existence: vector length mismatch");
    for (int c = 0; c < n; ++c) {
      const int s = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (s != 1 && s != -1) throw std::invalid_argument("bs_existence: entries must be +-1");
      if (s == -1) mask[static_cast<std::size_t>(i)] |= 1u << c;
    }
  }
  const std::uint32_t top = 1u << n;
  for (std::uint32_t x = 0; x < top; ++x) {
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      const int dot = n - 2 * __builtin_popcount(mask[static_cast<std::size_t>(i)] ^ x);
      if (std::abs(dot) >= 2 * (i + 1)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<int> out(static_cast<std::size_t>(n), 1);
      for (int c = 0; c < n; ++c)
        if (x & (1u << c)) out[static_cast<std::size_t>(c)] = -1;
      return out;
    }
  }
  return std::nullopt;
}

// Brute-force check of the staircase claim: with s = min(b(n, q-1), n) (the
// claim's hypothesis needs s <= n), b(n, q) must reach s + 1.
inline bool monotonicity_check(int n, int q, std::uint64_t budget = kDefaultVertexBudget,
                               unsigned workers = 1) {
  if (q < 3) throw UnsupportedError("monotonicity_check: q must be >= 3");
  const int b_prev = burning_number(n, q - 1, 0, budget, workers);
  const int b_cur = burning_number(n, q, 0, budget, workers);
  const int s = std::min(b_prev, n);
  return b_cur >= s + 1;
}

}  // namespace hamburn
