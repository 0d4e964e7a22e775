#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "parallel.hpp"

namespace hamburn {

// Enumeration guard: operations that touch all q^n vertices refuse to run past
// this many, unless the caller raises the budget explicitly.
inline constexpr std::uint64_t kDefaultVertexBudget = 10'000'000;

// A vertex of H(n, q): an n-tuple over {1..q}.
struct Vertex {
  std::vector<int> sym;
  int q = 2;

  int n() const { return static_cast<int>(sym.size()); }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

inline bool lex_less(const Vertex& a, const Vertex& b) {
  return std::lexicographical_compare(a.sym.begin(), a.sym.end(), b.sym.begin(), b.sym.end());
}

inline void validate_vertex(const Vertex& v) {
  if (v.q < 2) throw UnsupportedError("vertex: q must be >= 2");
  if (v.sym.empty()) throw DimensionError("vertex: n must be >= 1");
  for (int s : v.sym)
    if (s < 1 || s > v.q)
      throw std::invalid_argument("vertex: symbol " + std::to_string(s) + " outside 1.." +
                                  std::to_string(v.q));
}

inline Vertex constant_vertex(int n, int q, int s) {
  Vertex v{std::vector<int>(static_cast<std::size_t>(n), s), q};
  validate_vertex(v);
  return v;
}

inline Vertex all_ones(int n, int q) { return constant_vertex(n, q, 1); }

// Ordered centers; position t (1-based) burns with radius b - t.
struct BurnSequence {
  std::vector<Vertex> v;
};

inline void validate_sequence(const BurnSequence& seq) {
  if (seq.v.empty()) throw DimensionError("burn sequence: empty");
  validate_vertex(seq.v.front());
  for (const Vertex& u : seq.v) {
    validate_vertex(u);
    if (u.n() != seq.v.front().n() || u.q != seq.v.front().q)
      throw DimensionError("burn sequence: mixed (n, q)");
  }
}

inline int hdist(const Vertex& u, const Vertex& v) {
  if (u.n() != v.n() || u.q != v.q) throw DimensionError("hdist: mismatched (n, q)");
  int d = 0;
  for (int i = 0; i < u.n(); ++i)
    if (u.sym[i] != v.sym[i]) ++d;
  return d;
}

// |Gamma_k(v)| = sum_{j<=min(k,n)} C(n,j) (q-1)^j; center-independent.
inline std::uint64_t ball_size(int n, int q, int k) {
  if (n < 1 || q < 2 || k < 0) throw std::invalid_argument("ball_size: need n >= 1, q >= 2, k >= 0");
  const int top = std::min(k, n);
  unsigned __int128 total = 0;
  unsigned __int128 binom = 1;  // C(n, j)
  unsigned __int128 pw = 1;     // (q-1)^j
  const auto kMax = static_cast<unsigned __int128>(UINT64_MAX);
  for (int j = 0; j <= top; ++j) {
    if (j > 0) {
      binom = binom * static_cast<unsigned>(n - j + 1) / static_cast<unsigned>(j);
      pw *= static_cast<unsigned>(q - 1);
      if (binom > kMax || pw > kMax) throw std::overflow_error("ball_size: exceeds 64 bits");
    }
    total += binom * pw;
    if (total > kMax) throw std::overflow_error("ball_size: exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

// q^n, guarded by the budget.
inline std::uint64_t vertex_count_checked(int n, int q, std::uint64_t budget) {
  if (n < 1 || q < 2) throw std::invalid_argument("vertex_count: need n >= 1, q >= 2");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / static_cast<std::uint64_t>(q))
      throw CapacityError("q^n exceeds enumeration budget of " + std::to_string(budget));
    total *= static_cast<std::uint64_t>(q);
  }
  if (total > budget)
    throw CapacityError("q^n exceeds enumeration budget of " + std::to_string(budget));
  return total;
}

// Mixed-radix index: symbol s at coordinate i contributes (s-1) * q^(n-1-i).
// Index order therefore equals lexicographic order on tuples.
inline std::uint64_t vertex_index(const Vertex& v) {
  validate_vertex(v);
  std::uint64_t idx = 0;
  for (int s : v.sym) idx = idx * static_cast<std::uint64_t>(v.q) + static_cast<std::uint64_t>(s - 1);
  return idx;
}

inline Vertex vertex_of_index(std::uint64_t idx, int n, int q) {
  Vertex v{std::vector<int>(static_cast<std::size_t>(n), 1), q};
  for (int i = n - 1; i >= 0; --i) {
    v.sym[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::uint64_t>(q)) + 1;
    idx /= static_cast<std::uint64_t>(q);
  }
  return v;
}

namespace detail {

struct Coverage {
  std::vector<std::uint64_t> bits;
  std::uint64_t total = 0;
  std::uint64_t covered = 0;

  explicit Coverage(std::uint64_t n) : bits((n + 63) / 64, 0), total(n) {}

  bool mark(std::uint64_t i) {
    std::uint64_t& w = bits[i >> 6];
    const std::uint64_t m = 1ULL << (i & 63);
    if (w & m) return false;
    w |= m;
    ++covered;
    return true;
  }

  void unmark(std::uint64_t i) {
    bits[i >> 6] &= ~(1ULL << (i & 63));
    --covered;
  }

  bool complete() const { return covered == total; }

  std::uint64_t first_uncovered() const {
    for (std::uint64_t w = 0; w < bits.size(); ++w) {
      std::uint64_t inv = ~bits[w];
      if (w + 1 == bits.size() && (total & 63)) inv &= (1ULL << (total & 63)) - 1;
      if (inv) return (w << 6) + static_cast<std::uint64_t>(__builtin_ctzll(inv));
    }
    return total;
  }
};

// Enumerates every index at distance <= radius from the center, each exactly
// once (ascending change-positions, so no vertex repeats).
template <class Fn>
void ball_walk(const std::vector<int>& digits, const std::vector<std::int64_t>& place, int q,
               int pos, int rem, std::int64_t idx, Fn&& fn) {
  fn(static_cast<std::uint64_t>(idx));
  if (rem == 0) return;
  const int n = static_cast<int>(digits.size());
  for (int p = pos; p < n; ++p) {
    const std::int64_t base = idx - static_cast<std::int64_t>(digits[p]) * place[p];
    for (int d = 0; d < q; ++d) {
      if (d == digits[p]) continue;
      ball_walk(digits, place, q, p + 1, rem - 1, base + d * place[p], fn);
    }
  }
}

inline std::vector<std::int64_t> place_values(int n, int q) {
  std::vector<std::int64_t> place(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) place[i] = place[i + 1] * q;
  return place;
}

inline std::vector<int> digits_of(std::uint64_t idx, int n, int q) {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::uint64_t>(q));
    idx /= static_cast<std::uint64_t>(q);
  }
  return d;
}

// Marks the ball, appending newly covered indices to `added`.
inline void mark_ball(Coverage& cov, std::uint64_t center, int radius, int n, int q,
                      const std::vector<std::int64_t>& place, std::vector<std::uint64_t>* added) {
  const std::vector<int> digits = digits_of(center, n, q);
  ball_walk(digits, place, q, 0, std::min(radius, n), static_cast<std::int64_t>(center),
            [&](std::uint64_t i) {
              if (cov.mark(i) && added) added->push_back(i);
            });
}

inline Coverage cover_sequence(const BurnSequence& seq, std::uint64_t budget) {
  validate_sequence(seq);
  const int n = seq.v.front().n();
  const int q = seq.v.front().q;
  const std::uint64_t total = vertex_count_checked(n, q, budget);
  Coverage cov(total);
  const auto place = place_values(n, q);
  const int b = static_cast<int>(seq.v.size());
  for (int t = 0; t < b; ++t)
    mark_ball(cov, vertex_index(seq.v[static_cast<std::size_t>(t)]), b - 1 - t, n, q, place, nullptr);
  return cov;
}

}  // namespace detail

// True iff the staggered balls Gamma_{b-1}(v_1) ... Gamma_0(v_b) cover [q]^n.
inline bool burns(const BurnSequence& seq, std::uint64_t budget = kDefaultVertexBudget) {
  return detail::cover_sequence(seq, budget).complete();
}

// Lexicographically smallest uncovered vertex, or nullopt if seq burns.
inline std::optional<Vertex> uncovered(const BurnSequence& seq,
                                       std::uint64_t budget = kDefaultVertexBudget) {
  detail::Coverage cov = detail::cover_sequence(seq, budget);
  if (cov.complete()) return std::nullopt;
  return vertex_of_index(cov.first_uncovered(), seq.v.front().n(), seq.v.front().q);
}

namespace detail {

struct BurnSearchContext {
  int n, q, len;
  std::uint64_t total;
  std::vector<std::int64_t> place;
  std::vector<std::uint64_t> suffix_cap;  // suffix_cap[t] = capacity of rounds t..len-1

  BurnSearchContext(int n_, int q_, int len_, std::uint64_t total_)
      : n(n_), q(q_), len(len_), total(total_), place(place_values(n_, q_)),
        suffix_cap(static_cast<std::size_t>(len_) + 1, 0) {
    for (int t = len - 1; t >= 0; --t) {
      std::uint64_t b = ball_size(n, q, len - 1 - t);
      b = std::min(b, total);
      std::uint64_t s = suffix_cap[static_cast<std::size_t>(t) + 1] + b;
      suffix_cap[static_cast<std::size_t>(t)] = std::min(s, total);
    }
  }
};

// Depth-first over centers at positions t..len-1, lexicographic; returns the
// lex-first completion of `chosen` into a burning sequence, if any. The prune
// is the counting bound: more uncovered vertices than the remaining balls can
// hold, even if placed disjointly. Coverage is restored on every return path.
inline bool burn_dfs(const BurnSearchContext& ctx, Coverage& cov, int t,
                     std::vector<std::uint64_t>& chosen) {
  if (cov.complete()) {
    // Any tail works once covered; index 0 keeps the result lexicographically
    // minimal.
    chosen.resize(static_cast<std::size_t>(ctx.len), 0);
    return true;
  }
  if (t == ctx.len) return false;
  if (ctx.total - cov.covered > ctx.suffix_cap[static_cast<std::size_t>(t)]) return false;
  std::vector<std::uint64_t> added;
  for (std::uint64_t c = 0; c < ctx.total; ++c) {
    added.clear();
    mark_ball(cov, c, ctx.len - 1 - t, ctx.n, ctx.q, ctx.place, &added);
    chosen.push_back(c);
    const bool found = burn_dfs(ctx, cov, t + 1, chosen);
    if (!found) chosen.pop_back();
    for (std::uint64_t i : added) cov.unmark(i);
    if (found) return true;
  }
  return false;
}

// Orbit representatives for v_2 under the stabilizer of the all-ones vertex
// (coordinate permutations and per-coordinate symbol permutations fixing 1):
// (2,..,2,1,..,1) with 0..n leading twos.
inline std::vector<std::uint64_t> v2_orbit_reps(int n, int q) {
  std::vector<std::uint64_t> reps;
  std::uint64_t idx = 0;
  reps.push_back(idx);
  const auto place = place_values(n, q);
  for (int k = 0; k < n; ++k) {
    idx += static_cast<std::uint64_t>(place[static_cast<std::size_t>(k)]);
    reps.push_back(idx);
  }
  return reps;
}

}  // namespace detail

// Lex-first length-len burning sequence with v_1 = (1,..,1), or nullopt after
// an exhaustive search. Fixing v_1 is valid by vertex-transitivity. With
// canonical_v2 the second center only ranges over stabilizer-orbit
// representatives; existence is unchanged but the witness may differ.
inline std::optional<BurnSequence> find_burning_sequence(int n, int q, int len,
                                                         std::uint64_t budget = kDefaultVertexBudget,
                                                         unsigned workers = 1,
                                                         bool canonical_v2 = false) {
  if (len < 1) throw std::invalid_argument("find_burning_sequence: len must be >= 1");
  const std::uint64_t total = vertex_count_checked(n, q, budget);
  detail::BurnSearchContext ctx(n, q, len, total);

  auto to_sequence = [&](const std::vector<std::uint64_t>& chosen) {
    BurnSequence seq;
    for (std::uint64_t c : chosen) seq.v.push_back(vertex_of_index(c, n, q));
    return seq;
  };

  detail::Coverage cov0(total);
  detail::mark_ball(cov0, 0, len - 1, n, q, ctx.place, nullptr);
  std::vector<std::uint64_t> chosen{0};
  if (cov0.complete() || len == 1) {
    if (!cov0.complete()) return std::nullopt;
    chosen.resize(static_cast<std::size_t>(len), 0);
    return to_sequence(chosen);
  }
  if (total - cov0.covered > ctx.suffix_cap[1]) return std::nullopt;

  std::vector<std::uint64_t> v2_choices;
  if (canonical_v2) {
    v2_choices = detail::v2_orbit_reps(n, q);
  } else {
    v2_choices.resize(total);
    for (std::uint64_t c = 0; c < total; ++c) v2_choices[c] = c;
  }

  workers = resolve_workers(workers);
  // Fan out over v_2. Each worker owns its coverage bitmap; the winner is the
  // choice with the smallest v_2, which is exactly what a sequential scan in
  // ascending order returns, so worker count never changes the result.
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{v2_choices.size()};
  std::vector<std::optional<std::vector<std::uint64_t>>> results(v2_choices.size());
  auto scan = [&] {
    detail::Coverage cov(total);
    detail::mark_ball(cov, 0, len - 1, n, q, ctx.place, nullptr);
    const std::uint64_t base_covered = cov.covered;
    std::vector<std::uint64_t> added;
    for (;;) {
      const std::size_t pick = next.fetch_add(1);
      if (pick >= v2_choices.size()) return;
      if (pick > best.load()) continue;  // cannot beat an earlier witness
      added.clear();
      detail::mark_ball(cov, v2_choices[pick], len - 2, n, q, ctx.place, &added);
      std::vector<std::uint64_t> local{0, v2_choices[pick]};
      if (detail::burn_dfs(ctx, cov, 2, local)) {
        results[pick] = std::move(local);
        std::size_t cur = best.load();
        while (pick < cur && !best.compare_exchange_weak(cur, pick)) {
        }
      }
      for (std::uint64_t i : added) cov.unmark(i);
      if (cov.covered != base_covered) throw StateError("burn search: coverage undo mismatch");
    }
  };
  if (workers <= 1 || v2_choices.size() <= 1) {
    scan();
  } else {
    const unsigned nthreads = static_cast<unsigned>(
        std::min<std::size_t>(workers, v2_choices.size()));
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        try {
          scan();
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& r : results)
    if (r) return to_sequence(*r);
  return std::nullopt;
}

struct BurnSearchResult {
  int b = 0;
  BurnSequence witness;
};

// Exact burning number with a retained witness: increasing-length search, each
// length exhausted before moving on. max_len = 0 means n + 1, which always
// succeeds because the diameter is n.
inline BurnSearchResult burning_search(int n, int q, int max_len = 0,
                                       std::uint64_t budget = kDefaultVertexBudget,
                                       unsigned workers = 1, bool canonical_v2 = false) {
  if (max_len == 0) max_len = n + 1;
  if (max_len < 1) throw std::invalid_argument("burning_search: max_len must be >= 1");
  vertex_count_checked(n, q, budget);
  for (int len = 1; len <= max_len; ++len) {
    auto seq = find_burning_sequence(n, q, len, budget, workers, canonical_v2);
    if (seq) return {len, std::move(*seq)};
  }
  throw CapacityError("burning_search: no burning sequence within length cap " +
                      std::to_string(max_len));
}

inline int burning_number(int n, int q, int max_len = 0,
                          std::uint64_t budget = kDefaultVertexBudget, unsigned workers = 1) {
  return burning_search(n, q, max_len, budget, workers).b;
}

}  // namespace hamburn
