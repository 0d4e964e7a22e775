#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adversary.hpp"
#include "colorcode.hpp"
#include "experiments.hpp"
#include "floatvar.hpp"
#include "rng.hpp"

namespace hamburn {

// Cross-cutting invariant suites behind the `selfcheck` subcommand. Each suite
// recomputes a family of exact identities from scratch; the fault hook
// corrupts the first suite's inputs so a broken build of the tables is
// provably detected rather than silently accepted.
enum class Fault { none, color_vector };

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace selfcheck_detail {

inline SuiteResult color_inner_table(Fault fault) {
  SuiteResult res{"color-inner-table", true, "inner products and entry sums, q = 2..8"};
  for (int q = 2; q <= 8 && res.pass; ++q) {
    std::vector<Block> cs;
    for (int i = 1; i <= q; ++i) cs.push_back(color_vector(i, q));
    if (fault == Fault::color_vector) cs[0][0] += make_rational(1, q);
    const Rational same = make_rational(q - 1, q);
    const Rational diff = make_rational(-1, q);
    for (int i = 0; i < q && res.pass; ++i) {
      Rational sum(0);
      for (const Rational& z : cs[static_cast<std::size_t>(i)]) sum += z;
      if (sum != 0) {
        res.pass = false;
        res.detail = "entry sum nonzero at q=" + std::to_string(q);
        break;
      }
      for (int j = 0; j < q; ++j) {
        Rational p = block_inner(cs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(j)]);
        if (p != (i == j ? same : diff)) {
          res.pass = false;
          res.detail = "inner product table broken at q=" + std::to_string(q);
          break;
        }
      }
    }
  }
  return res;
}

inline Vertex random_vertex(SplitMix64& g, int n, int q) {
  Vertex v{std::vector<int>(static_cast<std::size_t>(n), 1), q};
  for (int c = 0; c < n; ++c) v.sym[static_cast<std::size_t>(c)] = 1 + g.below_int(q);
  return v;
}

inline SuiteResult distance_identity() {
  SuiteResult res{"distance-identity", true,
                  "a.x = (1-1/q)n - d(v,w), exhaustive small + 10^4 random at n=20 q=5"};
  for (int n = 1; n <= 3; ++n)
    for (int q = 2; q <= 4; ++q) {
      const std::uint64_t total = vertex_count_checked(n, q, kDefaultVertexBudget);
      for (std::uint64_t i = 0; i < total; ++i)
        for (std::uint64_t j = 0; j < total; ++j)
          if (!dist_identity_check(vertex_of_index(i, n, q), vertex_of_index(j, n, q))) {
            res.pass = false;
            res.detail = "violated at n=" + std::to_string(n) + " q=" + std::to_string(q);
            return res;
          }
    }
  SplitMix64 g(1);
  for (int t = 0; t < 10000; ++t)
    if (!dist_identity_check(random_vertex(g, 20, 5), random_vertex(g, 20, 5))) {
      res.pass = false;
      res.detail = "violated on random pair " + std::to_string(t);
      return res;
    }
  return res;
}

// Independent hull route: solve for convex coefficients via
// t = max(0, -q min z), lambda_j = z_j + t/q, then substitute back.
inline bool hull_member_by_reconstruction(const Block& b, int q) {
  if (static_cast<int>(b.size()) != q) return false;
  Rational mn = b[0];
  for (const Rational& z : b) mn = std::min(mn, z);
  Rational t(0);
  if (mn < 0) t = Rational(-q * mn);
  if (t > 1) return false;
  std::vector<Rational> lambda;
  Rational lsum(0);
  for (const Rational& z : b) {
    Rational l = z + t / q;
    if (l < 0 || l > 1) return false;
    lambda.push_back(l);
    lsum += l;
  }
  if (lsum > 1) return false;
  Block rebuilt(static_cast<std::size_t>(q), Rational(0));
  for (int i = 0; i < q; ++i) {
    Block c = color_vector(i + 1, q);
    for (int p = 0; p < q; ++p)
      rebuilt[static_cast<std::size_t>(p)] += lambda[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(p)];
  }
  return rebuilt == b;
}

inline SuiteResult hull_characterization() {
  SuiteResult res{"hull-characterization", true,
                  "sum-zero / entry >= -1/q equivalence on 10^4 sampled blocks"};
  SplitMix64 g(2);
  for (int t = 0; t < 10000; ++t) {
    const int q = 2 + static_cast<int>(g.below(5));
    Block b(static_cast<std::size_t>(q), Rational(0));
    if (t % 2 == 0) {
      // Convex combination of color vectors, always a member.
      std::vector<long> w(static_cast<std::size_t>(q) + 1, 0);
      long total = 0;
      for (auto& x : w) {
        x = static_cast<long>(g.below(10));
        total += x;
      }
      if (total == 0) total = 1;
      for (int i = 0; i < q; ++i) {
        Rational lambda = make_rational(w[static_cast<std::size_t>(i) + 1], total);
        Block c = color_vector(i + 1, q);
        for (int p = 0; p < q; ++p) b[static_cast<std::size_t>(p)] += lambda * c[static_cast<std::size_t>(p)];
      }
      if (!in_hull(b, q)) {
        res.pass = false;
        res.detail = "convex combination rejected at trial " + std::to_string(t);
        return res;
      }
    } else {
      // Sum-zero candidate, member or not.
      Rational sum(0);
      for (int p = 0; p + 1 < q; ++p) {
        b[static_cast<std::size_t>(p)] = make_rational(static_cast<long>(g.below(9)) - 4, 2L * q);
        sum += b[static_cast<std::size_t>(p)];
      }
      b[static_cast<std::size_t>(q) - 1] = -sum;
    }
    if (in_hull(b, q) != hull_member_by_reconstruction(b, q)) {
      res.pass = false;
      res.detail = "characterization mismatch at trial " + std::to_string(t);
      return res;
    }
    if (in_hull(b, q)) {
      const Rational top = make_rational(q - 1, q);
      int tops = 0;
      for (const Rational& z : b)
        if (z == top) ++tops;
      if (tops > 1) {
        res.pass = false;
        res.detail = "hull member with two 1-1/q entries at trial " + std::to_string(t);
        return res;
      }
    }
  }
  return res;
}

// Exhaustive feasibility oracle at tiny scale: the rounded point must lie in
// the nonempty set {x in Q^n : |a_i . x| < i for all i}.
inline SuiteResult floatvar_oracle(int trials, std::uint64_t seed) {
  SuiteResult res{"floatvar-oracle", true,
                  std::to_string(trials) + " runs at n <= 3, q = 3, checked by full enumeration"};
  for (int t = 0; t < trials; ++t) {
    SplitMix64 g = stream_for(seed, static_cast<std::uint64_t>(t));
    const int n = 1 + t % 3;
    const int q = 3;
    std::vector<CodeVector> a;
    for (int i = 0; i < n; ++i) a.push_back(encode(random_vertex(g, n, q)));
    FvCertificate cert = run(a);
    const std::uint64_t total = vertex_count_checked(n, q, kDefaultVertexBudget);
    bool output_ok = false;
    std::uint64_t feasible = 0;
    for (std::uint64_t w = 0; w < total; ++w) {
      CodeVector x = encode(vertex_of_index(w, n, q));
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i) {
        Rational v = abs(inner(a[static_cast<std::size_t>(i - 1)], x));
        ok = v < i;
      }
      if (ok) {
        ++feasible;
        if (x == cert.x_final) output_ok = true;
      }
    }
    if (feasible == 0 || !output_ok) {
      res.pass = false;
      res.detail = "trial " + std::to_string(t) + ": feasible=" + std::to_string(feasible) +
                   (output_ok ? "" : ", output outside feasible set");
      return res;
    }
  }
  return res;
}

inline SuiteResult bound_identities() {
  SuiteResult res{"bound-identities", true,
                  "lower <= upper (q=3..5, n<=30); upper(n,2) = ceil(n/2)+1 (n<=50)"};
  for (int q = 3; q <= 5; ++q)
    for (int n = 1; n <= 30; ++n)
      if (lower_bound(n, q) > upper_bound(n, q)) {
        res.pass = false;
        res.detail = "lower > upper at n=" + std::to_string(n) + " q=" + std::to_string(q);
        return res;
      }
  for (int n = 1; n <= 50; ++n)
    if (upper_bound(n, 2) != (n + 1) / 2 + 1) {
      res.pass = false;
      res.detail = "upper(n,2) mismatch at n=" + std::to_string(n);
      return res;
    }
  return res;
}

inline SuiteResult triangle_identity() {
  SuiteResult res{"triangle-identity", true, "d + d' + d'' = 2n exhaustive at q=3, n=4"};
  const int n = 4;
  for (std::uint64_t vi = 0; vi < 81; ++vi)
    for (std::uint64_t wi = 0; wi < 81; ++wi) {
      Vertex0 v = detail::vertex0_of_index(vi, n);
      Vertex0 w = detail::vertex0_of_index(wi, n);
      const int sum = hdist0(v, w) + hdist0(v, shift(w, 1)) + hdist0(v, shift(w, 2));
      if (sum != 2 * n) {
        res.pass = false;
        res.detail = "sum " + std::to_string(sum) + " at pair (" + std::to_string(vi) + ", " +
                     std::to_string(wi) + ")";
        return res;
      }
    }
  return res;
}

}  // namespace selfcheck_detail

inline std::vector<SuiteResult> run_selfcheck(Fault fault = Fault::none) {
  std::vector<SuiteResult> out;
  out.push_back(selfcheck_detail::color_inner_table(fault));
  out.push_back(selfcheck_detail::distance_identity());
  out.push_back(selfcheck_detail::hull_characterization());
  out.push_back(selfcheck_detail::floatvar_oracle(200, 3));
  out.push_back(selfcheck_detail::bound_identities());
  out.push_back(selfcheck_detail::triangle_identity());
  return out;
}

}  // namespace hamburn
