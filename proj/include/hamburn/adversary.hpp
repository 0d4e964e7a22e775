#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "colorcode.hpp"
#include "errors.hpp"
#include "floatvar.hpp"
#include "hamming.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace hamburn {

// floor((1 - 1/q) n) + 1, exact integer arithmetic throughout.
inline int lower_bound(int n, int q) {
  if (q < 3) throw UnsupportedError("lower_bound: q must be >= 3");
  if (n < 1) throw std::invalid_argument("lower_bound: n must be >= 1");
  return static_cast<int>((static_cast<long>(q - 1) * n) / q) + 1;
}

// floor((1 - 1/q) n + (q + 1)/2).
inline int upper_bound(int n, int q) {
  if (q < 2) throw UnsupportedError("upper_bound: q must be >= 2");
  if (n < 1) throw std::invalid_argument("upper_bound: n must be >= 1");
  const long num = 2L * (q - 1) * n + static_cast<long>(q) * (q + 1);
  return static_cast<int>(num / (2L * q));
}

// The covering construction behind the upper bound: constant vertices
// (i,...,i) for i = 1..q, padded with (1,...,1) up to the bound's length.
inline BurnSequence canonical_sequence(int n, int q) {
  const int len = upper_bound(n, q);
  BurnSequence seq;
  for (int i = 1; i <= len; ++i) seq.v.push_back(constant_vertex(n, q, i <= q ? i : 1));
  return seq;
}

// Exact evidence that w evades the given centers: d(v_i, w) >= m + 1 - i for
// every given index i, with the floor case (k, r), n = qk + r, recorded.
struct EvaderCertificate {
  Vertex w;
  int m = 0;
  std::vector<int> distances;  // d(v_i, w) for the given vertices, index i-1
  std::vector<int> required;   // m + 1 - i
  int k = 0;
  int r = 0;
  FvCertificate core;  // the rounding run that produced w
};

// Rounds the strict rational inequality d(v_i, w) > (1 - 1/q) n - i to the
// integer bound, split on r exactly as the two floor cases demand.
inline int rounded_requirement(int n, int q, int i) {
  const int k = n / q;
  const int r = n % q;
  return (r == 0) ? (q - 1) * k - i + 1 : (q - 1) * k + r - i;
}

inline EvaderCertificate evade_with_padding(const std::vector<Vertex>& vs, int n, int q,
                                            const std::vector<Vertex>& padding) {
  if (q < 3) throw UnsupportedError("evade: q must be >= 3");
  if (n < 1) throw std::invalid_argument("evade: n must be >= 1");
  const int m = static_cast<int>((static_cast<long>(q - 1) * n) / q);
  if (static_cast<int>(vs.size()) > m)
    throw std::invalid_argument("evade: more than m = " + std::to_string(m) +
                                " vertices; the guarantee would be vacuous for the tail");
  std::vector<Vertex> full = vs;
  for (const Vertex& p : padding) {
    if (static_cast<int>(full.size()) >= n) break;
    full.push_back(p);
  }
  while (static_cast<int>(full.size()) < n) full.push_back(all_ones(n, q));
  for (const Vertex& v : full) {
    validate_vertex(v);
    if (v.n() != n || v.q != q) throw DimensionError("evade: vertex does not match (n, q)");
  }

  std::vector<CodeVector> a;
  a.reserve(full.size());
  for (const Vertex& v : full) a.push_back(encode(v));

  EvaderCertificate cert;
  cert.core = run(a);
  cert.w = decode(cert.core.x_final);
  cert.m = m;
  cert.k = n / q;
  cert.r = n % q;
  for (int i = 1; i <= static_cast<int>(vs.size()); ++i) {
    const int d = hdist(vs[static_cast<std::size_t>(i - 1)], cert.w);
    const int req = m + 1 - i;
    if (rounded_requirement(n, q, i) != req)
      throw StateError("evade: floor-case requirement disagrees with m + 1 - i");
    if (d < req)
      throw StateError("evade: guarantee failed at i = " + std::to_string(i) + " (d = " +
                       std::to_string(d) + ", required " + std::to_string(req) + ")");
    cert.distances.push_back(d);
    cert.required.push_back(req);
  }
  return cert;
}

// Padding is fixed to (1,...,1) so the certificate is deterministic; the
// guarantee for the given indices never depends on the pad.
inline EvaderCertificate evade(const std::vector<Vertex>& vs, int n, int q) {
  return evade_with_padding(vs, n, q, {});
}

struct WitnessReport {
  int n = 0;
  int q = 0;
  int m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int passes = 0;
  int failures = 0;
  int worst_slack = 0;  // min over trials and i of d(v_i, w) - (m + 1 - i)
};

// Random m-vertex sequences; each evader is additionally checked not to lie in
// the staggered balls Gamma_{m-1}(v_1) ... Gamma_0(v_m). Distance checks are
// used directly: q^n here can exceed any bitmap budget.
inline WitnessReport lower_bound_witnessed(int n, int q, int trials, std::uint64_t seed,
                                           unsigned workers = 1) {
  if (q < 3) throw UnsupportedError("lower_bound_witnessed: q must be >= 3");
  if (trials < 0) throw std::invalid_argument("lower_bound_witnessed: negative trials");
  WitnessReport rep;
  rep.n = n;
  rep.q = q;
  rep.m = static_cast<int>((static_cast<long>(q - 1) * n) / q);
  rep.trials = trials;
  rep.seed = seed;

  std::vector<std::uint8_t> ok(static_cast<std::size_t>(trials), 0);
  std::vector<int> slack(static_cast<std::size_t>(trials), 0);
  parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t t) {
    SplitMix64 g = stream_for(seed, t);
    std::vector<Vertex> vs;
    for (int i = 0; i < rep.m; ++i) {
      Vertex v{std::vector<int>(static_cast<std::size_t>(n), 1), q};
      for (int c = 0; c < n; ++c) v.sym[static_cast<std::size_t>(c)] = 1 + g.below_int(q);
      vs.push_back(std::move(v));
    }
    EvaderCertificate cert = evade(vs, n, q);
    bool covered = false;
    int worst = n;
    for (int i = 1; i <= rep.m; ++i) {
      const int d = hdist(vs[static_cast<std::size_t>(i - 1)], cert.w);
      if (d <= rep.m - i) covered = true;  // w inside Gamma_{m-i}(v_i)
      worst = std::min(worst, d - (rep.m + 1 - i));
    }
    ok[t] = covered ? 0 : 1;
    slack[t] = worst;
  });
  rep.worst_slack = (trials > 0 && rep.m > 0) ? n : 0;
  for (int t = 0; t < trials; ++t) {
    if (ok[static_cast<std::size_t>(t)])
      ++rep.passes;
    else
      ++rep.failures;
    if (rep.m > 0) rep.worst_slack = std::min(rep.worst_slack, slack[static_cast<std::size_t>(t)]);
  }
  return rep;
}

}  // namespace hamburn
