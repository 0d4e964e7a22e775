#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hamming.hpp"
#include "rational.hpp"

namespace hamburn {

// One q-dimensional block of a code vector.
using Block = std::vector<Rational>;

// n blocks of q exact rationals. Encodings of vertices have every block equal
// to a color vector; intermediate rounding states only promise block sum zero
// with entries in [-1/q, 1-1/q].
struct CodeVector {
  int n = 0;
  int q = 0;
  std::vector<Rational> e;  // block j occupies [q*j, q*(j+1))

  Rational& at(int block, int pos) { return e[static_cast<std::size_t>(block * q + pos)]; }
  const Rational& at(int block, int pos) const {
    return e[static_cast<std::size_t>(block * q + pos)];
  }

  Block block(int j) const {
    return Block(e.begin() + static_cast<std::ptrdiff_t>(j) * q,
                 e.begin() + (static_cast<std::ptrdiff_t>(j) + 1) * q);
  }

  friend bool operator==(const CodeVector&, const CodeVector&) = default;
};

inline CodeVector zero_codevector(int n, int q) {
  if (n < 1 || q < 2) throw DimensionError("codevector: need n >= 1, q >= 2");
  CodeVector x;
  x.n = n;
  x.q = q;
  x.e.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(q), Rational(0));
  return x;
}

// The color vector of symbol i: 1 - 1/q at entry i, -1/q elsewhere. Entry sum
// is zero by construction.
inline Block color_vector(int i, int q) {
  if (q < 2) throw UnsupportedError("color_vector: q must be >= 2");
  if (i < 1 || i > q) throw std::invalid_argument("color_vector: i outside 1..q");
  Block b(static_cast<std::size_t>(q), make_rational(-1, q));
  b[static_cast<std::size_t>(i - 1)] = make_rational(q - 1, q);
  return b;
}

// Which color vector a block equals, if any.
inline std::optional<int> color_index(const Block& b, int q) {
  if (static_cast<int>(b.size()) != q) return std::nullopt;
  const Rational lo = make_rational(-1, q);
  const Rational hi = make_rational(q - 1, q);
  int found = 0;
  for (int p = 0; p < q; ++p) {
    if (b[static_cast<std::size_t>(p)] == hi) {
      found = p + 1;
    } else if (b[static_cast<std::size_t>(p)] != lo) {
      return std::nullopt;
    }
  }
  if (found == 0) return std::nullopt;
  return found;
}

inline bool is_color_vector(const Block& b, int q) { return color_index(b, q).has_value(); }

// Membership in the convex hull of the color vectors: entry sum zero and every
// entry >= -1/q. Equivalent to the existence of lambda_i >= 0 with sum <= 1;
// the reconstruction t = max(0, -q * min entry) recovers valid coefficients.
inline bool in_hull(const Block& b, int q) {
  if (static_cast<int>(b.size()) != q) return false;
  const Rational lo = make_rational(-1, q);
  Rational sum(0);
  for (const Rational& z : b) {
    if (z < lo) return false;
    sum += z;
  }
  return sum == 0;
}

inline bool in_hull(const CodeVector& x) {
  for (int j = 0; j < x.n; ++j)
    if (!in_hull(x.block(j), x.q)) return false;
  return true;
}

inline bool in_code(const CodeVector& x) {
  for (int j = 0; j < x.n; ++j)
    if (!is_color_vector(x.block(j), x.q)) return false;
  return true;
}

// The block-wise bijection from vertices to code vectors.
inline CodeVector encode(const Vertex& v) {
  validate_vertex(v);
  CodeVector x = zero_codevector(v.n(), v.q);
  const Rational lo = make_rational(-1, v.q);
  const Rational hi = make_rational(v.q - 1, v.q);
  for (int j = 0; j < x.n; ++j)
    for (int p = 0; p < x.q; ++p) x.at(j, p) = (p + 1 == v.sym[static_cast<std::size_t>(j)]) ? hi : lo;
  return x;
}

inline Vertex decode(const CodeVector& x) {
  Vertex v{std::vector<int>(static_cast<std::size_t>(x.n), 0), x.q};
  for (int j = 0; j < x.n; ++j) {
    auto c = color_index(x.block(j), x.q);
    if (!c) throw CodewordError("decode: block " + std::to_string(j) + " is not a color vector");
    v.sym[static_cast<std::size_t>(j)] = *c;
  }
  return v;
}

inline Rational block_inner(const Block& a, const Block& b) {
  if (a.size() != b.size()) throw DimensionError("block_inner: size mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational inner(const CodeVector& a, const CodeVector& x) {
  if (a.n != x.n || a.q != x.q) throw DimensionError("inner: mismatched (n, q)");
  Rational s(0);
  for (std::size_t i = 0; i < a.e.size(); ++i) s += a.e[i] * x.e[i];
  return s;
}

// The distance identity: encodings satisfy a.x = (1 - 1/q) n - d(v, w).
inline bool dist_identity_check(const Vertex& v, const Vertex& w) {
  if (v.n() != w.n() || v.q != w.q) throw DimensionError("dist_identity_check: mismatched (n, q)");
  Rational lhs = inner(encode(v), encode(w));
  Rational rhs = make_rational(v.q - 1, v.q) * v.n() - hdist(v, w);
  return lhs == rhs;
}

}  // namespace hamburn
