#include "doctest.h"

#include <vector>

#include "hamburn/colorcode.hpp"
#include "hamburn/rng.hpp"

namespace {

using namespace hamburn;

Vertex v_of(std::vector<int> sym, int q) { return Vertex{std::move(sym), q}; }

Vertex rand_vertex(SplitMix64& g, int n, int q) {
  Vertex v{std::vector<int>(static_cast<std::size_t>(n), 1), q};
  for (int i = 0; i < n; ++i) v.sym[static_cast<std::size_t>(i)] = 1 + g.below_int(q);
  return v;
}

// Independent hull oracle: reconstruct convex coefficients and substitute
// back into the definition.
bool hull_oracle(const Block& b, int q) {
  if (static_cast<int>(b.size()) != q) return false;
  Rational mn = b[0];
  for (const Rational& z : b)
    if (z < mn) mn = z;
  Rational t(0);
  if (mn < 0) t = Rational(mn * -q);
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
      rebuilt[static_cast<std::size_t>(p)] +=
          lambda[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(p)];
  }
  return rebuilt == b;
}

}  // namespace

TEST_CASE("color vectors have the stated entries") {
  CHECK(color_vector(1, 3) ==
        Block{make_rational(2, 3), make_rational(-1, 3), make_rational(-1, 3)});
  CHECK(color_vector(3, 3) ==
        Block{make_rational(-1, 3), make_rational(-1, 3), make_rational(2, 3)});
  CHECK(color_vector(1, 2) == Block{make_rational(1, 2), make_rational(-1, 2)});
  CHECK_THROWS_AS(color_vector(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(color_vector(4, 3), std::invalid_argument);
}

TEST_CASE("the inner-product table holds exactly for q = 2..8") {
  for (int q = 2; q <= 8; ++q) {
    const Rational same = make_rational(q - 1, q);
    const Rational diff = make_rational(-1, q);
    for (int i = 1; i <= q; ++i) {
      Block ci = color_vector(i, q);
      Rational sum(0);
      for (const Rational& z : ci) sum += z;
      CHECK(sum == 0);
      for (int j = 1; j <= q; ++j)
        CHECK(block_inner(ci, color_vector(j, q)) == (i == j ? same : diff));
    }
  }
}

TEST_CASE("encode produces the block-wise color vectors") {
  CodeVector x = encode(v_of({1, 2}, 3));
  CHECK(x.block(0) == color_vector(1, 3));
  CHECK(x.block(1) == color_vector(2, 3));
  CodeVector y = encode(v_of({2}, 2));
  CHECK(y.block(0) == Block{make_rational(-1, 2), make_rational(1, 2)});
  CHECK(in_code(x));
  CHECK(in_hull(x));
}

TEST_CASE("decode inverts encode") {
  CHECK(decode(encode(v_of({3, 1, 2}, 3))) == v_of({3, 1, 2}, 3));
  CHECK(decode(encode(v_of({1, 1}, 2))) == v_of({1, 1}, 2));
  SplitMix64 g(31);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + g.below_int(6);
    const int q = 2 + g.below_int(4);
    Vertex v = rand_vertex(g, n, q);
    CHECK(decode(encode(v)) == v);
  }
}

TEST_CASE("decode rejects non-codewords") {
  CodeVector x = zero_codevector(1, 3);  // the hull center is not a color vector
  CHECK_THROWS_AS(decode(x), CodewordError);
  CodeVector y = encode(v_of({1, 2}, 3));
  y.at(1, 0) += make_rational(1, 3);
  CHECK_THROWS_AS(decode(y), CodewordError);
}

TEST_CASE("inner products of encodings take the predicted values") {
  Vertex v = v_of({2, 3, 1}, 3);
  CHECK(inner(encode(v), encode(v)) == 2);  // (1 - 1/3) * 3
  CHECK(block_inner(color_vector(1, 3), color_vector(2, 3)) == make_rational(-1, 3));
  CHECK(inner(encode(v_of({1, 1}, 3)), encode(v_of({2, 3}, 3))) == make_rational(-2, 3));
  CHECK_THROWS_AS(inner(encode(v_of({1, 1}, 3)), encode(v_of({1, 1, 1}, 3))), DimensionError);
}

TEST_CASE("distance identity holds exhaustively at small sizes") {
  CHECK(dist_identity_check(v_of({1, 2, 3}, 3), v_of({3, 2, 1}, 3)));
  for (int n = 1; n <= 3; ++n)
    for (int q = 2; q <= 4; ++q) {
      const std::uint64_t total = vertex_count_checked(n, q, kDefaultVertexBudget);
      for (std::uint64_t i = 0; i < total; ++i)
        for (std::uint64_t j = 0; j < total; ++j)
          CHECK(dist_identity_check(vertex_of_index(i, n, q), vertex_of_index(j, n, q)));
    }
}

TEST_CASE("distance identity holds on random large pairs") {
  SplitMix64 g(32);
  for (int t = 0; t < 500; ++t)
    CHECK(dist_identity_check(rand_vertex(g, 20, 5), rand_vertex(g, 20, 5)));
}

TEST_CASE("hull membership matches the convex-coefficient oracle") {
  SplitMix64 g(33);
  int members = 0, outsiders = 0;
  for (int t = 0; t < 2000; ++t) {
    const int q = 2 + g.below_int(5);
    Block b(static_cast<std::size_t>(q), Rational(0));
    if (t % 2 == 0) {
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
        for (int p = 0; p < q; ++p)
          b[static_cast<std::size_t>(p)] += lambda * c[static_cast<std::size_t>(p)];
      }
      CHECK(in_hull(b, q));
    } else {
      Rational sum(0);
      for (int p = 0; p + 1 < q; ++p) {
        b[static_cast<std::size_t>(p)] = make_rational(static_cast<long>(g.below(9)) - 4, 2L * q);
        sum += b[static_cast<std::size_t>(p)];
      }
      b[static_cast<std::size_t>(q - 1)] = -sum;
    }
    const bool member = in_hull(b, q);
    CHECK(member == hull_oracle(b, q));
    (member ? members : outsiders)++;
    if (member) {
      const Rational top = make_rational(q - 1, q);
      int tops = 0;
      for (const Rational& z : b)
        if (z == top) ++tops;
      CHECK(tops <= 1);
    }
  }
  // The sampler must actually exercise both sides.
  CHECK(members > 100);
  CHECK(outsiders > 100);
}

TEST_CASE("hull membership requires a zero block sum") {
  Block b{make_rational(1, 3), Rational(0), Rational(0)};
  CHECK_FALSE(in_hull(b, 3));
  Block c{make_rational(-2, 3), make_rational(1, 3), make_rational(1, 3)};
  CHECK_FALSE(in_hull(c, 3));  // entry below -1/q
  CHECK(in_hull(Block{Rational(0), Rational(0), Rational(0)}, 3));
}
