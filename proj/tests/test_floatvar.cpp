#include "doctest.h"

#include <cstdint>
#include <vector>

#include "hamburn/floatvar.hpp"
#include "hamburn/rng.hpp"

namespace {

using namespace hamburn;

Vertex v_of(std::vector<int> sym, int q) { return Vertex{std::move(sym), q}; }

Vertex rand_vertex(SplitMix64& g, int n, int q) {
  Vertex v{std::vector<int>(static_cast<std::size_t>(n), 1), q};
  for (int i = 0; i < n; ++i) v.sym[static_cast<std::size_t>(i)] = 1 + g.below_int(q);
  return v;
}

std::vector<CodeVector> rand_instance(SplitMix64& g, int n, int q) {
  std::vector<CodeVector> a;
  for (int i = 0; i < n; ++i) a.push_back(encode(rand_vertex(g, n, q)));
  return a;
}

CodeVector from_entries(int n, int q, const std::vector<Rational>& entries) {
  CodeVector x = zero_codevector(n, q);
  x.e = entries;
  return x;
}

}  // namespace

TEST_CASE("classify splits floating and fixed entries by value") {
  Classification all_floating = classify(zero_codevector(2, 3));
  CHECK(all_floating.f == std::vector<int>{2, 0, 0, 0});
  for (auto b : all_floating.fixed) CHECK(b == 0);

  Classification all_fixed = classify(encode(v_of({2, 3, 1}, 3)));
  CHECK(all_fixed.f == std::vector<int>{0, 0, 0, 3});
  for (auto b : all_fixed.fixed) CHECK(b == 1);

  CodeVector mixed = from_entries(2, 3,
                                  {make_rational(-1, 3), make_rational(-1, 3), make_rational(2, 3),
                                   Rational(0), Rational(0), Rational(0)});
  Classification cls = classify(mixed);
  CHECK(cls.f == std::vector<int>{1, 0, 0, 1});
  CHECK(cls.block_fixed == std::vector<int>{3, 0});
}

TEST_CASE("classify rejects states outside the hull") {
  CodeVector bad = zero_codevector(1, 3);
  bad.at(0, 0) = Rational(1);  // above 1 - 1/q
  CHECK_THROWS_AS(classify(bad), StateError);

  CodeVector unbalanced = zero_codevector(1, 3);
  unbalanced.at(0, 0) = make_rational(1, 3);  // block sum nonzero
  CHECK_THROWS_AS(classify(unbalanced), StateError);
}

TEST_CASE("build_system has one row per constraint and per open block") {
  std::vector<CodeVector> a{encode(v_of({1, 1}, 3)), encode(v_of({1, 1}, 3))};
  std::vector<std::uint8_t> floating(6, 0);

  RatMatrix m1 = build_system(a, floating, 1, 0);
  CHECK(m1.rows == 3);  // (n - 1) constraint rows + n block rows
  CHECK(m1.cols == 6);
  CHECK(m1.at(0, 0) == make_rational(2, 3));
  CHECK(m1.at(0, 1) == make_rational(-1, 3));
  CHECK(m1.at(1, 0) == 1);  // block row of block 0
  CHECK(m1.at(1, 3) == 0);
  CHECK(m1.at(2, 3) == 1);  // block row of block 1

  RatMatrix m2 = build_system(a, floating, 2, 0);
  CHECK(m2.rows == 2);  // s = n leaves only block rows
  CHECK(m2.cols == 6);

  std::vector<std::uint8_t> all_fixed(6, 1);
  RatMatrix m3 = build_system(a, all_fixed, 2, 2);
  CHECK(m3.rows == 0);
  CHECK(m3.cols == 0);
}

TEST_CASE("max_step stops at the first boundary hit") {
  CodeVector x = zero_codevector(1, 3);
  std::vector<std::uint8_t> mask(3, 0);

  std::vector<Rational> up{Rational(1), Rational(0), Rational(0)};
  CHECK(max_step(x, mask, up) == make_rational(2, 3));

  std::vector<Rational> two{Rational(1), Rational(-2), Rational(0)};
  CHECK(max_step(x, mask, two) == make_rational(1, 6));

  CodeVector y = from_entries(1, 3, {make_rational(1, 3), make_rational(-1, 3), Rational(0)});
  std::vector<std::uint8_t> mask2{0, 1, 0};
  CHECK(max_step(y, mask2, up) == make_rational(1, 3));
}

TEST_CASE("max_step rejects degenerate directions") {
  CodeVector x = zero_codevector(1, 3);
  std::vector<std::uint8_t> none_fixed(3, 0);
  std::vector<Rational> zero(3, Rational(0));
  CHECK_THROWS_AS(max_step(x, none_fixed, zero), StateError);

  std::vector<std::uint8_t> first_fixed{1, 0, 0};
  std::vector<Rational> moves_fixed{Rational(1), Rational(0), Rational(0)};
  CHECK_THROWS_AS(max_step(x, first_fixed, moves_fixed), StateError);
}

TEST_CASE("run on a single constraint ends at a color vector within the bound") {
  auto [cert, state] = run_detailed({encode(v_of({1}, 3))});
  CHECK(in_code(cert.x_final));
  CHECK(cert.inner_abs.size() == 1);
  CHECK(cert.inner_abs[0] < 1);
  // The deterministic kernel convention lands on the third color vector in
  // exactly two moves; keep this anchored so silent changes surface.
  CHECK(cert.x_final == encode(v_of({3}, 3)));
  CHECK(cert.inner_abs[0] == make_rational(1, 3));
  CHECK(cert.trace.size() == 2);
  CHECK(state.snapshots.size() == 2);
}

TEST_CASE("run with duplicated constraints stays inside the enumerated feasible set") {
  std::vector<CodeVector> a{encode(v_of({1, 1}, 3)), encode(v_of({1, 1}, 3))};
  FvCertificate cert = run(a);
  Vertex w = decode(cert.x_final);
  // Oracle: check every candidate x in Q^2 directly.
  int feasible = 0;
  bool found_output = false;
  for (std::uint64_t i = 0; i < 9; ++i) {
    Vertex cand = vertex_of_index(i, 2, 3);
    CodeVector x = encode(cand);
    bool ok = abs(inner(a[0], x)) < 1 && abs(inner(a[1], x)) < 2;
    if (ok) {
      ++feasible;
      if (cand == w) found_output = true;
    }
  }
  CHECK(feasible == 8);
  CHECK(found_output);
}

TEST_CASE("run certificates verify on random instances") {
  SplitMix64 g(41);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + g.below_int(4);
    const int q = 3 + g.below_int(3);
    auto [cert, state] = run_detailed(rand_instance(g, n, q));
    CHECK(in_code(cert.x_final));
    CHECK(static_cast<int>(cert.inner_abs.size()) == n);
    for (int i = 1; i <= n; ++i) CHECK(cert.inner_abs[static_cast<std::size_t>(i - 1)] < i);
    CHECK(cert.trace.size() <= static_cast<std::size_t>(n) * static_cast<std::size_t>(q));
    // Snapshot soundness, recomputed here rather than trusted.
    for (int s = 1; s <= n; ++s) {
      CHECK(in_hull(state.snapshots[static_cast<std::size_t>(s)]));
      CHECK(classify(state.snapshots[static_cast<std::size_t>(s)]).f[static_cast<std::size_t>(q)] >=
            s);
    }
  }
}

TEST_CASE("run re-derives a_i . x_{n-i} = 0 from the returned snapshots") {
  SplitMix64 g(42);
  for (int t = 0; t < 10; ++t) {
    const int n = 4;
    const int q = 3;
    std::vector<CodeVector> a = rand_instance(g, n, q);
    auto [cert, state] = run_detailed(a);
    for (int i = 1; i <= n; ++i)
      CHECK(inner(a[static_cast<std::size_t>(i - 1)],
                  state.snapshots[static_cast<std::size_t>(n - i)]) == 0);
    (void)cert;
  }
}

TEST_CASE("run rejects q = 2 and malformed input") {
  CHECK_THROWS_AS(run({encode(v_of({1, 2}, 2)), encode(v_of({2, 2}, 2))}), UnsupportedError);
  CHECK_THROWS_AS(run({}), DimensionError);
  CHECK_THROWS_AS(run({encode(v_of({1, 2}, 3))}), DimensionError);  // n mismatch: 1 vector for n=2
  CodeVector bad = zero_codevector(1, 3);
  CHECK_THROWS_AS(run({bad}), CodewordError);
}

TEST_CASE("block_gap evaluates the per-block gap") {
  Block c1 = color_vector(1, 3), c2 = color_vector(2, 3);
  CHECK(block_gap(c2, c1, c1, 3) == 0);
  CHECK(block_gap(c1, c1, c2, 3) == 1);
  Block center{Rational(0), Rational(0), Rational(0)};
  CHECK(block_gap(c1, c2, center, 3) == make_rational(1, 3));
  CHECK_THROWS_AS(block_gap(center, c1, c2, 3), std::domain_error);
  Block outside{Rational(1), Rational(-1), Rational(0)};
  CHECK_THROWS_AS(block_gap(c1, c1, outside, 3), std::domain_error);
}

TEST_CASE("block_gap is bounded by one with the stated equality cases") {
  SplitMix64 g(43);
  for (int t = 0; t < 2000; ++t) {
    const int q = 3 + g.below_int(3);
    const int ai = 1 + g.below_int(q);
    const int xi = 1 + g.below_int(q);
    Block a = color_vector(ai, q), x = color_vector(xi, q);
    Block y(static_cast<std::size_t>(q), Rational(0));
    std::vector<long> w(static_cast<std::size_t>(q) + 1, 0);
    long total = 0;
    for (auto& e : w) {
      e = static_cast<long>(g.below(8));
      total += e;
    }
    if (total == 0) total = 1;
    for (int i = 0; i < q; ++i) {
      Rational lambda = make_rational(w[static_cast<std::size_t>(i) + 1], total);
      Block c = color_vector(i + 1, q);
      for (int p = 0; p < q; ++p)
        y[static_cast<std::size_t>(p)] += lambda * c[static_cast<std::size_t>(p)];
    }
    Rational gap = block_gap(a, x, y, q);
    CHECK(gap <= 1);
    if (gap == 1) {
      const bool y_in_code = is_color_vector(y, q);
      const bool second_case =
          ai == xi && y[static_cast<std::size_t>(ai - 1)] == make_rational(-1, q);
      CHECK((y_in_code || second_case));
    }
  }
  // Both equality cases, constructed explicitly.
  Block c1 = color_vector(1, 3), c2 = color_vector(2, 3), c3 = color_vector(3, 3);
  CHECK(block_gap(c1, c1, c2, 3) == 1);  // case (i): y is a color vector
  Block mix(3, Rational(0));              // y = (c2 + c3) / 2 has first entry -1/3
  for (int p = 0; p < 3; ++p)
    mix[static_cast<std::size_t>(p)] =
        (c2[static_cast<std::size_t>(p)] + c3[static_cast<std::size_t>(p)]) / 2;
  CHECK_FALSE(is_color_vector(mix, 3));
  CHECK(block_gap(c1, c1, mix, 3) == 1);  // case (ii)
}
