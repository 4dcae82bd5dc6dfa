#include <doctest.h>

#include "gpk/error.hpp"
#include "gpk/traces.hpp"

using namespace gpk;

TEST_CASE("ad_fixed_mult") {
  CHECK(ad_fixed_mult({4, 1}) == 17);
  CHECK(ad_fixed_mult({3, 2}) == 13);
  CHECK(ad_fixed_mult({5, 5}) == 50);
  CHECK(wedge2_type({4, 1}) == InvolutionType{6, 4});
  CHECK(wedge2_type({3, 2}) == InvolutionType{6, 4});
  CHECK(InvolutionType::make(1, 4) == InvolutionType{4, 1});
}

TEST_CASE("eigen_multiset_mult1") {
  CHECK(eigen_multiset_mult1({1, {0, 0, 0, 0, 0}}, {1, {0, 0, 0, 0, 0}}) == 51);
  CHECK(eigen_multiset_mult1({2, {0, 0, 0, 0, 1}}, {2, {0, 0, 0, 0, 1}}) == 19);
  CHECK(eigen_multiset_mult1({2, {0, 0, 0, 0, 1}}, {2, {0, 0, 0, 1, 1}}) == 23);
  CHECK(eigen_multiset_mult1({2, {0, 0, 0, 1, 1}}, {2, {0, 0, 0, 1, 1}}) == 27);

  // Scalar multiples: all-equal λ and μ act trivially.
  for (int m : {3, 5, 7})
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        CHECK(eigen_multiset_mult1({m, {a, a, a, a, a}}, {m, {b, b, b, b, b}}) == 51);

  CHECK_THROWS_AS(eigen_multiset_mult1({3, {0, 0, 0, 0, 1}}, {3, {0, 0, 0, 0, 0}}), InputError);
  CHECK_THROWS_AS(eigen_multiset_mult1({2, {}}, {3, {}}), InputError);
}

TEST_CASE("multiset calculus reproduces the type-I formula") {
  const InvolutionType types[] = {{4, 1}, {3, 2}};
  for (auto a : types)
    for (auto b : types) {
      EigenExponents la{2, {}}, mu{2, {}};
      for (int i = a.p; i < 5; ++i) la.e[i] = 1;
      for (int i = b.p; i < 5; ++i) mu.e[i] = 1;
      const int mult = eigen_multiset_mult1(la, mu);
      const auto rep = trace_type1(a, b);
      CHECK(mult == rep.mult1);
      CHECK(2 * mult - kTangentDim == rep.trace);
    }
}

TEST_CASE("type I traces") {
  const auto a = trace_type1({4, 1}, {4, 1});
  CHECK(a.mult1 == 19);
  CHECK(a.trace == -13);
  const auto b = trace_type1({3, 2}, {3, 2});
  CHECK(b.mult1 == 27);
  CHECK(b.trace == 3);
  const auto c = trace_type1({4, 1}, {3, 2});
  CHECK(c.mult1 == 23);
  CHECK(c.trace == -5);
  CHECK(trace_type1({3, 2}, {4, 1}).trace == -5);
  CHECK_THROWS_AS(trace_type1({5, 0}, {4, 1}), InputError);
  CHECK_THROWS_AS(trace_type1({6, 1}, {4, 1}), InputError);
}

TEST_CASE("type II traces") {
  CHECK(trace_type2({8, 2}).trace == -35);
  CHECK(trace_type2({7, 3}).trace == -15);
  CHECK(trace_type2({6, 4}).trace == -3);
  CHECK(trace_type2({5, 5}).trace == 1);
  CHECK(trace_type2({5, 5}).mult1 == 26);
  CHECK_THROWS_AS(trace_type2({9, 1}), DomainError);
  CHECK_THROWS_AS(trace_type2({4, 1}), InputError);
}

TEST_CASE("allowed traces and dtau") {
  const std::set<int> expected{51, 3, 1, -3, -5, -13, -15, -35};
  const auto allowed = allowed_involution_traces();
  CHECK(allowed == expected);
  CHECK(allowed.size() == 8);
  for (int t : allowed) CHECK(t % 2 != 0);
  CHECK(pgl_transpose_trace(10) == -9);
  CHECK(pgl_transpose_trace(5) == -4);
  CHECK(trace_dtau() == -1);
  CHECK_FALSE(allowed.contains(trace_dtau()));
}

TEST_CASE("explicit-matrix oracle agrees with the formulas") {
  const std::array<int, 5> t41{1, 1, 1, 1, -1}, t32{1, 1, 1, -1, -1};
  struct Case {
    std::array<int, 5> a, b;
    int expected;
  };
  for (const auto& c : {Case{t41, t41, -13}, Case{t32, t32, 3}, Case{t41, t32, -5}, Case{t32, t41, -5}}) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto r = oracle_trace_type1(c.a, c.b, seed);
      CHECK(r.trace == c.expected);
      CHECK(r.presentation_rank == (c.a == t41 && c.b == t41 ? 148u : 149u));
    }
  }
  // Permuted diagonals are conjugate and give the same trace.
  CHECK(oracle_trace_type1({-1, 1, 1, 1, 1}, {1, -1, 1, -1, 1}, 9).trace == -5);
  CHECK_THROWS_AS(oracle_trace_type1({1, 1, 1, 1, 2}, t41, 1), InputError);
}
