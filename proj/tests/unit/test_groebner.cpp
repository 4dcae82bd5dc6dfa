#include <doctest.h>

#include "gpk/groebner.hpp"

using namespace gpk;

namespace {

struct XY {
  RingPtr ring;
  Polynomial x, y, one;
  explicit XY(std::uint32_t p, MonomialOrder order = MonomialOrder::DegRevLex)
      : ring(PolyRing::make(PrimeField(p), {"x", "y"}, order)),
        x(Polynomial::variable(ring, 0)),
        y(Polynomial::variable(ring, 1)),
        one(Polynomial::constant(ring, 1)) {}
};

// #{(a, b) in F_p^2 : all gens vanish}.
std::size_t affine_points(std::span<const Polynomial> gens, std::uint32_t p) {
  std::size_t n = 0;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) {
      const FieldElement pt[] = {{a}, {b}};
      bool all = true;
      for (const auto& g : gens) all = all && g.evaluate(pt).value == 0;
      n += all;
    }
  return n;
}

Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_term().mono, g.leading_term().mono);
  const auto& F = f.ring()->field();
  return f.mul_term(l / f.leading_term().mono, F.inv({f.leading_term().coeff})) -
         g.mul_term(l / g.leading_term().mono, F.inv({g.leading_term().coeff}));
}

void check_reduced_basis(const GroebnerBasis& gb, std::span<const Polynomial> inputs) {
  const auto& G = gb.generators();
  for (const auto& f : inputs) CHECK(gb.reduce(f.in_ring(gb.ring())).is_zero());
  for (std::size_t i = 0; i < G.size(); ++i) {
    CHECK(G[i].leading_term().coeff == 1);
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i != j) CHECK_FALSE(G[i].leading_term().mono.divides(G[j].leading_term().mono));
      if (i < j) CHECK(gb.reduce(s_poly(G[i], G[j])).is_zero());
    }
  }
}

}  // namespace

TEST_CASE("normal_form") {
  XY r(7, MonomialOrder::Lex);
  const std::vector<Polynomial> b = {r.x - r.y};
  CHECK(normal_form(r.x * r.x * r.y, b, MonomialOrder::Lex) == r.y.pow(3));
  const std::vector<Polynomial> g = {r.x * r.y + r.one};
  CHECK(normal_form(g[0], g, MonomialOrder::Lex).is_zero());
  const std::vector<Polynomial> xy = {r.x, r.y};
  CHECK(normal_form(r.one, xy, MonomialOrder::Lex) == r.one);
}

TEST_CASE("groebner_basis small ideals") {
  XY r(7, MonomialOrder::Lex);
  const std::vector<Polynomial> mono = {r.x * r.x, r.x * r.y};
  const auto gb = groebner_basis(mono, MonomialOrder::Lex);
  CHECK(gb.generators().size() == 2);
  check_reduced_basis(gb, mono);

  const std::vector<Polynomial> unit = {r.x, r.x + r.one};
  CHECK(groebner_basis(unit).is_unit());
  CHECK(is_unit_ideal(unit));
  CHECK_FALSE(is_unit_ideal(mono));

  const std::vector<Polynomial> curve = {r.x * r.x - r.y, r.y * r.y - r.x};
  for (auto order : {MonomialOrder::Lex, MonomialOrder::DegRevLex}) {
    const auto gbc = groebner_basis(curve, order);
    check_reduced_basis(gbc, curve);
    const auto target = (r.x.pow(4) - r.x).in_ring(gbc.ring());
    CHECK(gbc.reduce(target).is_zero());
  }
  // x^4 - x vanishes on every F_7-point of the curve.
  for (std::uint32_t a = 0; a < 7; ++a)
    for (std::uint32_t b = 0; b < 7; ++b) {
      const FieldElement pt[] = {{a}, {b}};
      if (curve[0].evaluate(pt).value == 0 && curve[1].evaluate(pt).value == 0)
        CHECK((r.x.pow(4) - r.x).evaluate(pt).value == 0);
    }
}

TEST_CASE("ideal_dimension") {
  const auto R6 = PolyRing::make(PrimeField(103), {"a", "b", "c", "d", "e", "f"});
  const std::vector<Polynomial> zero = {Polynomial(R6)};
  CHECK(ideal_dimension(zero) == 6);
  const std::vector<Polynomial> one = {Polynomial::constant(R6, 1)};
  CHECK(ideal_dimension(one) == -1);

  // The y-axis: F_p-point counts grow like p.
  for (std::uint32_t p : {3u, 5u, 7u}) {
    XY r(p);
    const std::vector<Polynomial> g = {r.x * r.x, r.x * r.y};
    CHECK(affine_points(g, p) == p);
    CHECK(ideal_dimension(g) == 1);
    CHECK(ideal_dimension(g, MonomialOrder::Lex) == 1);
  }
  XY r(7);
  const std::vector<Polynomial> pts = {r.x * r.x - r.one, r.y * r.y - r.x};
  CHECK(ideal_dimension(pts) == 0);
  CHECK(ideal_dimension(pts, MonomialOrder::Lex) == 0);

  const Monomial leads[] = {Monomial::variable(0, 2), Monomial::variable(1)};
  CHECK(dimension_from_leading_monomials(leads, 3) == 1);
}

TEST_CASE("order independence and unit agreement on random ideals") {
  const auto R = PolyRing::make(PrimeField(31), {"a", "b", "c"});
  RandomState rng(12);
  auto rnd = [&](unsigned deg) {
    std::vector<Term> ts;
    for (int t = 0; t < 3; ++t) {
      unsigned e[3] = {};
      unsigned left = deg;
      for (auto& x : e) {
        x = static_cast<unsigned>(rng.uniform(left + 1));
        left -= x;
      }
      ts.push_back({Monomial::from_exponents(e), static_cast<std::uint32_t>(1 + rng.uniform(30))});
    }
    return Polynomial::from_terms(R, ts);
  };
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    const int k = 1 + static_cast<int>(rng.uniform(3));
    for (int i = 0; i < k; ++i) gens.push_back(rnd(1 + static_cast<unsigned>(rng.uniform(2))));
    const int d1 = ideal_dimension(gens, MonomialOrder::DegRevLex);
    const int d2 = ideal_dimension(gens, MonomialOrder::Lex);
    CHECK(d1 == d2);
    CHECK(is_unit_ideal(gens) == (d1 == -1));
    const auto gb = groebner_basis(gens);
    check_reduced_basis(gb, gens);
  }
}

TEST_CASE("sugar and normal strategies agree") {
  XY r(103);
  const std::vector<Polynomial> g = {r.x.pow(3) - r.y * r.y, r.x * r.y - r.one};
  GroebnerOptions sugar;
  sugar.strategy = PairStrategy::Sugar;
  const auto a = groebner_basis(g);
  const auto b = groebner_basis(g, MonomialOrder::DegRevLex, sugar);
  CHECK(a.generators() == b.generators());
}

TEST_CASE("budget exhaustion carries statistics") {
  const auto R = PolyRing::make(PrimeField(103), {"a", "b", "c", "d"});
  std::vector<Polynomial> gens;
  RandomState rng(8);
  for (int i = 0; i < 3; ++i) {
    std::vector<Term> ts;
    for (int t = 0; t < 5; ++t) {
      unsigned e[4] = {};
      for (int s = 0; s < 3; ++s) ++e[rng.uniform(4)];
      ts.push_back({Monomial::from_exponents(e), static_cast<std::uint32_t>(1 + rng.uniform(102))});
    }
    gens.push_back(Polynomial::from_terms(R, ts));
  }
  GroebnerOptions tight;
  tight.budget.max_pair_reductions = 2;
  try {
    groebner_basis(gens, MonomialOrder::DegRevLex, tight);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.stats().pairs_processed <= 3);
  }
  GroebnerOptions low_degree;
  low_degree.budget.max_degree = 3;
  CHECK_THROWS_AS(groebner_basis(gens, MonomialOrder::DegRevLex, low_degree), BudgetExceeded);
}
