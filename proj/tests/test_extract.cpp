#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "qkzlab/extract.hpp"
#include "test_util.hpp"

using namespace qkzlab;

namespace {

Poly var(const RegistryPtr& r, Variable v, int e = 1) { return Poly::variable(r, v, e); }

// Independent expansion oracle: multiply all factors as series truncated by
// total degree in the extraction variables, inverting denominators by the
// plain geometric series in (1 - f). Uses only core Poly arithmetic.
Poly oracle_coefficient(const SeriesProduct& sp, const std::vector<int>& exps) {
  const auto& reg = sp.registry;
  std::vector<std::size_t> slots;
  for (auto v : sp.extraction_vars) slots.push_back(reg->slot(v));
  const int degree_cap = std::accumulate(exps.begin(), exps.end(), 0);

  auto chop = [&](const Poly& p) {
    Poly r(reg);
    for (const auto& [e, c] : p.terms()) {
      int d = 0;
      for (auto s : slots) d += e[s];
      if (d <= degree_cap) r.add_term(e, c);
    }
    return r;
  };

  Poly acc = Poly::constant(reg, 1);
  for (const auto& f : sp.factors) {
    Poly body = transport(f.body, reg);
    if (f.polarity == SeriesFactor::Polarity::Numerator) {
      acc = chop(acc * body);
    } else {
      Poly one = Poly::constant(reg, 1);
      Poly g = one - body;  // assumes constant term 1 in the oracle's inputs
      Poly inv = one, power = one;
      for (int k = 0; k < degree_cap; ++k) {
        power = chop(power * g);
        inv += power;
      }
      acc = chop(acc * inv);
    }
  }

  Poly out(reg);
  for (const auto& [e, c] : acc.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (e[slots[i]] != exps[i]) { match = false; break; }
    if (!match) continue;
    ExpVec stripped = e;
    for (auto s : slots) stripped[s] = 0;
    out.add_term(stripped, c);
  }
  return out;
}

}  // namespace

TEST_CASE("coefficient_of basics") {
  auto reg = make_registry({Variable::tau(), Variable::alpha(1), Variable::u(1), Variable::u(2)});
  Poly one = Poly::constant(reg, 1);
  Poly u1 = var(reg, Variable::u(1));
  Poly u2 = var(reg, Variable::u(2));
  Poly tau = var(reg, Variable::tau());
  Poly a1 = var(reg, Variable::alpha(1));

  SUBCASE("constant coefficient of 1+u") {
    SeriesProduct sp{reg, {}, {Variable::u(1)}};
    sp.num(one + u1);
    CHECK(coefficient_of(sp, {0}) == one);
  }
  SUBCASE("geometric series 1/(1-alpha u)") {
    SeriesProduct sp{reg, {}, {Variable::u(1)}};
    sp.den(one - a1 * u1);
    CHECK(coefficient_of(sp, {1}) == a1);
    CHECK(coefficient_of(sp, {3}) == a1.pow(3));
  }
  SUBCASE("loop-model integrand at n=2") {
    SeriesProduct sp{reg, {}, {Variable::u(1), Variable::u(2)}};
    sp.num((u2 - u1) * (one + u1 * u2 + tau * u2));
    CHECK(coefficient_of(sp, {0, 2}) == tau);
    CHECK(coefficient_of(sp, {0, 1}) == one);
  }
  SUBCASE("non-unit denominator throws") {
    SeriesProduct sp{reg, {}, {Variable::u(1)}};
    sp.den(tau + one - u1);  // constant part 1 + tau is not a unit monomial
    CHECK_THROWS_AS(coefficient_of(sp, {1}), NonUnitDenominator);
    SeriesProduct sp2{reg, {}, {Variable::u(1)}};
    sp2.den(Poly::constant(reg, 2) - u1);
    CHECK_THROWS_AS(coefficient_of(sp2, {1}), NonUnitDenominator);
  }
  SUBCASE("denominator with a pole at 0 throws") {
    SeriesProduct sp{reg, {}, {Variable::u(1)}};
    sp.den(var(reg, Variable::u(1), -1) + one);
    CHECK_THROWS_AS(coefficient_of(sp, {1}), NonUnitDenominator);
  }
}

TEST_CASE("coefficient_of properties") {
  auto reg = make_registry({Variable::tau(), Variable::u(1), Variable::u(2), Variable::u(3)});
  std::vector<Variable> us = {Variable::u(1), Variable::u(2), Variable::u(3)};
  std::mt19937_64 rng(555);
  Poly one = Poly::constant(reg, 1);

  auto random_product = [&](SeriesProduct& sp) {
    std::uniform_int_distribution<int> nfac(1, 3), coin(0, 1), pick(0, 2);
    int k = nfac(rng);
    for (int i = 0; i < k; ++i)
      sp.num(testutil::random_poly(rng, reg, 4, 2, 3));
    int d = nfac(rng) - 1;
    for (int i = 0; i < d; ++i) {
      // denominators of the shape 1 - (monomial in the u's), possibly with tau
      Poly m = var(reg, us[pick(rng)]);
      if (coin(rng)) m = m * var(reg, us[pick(rng)]);
      if (coin(rng)) m = m * var(reg, Variable::tau());
      sp.den(one - m);
    }
  };

  SUBCASE("order independence under permuted extraction variables") {
    for (int it = 0; it < 25; ++it) {
      SeriesProduct sp{reg, {}, us};
      random_product(sp);
      std::vector<int> exps = {1, 2, 1};
      Poly base = coefficient_of(sp, exps);
      std::vector<std::size_t> perm = {2, 0, 1};
      SeriesProduct sp2{reg, sp.factors, {us[perm[0]], us[perm[1]], us[perm[2]]}};
      Poly permuted = coefficient_of(sp2, {exps[perm[0]], exps[perm[1]], exps[perm[2]]});
      CHECK(base == permuted);
    }
  }
  SUBCASE("linearity over numerator addition") {
    for (int it = 0; it < 25; ++it) {
      Poly f = testutil::random_poly(rng, reg, 4, 2, 3);
      Poly g = testutil::random_poly(rng, reg, 4, 2, 3);
      SeriesProduct tail{reg, {}, us};
      tail.den(one - var(reg, Variable::u(1)) * var(reg, Variable::u(2)));
      std::vector<int> exps = {2, 1, 1};
      auto with_num = [&](const Poly& num) {
        SeriesProduct sp = tail;
        sp.factors.insert(sp.factors.begin(), {SeriesFactor::Polarity::Numerator, num});
        return coefficient_of(sp, exps);
      };
      CHECK(with_num(f + g) == with_num(f) + with_num(g));
    }
  }
  SUBCASE("agrees with direct truncated-series multiplication") {
    for (int it = 0; it < 25; ++it) {
      SeriesProduct sp{reg, {}, us};
      random_product(sp);
      std::vector<int> exps = {2, 1, 2};
      CHECK(coefficient_of(sp, exps) == oracle_coefficient(sp, exps));
    }
  }
}

TEST_CASE("schur generating series identities") {
  SUBCASE("n=1 is the geometric series") {
    CHECK(schur_sum_residual(1, 5, SchurParity::All).is_zero());
    CHECK(schur_sum_residual(1, 6, SchurParity::Even).is_zero());
  }
  SUBCASE("n=2 to order 6") {
    CHECK(schur_sum_residual(2, 6, SchurParity::All).is_zero());
    CHECK(schur_sum_residual(2, 6, SchurParity::Even).is_zero());
  }
  SUBCASE("all n <= 3 to order 8") {
    for (int n = 1; n <= 3; ++n) {
      for (int order = 0; order <= 8; order += 4) {
        CHECK(schur_sum_residual(n, order, SchurParity::All).is_zero());
        CHECK(schur_sum_residual(n, order, SchurParity::Even).is_zero());
      }
    }
  }
}
