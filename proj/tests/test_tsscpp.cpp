#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qkzlab/tsscpp.hpp"

using namespace qkzlab;

namespace {

Poly tau_poly(const RegistryPtr& reg) { return Poly::variable(reg, Variable::tau()); }

WeightSpec all_tau(const RegistryPtr& reg, int n, bool modified) {
  return WeightSpec::uniform(reg, n, modified, tau_poly(reg), tau_poly(reg));
}

WeightSpec all_one(const RegistryPtr& reg, int n, bool modified) {
  Poly one = Poly::constant(reg, 1);
  return WeightSpec::uniform(reg, n, modified, one, one);
}

}  // namespace

TEST_CASE("path family enumeration") {
  CHECK(enumerate_nilp(1, false).size() == 1);
  CHECK(enumerate_nilp(1, false)[0].paths.empty());
  CHECK(enumerate_nilp(2, false).size() == 2);
  CHECK(enumerate_nilp(3, false).size() == 7);

  SUBCASE("modified families are in bijection with plain ones") {
    for (int n = 1; n <= 5; ++n)
      CHECK(enumerate_nilp(n, true).size() == enumerate_nilp(n, false).size());
  }
  SUBCASE("arrival points are strictly increasing, odd gaps when modified") {
    for (int n = 2; n <= 5; ++n) {
      for (const auto& c : enumerate_nilp(n, true)) {
        auto r = c.endpoints();
        CHECK(r[0] == 1);
        for (std::size_t i = 1; i < r.size(); ++i) {
          CHECK(r[i] > r[i - 1]);
          CHECK((r[i] - r[i - 1]) % 2 == 1);
        }
      }
    }
  }
  SUBCASE("step serialization") {
    auto configs = enumerate_nilp(2, false);
    REQUIRE(configs.size() == 2);
    CHECK(configs[0].json() == "[[\"V\"]]");
    CHECK(configs[1].json() == "[[\"D\"]]");
  }
}

TEST_CASE("single-path weighted counts") {
  auto reg = tsscpp_registry(3);
  auto w = all_tau(reg, 3, false);
  CHECK(weighted_path_count(1, 1, w, false) == tau_poly(reg));
  CHECK(weighted_path_count(1, 2, w, false) == Poly::constant(reg, 1));
  CHECK(weighted_path_count(2, 1, w, false).is_zero());
  CHECK(weighted_path_count(2, 2, w, false) == tau_poly(reg).pow(2));

  auto ws = WeightSpec::symbols(reg, 3, true);
  // two-step modified path arriving with one diagonal: t_0 + t_1
  CHECK(weighted_path_count(1, 1, ws, true) ==
        Poly::variable(reg, Variable::t_slice(0)) + Poly::variable(reg, Variable::t_slice(1)));
}

TEST_CASE("generating polynomials") {
  SUBCASE("n=3 with uniform weight, all methods") {
    auto reg = tsscpp_registry(3);
    Poly tau = tau_poly(reg);
    Poly expected = Poly::constant(reg, 1) + tau * 3 + tau.pow(2) * 2 + tau.pow(3);
    auto w = all_tau(reg, 3, false);
    for (auto m : {GenMethod::Direct, GenMethod::Lgv, GenMethod::Extract}) {
      Poly got = gen_poly(3, w, m, false);
      CHECK(got == expected);
      CHECK(got.str() == "1 + 3*tau + 2*tau^2 + tau^3");
    }
  }
  SUBCASE("n=2 with uniform weight") {
    auto reg = tsscpp_registry(2);
    auto w = all_tau(reg, 2, false);
    Poly expected = Poly::constant(reg, 1) + tau_poly(reg);
    for (auto m : {GenMethod::Direct, GenMethod::Lgv, GenMethod::Extract})
      CHECK(gen_poly(2, w, m, false) == expected);
  }
  SUBCASE("modified n=3 fully symbolic") {
    auto reg = tsscpp_registry(3);
    auto w = WeightSpec::symbols(reg, 3, true);
    Poly t0 = Poly::variable(reg, Variable::t_slice(0));
    Poly t1 = Poly::variable(reg, Variable::t_slice(1));
    Poly t2 = Poly::variable(reg, Variable::t_slice(2));
    Poly one = Poly::constant(reg, 1);
    Poly expected = (one + t0 * t1) * (t0 + t1) + (t0 * t0 + t0 * t1 + t1 * t1) * t2;
    for (auto m : {GenMethod::Direct, GenMethod::Lgv, GenMethod::Extract})
      CHECK(gen_poly(3, w, m, true) == expected);
  }
  SUBCASE("method agreement, symbolic weights") {
    for (int n = 1; n <= 4; ++n) {
      auto reg = tsscpp_registry(n);
      for (bool modified : {false, true}) {
        auto w = WeightSpec::symbols(reg, n, modified);
        Poly d = gen_poly(n, w, GenMethod::Direct, modified);
        CHECK(d == gen_poly(n, w, GenMethod::Lgv, modified));
        CHECK(d == gen_poly(n, w, GenMethod::Extract, modified));
      }
    }
  }
  SUBCASE("method agreement, uniform weight") {
    for (int n = 1; n <= 5; ++n) {
      auto reg = tsscpp_registry(n);
      for (bool modified : {false, true}) {
        auto w = all_tau(reg, n, modified);
        Poly d = gen_poly(n, w, GenMethod::Direct, modified);
        CHECK(d == gen_poly(n, w, GenMethod::Lgv, modified));
        CHECK(d == gen_poly(n, w, GenMethod::Extract, modified));
      }
    }
  }
  SUBCASE("all weights 1 count the configurations") {
    for (int n = 1; n <= 5; ++n) {
      auto reg = tsscpp_registry(n);
      Poly count = gen_poly(n, all_one(reg, n, false), GenMethod::Lgv, false);
      CHECK(count == Poly::constant(reg, asm_count_formula(n)));
    }
  }
}

TEST_CASE("modified specializations") {
  auto reg3 = tsscpp_registry(3);
  Poly t = Poly::variable(reg3, Variable::t());
  Poly tau = tau_poly(reg3);
  Poly one3 = Poly::constant(reg3, 1);

  SUBCASE("n=3 two-parameter polynomial") {
    Poly np = nprime_specialized(3, t, tau);
    CHECK(np.str() == "t + tau + 2*t^2*tau + 2*t*tau^2 + tau^3");
    CHECK(nprime_specialized(3, one3, one3) == Poly::constant(reg3, 7));
    CHECK(nprime_specialized(3, Poly::zero(reg3), one3) == Poly::constant(reg3, 2));
  }
  SUBCASE("t=1 recovers the plain generating polynomial") {
    for (int n = 1; n <= 5; ++n) {
      auto reg = tsscpp_registry(n);
      Poly tv = tau_poly(reg);
      Poly np1 = nprime_specialized(n, Poly::constant(reg, 1), tv);
      CHECK(np1 == gen_poly(n, all_tau(reg, n, false), GenMethod::Lgv, false));
    }
  }
  SUBCASE("t=0 value and the top t-coefficient both count the parity class") {
    // The two specializations select different weighted subfamilies (their
    // tau-polynomials differ for n >= 3) but both count A_{n-1}
    // configurations at tau=1.
    for (int n = 2; n <= 5; ++n) {
      auto reg = tsscpp_registry(n);
      Poly tv = tau_poly(reg);
      Poly np = nprime_specialized(n, Poly::variable(reg, Variable::t()), tv);
      Poly at0 = substitute(np, Variable::t(), Poly::zero(reg));
      // coefficient of t^{n-1}
      Poly lead(reg);
      auto tslot = reg->slot(Variable::t());
      for (const auto& [e, c] : np.terms()) {
        if (e[tslot] != n - 1) continue;
        ExpVec stripped = e;
        stripped[tslot] = 0;
        lead.add_term(stripped, c);
      }
      CHECK(np.degree({Variable::t()}) == n - 1);
      Poly one = Poly::constant(reg, 1);
      Poly expected = Poly::constant(reg, asm_count_formula(n - 1));
      CHECK(substitute(at0, Variable::tau(), one) == expected);
      CHECK(substitute(lead, Variable::tau(), one) == expected);
    }
  }
}

TEST_CASE("alternating sign matrices") {
  SUBCASE("counting sequence") {
    std::vector<Int> expected = {1, 2, 7, 42, 429, 7436};
    for (int n = 1; n <= 5; ++n) {
      CHECK(asm_count(n) == expected[n - 1]);
      CHECK(asm_count_formula(n) == expected[n - 1]);
    }
    CHECK(asm_count_formula(6) == 7436);
    CHECK(asm_count_formula(7) == 218348);
  }
  SUBCASE("refined counts by top-row position") {
    CHECK(asm_refined(1) == std::vector<Int>{1});
    CHECK(asm_refined(3) == std::vector<Int>{2, 3, 2});
    for (int n = 1; n <= 5; ++n) {
      auto ref = asm_refined(n);
      Int total = 0;
      for (const auto& c : ref) total += c;
      CHECK(total == asm_count_formula(n));
      // top-row symmetry
      for (int k = 0; k < n; ++k) CHECK(ref[k] == ref[n - 1 - k]);
    }
  }
  SUBCASE("brute force refuses oversized input") {
    CHECK_THROWS_AS(asm_count(7), SizeTooLargeForBruteForce);
    CHECK_THROWS_AS(asm_refined(7), SizeTooLargeForBruteForce);
  }
}

TEST_CASE("refined counting conjectures at small sizes") {
  for (int n = 1; n <= 4; ++n) {
    auto reg = tsscpp_registry(n);
    Poly t = Poly::variable(reg, Variable::t());
    Poly one = Poly::constant(reg, 1);
    auto refined = asm_refined(n);
    Poly expected(reg);
    for (int k = 0; k < n; ++k) expected += Poly::variable(reg, Variable::t(), k, refined[k]);

    // modified polynomial at tau=1
    CHECK(nprime_specialized(n, t, one) == expected);
    // plain polynomial with weight t on the top slice only
    auto w = WeightSpec::uniform(reg, n, false, one, one);
    if (n >= 2) w.slice[1] = t;
    CHECK(gen_poly(n, w, GenMethod::Lgv, false) == expected);
  }
}
