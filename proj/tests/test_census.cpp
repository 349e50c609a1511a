#include <doctest.h>

#include <cmath>

#include "hypoh/census.hpp"
#include "hypoh/format.hpp"

using namespace hypoh;

namespace {

CensusSpec spec_of(std::uint64_t p, unsigned k, unsigned n, const std::vector<std::string>& fs) {
  CensusSpec s;
  s.ctx = make_field(p, k);
  s.n = n;
  for (const auto& f : fs) s.fs.push_back(parse_poly(s.ctx, f));
  return s;
}

std::uint64_t mass(const CensusReport& r) {
  std::uint64_t m = 0;
  for (const auto& [t, c] : r.histogram) m += c;
  return m;
}

}  // namespace

TEST_CASE("census examples") {
  CHECK(run_census(spec_of(3, 1, 1, {"X"})).hits == 3);
  const CensusReport r = run_census(spec_of(101, 1, 2, {"X"}));
  CHECK(r.hits == 5050);
  CHECK(r.hits == count_monic_irreducible(101, 2));
  CHECK(*r.predicted_density == Rational(1, 2));
  CHECK(std::abs(r.normalized_deviation) == doctest::Approx(50.5 / std::pow(101.0, 1.5)));
}

TEST_CASE("bookkeeping and degree law") {
  for (auto s : {spec_of(5, 1, 2, {"X", "X+1"}), spec_of(2, 2, 3, {"X^2 + X + g"}),
                 spec_of(7, 1, 2, {"X^2 + 1"}), spec_of(3, 1, 3, {"X", "X^2+1"})}) {
    const CensusReport r = run_census(s);
    CHECK(mass(r) == r.separable_total);
    CHECK(r.separable_total + r.inseparable == r.total);
    for (const auto& [tuple, count] : r.histogram) {
      for (std::size_t i = 0; i < tuple.size(); ++i) CHECK(tuple[i].total() == s.n * s.fs[i].deg());
    }
    s.threads = 3;
    const CensusReport r3 = run_census(s);
    CHECK(r3.histogram == r.histogram);
    CHECK(r3.inseparable == r.inseparable);
  }
}

TEST_CASE("derived setups") {
  CHECK(*run_census(spec_of(5, 1, 3, {"X"})).predicted_density == Rational(1, 3));
  CHECK(*run_census(spec_of(5, 1, 2, {"X", "X+1"})).predicted_density == Rational(1, 4));
  const OrbitSetup s = derive_setup(spec_of(5, 1, 2, {"X^2 + 2"}));
  CHECK(s.nu() == 2);
  CHECK(s.r() == 1);
  CHECK(*run_census(spec_of(5, 1, 2, {"X^2 + 2"})).predicted_density == Rational(1, 2));
}

TEST_CASE("type census") {
  CensusSpec s = spec_of(101, 1, 2, {"X"});
  s.targets = std::vector<FactType>{FactType({1, 1})};
  const CensusReport split = type_census(s);
  CHECK(split.hits == 101 * 100 / 2);
  CHECK(*split.predicted_density == Rational(1, 2));
  s.targets = std::vector<FactType>{FactType({2})};
  CHECK(type_census(s).hits == 5050);
  s.targets = std::vector<FactType>{FactType({3})};
  CHECK_THROWS_AS(type_census(s), DomainError);
  s.targets.reset();
  CHECK_THROWS_AS(type_census(s), DomainError);
}

TEST_CASE("observed types are predicted") {
  for (std::uint64_t p : {3, 5}) {
    for (unsigned n = 2; n <= 3; ++n) {
      for (const char* f : {"X", "X^2 + 1", "X^2 + X + 2"}) {
        CensusSpec s = spec_of(p, 1, n, {f});
        if (!is_irreducible(s.fs[0])) continue;
        const ShadowReport sh = orbit_shadow_check(s, run_census(s));
        CHECK(sh.unsupported == 0);
        CHECK(sh.tuples_observed > 0);
      }
    }
  }
}

TEST_CASE("sampling agrees with enumeration") {
  CensusSpec s = spec_of(101, 1, 2, {"X"});
  const double exact = static_cast<double>(run_census(s).hits) / (101.0 * 101.0);
  s.sample = true;
  s.samples = 100000;
  s.seed = 12345;
  const CensusReport r = run_census(s);
  CHECK(r.total == 100000);
  CHECK(r.prng == "mt19937_64");
  const double rate = static_cast<double>(r.hits) / 1e5;
  const double se = std::sqrt(exact * (1 - exact) / 1e5);
  CHECK(std::abs(rate - exact) <= 3 * se);
  s.threads = 4;
  CHECK(run_census(s).histogram == r.histogram);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(run_census(spec_of(5, 1, 2, {"2*X + 1"})), DomainError);
  CHECK_THROWS_AS(run_census(spec_of(5, 1, 2, {"X^2 - 1"})), DomainError);
  CHECK_THROWS_AS(run_census(spec_of(5, 1, 2, {"X", "X"})), DomainError);
  CHECK_THROWS_AS(run_census(spec_of(101, 1, 5, {"X"})), DomainError);
  CensusSpec raw = spec_of(5, 1, 2, {"X^2 - 1"});
  raw.raw = true;
  const CensusReport r = run_census(raw);
  CHECK_FALSE(r.predicted_density.has_value());
  CHECK(mass(r) == r.separable_total);
}

TEST_CASE("Swan's polynomial") {
  const SwanReport r = swan_mode(10);
  CHECK(r.candidates == 2046);
  CHECK(r.counterexamples == 0);
  CHECK(swan_mode(4, 2).counterexamples == 0);
  FieldPtr F2 = make_field(2, 1);
  CHECK_FALSE(is_irreducible(parse_poly(F2, "t^8 + t^3 + 1")));
}

TEST_CASE("correlation mode") {
  FieldPtr F = make_field(2, 6);
  const Elem w = F->pow(F->generator(), 21);  // a primitive cube root of unity: F_4 inside F_64
  const CorrelationReport dep = correlation_mode(F, {0, 1, w, F->add(w, 1)});
  CHECK_FALSE(dep.even_sum);
  CHECK(dep.total == 4096);
  CHECK(dep.relative_deviation > 0.25);
  const CorrelationReport ctl = correlation_mode(F, {0, 1});
  CHECK(ctl.even_sum);
  CHECK(ctl.relative_deviation <= 0.20);
  const CorrelationReport one = correlation_mode(F, {5});
  CHECK(one.all_irreducible == 64 * 63 / 2);
  CHECK_THROWS_AS(correlation_mode(make_field(3, 1), {0}), DomainError);
}
