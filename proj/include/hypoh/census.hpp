#pragma once

// Factorization census of the specialisations f_i(g(t)) over all (or a
// random sample of) monic g of degree n, compared against the wreath-product
// prediction.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypoh/field.hpp"
#include "hypoh/poly.hpp"
#include "hypoh/wreath.hpp"

namespace hypoh {

inline constexpr std::uint64_t kCensusGuard = 100'000'000;
inline constexpr const char* kCensusPrng = "mt19937_64";

struct CensusSpec {
  FieldPtr ctx;
  unsigned n = 1;
  std::vector<Poly> fs;
  bool sample = false;          // exhaustive when false
  std::uint64_t samples = 0;    // sample mode only
  std::uint64_t seed = 0;       // sample mode only
  std::optional<std::vector<FactType>> targets;  // default: every f_i(g) irreducible
  bool raw = false;             // allow reducible f_i; no prediction
  unsigned threads = 1;
};

using TypeTuple = std::vector<FactType>;

struct CensusReport {
  std::uint64_t total = 0;
  std::uint64_t separable_total = 0;
  std::uint64_t inseparable = 0;
  std::uint64_t hits = 0;
  TypeTuple targets;
  std::map<TypeTuple, std::uint64_t> histogram;

  std::optional<Rational> predicted_density;
  double expected_hits = 0;
  double deviation = 0;             // hits - expected_hits
  double normalized_deviation = 0;  // deviation / q^(n-1/2), or a z-score when sampling
  std::string normalization;        // "q^(n-1/2)" or "binomial-stderr"

  bool sampled = false;
  std::string prng;
  std::uint64_t seed = 0;
};

/// Checks the spec invariants; throws DomainError naming the violation.
void validate(const CensusSpec& spec);
/// Omega = disjoint union of the root sets of the f_i, Frobenius cycling each.
OrbitSetup derive_setup(const CensusSpec& spec);
CensusReport run_census(const CensusSpec& spec);
/// run_census with explicit per-f targets (required).
CensusReport type_census(const CensusSpec& spec);

struct ShadowReport {
  std::size_t tuples_observed = 0;
  std::size_t unsupported = 0;  // observed tuples with predicted density 0
  double max_gap = 0;           // max |count/total - density| over all tuples
  TypeTuple worst;
};
/// Compares every type tuple of an exhaustive census with predict_density.
ShadowReport orbit_shadow_check(const CensusSpec& spec, const CensusReport& report);

struct SwanReport {
  unsigned max_degree = 0;
  std::uint64_t candidates = 0;
  std::uint64_t counterexamples = 0;
  std::vector<Poly> witnesses;  // g with g^8 + t^3 irreducible
};
/// g^8 + t^3 over F_2 for every monic g with 1 <= deg g <= max_degree.
SwanReport swan_mode(unsigned max_degree, unsigned threads = 1);

struct CorrelationReport {
  std::uint64_t q = 0;
  std::vector<Elem> omega;
  std::uint64_t total = 0;
  std::map<std::uint32_t, std::uint64_t> joint;  // bit i set: g - omega_i irreducible
  std::uint64_t all_irreducible = 0;
  double independence_prediction = 0;  // q^2 / 2^|Omega|
  double relative_deviation = 0;
  bool even_sum = false;
};
/// All q^2 monic quadratics g over F_{2^k}; records which g - omega_i are irreducible.
CorrelationReport correlation_mode(const FieldPtr& ctx, const std::vector<Elem>& omega);

}  // namespace hypoh
