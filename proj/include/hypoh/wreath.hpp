#pragma once

// Permutational wreath products S_n wr_Omega <sigma> with cyclic top group.
//
// An element is a pair (zeta, sigma) with zeta: Omega -> S_n, acting on
// [n] x Omega by
//
//     (zeta sigma).(k, w) = (zeta(sigma.w).k, sigma.w).
//
// Products are defined so that act(a * b, x) == act(a, act(b, x)).

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <vector>

#include "hypoh/poly.hpp"

namespace hypoh {

using Rational = boost::rational<std::int64_t>;

/// Bijection of {0, ..., m-1}; (a * b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<unsigned> images);
  static Perm identity(unsigned m);
  /// Single cycle (0 1 ... m-1).
  static Perm cycle(unsigned m);

  unsigned size() const noexcept { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned x) const { return images_.at(x); }
  const std::vector<unsigned>& images() const noexcept { return images_; }
  Perm inverse() const;
  Perm operator*(const Perm& b) const;
  bool operator==(const Perm& b) const = default;

  /// Cycle lengths, ascending.
  FactType cycle_type() const;
  bool is_full_cycle() const;
  /// Orbits, each listed from its least point along the cycle.
  std::vector<std::vector<unsigned>> cycles() const;

 private:
  std::vector<unsigned> images_;
};

struct OrbitSetup {
  unsigned n = 1;
  Perm sigma;                                // permutation of Omega = {0, ..., nu-1}
  std::vector<std::vector<unsigned>> orbits; // sigma-orbits, each in cycle order

  unsigned nu() const noexcept { return sigma.size(); }
  unsigned r() const noexcept { return static_cast<unsigned>(orbits.size()); }
};

OrbitSetup make_setup(unsigned n, const Perm& sigma);
/// Omega split into consecutive blocks of the given sizes, sigma cycling each block.
OrbitSetup setup_from_orbit_sizes(unsigned n, const std::vector<unsigned>& sizes);

struct WreathElem {
  std::vector<Perm> zeta;  // indexed by Omega, each of degree n
  Perm sigma;

  static WreathElem identity(unsigned n, unsigned nu);
  bool operator==(const WreathElem&) const = default;
};

struct Point {
  unsigned k;
  unsigned omega;
  bool operator==(const Point&) const = default;
};

Point act(const WreathElem& w, Point x);
WreathElem mul(const WreathElem& a, const WreathElem& b);
WreathElem inverse(const WreathElem& w);

/// <w> transitive on [n] x Omega_i for every orbit, by direct orbit computation.
bool is_column_transitive(const WreathElem& w, const OrbitSetup& setup);
/// The composite zeta along the sigma-orbit of omega, i.e. the permutation
/// w^len induces on [n] x {omega}.
Perm orbit_product(const WreathElem& w, const OrbitSetup& setup, unsigned omega);
/// Transitivity via the n-cycle criterion on each orbit product.
bool ncycle_criterion(const WreathElem& w, const OrbitSetup& setup);
/// Cycle type of w on [n] x Omega_i.
FactType orbit_type(const WreathElem& w, const OrbitSetup& setup, unsigned orbit_index);

/// (n!)^nu above which enumeration is refused.
inline constexpr std::uint64_t kEnumerationGuard = 100'000'000;
std::uint64_t sym_order_power(unsigned n, unsigned nu);

/// Number of zeta in S_n^Omega with zeta*sigma column-transitive, by enumeration.
std::uint64_t count_transitive(const OrbitSetup& setup, unsigned threads = 1);
/// (n!)^nu / n^r.
std::uint64_t transitive_formula(const OrbitSetup& setup);
/// Orbits of S_n^Omega acting by conjugation on the transitive set T.
std::uint64_t conjugation_orbits_on_T(const OrbitSetup& setup);

/// For each sigma-orbit, counts over zeta in S_n^{Omega_i} of the cycle type
/// of zeta*sigma on [n] x Omega_i. Each map sums to (n!)^{|Omega_i|}.
std::vector<std::map<FactType, std::uint64_t>> orbit_type_distribution(const OrbitSetup& setup);
/// Fraction of zeta in S_n^Omega whose orbit types equal targets (one per orbit).
Rational predict_density(const OrbitSetup& setup, const std::vector<FactType>& targets);
/// 1/n^r target: every orbit transitive.
std::vector<FactType> all_transitive_targets(const OrbitSetup& setup);

}  // namespace hypoh
