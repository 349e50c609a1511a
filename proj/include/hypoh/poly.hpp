#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypoh/field.hpp"
#include "hypoh/poly_kernels.hpp"

namespace hypoh {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x48595048ULL;

/// Dense univariate polynomial over a finite field. The zero polynomial has
/// no numeric degree: degree() returns nullopt.
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr ctx, kern::Coeffs coeffs);

  static Poly zero(FieldPtr ctx) { return {std::move(ctx), {}}; }
  static Poly constant(FieldPtr ctx, Elem c) { return {std::move(ctx), {c}}; }
  /// The variable t (or X).
  static Poly variable(FieldPtr ctx) { return {ctx, {0, ctx->one()}}; }
  /// Integer coefficients, low-to-high, reduced into the prime subfield.
  static Poly from_ints(FieldPtr ctx, const std::vector<long long>& coeffs);

  const FieldPtr& ctx() const noexcept { return ctx_; }
  const kern::Coeffs& coeffs() const noexcept { return coeffs_; }
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  /// Degree of a nonzero polynomial; throws on zero.
  std::size_t deg() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem leading() const;
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Poly operator+(const Poly& b) const;
  Poly operator-(const Poly& b) const;
  Poly operator*(const Poly& b) const;
  Poly operator/(const Poly& b) const;
  Poly operator%(const Poly& b) const;
  Poly scaled(Elem s) const;
  Poly monic() const;
  Elem eval(Elem x) const;

  bool operator==(const Poly& b) const;

 private:
  void check_same(const Poly& b) const;
  FieldPtr ctx_;
  kern::Coeffs coeffs_;
};

/// Multiset of irreducible-factor degrees, stored ascending.
struct FactType {
  std::vector<unsigned> parts;

  FactType() = default;
  explicit FactType(std::vector<unsigned> p);
  unsigned total() const noexcept;
  std::string str() const;
  auto operator<=>(const FactType&) const = default;
  bool operator==(const FactType&) const = default;
};

/// Parses "1,1,2" or "{1,1,2}".
FactType parse_fact_type(const std::string& text);

Poly compose(const Poly& f, const Poly& g);
Poly derivative(const Poly& f);
Poly gcd(const Poly& a, const Poly& b);
bool is_separable(const Poly& f);
bool is_irreducible(const Poly& f);
FactType fact_type(const Poly& f);

struct Factor {
  Poly factor;
  unsigned multiplicity;
};
/// Monic irreducible factors with multiplicity, sorted by (degree, lex).
std::vector<Factor> factor(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);

struct SplittingRoots {
  FieldPtr field;               // F_{q^m}
  unsigned degree;              // m over the base field
  SubfieldEmbedding embedding;  // F_q -> F_{q^m}
  std::vector<Elem> roots;      // lex-sorted, each root once
};
/// Roots of a separable polynomial in its splitting field F_{q^m},
/// m = lcm of the factor degrees.
SplittingRoots roots_in_splitting_field(const Poly& f);
/// f with its coefficients carried into a larger field along the embedding.
kern::Coeffs map_coeffs(const SubfieldEmbedding& emb, const kern::Coeffs& f);

/// Sylvester determinant Res(f, g) with f rows first. The formal degrees
/// may exceed the actual ones (leading zero columns).
Elem sylvester_resultant(const FieldCtx& F, const kern::Coeffs& f, std::size_t deg_f,
                         const kern::Coeffs& g, std::size_t deg_g);
FieldElem resultant(const Poly& f, const Poly& g);
/// (-1)^{n(n-1)/2} Res(f, f') / lc(f), with f' taken at formal degree n-1.
FieldElem discriminant(const Poly& f);

/// (1/n) sum_{d|n} mu(d) q^{n/d}; throws if q^n overflows 64 bits.
std::uint64_t count_monic_irreducible(std::uint64_t q, unsigned n);
int mobius(std::uint64_t n);

}  // namespace hypoh
