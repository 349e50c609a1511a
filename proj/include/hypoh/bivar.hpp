#pragma once

// Polynomials in X over F_q[T]: symbolic Sylvester resultants and
// discriminants, square classes in F_q(T)*/(F_q(T)*)^2, and a brute-force
// check of the alternating/symmetric surjectivity lemma on S_n^r.

#include <cstdint>
#include <string>
#include <vector>

#include "hypoh/field.hpp"
#include "hypoh/poly.hpp"

namespace hypoh {

/// h(T, X) = sum_i c_i(T) X^i, coefficients low-to-high in X.
class RPoly {
 public:
  RPoly(FieldPtr ctx, std::vector<kern::Coeffs> coeffs);
  /// Parses an expression in X and T, e.g. "X^3 + 2*X^2 + T".
  static RPoly parse(const FieldPtr& ctx, const std::string& text);

  const FieldPtr& ctx() const noexcept { return ctx_; }
  const std::vector<kern::Coeffs>& coeffs() const noexcept { return coeffs_; }
  /// X-degree; throws on the zero polynomial.
  std::size_t deg_x() const;
  Poly coeff(std::size_t i) const;
  bool is_monic_x() const;
  RPoly derivative_x() const;
  /// h(a, X) as a univariate polynomial over F_q.
  Poly specialize(Elem a) const;

 private:
  FieldPtr ctx_;
  std::vector<kern::Coeffs> coeffs_;
};

/// Determinant of the Sylvester matrix of (f, g) over F_q[T], f rows first,
/// by fraction-free (Bareiss) elimination. Formal degrees may exceed actual ones.
kern::Coeffs sylvester_det(const FieldCtx& F, const std::vector<kern::Coeffs>& f, std::size_t deg_f,
                           const std::vector<kern::Coeffs>& g, std::size_t deg_g);

/// Res_X(f, g) in F_q[T]; both X-degrees must be at least 1.
Poly sym_resultant(const RPoly& f, const RPoly& g);
/// (-1)^{n(n-1)/2} Res_X(h, dh/dX) for h monic in X of degree n >= 2.
Poly sym_discriminant(const RPoly& h);

/// Class of u in F_q(T)*/(F_q(T)*)^2: u = c * rep * (square), rep squarefree
/// monic, and unit_nonsquare records whether c is a nonsquare in F_q.
struct SquareClass {
  Poly rep;
  bool unit_nonsquare = false;

  bool is_trivial() const { return rep.is_constant() && !unit_nonsquare; }
  bool operator==(const SquareClass& o) const {
    return rep == o.rep && unit_nonsquare == o.unit_nonsquare;
  }
};

SquareClass squarefree_part(const Poly& u);
/// Class of the product.
SquareClass combine(const SquareClass& a, const SquareClass& b);
/// True iff no nonempty subset multiplies to a square (m <= 20).
bool square_classes_independent(const std::vector<SquareClass>& classes);

struct AltSymReport {
  unsigned n = 0;
  unsigned r = 0;
  unsigned trials = 0;
  unsigned hypothesis_held = 0;  // trials whose sign image was all of (Z/2)^r
  unsigned counterexamples = 0;  // of those, subgroups smaller than S_n^r
  bool ok() const { return counterexamples == 0; }
};

/// Random subgroups H <= S_n^r with surjective coordinate projections: if the
/// sign map H -> (Z/2)^r is onto, H must be all of S_n^r.
AltSymReport check_lemma_alt_sym(unsigned n, unsigned r, unsigned trials, std::uint64_t seed);

/// Order of the subgroup of S_n^r generated by `gens` (each a tuple of r
/// permutations of {0..n-1}). Exposed for tests.
std::uint64_t subgroup_order(unsigned n, unsigned r,
                             const std::vector<std::vector<std::vector<unsigned>>>& gens);

}  // namespace hypoh
