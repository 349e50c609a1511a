#pragma once

// Quadratic-resolvent classes of separable polynomials: the square class of
// the discriminant in odd characteristic, and in characteristic 2 the
// Artin-Schreier class of the Berlekamp element
//
//     A(h) = sum_{i<j} x_i x_j / (x_i + x_j)^2
//
// over the roots x_i of h.

#include <cstdint>
#include <vector>

#include "hypoh/field.hpp"
#include "hypoh/poly.hpp"

namespace hypoh {

struct ASClass {
  unsigned value = 0;  // absolute trace of A, 0 or 1
  Elem raw = 0;        // A itself, in the base field
};

struct BerlekampResult {
  FieldElem a_split;  // A in the splitting field
  ASClass cls;
};

BerlekampResult berlekamp_element(const Poly& h);

/// True when Disc(h) is a square in F_q (q odd), i.e. the class is trivial.
bool disc_class_odd(const Poly& h);

struct ParityReport {
  std::uint64_t q = 0;
  unsigned max_degree = 0;
  unsigned samples = 0;
  unsigned violations = 0;
  std::uint64_t seed = 0;
};

/// Random separable monic h with 2 <= deg h <= max_degree: the number of
/// irreducible factors is congruent to deg h mod 2 exactly when the
/// Berlekamp class is 0.
ParityReport parity_law_check(const FieldPtr& ctx, unsigned max_degree, unsigned samples,
                              std::uint64_t seed);

/// No nonempty even-size subset of omega sums to zero (characteristic 2).
bool even_sum_criterion(const FieldCtx& F, const std::vector<Elem>& omega);

}  // namespace hypoh
