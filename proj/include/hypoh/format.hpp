#pragma once

// Text forms for field elements and polynomials.
//
//   element:  integer (reduced mod p) | g | g^i   (g = FieldCtx::generator())
//   poly:     X^3 + 2*X + 1,  g^5*X^2 + g*X + 1,  -X + 3
//
// Extension-field coefficients print as powers of g; prime-field ones as
// integers in [0, p).

#include <map>
#include <string>
#include <vector>

#include "hypoh/field.hpp"
#include "hypoh/poly.hpp"

namespace hypoh {

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

std::string format_elem(const FieldCtx& F, Elem a);
Elem parse_elem(const FieldCtx& F, const std::string& text);

std::string format_poly(const FieldCtx& F, const kern::Coeffs& f, const std::string& var = "X");
std::string format_poly(const Poly& f, const std::string& var = "X");

/// Univariate polynomial in a single variable (X, x, t or T).
Poly parse_poly(const FieldPtr& ctx, const std::string& text);

/// Monomials of a multivariate expression: exponent vector (one entry per
/// name in `vars`) -> coefficient. Zero coefficients are dropped.
std::map<std::vector<unsigned>, Elem> parse_multivariate(const FieldCtx& F, const std::string& text,
                                                         const std::vector<std::string>& vars);

}  // namespace hypoh
