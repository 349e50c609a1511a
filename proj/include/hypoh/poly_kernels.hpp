#pragma once

// Dense polynomial kernels over a FieldCtx. Coefficients are low-to-high
// with no trailing zeros; the zero polynomial is the empty vector.
// These are the hot paths used by Poly and by the census workers, so they
// take the field by reference and never touch shared ownership.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hypoh/field.hpp"

namespace hypoh::kern {

using Coeffs = std::vector<Elem>;

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline std::size_t deg(const Coeffs& a) { return a.size() - 1; }
inline bool is_constant(const Coeffs& a) { return a.size() <= 1; }

Coeffs add(const FieldCtx& F, const Coeffs& a, const Coeffs& b);
Coeffs sub(const FieldCtx& F, const Coeffs& a, const Coeffs& b);
Coeffs scale(const FieldCtx& F, const Coeffs& a, Elem s);
Coeffs mul(const FieldCtx& F, const Coeffs& a, const Coeffs& b);
Coeffs sqr(const FieldCtx& F, const Coeffs& a);
/// a = q*b + r; b nonzero.
void divmod(const FieldCtx& F, const Coeffs& a, const Coeffs& b, Coeffs& q, Coeffs& r);
/// In-place a mod m for monic m.
void rem_monic(const FieldCtx& F, Coeffs& a, const Coeffs& m);
Coeffs rem(const FieldCtx& F, const Coeffs& a, const Coeffs& b);
Coeffs quo(const FieldCtx& F, const Coeffs& a, const Coeffs& b);
Coeffs monic(const FieldCtx& F, const Coeffs& a);
/// Monic gcd; gcd(0, 0) = 0.
Coeffs gcd(const FieldCtx& F, Coeffs a, Coeffs b);
Coeffs derivative(const FieldCtx& F, const Coeffs& a);
Coeffs compose(const FieldCtx& F, const Coeffs& f, const Coeffs& g);
Elem eval(const FieldCtx& F, const Coeffs& f, Elem x);

/// (a*b) mod m, m monic.
Coeffs mulmod(const FieldCtx& F, const Coeffs& a, const Coeffs& b, const Coeffs& m);
Coeffs powmod(const FieldCtx& F, Coeffs base, std::uint64_t e, const Coeffs& m);
/// a^q mod m.
Coeffs frobmod(const FieldCtx& F, const Coeffs& a, const Coeffs& m);

/// p-th root of a polynomial whose exponents are all multiples of p.
Coeffs pth_root(const FieldCtx& F, const Coeffs& a);

bool is_separable(const FieldCtx& F, const Coeffs& f);
/// Rabin's test; f nonconstant.
bool is_irreducible(const FieldCtx& F, const Coeffs& f);

/// f = prod a_i^{e_i} with a_i squarefree, monic, pairwise coprime.
std::vector<std::pair<Coeffs, unsigned>> squarefree_decomposition(const FieldCtx& F,
                                                                 const Coeffs& f);
/// Distinct-degree factorization of a squarefree monic f: pairs (product of
/// all irreducible factors of degree d, d).
std::vector<std::pair<Coeffs, unsigned>> distinct_degree(const FieldCtx& F, Coeffs f);
/// Splits a squarefree monic product of degree-d irreducibles (Cantor-Zassenhaus).
std::vector<Coeffs> equal_degree(const FieldCtx& F, const Coeffs& f, unsigned d,
                                 std::mt19937_64& rng);

/// Sorted factor degrees with multiplicity.
std::vector<unsigned> fact_type(const FieldCtx& F, const Coeffs& f);
/// Factor degrees of a squarefree f; empty optional-like result when f is
/// not squarefree is signalled by returning false.
bool fact_type_if_separable(const FieldCtx& F, const Coeffs& f, std::vector<unsigned>& out);

/// Deterministic seed for Cantor-Zassenhaus on f.
std::uint64_t poly_seed(std::uint64_t global_seed, const Coeffs& f);

}  // namespace hypoh::kern
