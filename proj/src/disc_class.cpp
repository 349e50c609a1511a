#include "hypoh/disc_class.hpp"

#include <random>

namespace hypoh {

BerlekampResult berlekamp_element(const Poly& h) {
  const FieldCtx& F = *h.ctx();
  if (F.p() != 2) throw DomainError("berlekamp_element requires characteristic 2");
  if (h.is_zero() || h.deg() < 2) throw DomainError("berlekamp_element requires degree >= 2");
  if (!is_separable(h)) throw DomainError("berlekamp_element requires a separable polynomial");

  const SplittingRoots sr = roots_in_splitting_field(h);
  const FieldCtx& L = *sr.field;
  Elem a = 0;
  for (std::size_t i = 0; i < sr.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < sr.roots.size(); ++j) {
      const Elem xi = sr.roots[i];
      const Elem xj = sr.roots[j];
      const Elem s = L.add(xi, xj);
      a = L.add(a, L.div(L.mul(xi, xj), L.mul(s, s)));
    }
  }
  const auto base = sr.embedding.preimage(a);
  if (!base) throw DomainError("internal: Berlekamp element not in the base field");
  return {FieldElem(sr.field, a), ASClass{static_cast<unsigned>(F.abs_trace(*base)), *base}};
}

bool disc_class_odd(const Poly& h) {
  if (h.ctx()->p() == 2) throw DomainError("disc_class_odd requires odd characteristic");
  if (h.is_zero() || h.deg() < 2) throw DomainError("disc_class_odd requires degree >= 2");
  if (!is_separable(h)) throw DomainError("disc_class_odd requires a separable polynomial");
  return is_square(discriminant(h));
}

ParityReport parity_law_check(const FieldPtr& ctx, unsigned max_degree, unsigned samples,
                              std::uint64_t seed) {
  const FieldCtx& F = *ctx;
  if (F.p() != 2) throw DomainError("parity_law_check requires characteristic 2");
  if (max_degree < 2) throw DomainError("parity_law_check requires a degree bound >= 2");
  ParityReport rep{F.q(), max_degree, samples, 0, seed};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> deg_dist(2, max_degree);
  std::uniform_int_distribution<Elem> coef_dist(0, F.q() - 1);
  for (unsigned s = 0; s < samples; ++s) {
    kern::Coeffs c;
    do {
      const unsigned d = deg_dist(rng);
      c.assign(d + 1, 0);
      for (unsigned i = 0; i < d; ++i) c[i] = coef_dist(rng);
      c[d] = 1;
    } while (!kern::is_separable(F, c));
    const Poly h(ctx, c);
    const std::size_t r = factor(h).size();
    const bool parity_even = (r % 2) == (h.deg() % 2);
    const bool class_zero = berlekamp_element(h).cls.value == 0;
    if (parity_even != class_zero) ++rep.violations;
  }
  return rep;
}

bool even_sum_criterion(const FieldCtx& F, const std::vector<Elem>& omega) {
  if (F.p() != 2) throw DomainError("even_sum_criterion requires characteristic 2");
  if (omega.size() > 20) throw DomainError("even_sum_criterion: |Omega| > 20");
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!F.contains(omega[i])) throw DomainError("element outside the field");
    for (std::size_t j = i + 1; j < omega.size(); ++j) {
      if (omega[i] == omega[j]) throw DomainError("even_sum_criterion: duplicate elements");
    }
  }
  // Gray-code walk: subset sum and size updated one element at a time.
  const std::uint32_t m = static_cast<std::uint32_t>(omega.size());
  Elem sum = 0;
  unsigned size = 0;
  std::uint32_t prev = 0;
  for (std::uint32_t i = 1; i < (std::uint32_t{1} << m); ++i) {
    const std::uint32_t gray = i ^ (i >> 1);
    const std::uint32_t flip = gray ^ prev;
    prev = gray;
    const unsigned bit = static_cast<unsigned>(__builtin_ctz(flip));
    sum ^= omega[bit];
    size = (gray & flip) ? size + 1 : size - 1;
    if (size % 2 == 0 && sum == 0) return false;
  }
  return true;
}

}  // namespace hypoh
