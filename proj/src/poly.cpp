#include "hypoh/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace hypoh {

Poly::Poly(FieldPtr ctx, kern::Coeffs coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (!ctx_) throw DomainError("polynomial without a field");
  for (Elem c : coeffs_) {
    if (!ctx_->contains(c)) throw DomainError("coefficient out of range for " + ctx_->describe());
  }
  kern::trim(coeffs_);
}

Poly Poly::from_ints(FieldPtr ctx, const std::vector<long long>& coeffs) {
  kern::Coeffs c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.push_back(ctx->from_int(v));
  return {std::move(ctx), std::move(c)};
}

std::size_t Poly::deg() const {
  if (coeffs_.empty()) throw DomainError("the zero polynomial has no degree");
  return coeffs_.size() - 1;
}

Elem Poly::leading() const {
  if (coeffs_.empty()) throw DomainError("the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void Poly::check_same(const Poly& b) const {
  if (!ctx_ || !b.ctx_ || !ctx_->same_field(*b.ctx_)) throw DomainError("field context mismatch");
}

Poly Poly::operator+(const Poly& b) const {
  check_same(b);
  return {ctx_, kern::add(*ctx_, coeffs_, b.coeffs_)};
}
Poly Poly::operator-(const Poly& b) const {
  check_same(b);
  return {ctx_, kern::sub(*ctx_, coeffs_, b.coeffs_)};
}
Poly Poly::operator*(const Poly& b) const {
  check_same(b);
  return {ctx_, kern::mul(*ctx_, coeffs_, b.coeffs_)};
}
Poly Poly::operator/(const Poly& b) const {
  check_same(b);
  return {ctx_, kern::quo(*ctx_, coeffs_, b.coeffs_)};
}
Poly Poly::operator%(const Poly& b) const {
  check_same(b);
  return {ctx_, kern::rem(*ctx_, coeffs_, b.coeffs_)};
}
Poly Poly::scaled(Elem s) const { return {ctx_, kern::scale(*ctx_, coeffs_, s)}; }
Poly Poly::monic() const { return {ctx_, kern::monic(*ctx_, coeffs_)}; }
Elem Poly::eval(Elem x) const { return kern::eval(*ctx_, coeffs_, x); }

bool Poly::operator==(const Poly& b) const {
  if (!ctx_ || !b.ctx_) return !ctx_ && !b.ctx_ && coeffs_ == b.coeffs_;
  return ctx_->same_field(*b.ctx_) && coeffs_ == b.coeffs_;
}

FactType::FactType(std::vector<unsigned> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end());
}

unsigned FactType::total() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), 0u);
}

std::string FactType::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "}";
}

FactType parse_fact_type(const std::string& text) {
  std::vector<unsigned> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    int v = std::stoi(cur);
    if (v <= 0) throw DomainError("factorization type parts must be positive: " + text);
    parts.push_back(static_cast<unsigned>(v));
    cur.clear();
  };
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      cur += ch;
    } else if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') {
      flush();
    } else {
      throw DomainError("bad factorization type: " + text);
    }
  }
  flush();
  if (parts.empty()) throw DomainError("empty factorization type");
  return FactType(std::move(parts));
}

Poly compose(const Poly& f, const Poly& g) {
  if (!f.ctx() || !g.ctx() || !f.ctx()->same_field(*g.ctx())) {
    throw DomainError("field context mismatch");
  }
  return {f.ctx(), kern::compose(*f.ctx(), f.coeffs(), g.coeffs())};
}

Poly derivative(const Poly& f) { return {f.ctx(), kern::derivative(*f.ctx(), f.coeffs())}; }

Poly gcd(const Poly& a, const Poly& b) {
  if (!a.ctx()->same_field(*b.ctx())) throw DomainError("field context mismatch");
  return {a.ctx(), kern::gcd(*a.ctx(), a.coeffs(), b.coeffs())};
}

bool is_separable(const Poly& f) {
  if (f.is_zero()) return false;
  return kern::is_separable(*f.ctx(), f.coeffs());
}

bool is_irreducible(const Poly& f) { return kern::is_irreducible(*f.ctx(), f.coeffs()); }

FactType fact_type(const Poly& f) { return FactType(kern::fact_type(*f.ctx(), f.coeffs())); }

std::vector<Factor> factor(const Poly& f, std::uint64_t seed) {
  if (f.is_constant()) throw DomainError("factorization of a constant polynomial");
  const FieldCtx& F = *f.ctx();
  std::mt19937_64 rng(kern::poly_seed(seed, f.coeffs()));
  std::vector<Factor> out;
  for (const auto& [a, e] : kern::squarefree_decomposition(F, f.coeffs())) {
    for (const auto& [g, d] : kern::distinct_degree(F, a)) {
      for (auto& irr : kern::equal_degree(F, g, d, rng)) {
        out.push_back({Poly(f.ctx(), std::move(irr)), e});
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const Factor& x, const Factor& y) {
    const auto& a = x.factor.coeffs();
    const auto& b = y.factor.coeffs();
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return F.lex_less(a[i], b[i]);
    }
    return false;
  });
  return out;
}

kern::Coeffs map_coeffs(const SubfieldEmbedding& emb, const kern::Coeffs& f) {
  kern::Coeffs out;
  out.reserve(f.size());
  for (Elem c : f) out.push_back(emb.map(c));
  return out;
}

SplittingRoots roots_in_splitting_field(const Poly& f) {
  if (f.is_constant()) throw DomainError("roots of a constant polynomial");
  if (!is_separable(f)) throw DomainError("roots_in_splitting_field requires a separable polynomial");
  const FieldCtx& F = *f.ctx();
  unsigned m = 1;
  for (const auto& [g, d] : kern::distinct_degree(F, f.coeffs())) m = std::lcm(m, d);
  FieldPtr big = make_field(F.p(), F.k() * m);
  SubfieldEmbedding emb(f.ctx(), big);
  kern::Coeffs mapped = kern::monic(*big, map_coeffs(emb, f.coeffs()));
  std::mt19937_64 rng(kern::poly_seed(kDefaultFactorSeed, mapped));
  SplittingRoots out{big, m, emb, {}};
  for (const auto& lin : kern::equal_degree(*big, mapped, 1, rng)) {
    out.roots.push_back(big->neg(lin[0]));
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [&](Elem a, Elem b) { return big->lex_less(a, b); });
  return out;
}

Elem sylvester_resultant(const FieldCtx& F, const kern::Coeffs& f, std::size_t deg_f,
                         const kern::Coeffs& g, std::size_t deg_g) {
  const std::size_t n = deg_f + deg_g;
  if (n == 0) return F.one();
  std::vector<std::vector<Elem>> M(n, std::vector<Elem>(n, 0));
  auto coeff = [](const kern::Coeffs& a, std::size_t i) { return i < a.size() ? a[i] : Elem{0}; };
  // Row i of the f block holds f's coefficients high-to-low starting at column i.
  for (std::size_t i = 0; i < deg_g; ++i) {
    for (std::size_t j = 0; j <= deg_f; ++j) M[i][i + j] = coeff(f, deg_f - j);
  }
  for (std::size_t i = 0; i < deg_f; ++i) {
    for (std::size_t j = 0; j <= deg_g; ++j) M[deg_g + i][i + j] = coeff(g, deg_g - j);
  }
  Elem det = F.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return F.zero();
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = F.neg(det);
    }
    det = F.mul(det, M[col][col]);
    const Elem inv = F.inv(M[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (M[r][col] == 0) continue;
      const Elem factor = F.mul(M[r][col], inv);
      for (std::size_t c = col; c < n; ++c) {
        M[r][c] = F.sub(M[r][c], F.mul(factor, M[col][c]));
      }
    }
  }
  return det;
}

FieldElem resultant(const Poly& f, const Poly& g) {
  if (!f.ctx()->same_field(*g.ctx())) throw DomainError("field context mismatch");
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant with the zero polynomial");
  return {f.ctx(), sylvester_resultant(*f.ctx(), f.coeffs(), f.deg(), g.coeffs(), g.deg())};
}

FieldElem discriminant(const Poly& f) {
  if (f.is_zero() || f.deg() < 2) throw DomainError("discriminant requires degree >= 2");
  const FieldCtx& F = *f.ctx();
  const std::size_t n = f.deg();
  Elem res = sylvester_resultant(F, f.coeffs(), n, kern::derivative(F, f.coeffs()), n - 1);
  Elem d = F.div(res, f.leading());
  if ((n * (n - 1) / 2) % 2 == 1) d = F.neg(d);
  return {f.ctx(), d};
}

int mobius(std::uint64_t n) {
  if (n == 1) return 1;
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t count_monic_irreducible(std::uint64_t q, unsigned n) {
  if (n < 1) throw DomainError("degree must be at least 1");
  auto power = [&](unsigned e) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < e; ++i) {
      r *= q;
      if (r > static_cast<unsigned __int128>(~std::uint64_t{0})) {
        throw DomainError("q^n overflows 64 bits");
      }
    }
    return r;
  };
  __int128 sum = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(d);
    if (mu != 0) sum += mu * static_cast<__int128>(power(n / d));
  }
  return static_cast<std::uint64_t>(sum / n);
}

}  // namespace hypoh
