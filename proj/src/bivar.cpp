#include "hypoh/bivar.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

#include "hypoh/format.hpp"

namespace hypoh {

RPoly::RPoly(FieldPtr ctx, std::vector<kern::Coeffs> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) kern::trim(c);
  while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

RPoly RPoly::parse(const FieldPtr& ctx, const std::string& text) {
  auto terms = parse_multivariate(*ctx, text, {"X", "T"});
  std::vector<kern::Coeffs> c;
  for (const auto& [e, v] : terms) {
    if (c.size() <= e[0]) c.resize(e[0] + 1);
    auto& slot = c[e[0]];
    if (slot.size() <= e[1]) slot.resize(e[1] + 1, 0);
    slot[e[1]] = v;
  }
  return {ctx, std::move(c)};
}

std::size_t RPoly::deg_x() const {
  if (coeffs_.empty()) throw DomainError("the zero polynomial has no X-degree");
  return coeffs_.size() - 1;
}

Poly RPoly::coeff(std::size_t i) const {
  return {ctx_, i < coeffs_.size() ? coeffs_[i] : kern::Coeffs{}};
}

bool RPoly::is_monic_x() const {
  return !coeffs_.empty() && coeffs_.back() == kern::Coeffs{ctx_->one()};
}

RPoly RPoly::derivative_x() const {
  std::vector<kern::Coeffs> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d.push_back(kern::scale(*ctx_, coeffs_[i], ctx_->from_int(static_cast<long long>(i % ctx_->p()))));
  }
  return {ctx_, std::move(d)};
}

Poly RPoly::specialize(Elem a) const {
  kern::Coeffs out;
  for (const auto& c : coeffs_) out.push_back(kern::eval(*ctx_, c, a));
  return {ctx_, std::move(out)};
}

kern::Coeffs sylvester_det(const FieldCtx& F, const std::vector<kern::Coeffs>& f, std::size_t deg_f,
                           const std::vector<kern::Coeffs>& g, std::size_t deg_g) {
  const std::size_t n = deg_f + deg_g;
  if (n == 0) return {F.one()};
  auto coeff = [](const std::vector<kern::Coeffs>& a, std::size_t i) {
    return i < a.size() ? a[i] : kern::Coeffs{};
  };
  std::vector<std::vector<kern::Coeffs>> M(n, std::vector<kern::Coeffs>(n));
  for (std::size_t i = 0; i < deg_g; ++i) {
    for (std::size_t j = 0; j <= deg_f; ++j) M[i][i + j] = coeff(f, deg_f - j);
  }
  for (std::size_t i = 0; i < deg_f; ++i) {
    for (std::size_t j = 0; j <= deg_g; ++j) M[deg_g + i][i + j] = coeff(g, deg_g - j);
  }

  bool negate = false;
  kern::Coeffs prev{F.one()};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].empty()) {
      std::size_t sel = k + 1;
      while (sel < n && M[sel][k].empty()) ++sel;
      if (sel == n) return {};
      std::swap(M[k], M[sel]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        kern::Coeffs num = kern::sub(F, kern::mul(F, M[k][k], M[i][j]), kern::mul(F, M[i][k], M[k][j]));
        kern::Coeffs quo, rem;
        kern::divmod(F, num, prev, quo, rem);
        if (!rem.empty()) throw DomainError("Bareiss elimination: inexact division");
        M[i][j] = std::move(quo);
      }
      M[i][k].clear();
    }
    prev = M[k][k];
  }
  kern::Coeffs det = M[n - 1][n - 1];
  if (negate) det = kern::scale(F, det, F.neg(F.one()));
  return det;
}

Poly sym_resultant(const RPoly& f, const RPoly& g) {
  if (!f.ctx()->same_field(*g.ctx())) throw DomainError("field context mismatch");
  if (f.coeffs().empty() || g.coeffs().empty() || f.deg_x() < 1 || g.deg_x() < 1) {
    throw DomainError("sym_resultant requires X-degree >= 1 on both inputs");
  }
  return {f.ctx(), sylvester_det(*f.ctx(), f.coeffs(), f.deg_x(), g.coeffs(), g.deg_x())};
}

Poly sym_discriminant(const RPoly& h) {
  if (h.coeffs().empty() || h.deg_x() < 2) throw DomainError("sym_discriminant requires X-degree >= 2");
  if (!h.is_monic_x()) throw DomainError("sym_discriminant requires h monic in X");
  const FieldCtx& F = *h.ctx();
  const std::size_t n = h.deg_x();
  kern::Coeffs d = sylvester_det(F, h.coeffs(), n, h.derivative_x().coeffs(), n - 1);
  if ((n * (n - 1) / 2) % 2 == 1) d = kern::scale(F, d, F.neg(F.one()));
  return {h.ctx(), std::move(d)};
}

SquareClass squarefree_part(const Poly& u) {
  if (u.is_zero()) throw DomainError("square class of zero");
  const FieldCtx& F = *u.ctx();
  if (F.p() == 2) throw DomainError("square classes are defined here for odd characteristic only");
  SquareClass out{Poly::constant(u.ctx(), F.one()), !F.is_square(u.leading())};
  kern::Coeffs rep{F.one()};
  for (const auto& [a, e] : kern::squarefree_decomposition(F, u.coeffs())) {
    if (e % 2 == 1) rep = kern::mul(F, rep, a);
  }
  out.rep = Poly(u.ctx(), std::move(rep));
  return out;
}

SquareClass combine(const SquareClass& a, const SquareClass& b) {
  const FieldCtx& F = *a.rep.ctx();
  const kern::Coeffs g = kern::gcd(F, a.rep.coeffs(), b.rep.coeffs());
  kern::Coeffs prod = kern::mul(F, a.rep.coeffs(), b.rep.coeffs());
  prod = kern::quo(F, prod, kern::mul(F, g, g));
  return {Poly(a.rep.ctx(), std::move(prod)), a.unit_nonsquare != b.unit_nonsquare};
}

bool square_classes_independent(const std::vector<SquareClass>& classes) {
  if (classes.size() > 20) throw DomainError("square_classes_independent: at most 20 classes");
  if (classes.empty()) return true;
  if (classes.front().rep.ctx()->p() == 2) {
    throw DomainError("square classes are defined here for odd characteristic only");
  }
  // Gray-code walk: each step multiplies in one class, which toggles it.
  SquareClass cur{Poly::constant(classes.front().rep.ctx(), 1), false};
  const std::uint32_t total = std::uint32_t{1} << classes.size();
  for (std::uint32_t i = 1; i < total; ++i) {
    cur = combine(cur, classes[static_cast<std::size_t>(std::countr_zero(i))]);
    if (cur.is_trivial()) return false;
  }
  return true;
}

namespace {

// S_n as indexed permutations with a full multiplication table.
struct SymTable {
  unsigned n;
  std::vector<std::vector<unsigned>> perms;
  std::map<std::vector<unsigned>, unsigned> index;
  std::vector<unsigned> mul;  // mul[a * size + b] = a o b
  std::vector<int> sign;

  explicit SymTable(unsigned n_) : n(n_) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
      index[p] = static_cast<unsigned>(perms.size());
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t s = perms.size();
    mul.resize(s * s);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) {
        std::vector<unsigned> c(n);
        for (unsigned x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
        mul[a * s + b] = index[c];
      }
    }
    for (const auto& q : perms) {
      unsigned inversions = 0;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) inversions += q[i] > q[j];
      sign.push_back(inversions % 2 == 0 ? 0 : 1);
    }
  }
  std::size_t size() const { return perms.size(); }
};

std::uint64_t closure_size(const SymTable& S, unsigned r, const std::vector<std::vector<unsigned>>& gens) {
  const std::size_t s = S.size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < r; ++i) total *= s;
  std::vector<bool> seen(total, false);
  std::vector<std::uint64_t> queue{0};  // identity has index 0 in every coordinate
  seen[0] = true;
  std::vector<unsigned> digits(r);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint64_t code = queue[head];
    for (unsigned i = 0; i < r; ++i) {
      digits[i] = static_cast<unsigned>(code % s);
      code /= s;
    }
    for (const auto& g : gens) {
      std::uint64_t next = 0;
      for (unsigned i = r; i-- > 0;) next = next * s + S.mul[digits[i] * s + g[i]];
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return queue.size();
}

}  // namespace

std::uint64_t subgroup_order(unsigned n, unsigned r,
                             const std::vector<std::vector<std::vector<unsigned>>>& gens) {
  SymTable S(n);
  std::vector<std::vector<unsigned>> idx;
  for (const auto& tuple : gens) {
    if (tuple.size() != r) throw DomainError("generator tuple has the wrong length");
    std::vector<unsigned> t;
    for (const auto& p : tuple) {
      auto it = S.index.find(p);
      if (it == S.index.end()) throw DomainError("not a permutation of {0..n-1}");
      t.push_back(it->second);
    }
    idx.push_back(std::move(t));
  }
  return closure_size(S, r, idx);
}

AltSymReport check_lemma_alt_sym(unsigned n, unsigned r, unsigned trials, std::uint64_t seed) {
  if (n < 2 || n > 5) throw DomainError("check_lemma_alt_sym: n must lie in [2, 5]");
  if (r < 1 || r > 3) throw DomainError("check_lemma_alt_sym: r must lie in [1, 3]");
  SymTable S(n);
  const std::size_t s = S.size();
  std::uint64_t full = 1;
  for (unsigned i = 0; i < r; ++i) full *= s;

  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) {
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
    std::uint64_t v;
    do v = rng(); while (v >= limit);
    return v % bound;
  };

  AltSymReport rep{n, r, trials, 0, 0};
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<std::vector<unsigned>> gens;
    // Redraw until every coordinate projection generates S_n.
    for (;;) {
      gens.assign(1 + draw(4), std::vector<unsigned>(r));
      for (auto& g : gens)
        for (auto& c : g) c = static_cast<unsigned>(draw(s));
      bool surjective = true;
      for (unsigned i = 0; i < r && surjective; ++i) {
        std::vector<std::vector<unsigned>> proj;
        for (const auto& g : gens) proj.push_back({g[i]});
        surjective = closure_size(S, 1, proj) == s;
      }
      if (surjective) break;
    }
    // Rank over F_2 of the generators' sign vectors.
    std::uint32_t basis[32] = {};
    unsigned rank = 0;
    for (const auto& g : gens) {
      std::uint32_t v = 0;
      for (unsigned i = 0; i < r; ++i) v |= static_cast<std::uint32_t>(S.sign[g[i]]) << i;
      for (int bit = 31; bit >= 0 && v; --bit) {
        if (((v >> bit) & 1) == 0) continue;
        if (basis[bit] == 0) {
          basis[bit] = v;
          ++rank;
          break;
        }
        v ^= basis[bit];
      }
    }
    if (rank < r) continue;
    ++rep.hypothesis_held;
    if (closure_size(S, r, gens) != full) ++rep.counterexamples;
  }
  return rep;
}

}  // namespace hypoh
