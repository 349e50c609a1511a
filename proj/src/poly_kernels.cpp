#include "hypoh/poly_kernels.hpp"

#include <algorithm>

namespace hypoh::kern {

Coeffs add(const FieldCtx& F, const Coeffs& a, const Coeffs& b) {
  const Coeffs& lo = a.size() < b.size() ? a : b;
  Coeffs r = a.size() < b.size() ? b : a;
  for (std::size_t i = 0; i < lo.size(); ++i) r[i] = F.add(r[i], lo[i]);
  trim(r);
  return r;
}

Coeffs sub(const FieldCtx& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Coeffs scale(const FieldCtx& F, const Coeffs& a, Elem s) {
  if (s == 0) return {};
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], s);
  return r;
}

Coeffs mul(const FieldCtx& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

Coeffs sqr(const FieldCtx& F, const Coeffs& a) {
  if (a.empty()) return {};
  if (F.p() == 2) {
    // Cross terms cancel in characteristic 2.
    Coeffs r(2 * a.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[2 * i] = F.mul(a[i], a[i]);
    return r;
  }
  return mul(F, a, a);
}

void rem_monic(const FieldCtx& F, Coeffs& a, const Coeffs& m) {
  const std::size_t dm = deg(m);
  if (a.size() <= dm) {
    trim(a);
    return;
  }
  for (std::size_t i = a.size(); i-- > dm;) {
    const Elem c = a[i];
    if (c == 0) continue;
    const std::size_t base = i - dm;
    for (std::size_t j = 0; j < dm; ++j) {
      if (m[j] != 0) a[base + j] = F.sub(a[base + j], F.mul(c, m[j]));
    }
  }
  a.resize(dm);
  trim(a);
}

void divmod(const FieldCtx& F, const Coeffs& a, const Coeffs& b, Coeffs& q, Coeffs& r) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  r = a;
  trim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  const std::size_t db = deg(b);
  const Elem inv_lc = F.inv(b.back());
  q.assign(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    const Elem c = F.mul(r[i], inv_lc);
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
}

Coeffs rem(const FieldCtx& F, const Coeffs& a, const Coeffs& b) {
  Coeffs q, r;
  divmod(F, a, b, q, r);
  return r;
}

Coeffs quo(const FieldCtx& F, const Coeffs& a, const Coeffs& b) {
  Coeffs q, r;
  divmod(F, a, b, q, r);
  return q;
}

Coeffs monic(const FieldCtx& F, const Coeffs& a) {
  if (a.empty() || a.back() == F.one()) return a;
  return scale(F, a, F.inv(a.back()));
}

Coeffs gcd(const FieldCtx& F, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Coeffs derivative(const FieldCtx& F, const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    r[i - 1] = F.mul(a[i], F.from_int(static_cast<long long>(i % F.p())));
  }
  trim(r);
  return r;
}

Coeffs compose(const FieldCtx& F, const Coeffs& f, const Coeffs& g) {
  if (f.empty()) return {};
  Coeffs r{f.back()};
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    r = mul(F, r, g);
    if (r.empty()) r.push_back(0);
    r[0] = F.add(r[0], f[i]);
    trim(r);
  }
  return r;
}

Elem eval(const FieldCtx& F, const Coeffs& f, Elem x) {
  Elem r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
  return r;
}

Coeffs mulmod(const FieldCtx& F, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
  Coeffs r = mul(F, a, b);
  rem_monic(F, r, m);
  return r;
}

Coeffs powmod(const FieldCtx& F, Coeffs base, std::uint64_t e, const Coeffs& m) {
  rem_monic(F, base, m);
  Coeffs r{F.one()};
  rem_monic(F, r, m);
  if (e == 0) return r;
  int top = 63;
  while (((e >> top) & 1) == 0) --top;
  r = base;
  for (int bit = top - 1; bit >= 0; --bit) {
    r = sqr(F, r);
    rem_monic(F, r, m);
    if ((e >> bit) & 1) r = mulmod(F, r, base, m);
  }
  return r;
}

Coeffs frobmod(const FieldCtx& F, const Coeffs& a, const Coeffs& m) {
  return powmod(F, a, F.q(), m);
}

Coeffs pth_root(const FieldCtx& F, const Coeffs& a) {
  const std::uint64_t p = F.p();
  // Inverse Frobenius on F_q is a -> a^(q/p).
  const std::uint64_t root_exp = F.q() / p;
  Coeffs r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(F.pow(a[i], root_exp));
  trim(r);
  return r;
}

bool is_separable(const FieldCtx& F, const Coeffs& f) {
  return is_constant(gcd(F, f, derivative(F, f)));
}

bool is_irreducible(const FieldCtx& F, const Coeffs& f_in) {
  if (is_constant(f_in)) throw DomainError("irreducibility of a constant polynomial");
  const Coeffs f = monic(F, f_in);
  const std::size_t n = deg(f);
  if (n == 1) return true;
  if (f[0] == 0) return false;
  const Coeffs x{0, F.one()};
  std::vector<std::size_t> checks;
  for (std::uint64_t l : prime_factors(n)) checks.push_back(n / l);
  Coeffs cur = x;
  for (std::size_t i = 1; i <= n; ++i) {
    cur = frobmod(F, cur, f);
    if (std::find(checks.begin(), checks.end(), i) != checks.end()) {
      if (!is_constant(gcd(F, f, sub(F, cur, x)))) return false;
    }
  }
  return cur == x;
}

namespace {

void squarefree_rec(const FieldCtx& F, const Coeffs& f, unsigned mult,
                    std::vector<std::pair<Coeffs, unsigned>>& out) {
  Coeffs d = derivative(F, f);
  Coeffs c = d.empty() ? f : gcd(F, f, d);
  Coeffs w = quo(F, f, c);
  unsigned i = 1;
  while (!is_constant(w)) {
    Coeffs y = gcd(F, w, c);
    Coeffs fac = quo(F, w, y);
    if (!is_constant(fac)) out.emplace_back(monic(F, fac), i * mult);
    w = std::move(y);
    c = quo(F, c, w);
    ++i;
  }
  if (!is_constant(c)) {
    squarefree_rec(F, monic(F, pth_root(F, c)), mult * static_cast<unsigned>(F.p()), out);
  }
}

}  // namespace

std::vector<std::pair<Coeffs, unsigned>> squarefree_decomposition(const FieldCtx& F,
                                                                 const Coeffs& f) {
  std::vector<std::pair<Coeffs, unsigned>> out;
  if (is_constant(f)) return out;
  squarefree_rec(F, monic(F, f), 1, out);
  return out;
}

std::vector<std::pair<Coeffs, unsigned>> distinct_degree(const FieldCtx& F, Coeffs f) {
  std::vector<std::pair<Coeffs, unsigned>> out;
  f = monic(F, f);
  const Coeffs x{0, F.one()};
  Coeffs h = x;
  rem_monic(F, h, f);
  for (unsigned d = 1; f.size() > 2 * d; ++d) {
    h = frobmod(F, h, f);
    Coeffs g = gcd(F, f, sub(F, h, x));
    if (!is_constant(g)) {
      f = quo(F, f, g);
      rem_monic(F, h, f);
      out.emplace_back(std::move(g), d);
    }
  }
  if (!is_constant(f)) {
    const auto d = static_cast<unsigned>(deg(f));
    out.emplace_back(std::move(f), d);
  }
  return out;
}

namespace {

Coeffs random_below(const FieldCtx& F, std::size_t n, std::mt19937_64& rng) {
  Coeffs a(n);
  for (auto& c : a) {
    // Rejection sampling keeps the draw uniform and platform independent.
    const std::uint64_t q = F.q();
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % q;
    std::uint64_t v;
    do v = rng(); while (v >= limit);
    c = v % q;
  }
  trim(a);
  return a;
}

void split_equal(const FieldCtx& F, const Coeffs& f, unsigned d, std::mt19937_64& rng,
                 std::vector<Coeffs>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  const Coeffs one{F.one()};
  for (;;) {
    Coeffs a = random_below(F, deg(f), rng);
    if (is_constant(a)) continue;
    Coeffs b;
    if (F.p() == 2) {
      // Absolute trace map to F_2 over F_{q^d}.
      Coeffs t = a;
      b = a;
      const std::uint64_t steps = static_cast<std::uint64_t>(F.k()) * d;
      for (std::uint64_t i = 1; i < steps; ++i) {
        t = sqr(F, t);
        rem_monic(F, t, f);
        b = add(F, b, t);
      }
    } else {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q - 1)/2).
      Coeffs t = a;
      Coeffs norm = a;
      for (unsigned i = 1; i < d; ++i) {
        t = frobmod(F, t, f);
        norm = mulmod(F, norm, t, f);
      }
      b = sub(F, powmod(F, norm, (F.q() - 1) / 2, f), one);
    }
    Coeffs g = gcd(F, f, b);
    if (!is_constant(g) && g.size() < f.size()) {
      split_equal(F, g, d, rng, out);
      split_equal(F, quo(F, f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Coeffs> equal_degree(const FieldCtx& F, const Coeffs& f, unsigned d,
                                 std::mt19937_64& rng) {
  std::vector<Coeffs> out;
  if (is_constant(f)) return out;
  split_equal(F, monic(F, f), d, rng, out);
  return out;
}

std::vector<unsigned> fact_type(const FieldCtx& F, const Coeffs& f) {
  if (is_constant(f)) throw DomainError("factorization type of a constant polynomial");
  std::vector<unsigned> parts;
  for (const auto& [a, e] : squarefree_decomposition(F, f)) {
    for (const auto& [g, d] : distinct_degree(F, a)) {
      const std::size_t count = deg(g) / d * e;
      parts.insert(parts.end(), count, d);
    }
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

bool fact_type_if_separable(const FieldCtx& F, const Coeffs& f, std::vector<unsigned>& out) {
  out.clear();
  if (is_constant(f)) throw DomainError("factorization type of a constant polynomial");
  Coeffs d = derivative(F, f);
  if (d.empty() || !is_constant(gcd(F, f, d))) return false;
  for (const auto& [g, deg_] : distinct_degree(F, f)) {
    out.insert(out.end(), deg(g) / deg_, deg_);
  }
  std::sort(out.begin(), out.end());
  return true;
}

std::uint64_t poly_seed(std::uint64_t global_seed, const Coeffs& f) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(global_seed);
  for (Elem c : f) h = mix(h ^ c);
  return mix(h ^ f.size());
}

}  // namespace hypoh::kern
