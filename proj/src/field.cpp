#include "hypoh/field.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <unordered_map>

#include "hypoh/poly_kernels.hpp"

namespace hypoh {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a modulo m, gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

// Largest q we accept; keeps every intermediate sum below 2^64.
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t sp : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Pollard-Brent; n odd composite.
std::uint64_t find_divisor(std::uint64_t n) {
  std::mt19937_64 rng(n);
  while (true) {
    const std::uint64_t c = rng() % (n - 1) + 1;
    std::uint64_t y = rng() % n, m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = find_divisor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d < 1000 && d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FieldCtx::FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
  q_minus_1_primes_ = prime_factors(q_ - 1);
  generator_ = find_generator();
  has_generator_ = true;
  if (k_ > 1 && q_ <= kTableLimit) build_tables();
}

Elem FieldCtx::add_digits(Elem a, Elem b) const noexcept {
  Elem r = 0;
  Elem place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    Elem s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Elem FieldCtx::neg_digits(Elem a) const noexcept {
  Elem r = 0;
  Elem place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    Elem d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

Elem FieldCtx::mul_vectors(Elem a, Elem b) const noexcept {
  std::array<std::uint64_t, 64> da{}, db{};
  std::array<std::uint64_t, 128> prod{};
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = a % p_;
    db[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + mulmod_u64(da[i], db[j], p_)) % p_;
    }
  }
  for (unsigned top = 2 * k_ - 2; top >= k_; --top) {
    std::uint64_t c = prod[top];
    if (c == 0) continue;
    prod[top] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      std::uint64_t t = mulmod_u64(c, modulus_[j], p_);
      prod[top - k_ + j] = (prod[top - k_ + j] + p_ - t) % p_;
    }
  }
  Elem r = 0;
  for (unsigned i = k_; i-- > 0;) r = r * p_ + prod[i];
  return r;
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw DomainError("division by zero in " + describe());
  if (!log_.empty()) return exp_[(q_ - 1) - log_[a]];
  return pow(a, q_ - 2);
}

Elem FieldCtx::from_int(long long c) const noexcept {
  const auto m = static_cast<long long>(p_);
  long long r = c % m;
  if (r < 0) r += m;
  return static_cast<Elem>(r);
}

std::vector<std::uint64_t> FieldCtx::digits(Elem a) const {
  std::vector<std::uint64_t> out(k_);
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Elem FieldCtx::from_digits(std::span<const std::uint64_t> ds) const {
  if (ds.size() > k_) throw DomainError("too many coefficients for " + describe());
  Elem r = 0;
  for (std::size_t i = ds.size(); i-- > 0;) {
    if (ds[i] >= p_) throw DomainError("coefficient out of range");
    r = r * p_ + ds[i];
  }
  return r;
}

std::uint64_t FieldCtx::lex_rank(Elem a) const noexcept {
  if (k_ == 1) return a;
  std::uint64_t r = 0;
  for (unsigned i = 0; i < k_; ++i) {
    r = r * p_ + a % p_;
    a /= p_;
  }
  return r;
}

Elem FieldCtx::at_lex_rank(std::uint64_t r) const noexcept { return lex_rank(r); }

Elem FieldCtx::find_generator() const {
  if (q_ == 2) return 1;
  auto primitive = [&](Elem a) {
    if (a == 0) return false;
    for (std::uint64_t l : q_minus_1_primes_) {
      if (pow(a, (q_ - 1) / l) == one()) return false;
    }
    return true;
  };
  if (k_ > 1 && primitive(x_class())) return x_class();
  for (std::uint64_t r = 1; r < q_; ++r) {
    Elem a = at_lex_rank(r);
    if (primitive(a)) return a;
  }
  throw DomainError("no primitive element found in " + describe());
}

void FieldCtx::build_tables() {
  const std::size_t n = q_ - 1;
  exp_.resize(2 * n);
  log_.assign(q_, 0);
  Elem cur = one();
  for (std::size_t i = 0; i < n; ++i) {
    exp_[i] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_vectors(cur, generator_);
  }
  for (std::size_t i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
}

Elem FieldCtx::generator() const {
  if (!has_generator_) throw DomainError("generator unavailable: q-1 too large to factor");
  return generator_;
}

std::uint64_t FieldCtx::discrete_log(Elem a) const {
  if (a == 0) throw DomainError("discrete log of zero");
  if (!contains(a)) throw DomainError("element code out of range");
  if (!log_.empty()) return log_[a];
  const Elem g = generator();
  const std::uint64_t n = q_ - 1;
  // Pohlig-Hellman: the log modulo each prime power l^e | n, digit by digit
  // with baby-step giant-step in the order-l subgroup.
  unsigned __int128 x = 0;
  unsigned __int128 modulus = 1;
  for (std::uint64_t l : q_minus_1_primes_) {
    if (l > (std::uint64_t{1} << 44)) throw DomainError("discrete log: prime factor of q-1 too large");
    unsigned e = 0;
    std::uint64_t le = 1;
    for (std::uint64_t m = n; m % l == 0; m /= l) {
      ++e;
      le *= l;
    }
    const Elem gamma = pow(g, n / l);  // order l
    const std::uint64_t step = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(l))));
    std::unordered_map<Elem, std::uint64_t> baby;
    baby.reserve(step * 2);
    Elem cur = one();
    for (std::uint64_t j = 0; j < step; ++j) {
      baby.emplace(cur, j);
      cur = mul(cur, gamma);
    }
    const Elem giant = inv(pow(gamma, step));
    std::uint64_t xl = 0;  // log mod l^e
    std::uint64_t lpow = 1;
    const Elem g_inv = inv(g);
    for (unsigned i = 0; i < e; ++i) {
      // h = (a * g^{-xl})^{n / l^{i+1}} lies in <gamma>.
      Elem h = pow(mul(a, pow(g_inv, xl)), n / (lpow * l));
      std::uint64_t d = l;
      for (std::uint64_t t = 0; t <= step && d == l; ++t) {
        if (auto it = baby.find(h); it != baby.end()) d = (t * step + it->second) % l;
        h = mul(h, giant);
      }
      if (d == l) throw DomainError("element not in multiplicative group");
      xl += d * lpow;
      lpow *= l;
    }
    // CRT: x + modulus * t with t = (xl - x) / modulus mod le.
    const std::uint64_t m_mod = static_cast<std::uint64_t>(modulus % le);
    const std::uint64_t diff = static_cast<std::uint64_t>((xl + le - static_cast<std::uint64_t>(x % le)) % le);
    const std::uint64_t t = mulmod_u64(diff, inverse_mod(m_mod, le), le);
    x += modulus * t;
    modulus *= le;
  }
  return static_cast<std::uint64_t>(x % n);
}

bool FieldCtx::is_square(Elem a) const {
  if (p_ == 2) throw DomainError("is_square is defined for odd characteristic only");
  if (a == 0) return true;
  return pow(a, (q_ - 1) / 2) == one();
}

Elem FieldCtx::abs_trace(Elem a) const noexcept {
  Elem s = 0;
  Elem cur = a;
  for (unsigned i = 0; i < k_; ++i) {
    s = add(s, cur);
    cur = frobenius(cur);
  }
  return s;
}

std::vector<Elem> FieldCtx::enumerate() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (std::uint64_t r = 0; r < q_; ++r) out.push_back(at_lex_rank(r));
  return out;
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (k_ > 1) {
    os << " = F_" << p_ << "[x]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (modulus_[i] != 1 || i == 0) os << modulus_[i];
      if (i > 0) {
        if (modulus_[i] != 1) os << "*";
        os << "x";
        if (i > 1) os << "^" << i;
      }
    }
    os << ")";
  }
  return os.str();
}

FieldPtr make_field(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw DomainError("extension degree must be at least 1");
  {
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      if (q > kMaxOrder) throw DomainError("p^k exceeds the supported word size (2^62)");
    }
  }

  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({p, k}); it != cache.end()) return it->second;
  }

  std::vector<std::uint64_t> modulus;
  if (k == 1) {
    modulus = {0, 1};
  } else {
    FieldPtr base = make_field(p, 1);
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    // Candidate r in lex order of (c_0, ..., c_{k-1}): c_0 is the most
    // significant base-p digit of r.
    for (std::uint64_t r = count / p; r < count && modulus.empty(); ++r) {
      kern::Coeffs f(k);
      std::uint64_t rest = r;
      for (unsigned i = k; i-- > 0;) {
        f[i] = rest % p;
        rest /= p;
      }
      f.push_back(1);
      if (kern::is_irreducible(*base, f)) modulus = std::move(f);
    }
    if (modulus.empty()) throw DomainError("no irreducible modulus found");
  }

  auto ctx = std::make_shared<const FieldCtx>(p, k, std::move(modulus));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(p, k), ctx);
  return it->second;
}

FieldElem::FieldElem(FieldPtr ctx, Elem code) : ctx_(std::move(ctx)), code_(code) {
  if (!ctx_) throw DomainError("field element without a field");
  if (!ctx_->contains(code_)) throw DomainError("element code out of range");
}

void FieldElem::check_same(const FieldElem& b) const {
  if (!ctx_ || !b.ctx_ || !ctx_->same_field(*b.ctx_)) {
    throw DomainError("field context mismatch");
  }
}

FieldElem FieldElem::operator+(const FieldElem& b) const {
  check_same(b);
  return {ctx_, ctx_->add(code_, b.code_)};
}
FieldElem FieldElem::operator-(const FieldElem& b) const {
  check_same(b);
  return {ctx_, ctx_->sub(code_, b.code_)};
}
FieldElem FieldElem::operator*(const FieldElem& b) const {
  check_same(b);
  return {ctx_, ctx_->mul(code_, b.code_)};
}
FieldElem FieldElem::operator/(const FieldElem& b) const {
  check_same(b);
  return {ctx_, ctx_->div(code_, b.code_)};
}
FieldElem FieldElem::operator-() const { return {ctx_, ctx_->neg(code_)}; }
FieldElem FieldElem::inverse() const { return {ctx_, ctx_->inv(code_)}; }
FieldElem FieldElem::pow(std::uint64_t e) const { return {ctx_, ctx_->pow(code_, e)}; }

bool FieldElem::operator==(const FieldElem& b) const {
  if (!ctx_ || !b.ctx_) return !ctx_ && !b.ctx_;
  return ctx_->same_field(*b.ctx_) && code_ == b.code_;
}

bool is_square(const FieldElem& a) { return a.ctx()->is_square(a.code()); }

FieldElem abs_trace(const FieldElem& a) { return {a.ctx(), a.ctx()->abs_trace(a.code())}; }

std::vector<FieldElem> enumerate_field(const FieldPtr& ctx) {
  std::vector<FieldElem> out;
  out.reserve(ctx->q());
  for (Elem e : ctx->enumerate()) out.emplace_back(ctx, e);
  return out;
}

SubfieldEmbedding::SubfieldEmbedding(FieldPtr source, FieldPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_->p() != target_->p() || target_->k() % source_->k() != 0) {
    throw DomainError("no subfield embedding from " + source_->describe() + " into " +
                      target_->describe());
  }
  const FieldCtx& T = *target_;
  if (source_->k() == 1) {
    theta_powers_ = {T.one()};
    return;
  }
  kern::Coeffs m;
  for (std::uint64_t c : source_->modulus()) m.push_back(T.from_int(static_cast<long long>(c)));
  std::mt19937_64 rng(kern::poly_seed(0x5eedULL, m));
  auto linear = kern::equal_degree(T, m, 1, rng);
  std::vector<Elem> roots;
  for (const auto& l : linear) roots.push_back(T.neg(l[0]));
  theta_ = *std::min_element(roots.begin(), roots.end(),
                             [&](Elem a, Elem b) { return T.lex_less(a, b); });
  Elem cur = T.one();
  for (unsigned i = 0; i < source_->k(); ++i) {
    theta_powers_.push_back(cur);
    cur = T.mul(cur, theta_);
  }
}

Elem SubfieldEmbedding::map(Elem a) const {
  const FieldCtx& T = *target_;
  Elem r = T.zero();
  auto ds = source_->digits(a);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] != 0) r = T.add(r, T.mul(T.from_int(static_cast<long long>(ds[i])), theta_powers_[i]));
  }
  return r;
}

std::optional<Elem> SubfieldEmbedding::preimage(Elem a) const {
  // a lies in the image iff it is fixed by the source-order Frobenius.
  const FieldCtx& T = *target_;
  if (T.pow(a, source_->q()) != a) return std::nullopt;
  if (source_->k() == 1) return a;
  // Solve sum c_i theta^i = a over F_p by Gaussian elimination on target digits.
  const unsigned ks = source_->k();
  const unsigned kt = T.k();
  const std::uint64_t p = T.p();
  std::vector<std::vector<std::uint64_t>> rows(kt, std::vector<std::uint64_t>(ks + 1));
  for (unsigned i = 0; i < ks; ++i) {
    auto d = T.digits(theta_powers_[i]);
    for (unsigned r = 0; r < kt; ++r) rows[r][i] = d[r];
  }
  auto ad = T.digits(a);
  for (unsigned r = 0; r < kt; ++r) rows[r][ks] = ad[r];
  std::vector<int> pivot_row(ks, -1);
  unsigned row = 0;
  for (unsigned col = 0; col < ks && row < kt; ++col) {
    unsigned sel = row;
    while (sel < kt && rows[sel][col] == 0) ++sel;
    if (sel == kt) continue;
    std::swap(rows[sel], rows[row]);
    std::uint64_t inv = powmod_u64(rows[row][col], p - 2, p);
    for (auto& v : rows[row]) v = mulmod_u64(v, inv, p);
    for (unsigned r = 0; r < kt; ++r) {
      if (r == row || rows[r][col] == 0) continue;
      std::uint64_t f = rows[r][col];
      for (unsigned c = 0; c <= ks; ++c) {
        rows[r][c] = (rows[r][c] + p - mulmod_u64(f, rows[row][c], p)) % p;
      }
    }
    pivot_row[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::uint64_t> coeffs(ks, 0);
  for (unsigned c = 0; c < ks; ++c) {
    if (pivot_row[c] >= 0) coeffs[c] = rows[pivot_row[c]][ks];
  }
  Elem pre = source_->from_digits(coeffs);
  if (map(pre) != a) return std::nullopt;
  return pre;
}

}  // namespace hypoh
