#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypoh {

/// Raised when an operation's mathematical precondition is violated
/// (non-prime characteristic, division by zero, inseparable input, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical code of a field element: the coefficient vector (c_0, ..., c_{k-1})
/// over Z/p packed as sum c_i p^i. Zero is 0, one is 1.
using Elem = std::uint64_t;

/// F_q with q = p^k, realised as F_p[x]/(modulus).
///
/// Contexts are immutable after construction and shared through FieldPtr.
/// Extension fields with q <= 2^22 carry log/antilog tables for
/// multiplication; larger ones multiply coefficient vectors directly.
class FieldCtx {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

  std::uint64_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  std::uint64_t q() const noexcept { return q_; }
  /// Monic modulus over F_p, low-to-high, length k+1 (x for prime fields).
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return k_ == 1; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  bool contains(Elem a) const noexcept { return a < q_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (k_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    return add_digits(a, b);
  }
  Elem neg(Elem a) const noexcept {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    return neg_digits(a);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (k_ == 1) return mul_mod_p(a, b);
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
    }
    return mul_vectors(a, b);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem frobenius(Elem a) const noexcept { return pow(a, p_); }

  /// Integer c reduced mod p, viewed in the prime subfield.
  Elem from_int(long long c) const noexcept;
  std::vector<std::uint64_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint64_t> ds) const;

  /// Class of x in F_p[x]/(modulus); 0 for prime fields (placeholder modulus x).
  Elem x_class() const noexcept { return k_ == 1 ? 0 : p_; }
  /// Canonical generator g: x when x is primitive, otherwise the
  /// lex-least primitive element. For prime fields, the least primitive root.
  Elem generator() const;
  /// Exponent i with generator()^i == a, for a != 0.
  std::uint64_t discrete_log(Elem a) const;

  /// Position of a in lexicographic order of (c_0, ..., c_{k-1}).
  std::uint64_t lex_rank(Elem a) const noexcept;
  Elem at_lex_rank(std::uint64_t r) const noexcept;
  bool lex_less(Elem a, Elem b) const noexcept { return lex_rank(a) < lex_rank(b); }

  /// Odd characteristic only; 0 counts as a square.
  bool is_square(Elem a) const;
  /// Tr_{F_q/F_p}(a) as an element of the prime subfield.
  Elem abs_trace(Elem a) const noexcept;

  /// Every element exactly once, in lex order.
  std::vector<Elem> enumerate() const;

  bool same_field(const FieldCtx& other) const noexcept {
    return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
  }

  std::string describe() const;

  // Built through make_field only.
  FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

 private:
  Elem mul_mod_p(Elem a, Elem b) const noexcept {
    if (p_ < (std::uint64_t{1} << 32)) return (a * b) % p_;
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem add_digits(Elem a, Elem b) const noexcept;
  Elem neg_digits(Elem a) const noexcept;
  Elem mul_vectors(Elem a, Elem b) const noexcept;
  void build_tables();
  Elem find_generator() const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> q_minus_1_primes_;
  Elem generator_ = 0;
  bool has_generator_ = false;
  // log_[a] = discrete log of a to base generator_; exp_ has length 2(q-1).
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// F_{p^k} with the lexicographically least monic irreducible modulus.
/// Contexts are cached, so equal (p, k) yield the same pointer.
FieldPtr make_field(std::uint64_t p, unsigned k);

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// An element of a particular field; immutable value.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr ctx, Elem code);

  const FieldPtr& ctx() const noexcept { return ctx_; }
  Elem code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  std::vector<std::uint64_t> coeffs() const { return ctx_->digits(code_); }

  FieldElem operator+(const FieldElem& b) const;
  FieldElem operator-(const FieldElem& b) const;
  FieldElem operator*(const FieldElem& b) const;
  FieldElem operator/(const FieldElem& b) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;

  bool operator==(const FieldElem& b) const;

 private:
  void check_same(const FieldElem& b) const;
  FieldPtr ctx_;
  Elem code_ = 0;
};

bool is_square(const FieldElem& a);
FieldElem abs_trace(const FieldElem& a);
std::vector<FieldElem> enumerate_field(const FieldPtr& ctx);

/// Embedding of a subfield F_{p^j} into F_{p^k}, j | k. The generator x of
/// the source maps to the lex-least root of the source modulus in the target.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldPtr source, FieldPtr target);

  const FieldPtr& source() const noexcept { return source_; }
  const FieldPtr& target() const noexcept { return target_; }
  Elem image_of_x() const noexcept { return theta_; }
  Elem map(Elem a) const;
  /// Preimage when a lies in the image.
  std::optional<Elem> preimage(Elem a) const;

 private:
  FieldPtr source_;
  FieldPtr target_;
  Elem theta_ = 0;
  std::vector<Elem> theta_powers_;
};

}  // namespace hypoh
