#include "hypoh/format.hpp"

#include <algorithm>
#include <cctype>

namespace hypoh {

std::string format_elem(const FieldCtx& F, Elem a) {
  if (F.is_prime_field() || a <= 1) return std::to_string(a);
  const std::uint64_t e = F.discrete_log(a);
  return e == 1 ? "g" : "g^" + std::to_string(e);
}

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  unsigned long long number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    try {
      return std::stoull(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("number out of range");
    }
  }
  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a variable or g");
    return s_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

// Reduces an arbitrary non-negative integer into the prime subfield.
Elem reduce_int(const FieldCtx& F, unsigned long long v) { return static_cast<Elem>(v % F.p()); }

}  // namespace

Elem parse_elem(const FieldCtx& F, const std::string& text) {
  auto terms = parse_multivariate(F, text, {});
  if (terms.empty()) return F.zero();
  return terms.begin()->second;
}

std::map<std::vector<unsigned>, Elem> parse_multivariate(const FieldCtx& F, const std::string& text,
                                                         const std::vector<std::string>& vars) {
  Lexer lx(text);
  std::map<std::vector<unsigned>, Elem> out;
  if (lx.done()) lx.fail("empty expression");
  bool first = true;
  while (!lx.done()) {
    bool negate = false;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      negate = true;
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    first = false;
    Elem coef = F.one();
    std::vector<unsigned> exps(vars.size(), 0);
    do {
      const char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef = F.mul(coef, reduce_int(F, lx.number()));
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::string id = lx.identifier();
        unsigned long long e = 1;
        if (lx.accept('^')) e = lx.number();
        if (id == "g") {
          coef = F.mul(coef, F.pow(F.generator(), e));
          continue;
        }
        auto it = std::find(vars.begin(), vars.end(), id);
        if (it == vars.end()) lx.fail("unknown symbol '" + id + "'");
        if (e > 100000) lx.fail("exponent too large");
        exps[static_cast<std::size_t>(it - vars.begin())] += static_cast<unsigned>(e);
      } else {
        lx.fail("expected a term");
      }
    } while (lx.accept('*'));
    if (negate) coef = F.neg(coef);
    Elem& slot = out[exps];
    slot = F.add(slot, coef);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly parse_poly(const FieldPtr& ctx, const std::string& text) {
  std::string var;
  for (const char* cand : {"X", "x", "t", "T"}) {
    bool found = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != cand[0]) continue;
      const bool left_ok = i == 0 || !std::isalpha(static_cast<unsigned char>(text[i - 1]));
      const bool right_ok =
          i + 1 == text.size() || !std::isalpha(static_cast<unsigned char>(text[i + 1]));
      if (left_ok && right_ok) found = true;
    }
    if (found) {
      if (!var.empty()) throw ParseError("mixed variables in \"" + text + "\"");
      var = cand;
    }
  }
  if (var.empty()) var = "X";
  auto terms = parse_multivariate(*ctx, text, {var});
  kern::Coeffs c;
  for (const auto& [e, v] : terms) {
    if (c.size() <= e[0]) c.resize(e[0] + 1, 0);
    c[e[0]] = v;
  }
  return {ctx, std::move(c)};
}

std::string format_poly(const FieldCtx& F, const kern::Coeffs& f, const std::string& var) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string c = format_elem(F, f[i]);
    if (i == 0) {
      out += c;
      continue;
    }
    if (f[i] != F.one()) out += c + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string format_poly(const Poly& f, const std::string& var) {
  return format_poly(*f.ctx(), f.coeffs(), var);
}

}  // namespace hypoh
