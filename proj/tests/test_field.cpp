#include <doctest.h>

#include <random>
#include <set>

#include "hypoh/field.hpp"
#include "hypoh/poly_kernels.hpp"

using namespace hypoh;

namespace {

std::vector<FieldPtr> sample_fields() {
  return {make_field(2, 1),  make_field(3, 1),  make_field(101, 1), make_field(2, 2),
          make_field(2, 6),  make_field(3, 4),  make_field(5, 3),   make_field(2, 40),
          make_field(7, 20), make_field((std::uint64_t{1} << 61) - 1, 1)};
}

Elem random_elem(const FieldCtx& F, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Elem>(0, F.q() - 1)(rng);
}

}  // namespace

TEST_CASE("moduli are the lex-least irreducibles") {
  CHECK(make_field(2, 2)->modulus() == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(make_field(2, 6)->modulus() == std::vector<std::uint64_t>{1, 0, 0, 0, 0, 1, 1});
  // Brute force: the first irreducible in lex order over (c_0, ..., c_{k-1}).
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 2}, {3, 3}, {5, 2}, {2, 5}}) {
    FieldPtr Fp = make_field(p, 1);
    std::vector<std::uint64_t> best;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t r = 0; r < count && best.empty(); ++r) {
      kern::Coeffs c(k + 1, 0);
      std::uint64_t v = r;
      for (unsigned i = k; i-- > 0;) {
        c[i] = v % p;
        v /= p;
      }
      c[k] = 1;
      if (kern::is_irreducible(*Fp, c)) best = c;
    }
    CHECK(make_field(p, k)->modulus() == best);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (const auto& Fp : sample_fields()) {
    const FieldCtx& F = *Fp;
    for (int i = 0; i < 300; ++i) {
      const Elem a = random_elem(F, rng), b = random_elem(F, rng), c = random_elem(F, rng);
      CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.sub(F.add(a, b), b) == a);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    }
  }
}

TEST_CASE("Frobenius fixes the field and is additive") {
  std::mt19937_64 rng(11);
  for (const auto& Fp : sample_fields()) {
    const FieldCtx& F = *Fp;
    for (int i = 0; i < 50; ++i) {
      const Elem a = random_elem(F, rng), b = random_elem(F, rng);
      CHECK(F.pow(a, F.q()) == a);
      CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
    }
  }
}

TEST_CASE("generator is primitive and discrete logs invert powers") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 3}, {101, 1}, {2, 6}, {5, 2}}) {
    FieldPtr Fp = make_field(p, k);
    const FieldCtx& F = *Fp;
    const Elem g = F.generator();
    std::set<Elem> seen;
    Elem x = 1;
    for (std::uint64_t i = 0; i + 1 < F.q(); ++i) {
      seen.insert(x);
      CHECK(F.discrete_log(x) == i);
      x = F.mul(x, g);
    }
    CHECK(seen.size() == F.q() - 1);
  }
  CHECK(make_field(101, 1)->generator() == 2);
  CHECK(make_field(7, 1)->generator() == 3);
  CHECK(make_field(2, 6)->generator() == make_field(2, 6)->x_class());
}

TEST_CASE("lex order enumerates every element once") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 2}, {2, 4}, {5, 1}}) {
    FieldPtr Fp = make_field(p, k);
    const auto all = Fp->enumerate();
    CHECK(all.size() == Fp->q());
    CHECK(std::set<Elem>(all.begin(), all.end()).size() == Fp->q());
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(Fp->lex_rank(all[i]) == i);
      CHECK(Fp->at_lex_rank(i) == all[i]);
    }
  }
  // (c_0, c_1) with c_0 most significant: 1 = (1,0) comes after x = (0,1).
  auto F9 = make_field(3, 2);
  CHECK(F9->lex_less(F9->x_class(), F9->one()));
}

TEST_CASE("squares and traces are equidistributed") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 2}, {7, 1}, {3, 3}}) {
    FieldPtr Fp = make_field(p, k);
    std::uint64_t squares = 0;
    for (Elem a : Fp->enumerate()) squares += Fp->is_square(a);
    CHECK(squares == (Fp->q() + 1) / 2);
  }
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 6}, {3, 2}, {2, 1}}) {
    FieldPtr Fp = make_field(p, k);
    std::vector<std::uint64_t> hist(p, 0);
    for (Elem a : Fp->enumerate()) ++hist[Fp->abs_trace(a)];
    for (auto h : hist) CHECK(h == Fp->q() / p);
  }
  CHECK_THROWS_AS(make_field(2, 3)->is_square(1), DomainError);
}

TEST_CASE("subfield embedding is a ring homomorphism") {
  for (auto [p, j, k] : {std::tuple<std::uint64_t, unsigned, unsigned>{2, 2, 6}, {3, 1, 4}, {2, 3, 6}, {5, 2, 4}}) {
    FieldPtr S = make_field(p, j), T = make_field(p, k);
    SubfieldEmbedding e(S, T);
    std::set<Elem> image;
    for (Elem a : S->enumerate()) {
      image.insert(e.map(a));
      CHECK(e.preimage(e.map(a)) == a);
      for (Elem b : S->enumerate()) {
        CHECK(e.map(S->mul(a, b)) == T->mul(e.map(a), e.map(b)));
        CHECK(e.map(S->add(a, b)) == T->add(e.map(a), e.map(b)));
      }
    }
    CHECK(image.size() == S->q());
    std::uint64_t outside = 0;
    for (Elem a : T->enumerate()) outside += !e.preimage(a).has_value();
    CHECK(outside == T->q() - S->q());
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(make_field(4, 1), DomainError);
  CHECK_THROWS_AS(make_field(2, 0), DomainError);
  CHECK_THROWS_AS(make_field(2, 63), DomainError);
  CHECK_THROWS_AS(make_field(5, 1)->inv(0), DomainError);
  CHECK(make_field(5, 1).get() == make_field(5, 1).get());
}

TEST_CASE("discrete logs in large fields") {
  std::mt19937_64 rng(19);
  for (auto Fp : {make_field(2, 40), make_field(7, 20), make_field((std::uint64_t{1} << 61) - 1, 1),
                  make_field(3, 30)}) {
    const FieldCtx& F = *Fp;
    for (int i = 0; i < 5; ++i) {
      const Elem a = 1 + random_elem(F, rng) % (F.q() - 1);
      CHECK(F.pow(F.generator(), F.discrete_log(a)) == a);
    }
  }
}
