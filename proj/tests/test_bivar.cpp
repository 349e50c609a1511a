#include <doctest.h>

#include <random>

#include "hypoh/bivar.hpp"
#include "hypoh/format.hpp"

using namespace hypoh;

TEST_CASE("symbolic discriminants from the worked examples") {
  FieldPtr F3 = make_field(3, 1);
  const Poly d3 = sym_discriminant(RPoly::parse(F3, "X^3 + 2*X^2 + T"));
  CHECK(d3.deg() == 1);
  CHECK(d3.coeff(0) == 0);
  CHECK(d3.monic() == parse_poly(F3, "T"));

  FieldPtr F5 = make_field(5, 1);
  const Poly d5 = sym_discriminant(RPoly::parse(F5, "X^4 - T"));
  CHECK(squarefree_part(d5).rep == parse_poly(F5, "T"));
}

TEST_CASE("symbolic discriminant specializes to the numeric one") {
  std::mt19937_64 rng(31);
  for (auto F : {make_field(3, 1), make_field(5, 1), make_field(2, 2), make_field(7, 1)}) {
    for (int i = 0; i < 20; ++i) {
      const unsigned n = 2 + rng() % 3;
      std::vector<kern::Coeffs> c(n + 1);
      for (unsigned j = 0; j < n; ++j) {
        c[j].resize(rng() % 3);
        for (auto& x : c[j]) x = rng() % F->q();
        kern::trim(c[j]);
      }
      c[n] = {1};
      const RPoly h(F, c);
      const Poly d = sym_discriminant(h);
      for (Elem a : F->enumerate()) CHECK(d.eval(a) == discriminant(h.specialize(a)).code());
    }
  }
}

TEST_CASE("X^n - s*X^(n-2) - T with s a constant, n odd, p | n-1") {
  for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{2, 3}, {2, 5}, {3, 7}, {5, 11}}) {
    FieldPtr F = make_field(p, 1);
    for (Elem s : F->enumerate()) {
      const std::string text = "X^" + std::to_string(n) + " - " + std::to_string(s) + "*X^" +
                               std::to_string(n - 2) + " - T";
      const RPoly h = RPoly::parse(F, text);
      const Poly d = sym_discriminant(h);
      CHECK(d.deg() <= static_cast<int>(n - 1));
      for (Elem a : F->enumerate()) CHECK(d.eval(a) == discriminant(h.specialize(a)).code());
    }
  }
}

TEST_CASE("Bareiss determinant against the numeric resultant") {
  std::mt19937_64 rng(37);
  FieldPtr F = make_field(11, 1);
  for (int i = 0; i < 20; ++i) {
    kern::Coeffs f(2 + rng() % 4), g(2 + rng() % 3);
    for (auto& x : f) x = rng() % 11;
    for (auto& x : g) x = rng() % 11;
    f.back() = 1 + rng() % 10;
    g.back() = 1 + rng() % 10;
    std::vector<kern::Coeffs> fx, gx;
    for (Elem x : f) fx.push_back(x ? kern::Coeffs{x} : kern::Coeffs{});
    for (Elem x : g) gx.push_back(x ? kern::Coeffs{x} : kern::Coeffs{});
    const kern::Coeffs det = sylvester_det(*F, fx, f.size() - 1, gx, g.size() - 1);
    const Elem want = sylvester_resultant(*F, f, f.size() - 1, g, g.size() - 1);
    CHECK((det.empty() ? Elem{0} : det[0]) == want);
  }
}

TEST_CASE("square classes") {
  FieldPtr F7 = make_field(7, 1);
  auto cls = [&](const char* s) { return squarefree_part(parse_poly(F7, s)); };
  CHECK(square_classes_independent({cls("T"), cls("T - 1"), cls("T - 2")}));
  CHECK_FALSE(square_classes_independent({cls("T"), cls("T - 1"), cls("T")}));
  CHECK_FALSE(square_classes_independent({cls("T"), cls("T^2 - T"), cls("T - 1")}));
  CHECK_FALSE(square_classes_independent({cls("4*T^2")}));
  CHECK(cls("3").unit_nonsquare);  // 3 is not a square mod 7
  CHECK(cls("3*T^2").rep == Poly::constant(F7, 1));
  CHECK(combine(cls("T"), cls("T^2 + T")) == cls("T+1"));
  CHECK(combine(cls("3"), cls("5")).is_trivial());  // 15 = 1 mod 7
  CHECK_THROWS_AS(squarefree_part(Poly::from_ints(make_field(2, 1), {0, 1})), DomainError);
}

TEST_CASE("alternating/symmetric lemma on random subgroups") {
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned r = 1; r <= 3; ++r) {
      if (n == 4 && r == 3) continue;
      const AltSymReport rep = check_lemma_alt_sym(n, r, 20, 1000 + n * 10 + r);
      CHECK(rep.ok());
      CHECK(rep.trials == 20);
    }
  }
  CHECK(subgroup_order(3, 1, {{{1, 0, 2}}, {{1, 2, 0}}}) == 6);
  CHECK(subgroup_order(3, 1, {{{1, 2, 0}}}) == 3);
  // Diagonal S_3 inside S_3^2: surjective projections, not the whole group.
  CHECK(subgroup_order(3, 2, {{{1, 0, 2}, {1, 0, 2}}, {{1, 2, 0}, {1, 2, 0}}}) == 6);
}
