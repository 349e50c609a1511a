#include <doctest.h>

#include <algorithm>
#include <random>

#include "hypoh/disc_class.hpp"
#include "hypoh/format.hpp"

using namespace hypoh;

TEST_CASE("Berlekamp element examples") {
  FieldPtr F2 = make_field(2, 1);
  const BerlekampResult a = berlekamp_element(parse_poly(F2, "t^2 + t + 1"));
  CHECK(a.cls.raw == 1);
  CHECK(a.cls.value == 1);
  const BerlekampResult b = berlekamp_element(parse_poly(F2, "t^2 + t"));
  CHECK(b.cls.raw == 0);
  CHECK(b.cls.value == 0);
  // One irreducible factor of degree 3: 1 = 3 mod 2, so the class is 0.
  CHECK(berlekamp_element(parse_poly(F2, "t^3 + t + 1")).cls.value == 0);
  CHECK_THROWS_AS(berlekamp_element(parse_poly(F2, "t^2 + 1")), DomainError);
  CHECK_THROWS_AS(berlekamp_element(parse_poly(make_field(3, 1), "t^2 + 1")), DomainError);
}

TEST_CASE("odd discriminant classes") {
  FieldPtr F3 = make_field(3, 1);
  CHECK_FALSE(disc_class_odd(parse_poly(F3, "t^2 + 1")));
  CHECK(disc_class_odd(parse_poly(F3, "t^2 - 1")));
  FieldPtr F5 = make_field(5, 1);
  for (Elem a : F5->enumerate()) {
    for (Elem b : F5->enumerate()) {
      for (Elem c : F5->enumerate()) {
        const Poly f(F5, {c, b, a, 1});
        if (is_irreducible(f)) CHECK(disc_class_odd(f));
      }
    }
  }
}

TEST_CASE("disc class is invariant under t -> t + c") {
  std::mt19937_64 rng(41);
  for (auto F : {make_field(3, 1), make_field(5, 1), make_field(7, 1), make_field(3, 2)}) {
    for (int cases = 0; cases < 25;) {
      kern::Coeffs c(3 + rng() % 4);
      for (auto& x : c) x = rng() % F->q();
      c.back() = 1;
      const Poly h(F, c);
      if (!is_separable(h)) continue;
      const Poly shift(F, {static_cast<Elem>(rng() % F->q()), 1});
      CHECK(disc_class_odd(h) == disc_class_odd(compose(h, shift)));
      ++cases;
    }
  }
}

TEST_CASE("odd class detects the sign of Frobenius") {
  // For separable h the Frobenius cycle type is the factorization type; its
  // sign is (-1)^(deg - number of cycles).
  for (auto F : {make_field(3, 1), make_field(5, 1)}) {
    for (unsigned d = 2; d <= 4; ++d) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < d; ++i) total *= F->q();
      for (std::uint64_t r = 0; r < total; ++r) {
        kern::Coeffs c(d + 1);
        std::uint64_t v = r;
        for (unsigned i = 0; i < d; ++i) {
          c[i] = v % F->q();
          v /= F->q();
        }
        c[d] = 1;
        const Poly h(F, c);
        if (!is_separable(h)) continue;
        const FactType t = fact_type(h);
        const bool even = (d - t.parts.size()) % 2 == 0;
        CHECK(disc_class_odd(h) == even);
      }
    }
  }
}

TEST_CASE("parity law") {
  CHECK(parity_law_check(make_field(2, 1), 8, 300, 1).violations == 0);
  CHECK(parity_law_check(make_field(2, 2), 6, 300, 2).violations == 0);
  CHECK(parity_law_check(make_field(2, 3), 5, 100, 3).violations == 0);
}

TEST_CASE("even-sum criterion") {
  FieldPtr F2 = make_field(2, 1);
  CHECK(even_sum_criterion(*F2, {0, 1}));
  FieldPtr F4 = make_field(2, 2);
  const Elem w = F4->generator();
  CHECK_FALSE(even_sum_criterion(*F4, {0, 1, w, F4->add(w, 1)}));
  CHECK(even_sum_criterion(*F4, {1, w}));
  CHECK_THROWS_AS(even_sum_criterion(*F4, {1, 1}), DomainError);

  // Translation invariance over F_16 for |Omega| <= 5 (sampled subsets).
  FieldPtr F16 = make_field(2, 4);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 400; ++i) {
    const std::size_t m = 1 + rng() % 5;
    std::vector<Elem> om;
    while (om.size() < m) {
      const Elem e = rng() % 16;
      if (std::find(om.begin(), om.end(), e) == om.end()) om.push_back(e);
    }
    const bool base = even_sum_criterion(*F16, om);
    for (Elem c = 0; c < 16; ++c) {
      std::vector<Elem> shifted;
      for (Elem e : om) shifted.push_back(F16->add(e, c));
      CHECK(even_sum_criterion(*F16, shifted) == base);
    }
  }
}
