#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <random>

#include "hahnfactor/ordinal.hpp"

using namespace hahnfactor;

namespace {

// ---------------------------------------------------------------------------
// Independent oracle for ordinal addition below w^3.
//
// Ordinals below w^3 are stand-ins (a,b,c) meaning w^2*a + w*b + c. Addition
// is evaluated straight from the order-theoretic definition
//   x + 0 = x,  x + S(y) = S(x + y),  x + lim y_n = sup_n (x + y_n)
// using the canonical fundamental sequences of the limit stand-ins, with the
// supremum of an increasing sample read off from its stabilised pattern.
// No Cantor-normal-form absorption rule appears anywhere in here.
// ---------------------------------------------------------------------------

using Triple = std::array<long, 3>;  // (a, b, c): w^2*a + w*b + c

Triple succ(Triple t) {
  return {t[0], t[1], t[2] + 1};
}

bool is_zero(Triple t) { return t[0] == 0 && t[1] == 0 && t[2] == 0; }

Triple sup_of_samples(const std::vector<Triple> &v) {
  size_t k = v.size();
  REQUIRE(k >= 4);
  Triple x = v[k - 2], y = v[k - 1];
  // locate the growing coordinate; require the same growth pattern twice
  for (int coord = 2; coord >= 0; --coord) {
    if (y[coord] > x[coord]) {
      Triple w = v[k - 3];
      REQUIRE(x[coord] > w[coord]);
      for (int j = 0; j < coord; ++j) {
        REQUIRE(x[j] == y[j]);
        REQUIRE(w[j] == y[j]);
      }
      // sup of a sequence unbounded in `coord`: bump the next level
      Triple s{y[0], y[1], y[2]};
      s[coord] = 0;
      if (coord == 2) s[1] += 1;
      if (coord == 1) s[0] += 1;
      if (coord == 0) FAIL("sample escaped w^3");
      for (int j = coord + 1; j < 3; ++j) s[j] = 0;
      return s;
    }
    REQUIRE(x[coord] == y[coord]);
  }
  // constant sequence: sup is the value itself
  return y;
}

std::map<std::pair<Triple, Triple>, Triple> memo;

Triple oracle_add(Triple x, Triple y) {
  if (is_zero(y)) return x;
  auto key = std::make_pair(x, y);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Triple r;
  if (y[2] > 0) {
    r = succ(oracle_add(x, {y[0], y[1], y[2] - 1}));
  } else {
    std::vector<Triple> samples;
    for (long n = 0; n < 9; ++n) {
      Triple g = y[1] > 0 ? Triple{y[0], y[1] - 1, n} : Triple{y[0] - 1, n, 0};
      samples.push_back(succ(oracle_add(x, g)));
    }
    r = sup_of_samples(samples);
  }
  memo[key] = r;
  return r;
}

Ordinal to_ordinal(Triple t) {
  Ordinal r;
  if (t[0] > 0) r = nat_sum(r, Ordinal::omega_pow(Ordinal(Int(2)), Int(t[0])));
  if (t[1] > 0) r = nat_sum(r, Ordinal::omega_pow(Ordinal(Int(1)), Int(t[1])));
  if (t[2] > 0) r = nat_sum(r, Ordinal(Int(t[2])));
  return r;
}

Ordinal random_ordinal(std::mt19937_64 &rng, int depth) {
  int nterms = static_cast<int>(rng() % 3);
  std::vector<Ordinal> exps;
  for (int i = 0; i < nterms; ++i)
    exps.push_back(depth <= 0 ? Ordinal(Int(rng() % 4)) : random_ordinal(rng, depth - 1));
  Ordinal r;
  for (const auto &e : exps)
    r = nat_sum(r, Ordinal::omega_pow(e, Int(1 + rng() % 3)));
  return r;
}

}  // namespace

TEST_CASE("compare examples") {
  Ordinal w = Ordinal::omega();
  Ordinal w2 = Ordinal::omega_pow(Ordinal(Int(2)));
  // w*2 + 1 < w^2
  Ordinal a = nat_sum(Ordinal::omega_pow(Ordinal(Int(1)), Int(2)), Ordinal(Int(1)));
  CHECK(Ordinal::compare(a, w2) < 0);
  CHECK(Ordinal::compare(Ordinal(), Ordinal()) == 0);
  // w^w > w^3
  Ordinal ww = Ordinal::omega_pow(w);
  CHECK(Ordinal::compare(ww, Ordinal::omega_pow(Ordinal(Int(3)))) > 0);
}

TEST_CASE("ordinal sum examples") {
  Ordinal w = Ordinal::omega();
  CHECK(ord_add(w, Ordinal(Int(1))) == nat_sum(w, Ordinal(Int(1))));
  CHECK(ord_add(Ordinal(Int(1)), w) == w);  // left absorption
  // (w^2+w) + w^2 = w^2*2, frozen from the oracle below
  Triple expected = oracle_add({1, 1, 0}, {1, 0, 0});
  CHECK(expected == Triple{2, 0, 0});
  CHECK(ord_add(to_ordinal({1, 1, 0}), to_ordinal({1, 0, 0})) == to_ordinal(expected));
}

TEST_CASE("ord_add agrees with the order-theoretic oracle below w^3") {
  std::vector<Triple> all;
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      for (long c = 0; c <= 3; ++c) all.push_back({a, b, c});
  for (const auto &x : all)
    for (const auto &y : all) {
      Triple expect = oracle_add(x, y);
      Ordinal got = ord_add(to_ordinal(x), to_ordinal(y));
      CAPTURE(x[0]); CAPTURE(x[1]); CAPTURE(x[2]);
      CAPTURE(y[0]); CAPTURE(y[1]); CAPTURE(y[2]);
      CHECK(got == to_ordinal(expect));
    }
}

TEST_CASE("ordinal product") {
  Ordinal w = Ordinal::omega();
  Ordinal wp1 = nat_sum(w, Ordinal(Int(1)));
  // (w+1)*2 = w*2+1
  CHECK(ord_mul(wp1, Ordinal(Int(2))) == to_ordinal({0, 2, 1}));
  // (w+1)*w = w^2
  CHECK(ord_mul(wp1, w) == to_ordinal({1, 0, 0}));
  CHECK(ord_mul(Ordinal(Int(2)), Ordinal(Int(3))) == Ordinal(Int(6)));
}

TEST_CASE("natural sum examples") {
  // (w^2+w) (+) (w+1) = w^2 + w*2 + 1
  CHECK(nat_sum(to_ordinal({1, 1, 0}), to_ordinal({0, 1, 1})) == to_ordinal({1, 2, 1}));
  Ordinal a = parse_ordinal("w^w*2 + w^2");
  CHECK(nat_sum(a, Ordinal()) == a);
  CHECK(nat_sum(OrdinalExt(Ordinal::omega()), OrdinalExt::minus_inf()) ==
        OrdinalExt::minus_inf());
}

TEST_CASE("natural product examples") {
  Ordinal w = Ordinal::omega();
  // w^w (.) w^2 = w^(w+2)
  CHECK(nat_prod(Ordinal::omega_pow(w), Ordinal::omega_pow(Ordinal(Int(2)))) ==
        Ordinal::omega_pow(nat_sum(w, Ordinal(Int(2)))));
  // (w+1) (.) (w+1) expanded term-by-term by the distributive definition:
  // w*w (+) w*1 (+) 1*w (+) 1*1 = w^2 + w*2 + 1
  Ordinal wp1 = nat_sum(w, Ordinal(Int(1)));
  Ordinal expect;
  expect = nat_sum(expect, nat_prod(w, w));
  expect = nat_sum(expect, nat_prod(w, Ordinal(Int(1))));
  expect = nat_sum(expect, nat_prod(Ordinal(Int(1)), w));
  expect = nat_sum(expect, nat_prod(Ordinal(Int(1)), Ordinal(Int(1))));
  CHECK(expect == to_ordinal({1, 2, 1}));
  CHECK(nat_prod(wp1, wp1) == expect);
  CHECK(nat_prod(Ordinal(Int(2)), Ordinal(Int(3))) == Ordinal(Int(6)));
}

TEST_CASE("degree") {
  CHECK(ordinal_degree(to_ordinal({3, 1, 0})) == OrdinalExt(Ordinal(Int(2))));
  CHECK(ordinal_degree(OrdinalExt(Ordinal(Int(5)))) == OrdinalExt(Ordinal()));
  CHECK(ordinal_degree(OrdinalExt(Ordinal())) == OrdinalExt::minus_inf());
}

TEST_CASE("algebraic laws on random ordinals") {
  std::mt19937_64 rng(20240915);
  for (int iter = 0; iter < 3000; ++iter) {
    Ordinal a = random_ordinal(rng, 2);
    Ordinal b = random_ordinal(rng, 2);
    Ordinal c = random_ordinal(rng, 2);
    CHECK(nat_sum(a, b) == nat_sum(b, a));
    CHECK(nat_prod(a, b) == nat_prod(b, a));
    CHECK(nat_sum(nat_sum(a, b), c) == nat_sum(a, nat_sum(b, c)));
    CHECK(nat_prod(nat_prod(a, b), c) == nat_prod(a, nat_prod(b, c)));
    CHECK(nat_prod(a, nat_sum(b, c)) == nat_sum(nat_prod(a, b), nat_prod(a, c)));
    // w^a (.) w^b = w^(a(+)b)
    CHECK(nat_prod(Ordinal::omega_pow(a), Ordinal::omega_pow(b)) ==
          Ordinal::omega_pow(nat_sum(a, b)));
    if (!a.is_zero() && !b.is_zero()) {
      CHECK(ordinal_degree(nat_prod(a, b)) ==
            nat_sum(ordinal_degree(OrdinalExt(a)), ordinal_degree(OrdinalExt(b))));
    }
    // strict monotonicity of (+) in each argument
    if (Ordinal::compare(a, b) < 0) {
      CHECK(Ordinal::compare(nat_sum(a, c), nat_sum(b, c)) < 0);
    }
  }
}

TEST_CASE("ordinal text round trip") {
  for (const char *s : {"0", "1", "w", "w^2*3 + w + 1", "w^w + w^(w+1)*2 + 5",
                        "w^(w^2 + 1)*2 + w*4"}) {
    Ordinal a = parse_ordinal(s);
    CHECK(parse_ordinal(a.str()) == a);
  }
  CHECK(parse_ordinal("w^2*3 + w + 1").str() == "w^2*3 + w + 1");
}

TEST_CASE("nesting depth cap") {
  Ordinal t = Ordinal(Int(1));
  for (int i = 0; i < Ordinal::kMaxDepth - 1; ++i) t = Ordinal::omega_pow(t);
  CHECK(t.depth() == Ordinal::kMaxDepth - 1);
  Ordinal capped = Ordinal::omega_pow(t);
  CHECK(capped.depth() == Ordinal::kMaxDepth);
  CHECK_THROWS_AS(Ordinal::omega_pow(capped), OrdinalDepthError);
}
