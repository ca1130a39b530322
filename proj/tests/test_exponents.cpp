#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hahnfactor/exp.hpp"

using namespace hahnfactor;

namespace {

// Independent sign oracle: bracket sum(q_i sqrt(d_i)) between integer
// bounds at growing precision until zero is excluded. Only called on
// values already known (or required) to be nonzero.
int numeric_sign_oracle(const RealExp &x) {
  using boost::multiprecision::sqrt;
  for (int digits = 8; digits <= 512; digits *= 2) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // lo <= x*scale <= hi with integer endpoints
    Int lo = 0, hi = 0;
    for (const auto &[m, c] : x.coords()) {
      // p/q * sqrt(m) * scale, bracketed via floor-sqrt of m*(scale*p/q)^2
      Int num = rat_num(c) * scale, den = rat_den(c);
      Int t2 = m * num * num;
      Int root = sqrt(t2);  // floor sqrt of a nonnegative cpp_int
      Int flo, fhi;
      if (num >= 0) {
        flo = root / den - 1;
        fhi = root / den + 2;
      } else {
        Int r2 = sqrt(t2);
        flo = -(r2 / den) - 2;
        fhi = -(r2 / den) + 1;
      }
      lo += flo;
      hi += fhi;
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  FAIL("numeric oracle could not separate from zero");
  return 0;
}

RealExp random_realexp(std::mt19937_64 &rng) {
  static const Int rads[4] = {Int(1), Int(2), Int(3), Int(5)};
  RealExp r;
  int n = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < n; ++i) {
    long num = static_cast<long>(rng() % 21) - 10;
    long den = 1 + static_cast<long>(rng() % 6);
    r = r + RealExp::root(rads[rng() % 4], Rat(num, den));
  }
  return r;
}

Exp lex2(const Rat &a, const Rat &b) {
  return Exp::from_components({RealExp(a), RealExp(b)});
}

}  // namespace

TEST_CASE("exact sign determination") {
  // (1/2)sqrt(2) vs 3/4: squaring oracle fixes the expected order
  RealExp a = RealExp::root(Int(2), Rat(1, 2));
  RealExp b((Rat(3, 4)));
  CHECK(numeric_sign_oracle(a - b) == -1);
  CHECK(RealExp::compare(a, b) < 0);

  RealExp x = RealExp::root(Int(3), Rat(2)) + RealExp(Rat(-7, 2));
  CHECK(RealExp::compare(x, x) == 0);

  // -sqrt(2) vs -3/2
  RealExp c = -RealExp::root(Int(2));
  RealExp d((Rat(-3, 2)));
  CHECK(numeric_sign_oracle(c - d) == 1);
  CHECK(RealExp::compare(c, d) > 0);

  // sqrt(2)+sqrt(3) vs sqrt(10): squares 5+2sqrt(6) vs 10, i.e. sqrt(24) vs 25
  RealExp e = RealExp::root(Int(2)) + RealExp::root(Int(3));
  CHECK(RealExp::compare(e, RealExp::root(Int(10))) < 0);
  CHECK(numeric_sign_oracle(e - RealExp::root(Int(10))) == -1);
}

TEST_CASE("radicand normalisation and arithmetic") {
  CHECK(RealExp::root(Int(12)) == RealExp::root(Int(3), Rat(2)));
  CHECK(RealExp::root(Int(4)) == RealExp(Rat(2)));
  RealExp s2 = RealExp::root(Int(2));
  CHECK(s2 * s2 == RealExp(Rat(2)));
  CHECK(s2 * RealExp::root(Int(6)) == RealExp::root(Int(3), Rat(2)));
  CHECK((s2 + RealExp(Rat(1))) - s2 == RealExp(Rat(1)));
}

TEST_CASE("division in the quadratic tower") {
  RealExp s2 = RealExp::root(Int(2));
  CHECK(RealExp(Rat(1)) / s2 == RealExp::root(Int(2), Rat(1, 2)));
  RealExp x = RealExp(Rat(1)) + s2;
  RealExp y = RealExp(Rat(3)) - RealExp::root(Int(3));
  CHECK((x * y) / y == x);
  CHECK((x / y) * y == x);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    RealExp u = random_realexp(rng), v = random_realexp(rng);
    if (v.is_zero()) continue;
    CHECK((u * v) / v == u);
  }
}

TEST_CASE("random sign agreement with the numeric oracle") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 400; ++i) {
    RealExp u = random_realexp(rng);
    if (u.is_zero()) continue;
    int s = u.sign();
    CHECK(s != 0);  // representation is canonical, nonzero map = nonzero value
    CHECK(s == numeric_sign_oracle(u));
  }
}

TEST_CASE("order compatible with addition") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    RealExp x = random_realexp(rng), y = random_realexp(rng), z = random_realexp(rng);
    int c = RealExp::compare(x, y);
    CHECK(c == -RealExp::compare(y, x));
    if (c < 0) CHECK(RealExp::compare(x + z, y + z) < 0);
  }
}

TEST_CASE("ord_arch") {
  CHECK(lex2(Rat(0), Rat(-1, 2)).ord() == ArchClass::level(1));
  CHECK(lex2(Rat(-1), Rat(5)).ord() == ArchClass::level(0));
  CHECK(lex2(Rat(0), Rat(0)).ord() == ArchClass::minus_inf());
  CHECK(ArchClass::minus_inf() < ArchClass::level(1));
  CHECK(ArchClass::level(1) < ArchClass::level(0));
}

TEST_CASE("domination") {
  CHECK(domination(lex2(Rat(0), Rat(-1)), lex2(Rat(-1), Rat(0))) ==
        Domination::StrictlyDominated);
  Exp x = lex2(Rat(-2), Rat(1));
  CHECK(domination(x, x.scaled(Rat(2))) == Domination::Comparable);
  CHECK(domination(lex2(Rat(-1), Rat(0)), lex2(Rat(0), Rat(-1))) ==
        Domination::Dominates);
  CHECK_THROWS(domination(Exp(2), Exp(2)));
}

TEST_CASE("project_sigma") {
  auto [h, i] = project_sigma(lex2(Rat(-1), Rat(-2)), 0);
  CHECK(h == RealExp(Rat(-1)));
  CHECK(i == lex2(Rat(0), Rat(-2)));

  auto [h2, i2] = project_sigma(lex2(Rat(0), Rat(-2)), 0);
  CHECK(h2 == RealExp(Rat(0)));
  CHECK(i2 == lex2(Rat(0), Rat(-2)));

  CHECK_THROWS(project_sigma(lex2(Rat(-1), Rat(0)), 1));

  // reassembly and idempotence
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    Exp g = Exp::from_components({random_realexp(rng), random_realexp(rng)});
    int sigma = g.ord().is_minus_inf() ? 0 : g.ord().index();
    auto [hh, ii] = project_sigma(g, sigma);
    Exp embedded(2);
    embedded = embedded.with_component(sigma, hh);
    CHECK(embedded + ii == g);
    auto [h3, i3] = project_sigma(ii.with_component(sigma, RealExp()), sigma);
    CHECK(h3 == RealExp());
    CHECK(i3 == ii.with_component(sigma, RealExp()));
  }
}

TEST_CASE("group valuation ultrametric") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 2000; ++t) {
    Exp g = Exp::from_components({random_realexp(rng), random_realexp(rng)});
    Exp h = Exp::from_components({random_realexp(rng), random_realexp(rng)});
    CHECK(ArchClass::compare((g + h).ord(), std::max(g.ord(), h.ord(),
                                                     [](auto &a, auto &b) {
                                                       return ArchClass::compare(a, b) < 0;
                                                     })) <= 0);
  }
}

TEST_CASE("group membership") {
  GroupSpec q = GroupSpec::rationals();
  CHECK(q.contains(Exp(Rat(-3, 4))));
  CHECK(!q.contains(Exp(RealExp::root(Int(2), Rat(-1)))));
  GroupSpec amb = GroupSpec::ambient(2);
  CHECK(amb.contains(lex2(Rat(1), Rat(2))));
  CHECK(parse_group("q(sqrt:2,3) lex:2").contains(
      Exp::from_components({RealExp::root(Int(2)), RealExp(Rat(1))})));
  CHECK(parse_group("q").radicands.has_value());
  CHECK(parse_group("ambient lex:3").rank == 3);
}
