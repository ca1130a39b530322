#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hahnfactor/streams.hpp"

using namespace hahnfactor;

namespace {

CoefStream random_stream(std::mt19937_64 &rng) {
  auto r = [&](long lo, long hi) {
    return Rat(static_cast<long>(rng() % (hi - lo + 1)) + lo);
  };
  switch (rng() % 4) {
    case 0:
      return CoefStream::constant(r(-4, 4));
    case 1:
      return CoefStream::geometric(r(1, 4), Rat(static_cast<long>(rng() % 3) + 1,
                                                static_cast<long>(rng() % 3) + 2));
    case 2: {
      std::vector<Rat> p{r(-3, 3), r(-2, 2)};
      return CoefStream::poly_geo(p, Rat(-1));
    }
    default: {
      std::vector<Rat> pre, cyc;
      for (unsigned i = 0; i < rng() % 3; ++i) pre.push_back(r(-3, 3));
      for (unsigned i = 0; i < 1 + rng() % 3; ++i) cyc.push_back(r(-3, 3));
      return CoefStream::ev_periodic(pre, cyc);
    }
  }
}

}  // namespace

TEST_CASE("basic evaluation") {
  auto c = CoefStream::constant(Rat(3));
  CHECK(c.at(0) == 3);
  CHECK(c.at(17) == 3);
  auto g = CoefStream::geometric(Rat(1), Rat(1, 2));
  CHECK(g.at(0) == 1);
  CHECK(g.at(3) == Rat(1, 8));
  auto p = CoefStream::poly_geo({Rat(1), Rat(1)}, Rat(-1));  // (1+n)(-1)^n
  CHECK(p.at(0) == 1);
  CHECK(p.at(1) == -2);
  CHECK(p.at(2) == 3);
  auto e = CoefStream::ev_periodic({Rat(5)}, {Rat(1), Rat(2)});
  CHECK(e.at(0) == 5);
  CHECK(e.at(1) == 1);
  CHECK(e.at(2) == 2);
  CHECK(e.at(3) == 1);
}

TEST_CASE("canonicalisation collapses equivalent forms") {
  CHECK(CoefStream::ev_periodic({}, {Rat(2)}) == CoefStream::constant(Rat(2)));
  CHECK(CoefStream::ev_periodic({}, {Rat(1), Rat(-1)}) ==
        CoefStream::geometric(Rat(1), Rat(-1)));
  CHECK(CoefStream::ev_periodic({Rat(7)}, {Rat(7)}) == CoefStream::constant(Rat(7)));
  CHECK(CoefStream::ev_periodic({}, {Rat(1), Rat(2), Rat(1), Rat(2)}) ==
        CoefStream::ev_periodic({}, {Rat(1), Rat(2)}));
  CHECK(CoefStream::poly_geo({Rat(0)}, Rat(3)).is_zero());
}

TEST_CASE("drop and prepend") {
  auto g = CoefStream::geometric(Rat(1), Rat(1, 3));
  auto d = g.dropped(2);
  CHECK(d == CoefStream::geometric(Rat(1, 9), Rat(1, 3)));
  auto back = d.try_prepend(Rat(1, 3));
  REQUIRE(back.has_value());
  CHECK(*back == g.dropped(1));
  CHECK(!d.try_prepend(Rat(7)).has_value());  // breaks the closed form

  auto e = CoefStream::ev_periodic({Rat(9)}, {Rat(1), Rat(2)});
  auto e2 = e.dropped(2);
  CHECK(e2.at(0) == 2);
  CHECK(e2.at(1) == 1);
  auto p = CoefStream::poly_geo({Rat(0), Rat(1)}, Rat(1));  // n
  CHECK(p.dropped(3).at(0) == 3);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    CoefStream s = random_stream(rng);
    long k = static_cast<long>(rng() % 5);
    for (long n = 0; n < 8; ++n) CHECK(s.dropped(k).at(n) == s.at(n + k));
  }
}

TEST_CASE("pointwise addition") {
  auto a = CoefStream::geometric(Rat(1), Rat(1, 2));
  auto b = CoefStream::geometric(Rat(3), Rat(1, 2));
  auto s = CoefStream::add(a, b);
  REQUIRE(s.has_value());
  CHECK(*s == CoefStream::geometric(Rat(4), Rat(1, 2)));

  // incompatible ratios have no closed pointwise sum
  CHECK(!CoefStream::add(a, CoefStream::geometric(Rat(1), Rat(1, 3))).has_value());

  auto p1 = CoefStream::ev_periodic({}, {Rat(1), Rat(0), Rat(2)});
  auto p2 = CoefStream::ev_periodic({Rat(4)}, {Rat(1), Rat(1)});
  auto s2 = CoefStream::add(p1, p2);
  REQUIRE(s2.has_value());
  for (long n = 0; n < 12; ++n) CHECK(s2->at(n) == p1.at(n) + p2.at(n));

  // cancellation down to a finite prefix
  auto c1 = CoefStream::constant(Rat(1));
  auto c2 = CoefStream::ev_periodic({Rat(5)}, {Rat(-1)});
  auto s3 = CoefStream::add(c1, c2);
  REQUIRE(s3.has_value());
  auto fs = s3->finite_support();
  REQUIRE(fs.has_value());
  CHECK(s3->zero_from() == 1);
  CHECK(s3->at(0) == 6);
}

TEST_CASE("interleave periodic parts") {
  auto a = CoefStream::constant(Rat(1));
  auto b = CoefStream::constant(Rat(2));
  auto s = CoefStream::interleave({a, b}, {0, 1}, 2);
  REQUIRE(s.has_value());
  for (long n = 0; n < 10; ++n) CHECK(s->at(n) == (n % 2 == 0 ? 1 : 2));
  CHECK(!CoefStream::interleave({CoefStream::geometric(Rat(1), Rat(1, 2)), b}, {0, 1}, 2)
             .has_value());
}

TEST_CASE("proportionality and first nonzero") {
  auto a = CoefStream::ev_periodic({}, {Rat(2), Rat(4)});
  auto b = CoefStream::ev_periodic({}, {Rat(3), Rat(6)});
  auto k = a.proportional_to(b);
  REQUIRE(k.has_value());
  CHECK(*k == Rat(3, 2));
  CHECK(!a.proportional_to(CoefStream::ev_periodic({}, {Rat(3), Rat(5)})).has_value());
  auto z = CoefStream::ev_periodic({Rat(0), Rat(0), Rat(7)}, {Rat(0)});
  CHECK(z.first_nonzero() == 2);
  CHECK(!z.first_nonzero(3).has_value());
}
