#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "invmm/cyclotomic.hpp"
#include "invmm/errors.hpp"
#include "random.hpp"

using namespace invmm;

namespace {
Cyclotomic z() { return Cyclotomic::zeta(); }
Cyclotomic zb() { return Cyclotomic::zeta_bar(); }
Cyclotomic I() { return Cyclotomic::imag(); }
Cyclotomic W() { return Cyclotomic::root12(); }
Cyclotomic::Coords coords(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }
} // namespace

TEST_CASE("constructors give the expected coordinates") {
  CHECK(z().coords() == coords(-1, 0, 1, 0));
  CHECK(I().coords() == coords(0, 0, 0, 1));
  CHECK(Cyclotomic(make_rational(5, 3)).coords() == Cyclotomic::Coords{make_rational(5, 3), 0, 0, 0});
}

TEST_CASE("addition") {
  CHECK((1 + z() + z() * z()).is_zero());
  CHECK((I() + (-I())).is_zero());
  CHECK(z() + zb() == Cyclotomic(-1));
}

TEST_CASE("multiplication") {
  CHECK(I() * I() == Cyclotomic(-1));
  CHECK(z() * z() * z() == Cyclotomic(1));
  CHECK(W() * (W() * W() * W()) == z());
  CHECK(W() * (W() * W() * W()) == Cyclotomic(Cyclotomic::Coords{-1, 0, 1, 0}));
}

TEST_CASE("inverse") {
  CHECK(Cyclotomic(2).inverse() == Cyclotomic(make_rational(1, 2)));
  CHECK(I().inverse() == -I());
  CHECK((1 + I()).inverse() == (1 - I()) * Cyclotomic(make_rational(1, 2)));
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), DivisionByZero);
}

TEST_CASE("conjugation") {
  CHECK(z().conj() == zb());
  CHECK(I().conj() == -I());
  CHECK(Cyclotomic(make_rational(3, 7)).conj() == Cyclotomic(make_rational(3, 7)));
  CHECK(W().conj() * W() == Cyclotomic(1));
}

TEST_CASE("root-of-unity identities") {
  CHECK(z() != Cyclotomic(1));
  Cyclotomic p = 1;
  for (int k = 0; k < 12; ++k) {
    if (k > 0)
      CHECK(p != Cyclotomic(1));
    p *= W();
  }
  CHECK(p == Cyclotomic(1));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = testing::random_cyclotomic(rng), y = testing::random_cyclotomic(rng),
               u = testing::random_cyclotomic(rng);
    CHECK((x + y) + u == x + (y + u));
    CHECK((x * y) * u == x * (y * u));
    CHECK(x * (y + u) == x * y + x * u);
    CHECK(x * y == y * x);
    CHECK((x - x).is_zero());
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == Cyclotomic(1));
      CHECK((y / x) * x == y);
    }
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
  }
}

TEST_CASE("canonical form: equality is coordinate equality") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = testing::random_cyclotomic(rng), y = testing::random_cyclotomic(rng);
    CHECK((x == y) == (x.coords() == y.coords()));
    CHECK(((x * y) / y == x || y.is_zero()));
  }
}

TEST_CASE("printing in the {1, z, i, i*z} basis") {
  CHECK(to_string(Cyclotomic(0)) == "0");
  CHECK(to_string(z()) == "z");
  CHECK(to_string(zb()) == "-1 - z");
  CHECK(to_string(I()) == "i");
  CHECK(to_string(Cyclotomic(6) * I()) == "6*i");
  CHECK(to_string(Cyclotomic(make_rational(-1, 3))) == "-1/3");
  CHECK(to_string(W()) == "-i*z");
  CHECK(is_single_term(Cyclotomic(6) * I()));
  CHECK_FALSE(is_single_term(zb()));
}

TEST_CASE("rationals") {
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}
