#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "invmm/catalog.hpp"
#include "invmm/errors.hpp"
#include "invmm/group.hpp"

using namespace invmm;

TEST_CASE("special tensors") {
  CHECK(delta().at(2, 2) == Polynomial(1));
  CHECK(delta().at(1, 2).is_zero());
  CHECK(kappa().at(1, 1).is_zero());
  CHECK(kappa().at(3, 1) == Polynomial(1));
  CHECK(eta().at(2, 2) == Polynomial(Cyclotomic::zeta()));
  CHECK(eta_bar().at(2, 2) == Polynomial(Cyclotomic::zeta().conj()));
  CHECK(tau().at(2, 1) == Polynomial(-1));
  CHECK(tau().transpose() == Polynomial(-1) * tau());
}

TEST_CASE("matmul tensor") {
  const Tensor T = matmul_tensor();
  CHECK(T.size() == 27);
  CHECK(T.at(parse_index("12,23,31")) == Polynomial(1));
  CHECK(T.at(parse_index("12,23,13")).is_zero());
  CHECK(stabilizer_order(T) == 144);
}

TEST_CASE("family instances") {
  const Tensor w7 = family_tensor(7);
  CHECK(w7.size() == 27);
  for (const auto &[code, c] : w7.entries())
    CHECK(c == Polynomial::param('a'));
  const std::vector<Cyclotomic> v5{0, 1};
  const FactorMatrix e33 = FactorMatrix::unit(3, 3);
  CHECK(family_tensor(5, v5) == tensor_from_factors(e33, e33, e33));
  const Tensor w44 = family_tensor(44);
  CHECK(w44.size() == 8);
  CHECK(w44.at(parse_index("23,31,12")) == parse_polynomial("a^3"));
  CHECK(w44.at(parse_index("23,13,12")) == parse_polynomial("a^2*b"));
  CHECK(w44.at(parse_index("32,13,21")) == parse_polynomial("b^3"));
  const std::vector<Cyclotomic> v9{2, 3};
  const Polynomial two(2), three(3);
  const FactorMatrix u = two * delta() + three * kappa();
  CHECK(family_tensor(9, v9) == tensor_from_factors(u, u, u));
}

TEST_CASE("arity and id errors") {
  const std::vector<Cyclotomic> one{1};
  CHECK_THROWS_AS(family_tensor(9, one), ArityError);
  CHECK_THROWS_AS(family(0), ArityError);
  CHECK_THROWS_AS(family(45), ArityError);
}

TEST_CASE("catalog shape") {
  const auto &all = catalog();
  REQUIRE(all.size() == 44);
  for (const auto &f : all) {
    if (f.id <= 15)
      CHECK(f.shape == FamilyShape::Cube);
    std::set<char> letters(f.params.begin(), f.params.end());
    CHECK(letters.size() == f.params.size());
  }
  CHECK(family(9).length == 4);
  CHECK(family(8).length == 16);
  CHECK(family(24).param_count() == 5);
}

TEST_CASE("every family has its declared orbit length and satisfies its scaling law") {
  const auto report = verify_catalog();
  REQUIRE(report.size() == 44);
  for (const auto &c : report) {
    CHECK(c.orbit_length == family(c.id).length);
    CHECK(c.orbit_length * c.stabilizer == 144);
  }
  CHECK(report[8].orbit_length == 4);
  CHECK(report[7].orbit_length == 16);
  CHECK(report[40].linear_scaling);
  CHECK_FALSE(report[0].linear_scaling);
}

TEST_CASE("scaling law for family 41 at z = 5") {
  const std::vector<Cyclotomic> p{1, 2}, p5{5, 10};
  CHECK(family_tensor(41, p).scaled(Polynomial(5)) == family_tensor(41, p5));
}

TEST_CASE("integrity errors name the family") {
  OrbitFamily f = family(9);
  f.length = 5;
  CHECK_THROWS_WITH_AS(verify_family(f), doctest::Contains("family 9"), IntegrityError);
  CHECK_THROWS_AS(parse_catalog("{\"families\": [{\"id\": 1, \"length\": 1, \"params\": [\"a\"], \"shape\": \"cube\", "
                                "\"factors\": [[[\"a\",\"0\",\"0\"],[\"0\",\"b\",\"0\"],[\"0\",\"0\",\"a\"]]]}]}"),
                  IntegrityError);
  CHECK_THROWS_AS(parse_catalog("{\"families\": 3}"), ParseError);
}

TEST_CASE("slots give fresh parameters") {
  const Tensor t = family_tensor(9, 2);
  CHECK(t.at(parse_index("11,11,11")) == parse_polynomial("a2^3"));
}
