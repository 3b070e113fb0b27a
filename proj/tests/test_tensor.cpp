#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "invmm/catalog.hpp"
#include "invmm/errors.hpp"
#include "invmm/tensor.hpp"
#include "random.hpp"

using namespace invmm;

TEST_CASE("index encoding is a bijection with the first pair least significant") {
  for (int code = 0; code < BasisIndex::count; ++code)
    CHECK(BasisIndex::decode(code).encode() == code);
  CHECK(parse_index("11,11,11").encode() == 0);
  CHECK(parse_index("12,11,11").encode() == 1);
  CHECK(parse_index("21,11,11").encode() == 3);
  CHECK(parse_index("11,12,11").encode() == 9);
  CHECK(parse_index("33,33,33").encode() == 728);
  CHECK(to_string(parse_index("13,32,21")) == "13,32,21");
  CHECK_THROWS_AS(parse_index("14,11,11"), ParseError);
  CHECK_THROWS_AS(parse_index("11,11"), ParseError);
}

TEST_CASE("even indices") {
  CHECK(index_is_even(parse_index("13,13,33")));
  CHECK_FALSE(index_is_even(parse_index("13,23,31")));
  CHECK(index_is_even(parse_index("11,11,11")));
  int even = 0;
  for (int code = 0; code < BasisIndex::count; ++code)
    even += index_is_even(BasisIndex::decode(code));
  CHECK(even == 183);
}

TEST_CASE("expansion of factors") {
  const Tensor d3 = tensor_from_factors(delta(), delta(), delta());
  CHECK(d3.size() == 27);
  for (const auto &[code, c] : d3.entries()) {
    CHECK(index_is_diagonal(BasisIndex::decode(code)));
    CHECK(c == Polynomial(1));
  }
  const FactorMatrix e33 = Polynomial::param('a') * FactorMatrix::unit(3, 3);
  const Tensor t = tensor_from_factors(e33, e33, e33);
  CHECK(t.size() == 1);
  CHECK(t.at(parse_index("33,33,33")) == parse_polynomial("a^3"));
  CHECK(tensor_from_factors(eta(), eta_bar(), delta()).at(parse_index("22,22,22")) == Polynomial(1));
}

TEST_CASE("trilinearity") {
  std::mt19937 rng(5);
  const FactorMatrix x = kappa(), y = tau(), z = eta();
  const Polynomial c(testing::random_cyclotomic(rng));
  const Tensor base = tensor_from_factors(x, y, z);
  CHECK(tensor_from_factors(c * x, y, z) == base.scaled(c));
  CHECK(tensor_from_factors(x, c * y, z) == base.scaled(c));
  CHECK(tensor_from_factors(x, y, c * z) == base.scaled(c));
  CHECK(tensor_from_factors(x + delta(), y, z) == base + tensor_from_factors(delta(), y, z));
}

TEST_CASE("linear operations") {
  const Tensor T = matmul_tensor();
  CHECK((T + T.scaled(Polynomial(-1))).empty());
  CHECK(T + Tensor() == T);
  const Polynomial c = parse_polynomial("c");
  const Tensor s = tensor_from_factors(delta(), delta(), delta()).scaled(c);
  CHECK(s.size() == 27);
  for (const auto &[code, v] : s.entries())
    CHECK(v == c);
}

TEST_CASE("pi12") {
  const Tensor e = Tensor::basis(parse_index("12,21,11"));
  CHECK(pi12(e) == Tensor::basis(parse_index("21,12,11")));
  const FactorMatrix u = kappa() + Polynomial::param('a') * delta(), v = tau();
  CHECK(pi12(tensor_from_factors(u, u, v)) == tensor_from_factors(u, u, v));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor t = testing::random_tensor(rng);
    CHECK(pi12(pi12(t)) == t);
    const Tensor swapped = pi12(t);
    for (const auto &[code, c] : swapped.entries()) {
      const BasisIndex a = BasisIndex::decode(code);
      const BasisIndex back{{{a.pairs[1], a.pairs[0], a.pairs[2]}}};
      CHECK(index_is_even(a) == index_is_even(back));
    }
  }
}

TEST_CASE("json round trip") {
  std::mt19937 rng(9);
  const Tensor t = testing::random_tensor(rng) + family_tensor(38, 1);
  CHECK(tensor_from_json(tensor_to_json(t)) == t);
  const std::string j = tensor_to_json(Tensor::basis(parse_index("12,23,31"), parse_polynomial("2*a")));
  CHECK(j.find("\"idx\"") != std::string::npos);
  CHECK(j.find("\"2*a\"") != std::string::npos);
  CHECK_THROWS_AS(tensor_from_json("{\"entries\": [{\"idx\": [[1,4],[1,1],[1,1]], \"coeff\": \"1\"}]}"), ParseError);
  CHECK_THROWS_AS(tensor_from_json("not json"), ParseError);
}
