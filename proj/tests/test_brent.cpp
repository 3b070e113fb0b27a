#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "invmm/brent.hpp"
#include "invmm/catalog.hpp"
#include "invmm/errors.hpp"

using namespace invmm;

namespace {
std::string read_golden(const std::string &name) {
  std::ifstream in(std::string(INVMM_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in, "missing golden file " << name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SolutionAssignment trivial_assignment() { return assignment_from_factors(trivial_decomposition()); }

/// Union of the orbits of three instantiated families, as one factor list.
std::vector<FactorTriple> orbit_decomposition() {
  std::vector<FactorTriple> terms;
  const std::vector<std::pair<int, std::vector<Cyclotomic>>> parts{
      {5, {0, 1}}, {26, {1, 0, 1, 0, 0}}, {44, {1, 0}}};
  for (const auto &[id, values] : parts)
    for (const auto &t : orbit_of_factors(family(id).triple(values)))
      terms.push_back(t);
  return terms;
}
} // namespace

TEST_CASE("generic system shape") {
  const BrentSystem s = generic_system(23);
  CHECK(s.variables.size() == 621);
  CHECK(s.equations.size() == 729);
  CHECK(s.equations[0].label == "11,11,11");
  CHECK(s.equations[1].label == "12,11,11");
  CHECK(s.equations[728].label == "33,33,33");
  CHECK(to_string(s.variables[0]) == "x1_11");
  CHECK(to_string(s.variables[9]) == "y1_11");
  CHECK(to_string(s.variables[27]) == "x2_11");
  CHECK_THROWS_AS(generic_system(0), DomainError);
}

TEST_CASE("rank-one generic system") {
  const BrentSystem s = generic_system(1);
  CHECK(s.equations[0].lhs == parse_polynomial("x1_11*y1_11*z1_11"));
  CHECK(s.equations[0].rhs == Cyclotomic(1));
  int ones = 0;
  for (const auto &e : s.equations)
    ones += e.rhs == Cyclotomic(1);
  CHECK(ones == 27);
}

TEST_CASE("random system sizes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> rank(1, 30);
  for (int k = 0; k < 10; ++k) {
    const int r = rank(rng);
    const BrentSystem s = generic_system(r);
    CHECK(s.variables.size() == static_cast<std::size_t>(27 * r));
    CHECK(s.equations.size() == 729);
  }
  const auto all = enumerate_multisets(23);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int k = 0; k < 10; ++k) {
    const TypeMultiset m = all[pick(rng)];
    const BrentSystem s = invariant_system(m);
    std::size_t params = 0;
    for (int id : m.members())
      params += family(id).params.size();
    CHECK(s.variables.size() == params);
    CHECK(s.equations.size() == 12);
  }
}

TEST_CASE("the trivial rank-27 decomposition solves the generic system") {
  const BrentSystem s = generic_system(27);
  const SolutionCheck c = check_solution(s, trivial_assignment());
  CHECK(c.satisfied);
  CHECK(c.failing.empty());
}

TEST_CASE("failing equations are reported") {
  SolutionAssignment zero;
  const BrentSystem s23 = generic_system(23);
  for (const auto &v : s23.variables)
    zero[v] = 0;
  CHECK(check_solution(s23, zero).failing.size() == 27);

  SolutionAssignment bent = trivial_assignment();
  bent[parse_var("x1_11")] = 2;
  const SolutionCheck c = check_solution(generic_system(27), bent);
  CHECK_FALSE(c.satisfied);
  CHECK(c.failing == std::vector<int>{0});
}

TEST_CASE("missing variables are rejected") {
  SolutionAssignment sol = trivial_assignment();
  sol.erase(parse_var("z27_13"));
  CHECK_THROWS_AS(check_solution(generic_system(27), sol), MissingVariable);
}

TEST_CASE("invariant system for {24, 9, 7}") {
  const BrentSystem s = invariant_system(parse_multiset("7,9,24"));
  CHECK(s.equations.size() == 12);
  CHECK(s.equations[0].label == "g1");
  CHECK(s.equations[0].rhs == Cyclotomic(1));
  CHECK(s.equations[2].rhs == Cyclotomic(1));
  CHECK(s.equations[8].rhs == Cyclotomic(1));
  CHECK(s.equations[8].lhs == parse_polynomial("6*a1^2*d1 + 4*b2^3"));
  CHECK(s.equations[1].rhs == Cyclotomic(0));
  CHECK(to_string(s.variables.front()) == "a1");
  CHECK(to_string(s.variables.back()) == "a3");
}

TEST_CASE("an orbit decomposition solves both systems") {
  const auto terms = orbit_decomposition();
  REQUIRE(terms.size() == 27);
  Tensor sum;
  for (const auto &t : terms)
    sum += t.expand();
  CHECK(sum == matmul_tensor());
  CHECK(check_solution(generic_system(27), assignment_from_factors(terms)).satisfied);

  const BrentSystem inv = invariant_system(parse_multiset("26,44,5"));
  SolutionAssignment params;
  const std::vector<std::pair<std::string, int>> values{{"a1", 1}, {"b1", 0}, {"c1", 1}, {"d1", 0}, {"f1", 0},
                                                        {"a2", 1}, {"b2", 0}, {"a3", 0}, {"b3", 1}};
  for (const auto &[name, v] : values)
    params[parse_var(name)] = v;
  CHECK(check_solution(inv, params).satisfied);
}

TEST_CASE("export formats") {
  CHECK(parse_export_format("json") == ExportFormat::Json);
  CHECK(parse_export_format("m2") == ExportFormat::M2);
  CHECK_THROWS_AS(parse_export_format("csv"), UnknownFormat);

  for (const BrentSystem &s : {generic_system(2), invariant_system(parse_multiset("24,9,7"))}) {
    CHECK(parse_system_json(export_system(s, ExportFormat::Json)) == s);
    std::istringstream lines(export_system(s, ExportFormat::Text));
    std::size_t n = 0;
    for (std::string line; std::getline(lines, line); ++n)
      CHECK(line.find(" = ") != std::string::npos);
    CHECK(n == s.equations.size());
  }
  CHECK(export_system(generic_system(1), ExportFormat::Text).rfind("x1_11*y1_11*z1_11 = 1\n", 0) == 0);
}

TEST_CASE("assignment json round trip") {
  const SolutionAssignment sol{{parse_var("a1"), parse_cyclotomic("-z")}, {parse_var("x2_13"), parse_cyclotomic("1/2 + i")}};
  CHECK(parse_assignment_json(assignment_to_json(sol)) == sol);
  CHECK(parse_assignment_json("{\"a1\": 3}").at(parse_var("a1")) == Cyclotomic(3));
  CHECK_THROWS_AS(parse_assignment_json("[1]"), ParseError);
  CHECK_THROWS_AS(parse_system_json("{\"mode\": \"generic\"}"), ParseError);
}

TEST_CASE("Macaulay2 export matches the golden files") {
  CHECK(export_system(generic_system(1), ExportFormat::M2) == read_golden("generic_rank1.m2"));
  CHECK(export_system(invariant_system(parse_multiset("24,9,7")), ExportFormat::M2) == read_golden("invariant_24_9_7.m2"));
  CHECK(export_system(invariant_system(parse_multiset("29,9,7")), ExportFormat::M2) == read_golden("invariant_29_9_7.m2"));
}
