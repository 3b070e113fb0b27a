#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "invmm/catalog.hpp"
#include "invmm/errors.hpp"
#include "invmm/group.hpp"
#include "invmm/invariants.hpp"
#include "random.hpp"

using namespace invmm;

namespace {
GroupElement el(const std::string &s) { return parse_group_element(s); }
const GroupElement kSigma = el("a=(perm=(),signs=+++);b=sigma");
const GroupElement kRho = el("a=(perm=(),signs=+++);b=rho");
} // namespace

TEST_CASE("group orders") {
  CHECK(enumerate_group(GroupKind::G).size() == 144);
  CHECK(enumerate_group(GroupKind::G1).size() == 288);
  CHECK(diagonal_subgroup().size() == 4);
  std::set<std::string> names;
  for (const auto &g : enumerate_group(GroupKind::G1))
    names.insert(to_string(g));
  CHECK(names.size() == 288);
}

TEST_CASE("G is closed under multiplication") {
  const auto &G = enumerate_group(GroupKind::G);
  std::set<std::string> names;
  for (const auto &g : G)
    names.insert(to_string(g));
  for (const auto &g : G)
    for (const auto &h : G)
      CHECK(names.count(to_string(g * h)) == 1);
}

TEST_CASE("element syntax round trip") {
  for (const auto &g : enumerate_group(GroupKind::G1))
    CHECK(parse_group_element(to_string(g)) == g);
  CHECK(to_string(el("a=(perm=(123),signs=+--);b=rho*sigma")) == "a=(perm=(123),signs=+--);b=rho*sigma");
  CHECK_THROWS_AS(el("a=(perm=(124),signs=+++);b=1"), ParseError);
  CHECK_THROWS_AS(el("a=(perm=(),signs=++);b=1"), ParseError);
  CHECK_THROWS_AS(el("a=(perm=(),signs=+++);b=tau"), ParseError);
  CHECK(parse_factor_perm("sigma^3") == FactorPerm{});
}

TEST_CASE("phi") {
  const auto [l1, p1] = phi(el("a=(perm=(),signs=-+-);b=1"));
  CHECK(l1 == perm_identity());
  CHECK(p1 == perm_identity());
  const auto [l2, p2] = phi(kSigma);
  CHECK(l2 == perm_identity());
  CHECK(perm_to_cycles(p2) == "(123)");
  const auto [l3, p3] = phi(kRho);
  CHECK(l3 == perm_identity());
  CHECK(perm_to_cycles(p3) == "(12)");
}

TEST_CASE("phi is a homomorphism and the index part of the action equals the S3 x S3 action") {
  const auto &G = enumerate_group(GroupKind::G);
  for (std::size_t k = 0; k < G.size(); k += 7)
    for (std::size_t m = 0; m < G.size(); m += 5) {
      const auto [lg, pg] = phi(G[k]);
      const auto [lh, ph] = phi(G[m]);
      const auto [lgh, pgh] = phi(G[k] * G[m]);
      CHECK(lgh == perm_compose(lg, lh));
      CHECK(pgh == perm_compose(pg, ph));
    }
  for (const auto &g : G)
    for (int code = 0; code < BasisIndex::count; code += 11) {
      const BasisIndex a = BasisIndex::decode(code);
      const auto [lines, positions] = phi(g);
      CHECK(act_on_index(g, a).image == act_s3xs3(lines, positions, a));
    }
}

TEST_CASE("action on indices") {
  const BasisIndex a = parse_index("12,23,31");
  CHECK(act_on_index(kSigma, a).image == parse_index("31,12,23"));
  CHECK(act_on_index(kSigma, a).sign == 1);
  const GroupElement c = el("a=(perm=(),signs=-+-);b=1");
  CHECK(act_on_index(c, parse_index("11,11,11")).sign == 1);
  CHECK(act_on_index(c, parse_index("12,11,11")).sign == -1);
}

TEST_CASE("the action is a group action, signs included") {
  std::mt19937 rng(1);
  const Tensor t = testing::random_tensor(rng, 60);
  const auto &G = enumerate_group(GroupKind::G);
  for (std::size_t k = 0; k < G.size(); k += 5)
    for (std::size_t m = 0; m < G.size(); m += 3)
      CHECK(act_on_tensor(G[k] * G[m], t) == act_on_tensor(G[k], act_on_tensor(G[m], t)));
}

TEST_CASE("even indices are permuted with sign +1") {
  for (const auto &g : enumerate_group(GroupKind::G))
    for (int code = 0; code < BasisIndex::count; ++code) {
      const BasisIndex a = BasisIndex::decode(code);
      if (index_is_even(a))
        CHECK(act_on_index(g, a).sign == 1);
    }
}

TEST_CASE("non-even basis tensors sum to zero over G") {
  for (int code = 0; code < BasisIndex::count; ++code) {
    const BasisIndex a = BasisIndex::decode(code);
    if (index_is_even(a))
      continue;
    Tensor s;
    for (const auto &g : enumerate_group(GroupKind::G))
      s += act_on_tensor(g, Tensor::basis(a));
    CHECK(s.empty());
  }
}

TEST_CASE("-E acts trivially") {
  std::mt19937 rng(4);
  const Tensor t = testing::random_tensor(rng);
  const GroupElement minus_e = el("a=(perm=(),signs=---);b=1");
  CHECK(act_on_tensor(minus_e, t) == t);
}

TEST_CASE("action on tensors") {
  const Tensor T = matmul_tensor();
  for (const auto &g : enumerate_group(GroupKind::G))
    CHECK(act_on_tensor(g, T) == T);
  const FactorMatrix x = kappa(), y = tau(), z = eta();
  CHECK(act_on_tensor(kSigma, tensor_from_factors(x, y, z)) == tensor_from_factors(z, x, y));
  CHECK(act_on_tensor(kRho, tensor_from_factors(eta(), eta_bar(), delta())) ==
        tensor_from_factors(eta_bar(), eta(), delta()));
  // factor-level and tensor-level actions agree
  const FactorTriple tr = family(38).triple(0);
  for (const auto &g : enumerate_group(GroupKind::G))
    CHECK(act_on_factors(g, tr).expand() == act_on_tensor(g, tr.expand()));
}

TEST_CASE("orbits and stabilizers") {
  const Tensor d3 = tensor_from_factors(delta(), delta(), delta());
  CHECK(orbit_of(d3).size() == 1);
  const auto eta_orbit = orbit_of(tensor_from_factors(eta(), eta(), eta()));
  CHECK(eta_orbit.size() == 2);
  const std::set<Tensor> expected{tensor_from_factors(eta(), eta(), eta()), tensor_from_factors(eta_bar(), eta_bar(), eta_bar())};
  CHECK(std::set<Tensor>(eta_orbit.begin(), eta_orbit.end()) == expected);
  const FactorMatrix e33 = FactorMatrix::unit(3, 3);
  CHECK(orbit_of(tensor_from_factors(e33, e33, e33)).size() == 3);
  CHECK(stabilizer_order(matmul_tensor()) == 144);
  CHECK(stabilizer_order(d3) == 144);
  CHECK(stabilizer_order(family_tensor(4)) == 24);
}

TEST_CASE("permutations") {
  CHECK(perm_to_cycles(perm_identity()) == "1");
  CHECK(perm_from_cycles("(12)(3)") == Perm{1, 0, 2});
  CHECK(perm_from_cycles("()") == perm_identity());
  CHECK(perm_sign(perm_from_cycles("(123)")) == 1);
  CHECK(perm_sign(perm_from_cycles("(13)")) == -1);
  const Perm p = perm_from_cycles("(132)");
  CHECK(perm_compose(p, perm_inverse(p)) == perm_identity());
  CHECK_THROWS_AS(perm_from_cycles("(11)"), ParseError);
}
