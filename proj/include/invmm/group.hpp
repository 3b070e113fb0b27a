#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "invmm/tensor.hpp"

namespace invmm {

/// Permutation of {0,1,2}: perm[k] is the image of k.
using Perm = std::array<std::uint8_t, 3>;

Perm perm_identity();
Perm perm_compose(const Perm &f, const Perm &g); // f after g
Perm perm_inverse(const Perm &p);
int perm_sign(const Perm &p);
/// Cycle notation on {1,2,3}: "(123)", "(12)", "1" for the identity.
std::string perm_to_cycles(const Perm &p);
/// Accepts "(123)", "(1 2)", "(12)(3)", "()" and "1".
Perm perm_from_cycles(const std::string &text);

/*
 * Signed permutation matrix c * pi_hat with c = diag(signs) and
 * pi_hat e_j = e_{pi(j)}. Conjugation sends e_ij to
 * signs[pi i] * signs[pi j] * e_{pi i, pi j}.
 */
struct MonomialMatrix {
  Perm perm = perm_identity();
  std::array<std::int8_t, 3> signs{1, 1, 1};

  int det() const;
  FactorMatrix matrix() const;
  friend MonomialMatrix operator*(const MonomialMatrix &x, const MonomialMatrix &y);
  friend auto operator<=>(const MonomialMatrix &, const MonomialMatrix &) = default;
};

/// Element rho^r sigma^k of B = <rho, sigma>, with rho sigma = sigma^-1 rho.
struct FactorPerm {
  std::uint8_t rho = 0;   // 0 or 1
  std::uint8_t sigma = 0; // 0, 1 or 2

  static FactorPerm make_rho() { return {1, 0}; }
  static FactorPerm make_sigma() { return {0, 1}; }

  /// Permutation of the three tensor factors (sigma -> (123), rho -> (12)).
  Perm positions() const;
  friend FactorPerm operator*(const FactorPerm &x, const FactorPerm &y);
  friend auto operator<=>(const FactorPerm &, const FactorPerm &) = default;
};

/// Normal form word: "1", "sigma", "sigma^2", "rho", "rho*sigma", "rho*sigma^2".
std::string to_string(const FactorPerm &b);
/// Any '*'-separated word in rho, sigma (optionally with ^k) or "1".
FactorPerm parse_factor_perm(const std::string &text);

/// Element (a, b) of G1 = A1 x B; it lies in G when det(a) = 1.
struct GroupElement {
  MonomialMatrix a;
  FactorPerm b;

  bool in_G() const { return a.det() == 1; }
  friend GroupElement operator*(const GroupElement &x, const GroupElement &y) {
    return {x.a * y.a, x.b * y.b};
  }
  friend auto operator<=>(const GroupElement &, const GroupElement &) = default;
};

/// `a=(perm=(123),signs=+--);b=rho*sigma`
std::string to_string(const GroupElement &g);
GroupElement parse_group_element(const std::string &text);

enum class GroupKind { G, G1 };

/// All elements in canonical order (permutation, sign vector, word); cached.
const std::vector<GroupElement> &enumerate_group(GroupKind which);

/// Diagonal sign subgroup C of G (det = 1).
std::vector<GroupElement> diagonal_subgroup();

/// phi(g) = (line permutation of a, factor permutation of b).
std::pair<Perm, Perm> phi(const GroupElement &g);

/// The S3 x S3 action on basis indices: relabel by `lines`, move and transpose pairs by `positions`.
BasisIndex act_s3xs3(const Perm &lines, const Perm &positions, const BasisIndex &a);

struct SignedIndexMap {
  BasisIndex image;
  int sign = 1;
};

/// g e_alpha = sign * e_beta.
SignedIndexMap act_on_index(const GroupElement &g, const BasisIndex &a);
Tensor act_on_tensor(const GroupElement &g, const Tensor &t);

/// x (x) y (x) z as three factor matrices.
struct FactorTriple {
  FactorMatrix x, y, z;
  Tensor expand() const { return tensor_from_factors(x, y, z); }
};

/// The group action at the matrix level: T(a), rho and sigma on factor triples.
FactorTriple act_on_factors(const GroupElement &g, const FactorTriple &t);

/// Distinct images g t, g in G, in order of first appearance.
std::vector<Tensor> orbit_of(const Tensor &t);
/// Distinct images of a decomposable tensor, keeping one factor triple per image.
std::vector<FactorTriple> orbit_of_factors(const FactorTriple &t);
int stabilizer_order(const Tensor &t);

} // namespace invmm
