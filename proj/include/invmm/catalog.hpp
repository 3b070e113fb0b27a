#pragma once

#include <span>
#include <string>
#include <vector>

#include "invmm/group.hpp"
#include "invmm/tensor.hpp"

namespace invmm {

// Special elements of M.
FactorMatrix delta();     // e11 + e22 + e33
FactorMatrix kappa();     // sum of e_ij, i != j
FactorMatrix eta();       // e11 + z e22 + zb e33
FactorMatrix eta_bar();   // e11 + zb e22 + z e33
FactorMatrix tau();       // e12 + e23 + e31 - e21 - e32 - e13

/// sum_{i,j,k} e_ij (x) e_jk (x) e_ki
Tensor matmul_tensor();

/// w^(x)3, u^(x)2 (x) v, or u (x) v (x) w.
enum class FamilyShape { Cube, Square, Triple };

/*
 * One row of the orbit classification: a parameterized decomposable tensor
 * scale * (f1 (x) f2 (x) f3) with 1, 2 or 3 distinct factor templates,
 * written in the slot-0 parameters.
 */
struct OrbitFamily {
  int id = 0;
  int length = 0;
  std::vector<char> params;
  FamilyShape shape = FamilyShape::Triple;
  Polynomial scale = Polynomial(1);
  std::vector<FactorMatrix> factors;

  int param_count() const { return static_cast<int>(params.size()); }
  std::vector<Var> param_vars(std::uint32_t slot) const;

  /// Factor triple with fresh parameters at `slot`; the scale is folded into x.
  FactorTriple triple(std::uint32_t slot = 0) const;
  /// Factor triple with the parameters replaced by values; throws ArityError.
  FactorTriple triple(std::span<const Cyclotomic> values) const;
  Tensor tensor(std::uint32_t slot = 0) const { return triple(slot).expand(); }
  Tensor tensor(std::span<const Cyclotomic> values) const { return triple(values).expand(); }
};

/// Parses catalog JSON; throws ParseError or IntegrityError on malformed records.
std::vector<OrbitFamily> parse_catalog(const std::string &json_text);
/// The catalog shipped with the library (data/catalog.json), parsed once.
const std::vector<OrbitFamily> &catalog();
const std::string &catalog_json();
/// Family by id 1..44; throws ArityError on an unknown id.
const OrbitFamily &family(int id);

Tensor family_tensor(int id, std::uint32_t slot = 0);
Tensor family_tensor(int id, std::span<const Cyclotomic> values);

/// Families for which z w(p) = w(z p); all others satisfy z^3 w(p) = w(z p).
const std::vector<int> &linear_scaling_families();

struct FamilyCheck {
  int id = 0;
  int orbit_length = 0;
  int stabilizer = 0;
  bool pi12_fixed = false;
  bool linear_scaling = false;
};

/*
 * Recomputes, for every family with fresh symbolic parameters: orbit length
 * (must equal the declared length), stabilizer order (product 144), pi12
 * symmetry of the Cube and Square shapes, param count, and the scaling law.
 * Throws IntegrityError naming the first failing family.
 */
std::vector<FamilyCheck> verify_catalog();
FamilyCheck verify_family(const OrbitFamily &f);

} // namespace invmm
