#pragma once

#include <map>
#include <string>
#include <vector>

#include "invmm/group.hpp"
#include "invmm/prover.hpp"

namespace invmm {

enum class SystemMode { Generic, Invariant };

/// `lhs = rhs`; the label names the tensor index (`11,12,21`) or gamma coordinate (`g9`).
struct BrentEquation {
  std::string label;
  Polynomial lhs;
  Cyclotomic rhs;

  friend bool operator==(const BrentEquation &, const BrentEquation &) = default;
};

struct BrentSystem {
  SystemMode mode = SystemMode::Generic;
  int rank = 0;          // generic mode
  TypeMultiset multiset; // invariant mode
  std::vector<Var> variables;
  std::vector<BrentEquation> equations;

  friend bool operator==(const BrentSystem &, const BrentSystem &) = default;
};

/// 729 equations sum_j x^(j)_{i1 j1} y^(j)_{i2 j2} z^(j)_{i3 j3} = T_alpha in 27 * rank unknowns.
BrentSystem generic_system(int rank);

/// 12 equations: the gamma coordinates of the summed orbit sums equal those of T.
BrentSystem invariant_system(const TypeMultiset &m);

using SolutionAssignment = std::map<Var, Cyclotomic>;

struct SolutionCheck {
  bool satisfied = false;
  std::vector<int> failing; // equation indices, ascending
};

/// Exact substitution of every equation; throws MissingVariable if a system variable is unassigned.
SolutionCheck check_solution(const BrentSystem &s, const SolutionAssignment &sol);

/// Values of the generic-system unknowns for an explicit list of rank-one terms.
SolutionAssignment assignment_from_factors(const std::vector<FactorTriple> &terms);
/// The 27 terms e_ij (x) e_jk (x) e_ki, ordered by (i, j, k).
std::vector<FactorTriple> trivial_decomposition();

enum class ExportFormat { Json, Text, M2 };

/// `json`, `text` or `m2`; throws UnknownFormat otherwise.
ExportFormat parse_export_format(const std::string &name);
std::string export_system(const BrentSystem &s, ExportFormat f);
BrentSystem parse_system_json(const std::string &text);

/// `{"x1_11": "1", "a1": "-z", ...}`
SolutionAssignment parse_assignment_json(const std::string &text);
std::string assignment_to_json(const SolutionAssignment &sol);

} // namespace invmm
