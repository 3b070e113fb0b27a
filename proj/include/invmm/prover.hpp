#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invmm/invariants.hpp"

namespace invmm {

/// A multiset of catalog family ids: the type of an invariant decomposition.
struct TypeMultiset {
  std::map<int, int> counts; // family id -> multiplicity

  int total_length() const;
  int size() const;
  bool contains(int id) const { return counts.count(id) != 0; }
  /// Members with repetition, longest orbit first, ties by id.
  std::vector<int> members() const;

  friend auto operator<=>(const TypeMultiset &, const TypeMultiset &) = default;
};

/// `{24, 9, 7}`
std::string to_string(const TypeMultiset &m);
/// Accepts `24,9,7` or `{24, 9, 7}`; throws ParseError on unknown ids.
TypeMultiset parse_multiset(const std::string &text);

/// Symbolic orbit sums l * p(w) of every family, in slot-0 parameters.
const std::map<int, GammaVector> &gamma_table();
/// Orbit sum of each orbit of the multiset with fresh parameters per slot (1-based, members() order).
std::vector<GammaVector> multiset_gamma(const TypeMultiset &m);

/// All multisets with 1 <= total length <= max_length, depth first over families sorted by (length, id).
std::vector<TypeMultiset> enumerate_multisets(int max_length);

/*
 * Global checks. Each returns the statements it verified and throws
 * ProofStepFailure naming the first identity that does not hold.
 */
std::vector<std::string> check_reducible_types();
std::vector<std::string> check_gamma_9_12();
std::vector<std::string> check_gamma_table();
std::vector<std::string> check_e11_12_21();
std::vector<std::string> check_gamma_3_eq_5();

/// Expected gamma9..gamma12 coordinates of the four long orbits checked against a reference table.
const std::map<std::pair<int, int>, std::string> &gamma_table_reference();

enum class Rule { ReducibleTypes, Gamma9to12, DiagonalOrGammaTable, E111221, Gamma3Eq5 };

std::string rule_name(Rule r);

struct EliminationCertificate {
  TypeMultiset multiset;
  Rule rule = Rule::Gamma3Eq5;
  std::vector<std::string> identities;
};

/// First applicable rule, or nothing for a survivor.
std::optional<EliminationCertificate> eliminate(const TypeMultiset &m);

struct TheoremReport {
  int max_length = 0;
  std::vector<std::pair<std::string, std::vector<std::string>>> checks; // check name, verified facts
  std::vector<std::string> notes;
  std::vector<EliminationCertificate> certificates;
  std::vector<TypeMultiset> survivors;
  int multiset_count = 0;

  bool verified() const { return survivors.empty(); }
  std::string summary() const;
};

TheoremReport verify_theorem(int max_length = 23);

std::string report_text(const TheoremReport &r);
std::string report_json(const TheoremReport &r);

} // namespace invmm
