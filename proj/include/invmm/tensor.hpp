#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "invmm/polynomial.hpp"

namespace invmm {

/// Index ((i1,j1),(i2,j2),(i3,j3)) of the basis tensor e_{i1j1} (x) e_{i2j2} (x) e_{i3j3}; entries 1..3.
struct BasisIndex {
  std::array<std::pair<int, int>, 3> pairs{};

  static constexpr int count = 729;

  /// sum_k (i_k - 1) 3^(2k-1) + (j_k - 1) 3^(2k-2), k = 1..3.
  int encode() const;
  static BasisIndex decode(int code);

  friend auto operator<=>(const BasisIndex &, const BasisIndex &) = default;
};

/// Short form used in reports: "11,12,21".
std::string to_string(const BasisIndex &a);
/// Reads "11,12,21".
BasisIndex parse_index(const std::string &text);

/// Each of 1, 2, 3 occurs an even number of times among the six components.
bool index_is_even(const BasisIndex &a);
/// Diagonal triple ((i,i),(j,j),(k,k)).
bool index_is_diagonal(const BasisIndex &a);

/// Element of M with symbolic entries, row-major.
struct FactorMatrix {
  std::array<Polynomial, 9> entries{};

  Polynomial &at(int row, int col) { return entries[3 * (row - 1) + (col - 1)]; }
  const Polynomial &at(int row, int col) const { return entries[3 * (row - 1) + (col - 1)]; }

  static FactorMatrix unit(int row, int col);
  FactorMatrix transpose() const;

  FactorMatrix &operator+=(const FactorMatrix &o);
  friend FactorMatrix operator+(FactorMatrix x, const FactorMatrix &y) { return x += y; }
  friend FactorMatrix operator*(const Polynomial &s, FactorMatrix x);
  /// Matrix product.
  friend FactorMatrix operator*(const FactorMatrix &x, const FactorMatrix &y);

  friend bool operator==(const FactorMatrix &, const FactorMatrix &) = default;
};

/// Element of N = M (x) M (x) M, sparse over encoded basis indices.
class Tensor {
public:
  using Entries = std::map<int, Polynomial>;

  Tensor() = default;

  static Tensor basis(const BasisIndex &a, Polynomial coeff = Polynomial(1));

  const Entries &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Coefficient at a basis index (zero if absent).
  Polynomial at(const BasisIndex &a) const;
  void add(int code, const Polynomial &c);
  void add(const BasisIndex &a, const Polynomial &c) { add(a.encode(), c); }

  Tensor &operator+=(const Tensor &t);
  Tensor &operator-=(const Tensor &t);
  friend Tensor operator+(Tensor t, const Tensor &u) { return t += u; }
  friend Tensor operator-(Tensor t, const Tensor &u) { return t -= u; }

  Tensor scaled(const Polynomial &c) const;
  Tensor substitute(const std::map<Var, Cyclotomic> &assignment) const;

  friend bool operator==(const Tensor &, const Tensor &) = default;
  friend std::strong_ordering operator<=>(const Tensor &x, const Tensor &y);

private:
  Entries entries_;
};

/// x (x) y (x) z expanded on the standard basis.
Tensor tensor_from_factors(const FactorMatrix &x, const FactorMatrix &y, const FactorMatrix &z);

/// x (x) y (x) z -> y (x) x (x) z, without transposing.
Tensor pi12(const Tensor &t);

/// {"entries": [{"idx": [[i1,j1],[i2,j2],[i3,j3]], "coeff": "<polynomial>"}]} sorted by code.
std::string tensor_to_json(const Tensor &t, int indent = 2);
Tensor tensor_from_json(const std::string &text);

} // namespace invmm
