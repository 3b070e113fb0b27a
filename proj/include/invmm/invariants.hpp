#pragma once

#include <array>
#include <string>
#include <vector>

#include "invmm/tensor.hpp"

namespace invmm {

/// An S3 x S3 orbit Q_id on the even basis indices, numbered as in the reference table.
struct OrbitClass {
  int id = 0; // 1..12
  BasisIndex representative;
  std::vector<BasisIndex> members; // sorted by code

  std::size_t size() const { return members.size(); }
};

constexpr int kClassCount = 12;

/// Reference table: representative and size of Q_1..Q_12.
struct ClassTableRow {
  const char *representative;
  int size;
};
const std::array<ClassTableRow, kClassCount> &reference_class_table();

/*
 * Computes the classes by orbit closure and checks them against the reference
 * table; throws IntegrityError on any disagreement. Cached after the first call.
 */
const std::vector<OrbitClass> &compute_classes();

/// Class id 1..12 of an even index, 0 for a non-even one.
int class_of(const BasisIndex &a);

/// Coordinates of an invariant tensor in the basis gamma_1..gamma_12.
struct GammaVector {
  std::array<Polynomial, kClassCount> coords{};

  /// gamma index 1..12
  Polynomial &operator[](int i) { return coords[i - 1]; }
  const Polynomial &operator[](int i) const { return coords[i - 1]; }

  bool is_zero() const;
  GammaVector &operator+=(const GammaVector &o);
  friend GammaVector operator+(GammaVector x, const GammaVector &y) { return x += y; }
  GammaVector scaled(const Polynomial &c) const;
  GammaVector substitute(const std::map<Var, Cyclotomic> &assignment) const;
  GammaVector with_slot(std::uint32_t slot) const;

  friend bool operator==(const GammaVector &, const GammaVector &) = default;
};

/// `318*g1 + 214*g2 - 32*g4`; symbolic coordinates are parenthesized.
std::string to_string(const GammaVector &v);
GammaVector parse_gamma_vector(const std::string &text);

/// Sum of the coefficients of w over Q_i.
Polynomial r_sum(const Tensor &w, int class_id);
/// Reynolds projection: coordinate i is r_i(w) / |Q_i|.
GammaVector project(const Tensor &w);
/// (1/|G|) sum_g g w, by explicit summation over all 144 elements.
Tensor group_average(const Tensor &w);
Tensor gamma_to_tensor(const GammaVector &v);

enum class OrbitSumCheck { Formula, CrossCheck };

/*
 * l * p(w). With CrossCheck the orbit is also summed directly and compared;
 * OrbitSumMismatch signals that the actual orbit is shorter than l.
 */
GammaVector orbit_sum(const Tensor &w, int length, OrbitSumCheck check = OrbitSumCheck::Formula);

/// Sum of the distinct elements of the orbit of w.
Tensor direct_orbit_sum(const Tensor &w);

} // namespace invmm
