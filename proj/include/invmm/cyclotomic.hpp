#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace invmm {

/// Arbitrary precision rational, always in lowest terms with positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string &text);
std::string to_string(const Rational &q);

/*
 * Element of the cyclotomic field Q(w), w = exp(2 pi i / 12).
 *
 * Stored as coordinates in the basis {1, w, w^2, w^3}; multiplication reduces
 * with w^4 = w^2 - 1 (the 12th cyclotomic polynomial is x^4 - x^2 + 1), so the
 * representation is unique and equality is coordinate equality.
 *
 *   zeta = w^4 = w^2 - 1   (primitive cube root of unity)
 *   i    = w^3
 */
class Cyclotomic {
public:
  using Coords = std::array<Rational, 4>;

  Cyclotomic() = default;
  Cyclotomic(long n) { coords_[0] = n; }
  Cyclotomic(Rational q) { coords_[0] = std::move(q); }
  explicit Cyclotomic(Coords c) : coords_(std::move(c)) {}

  static Cyclotomic zeta();
  static Cyclotomic zeta_bar();
  static Cyclotomic imag();
  static Cyclotomic root12();

  const Coords &coords() const { return coords_; }
  const Rational &coord(int k) const { return coords_[k]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic &operator+=(const Cyclotomic &y);
  Cyclotomic &operator-=(const Cyclotomic &y);
  Cyclotomic &operator*=(const Cyclotomic &y);

  friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic &y) { return x += y; }
  friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic &y) { return x -= y; }
  friend Cyclotomic operator*(const Cyclotomic &x, const Cyclotomic &y);
  friend Cyclotomic operator/(const Cyclotomic &x, const Cyclotomic &y);

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Cyclotomic inverse() const;
  /// Complex conjugation, w -> w^-1 = w - w^3.
  Cyclotomic conj() const;

  friend bool operator==(const Cyclotomic &x, const Cyclotomic &y) { return x.coords_ == y.coords_; }
  friend std::strong_ordering operator<=>(const Cyclotomic &x, const Cyclotomic &y);

private:
  Coords coords_{};
};

/*
 * Textual form. Printed in the basis {1, z, i, i*z} which is friendlier to
 * read than powers of w: 1 = 1, z = -1 + w^2, i = w^3, i*z = -w.
 */
std::string to_string(const Cyclotomic &x);
/// True when x prints as a single product `q*basis` (or just `q`/`basis`).
bool is_single_term(const Cyclotomic &x);
/// Coordinates in the basis {w^0, w^1, w^2, w^3}, rendered as a polynomial in `w`.
std::string to_w_string(const Cyclotomic &x);

std::ostream &operator<<(std::ostream &os, const Cyclotomic &x);

} // namespace invmm
