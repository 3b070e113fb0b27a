#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "invmm/cyclotomic.hpp"

namespace invmm {

/*
 * A polynomial variable.
 *
 * Orbit parameters carry one of the letters a, b, c, d, f, g and the 0-based
 * slot of the orbit they belong to (`a`, `b2`, ...). Brent factor coordinates
 * carry letter x, y or z, the 1-based term number as slot and the matrix
 * position as entry 1..9 (`x3_12` is entry (1,2) of the x-factor of term 3).
 */
struct Var {
  std::uint32_t slot = 0;
  char letter = 'a';
  std::uint8_t entry = 0;

  static Var param(char letter, std::uint32_t slot = 0);
  static Var factor(char which, std::uint32_t term, int row, int col);

  bool is_param() const { return entry == 0; }
  int row() const { return (entry - 1) / 3 + 1; }
  int col() const { return (entry - 1) % 3 + 1; }

  friend auto operator<=>(const Var &, const Var &) = default;
};

std::string to_string(const Var &v);
/// Parses a variable name; throws ParseError for anything else.
Var parse_var(const std::string &name);
bool is_param_letter(char c);

/// Sorted (variable, exponent) pairs; exponents are positive.
using Monomial = std::vector<std::pair<Var, std::uint32_t>>;

std::uint32_t degree(const Monomial &m);
Monomial operator*(const Monomial &x, const Monomial &y);

/// Graded lexicographic order; "less" means "printed first".
struct GrlexOrder {
  bool operator()(const Monomial &x, const Monomial &y) const;
};

class Polynomial {
public:
  using Terms = std::map<Monomial, Cyclotomic, GrlexOrder>;

  Polynomial() = default;
  Polynomial(Cyclotomic c);
  Polynomial(long n) : Polynomial(Cyclotomic(n)) {}
  static Polynomial variable(const Var &v);
  static Polynomial param(char letter, std::uint32_t slot = 0) { return variable(Var::param(letter, slot)); }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Cyclotomic constant() const;
  std::set<Var> variables() const;
  std::size_t size() const { return terms_.size(); }

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &q);
  Polynomial &operator-=(const Polynomial &q);
  Polynomial &operator*=(const Polynomial &q);
  Polynomial &operator*=(const Cyclotomic &c);

  friend Polynomial operator+(Polynomial p, const Polynomial &q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial &q) { return p -= q; }
  friend Polynomial operator*(const Polynomial &p, const Polynomial &q);
  friend Polynomial operator*(Polynomial p, const Cyclotomic &c) { return p *= c; }
  friend Polynomial operator*(const Cyclotomic &c, Polynomial p) { return p *= c; }

  Polynomial pow(unsigned k) const;

  /// Replaces the assigned variables; the rest stay symbolic.
  Polynomial substitute(const std::map<Var, Cyclotomic> &assignment) const;
  /// Replaces variables by polynomials.
  Polynomial compose(const std::map<Var, Polynomial> &assignment) const;
  /// Moves every orbit parameter to the given slot.
  Polynomial with_slot(std::uint32_t slot) const;

  friend bool operator==(const Polynomial &p, const Polynomial &q) { return p.terms_ == q.terms_; }
  friend std::strong_ordering operator<=>(const Polynomial &p, const Polynomial &q);

private:
  void add_term(const Monomial &m, const Cyclotomic &c);
  Terms terms_;
};

/// True iff p - q is the zero polynomial.
bool coeff_diff_is_zero(const Polynomial &p, const Polynomial &q);

struct PrintOptions {
  /// Print coefficients as polynomials in `w` instead of the {1, z, i, i*z} basis.
  bool w_basis = false;
  std::function<std::string(const Var &)> var_name;
};

std::string to_string(const Polynomial &p, const PrintOptions &opts = {});

/*
 * Polynomial grammar:
 *
 *   expr   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := atom ['^' digits]
 *   atom   := digits | name | '(' expr ')'
 *
 * Names `z`, `zb`, `i`, `w` are the field constants zeta, conj(zeta), sqrt(-1)
 * and the primitive 12th root of unity; every other name must be a variable.
 * Division is allowed only by non-zero constants. Whitespace is ignored.
 */
Polynomial parse_polynomial(const std::string &text);
/// Parses a constant expression such as `-3/2`, `2*i` or `1 + z`.
Cyclotomic parse_cyclotomic(const std::string &text);

} // namespace invmm
