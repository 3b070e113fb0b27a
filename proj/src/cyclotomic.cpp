#include "invmm/cyclotomic.hpp"

#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "invmm/errors.hpp"

namespace invmm {

Rational make_rational(long num, long den) {
  if (den == 0)
    throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string &text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw ParseError("bad rational literal '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational &q) { return q.get_str(); }

Cyclotomic Cyclotomic::zeta() { return Cyclotomic(Coords{-1, 0, 1, 0}); }
Cyclotomic Cyclotomic::zeta_bar() { return Cyclotomic(Coords{0, 0, -1, 0}); }
Cyclotomic Cyclotomic::imag() { return Cyclotomic(Coords{0, 0, 0, 1}); }
Cyclotomic Cyclotomic::root12() { return Cyclotomic(Coords{0, 1, 0, 0}); }

bool Cyclotomic::is_zero() const {
  for (const auto &c : coords_)
    if (sgn(c) != 0)
      return false;
  return true;
}

bool Cyclotomic::is_one() const { return coords_[0] == 1 && is_rational(); }

bool Cyclotomic::is_rational() const {
  return sgn(coords_[1]) == 0 && sgn(coords_[2]) == 0 && sgn(coords_[3]) == 0;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto &c : r.coords_)
    c = -c;
  return r;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &y) {
  for (int k = 0; k < 4; ++k)
    coords_[k] += y.coords_[k];
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &y) {
  for (int k = 0; k < 4; ++k)
    coords_[k] -= y.coords_[k];
  return *this;
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &y) {
  *this = *this * y;
  return *this;
}

Cyclotomic operator*(const Cyclotomic &x, const Cyclotomic &y) {
  if (x.is_rational()) {
    Cyclotomic r = y;
    for (auto &c : r.coords_)
      c *= x.coords_[0];
    return r;
  }
  if (y.is_rational()) {
    Cyclotomic r = x;
    for (auto &c : r.coords_)
      c *= y.coords_[0];
    return r;
  }
  std::array<Rational, 7> p{};
  for (int a = 0; a < 4; ++a) {
    if (sgn(x.coords_[a]) == 0)
      continue;
    for (int b = 0; b < 4; ++b)
      p[a + b] += x.coords_[a] * y.coords_[b];
  }
  // w^4 = w^2 - 1, w^5 = w^3 - w, w^6 = -1
  Cyclotomic r;
  r.coords_[0] = p[0] - p[4] - p[6];
  r.coords_[1] = p[1] - p[5];
  r.coords_[2] = p[2] + p[4];
  r.coords_[3] = p[3] + p[5];
  return r;
}

Cyclotomic operator/(const Cyclotomic &x, const Cyclotomic &y) { return x * y.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero())
    throw DivisionByZero();
  if (is_rational())
    return Cyclotomic(Rational(1) / coords_[0]);

  // Solve M y = e_0 where column k of M holds the coordinates of x * w^k.
  std::array<std::array<Rational, 5>, 4> m{};
  Cyclotomic col = *this;
  for (int k = 0; k < 4; ++k) {
    for (int row = 0; row < 4; ++row)
      m[row][k] = col.coords_[row];
    col *= root12();
  }
  m[0][4] = 1;
  for (int piv = 0; piv < 4; ++piv) {
    int r = piv;
    while (sgn(m[r][piv]) == 0)
      ++r; // x != 0 so multiplication by x is invertible
    std::swap(m[r], m[piv]);
    const Rational lead = m[piv][piv];
    for (auto &v : m[piv])
      v /= lead;
    for (int row = 0; row < 4; ++row) {
      if (row == piv || sgn(m[row][piv]) == 0)
        continue;
      const Rational f = m[row][piv];
      for (int k = 0; k < 5; ++k)
        m[row][k] -= f * m[piv][k];
    }
  }
  Cyclotomic y;
  for (int k = 0; k < 4; ++k)
    y.coords_[k] = m[k][4];
  return y;
}

Cyclotomic Cyclotomic::conj() const {
  static const Cyclotomic w_bar(Coords{0, 1, 0, -1});
  Cyclotomic r(coords_[0]);
  Cyclotomic power = w_bar;
  for (int k = 1; k < 4; ++k) {
    if (sgn(coords_[k]) != 0)
      r += Cyclotomic(coords_[k]) * power;
    power *= w_bar;
  }
  return r;
}

std::strong_ordering operator<=>(const Cyclotomic &x, const Cyclotomic &y) {
  for (int k = 0; k < 4; ++k) {
    const int c = cmp(x.coords_[k], y.coords_[k]);
    if (c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

// Coordinates in {1, z, i, i*z}.
std::array<std::pair<Rational, const char *>, 4> display_basis(const Cyclotomic &x) {
  const auto &c = x.coords();
  return {{{c[0] + c[2], ""}, {c[2], "z"}, {c[3], "i"}, {-c[1], "i*z"}}};
}

void append_term(std::ostringstream &os, const Rational &q, const char *name, bool first) {
  Rational mag = abs(q);
  if (first) {
    if (sgn(q) < 0)
      os << '-';
  } else {
    os << (sgn(q) < 0 ? " - " : " + ");
  }
  if (*name == '\0') {
    os << mag.get_str();
  } else if (mag == 1) {
    os << name;
  } else {
    os << mag.get_str() << '*' << name;
  }
}

} // namespace

std::string to_string(const Cyclotomic &x) {
  if (x.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[q, name] : display_basis(x)) {
    if (sgn(q) == 0)
      continue;
    append_term(os, q, name, first);
    first = false;
  }
  return os.str();
}

bool is_single_term(const Cyclotomic &x) {
  int n = 0;
  for (const auto &[q, name] : display_basis(x))
    n += sgn(q) != 0;
  return n <= 1;
}

std::string to_w_string(const Cyclotomic &x) {
  if (x.is_zero())
    return "0";
  static const char *names[] = {"", "w", "w^2", "w^3"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (sgn(x.coord(k)) == 0)
      continue;
    append_term(os, x.coord(k), names[k], first);
    first = false;
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Cyclotomic &x) { return os << to_string(x); }

} // namespace invmm
