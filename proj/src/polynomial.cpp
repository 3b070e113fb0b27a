#include "invmm/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "invmm/errors.hpp"

namespace invmm {

bool is_param_letter(char c) {
  switch (c) {
  case 'a': case 'b': case 'c': case 'd': case 'f': case 'g':
    return true;
  default:
    return false;
  }
}

Var Var::param(char letter, std::uint32_t slot) {
  if (!is_param_letter(letter))
    throw ParseError(std::string("bad parameter letter '") + letter + "'");
  return Var{slot, letter, 0};
}

Var Var::factor(char which, std::uint32_t term, int row, int col) {
  if (which != 'x' && which != 'y' && which != 'z')
    throw ParseError(std::string("bad factor letter '") + which + "'");
  if (row < 1 || row > 3 || col < 1 || col > 3 || term < 1)
    throw ParseError("bad factor coordinate");
  return Var{term, which, static_cast<std::uint8_t>(3 * (row - 1) + col)};
}

std::string to_string(const Var &v) {
  std::string s(1, v.letter);
  if (v.is_param()) {
    if (v.slot != 0)
      s += std::to_string(v.slot);
    return s;
  }
  s += std::to_string(v.slot);
  s += '_';
  s += static_cast<char>('0' + v.row());
  s += static_cast<char>('0' + v.col());
  return s;
}

namespace {

bool all_digits(const std::string &s, std::size_t from, std::size_t to) {
  if (from >= to)
    return false;
  for (std::size_t k = from; k < to; ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      return false;
  return true;
}

std::uint32_t to_u32(const std::string &s) {
  if (s.size() > 9)
    throw ParseError("index too large in '" + s + "'");
  return static_cast<std::uint32_t>(std::stoul(s));
}

} // namespace

Var parse_var(const std::string &name) {
  if (name.empty())
    throw ParseError("empty variable name");
  const char head = name[0];
  if (is_param_letter(head)) {
    if (name.size() == 1)
      return Var::param(head, 0);
    if (all_digits(name, 1, name.size()))
      return Var::param(head, to_u32(name.substr(1)));
  } else if (head == 'x' || head == 'y' || head == 'z') {
    const auto us = name.find('_');
    if (us != std::string::npos && all_digits(name, 1, us) && name.size() == us + 3 &&
        all_digits(name, us + 1, name.size())) {
      const int row = name[us + 1] - '0';
      const int col = name[us + 2] - '0';
      const auto term = to_u32(name.substr(1, us - 1));
      if (row >= 1 && row <= 3 && col >= 1 && col <= 3 && term >= 1)
        return Var::factor(head, term, row, col);
    }
  }
  throw ParseError("unknown name '" + name + "'");
}

std::uint32_t degree(const Monomial &m) {
  std::uint32_t d = 0;
  for (const auto &[v, e] : m)
    d += e;
  return d;
}

Monomial operator*(const Monomial &x, const Monomial &y) {
  Monomial r;
  r.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      r.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      r.push_back(*j++);
    } else {
      r.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

bool GrlexOrder::operator()(const Monomial &x, const Monomial &y) const {
  const auto dx = degree(x);
  const auto dy = degree(y);
  if (dx != dy)
    return dx > dy;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (i->first != j->first)
      return i->first < j->first; // x has the earlier variable, y lacks it
    if (i->second != j->second)
      return i->second > j->second;
    ++i;
    ++j;
  }
  return false; // equal degree and equal prefix means equal
}

Polynomial::Polynomial(Cyclotomic c) {
  if (!c.is_zero())
    terms_.emplace(Monomial{}, std::move(c));
}

Polynomial Polynomial::variable(const Var &v) {
  Polynomial p;
  p.terms_.emplace(Monomial{{v, 1}}, Cyclotomic(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Cyclotomic Polynomial::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Cyclotomic() : it->second;
}

std::set<Var> Polynomial::variables() const {
  std::set<Var> vs;
  for (const auto &[m, c] : terms_)
    for (const auto &[v, e] : m)
      vs.insert(v);
  return vs;
}

void Polynomial::add_term(const Monomial &m, const Cyclotomic &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto &[m, c] : r.terms_)
    c = -c;
  return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &q) {
  for (const auto &[m, c] : q.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &q) {
  for (const auto &[m, c] : q.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial &p, const Polynomial &q) {
  Polynomial r;
  for (const auto &[mp, cp] : p.terms_)
    for (const auto &[mq, cq] : q.terms_)
      r.add_term(mp * mq, cp * cq);
  return r;
}

Polynomial &Polynomial::operator*=(const Polynomial &q) {
  *this = *this * q;
  return *this;
}

Polynomial &Polynomial::operator*=(const Cyclotomic &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, coef] : terms_)
    coef *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r(1);
  for (unsigned n = 0; n < k; ++n)
    r *= *this;
  return r;
}

Polynomial Polynomial::substitute(const std::map<Var, Cyclotomic> &assignment) const {
  Polynomial r;
  for (const auto &[m, c] : terms_) {
    Cyclotomic coef = c;
    Monomial rest;
    for (const auto &[v, e] : m) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        rest.emplace_back(v, e);
        continue;
      }
      for (std::uint32_t n = 0; n < e; ++n)
        coef *= it->second;
    }
    r.add_term(rest, coef);
  }
  return r;
}

Polynomial Polynomial::compose(const std::map<Var, Polynomial> &assignment) const {
  Polynomial r;
  for (const auto &[m, c] : terms_) {
    Polynomial term(c);
    Monomial rest;
    for (const auto &[v, e] : m) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        rest.emplace_back(v, e);
      else
        term *= it->second.pow(e);
    }
    Polynomial mono;
    mono.terms_.emplace(rest, Cyclotomic(1));
    r += term * mono;
  }
  return r;
}

Polynomial Polynomial::with_slot(std::uint32_t slot) const {
  Polynomial r;
  for (const auto &[m, c] : terms_) {
    Monomial moved;
    for (const auto &[v, e] : m) {
      Var nv = v;
      if (nv.is_param())
        nv.slot = slot;
      moved.emplace_back(nv, e);
    }
    std::sort(moved.begin(), moved.end());
    // params from different slots may now coincide
    Monomial merged;
    for (const auto &[v, e] : moved) {
      if (!merged.empty() && merged.back().first == v)
        merged.back().second += e;
      else
        merged.emplace_back(v, e);
    }
    r.add_term(merged, c);
  }
  return r;
}

std::strong_ordering operator<=>(const Polynomial &p, const Polynomial &q) {
  GrlexOrder less;
  auto i = p.terms_.begin();
  auto j = q.terms_.begin();
  for (; i != p.terms_.end() && j != q.terms_.end(); ++i, ++j) {
    if (less(i->first, j->first))
      return std::strong_ordering::less;
    if (less(j->first, i->first))
      return std::strong_ordering::greater;
    if (auto c = i->second <=> j->second; c != 0)
      return c;
  }
  if (i == p.terms_.end())
    return j == q.terms_.end() ? std::strong_ordering::equal : std::strong_ordering::less;
  return std::strong_ordering::greater;
}

bool coeff_diff_is_zero(const Polynomial &p, const Polynomial &q) { return (p - q).is_zero(); }

std::string to_string(const Polynomial &p, const PrintOptions &opts) {
  if (p.is_zero())
    return "0";
  auto coef_text = [&](const Cyclotomic &c) { return opts.w_basis ? to_w_string(c) : to_string(c); };
  auto single = [&](const Cyclotomic &c) {
    if (!opts.w_basis)
      return is_single_term(c);
    int n = 0;
    for (const auto &q : c.coords())
      n += sgn(q) != 0;
    return n <= 1;
  };
  auto name = [&](const Var &v) { return opts.var_name ? opts.var_name(v) : to_string(v); };

  std::ostringstream os;
  bool first = true;
  const bool lone = p.size() == 1;
  for (const auto &[m, c] : p.terms()) {
    std::string mono;
    for (const auto &[v, e] : m) {
      if (!mono.empty())
        mono += '*';
      mono += name(v);
      if (e != 1)
        mono += '^' + std::to_string(e);
    }
    std::string coef = coef_text(c);
    bool negative = false;
    if (single(c) && coef[0] == '-') {
      negative = true;
      coef.erase(0, 1);
    } else if (!single(c) && !(lone && mono.empty())) {
      coef = "(" + coef + ")";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (mono.empty())
      os << coef;
    else if (coef == "1")
      os << mono;
    else
      os << coef << '*' << mono;
  }
  return os.str();
}

namespace {

class Parser {
public:
  explicit Parser(const std::string &text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected character");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial r;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    r = term();
    if (negate)
      r = -r;
    for (;;) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  Polynomial term() {
    Polynomial r = factor();
    for (;;) {
      if (accept('*')) {
        r *= factor();
      } else if (accept('/')) {
        Polynomial d = factor();
        if (!d.is_constant())
          fail("division by a non-constant");
        if (d.is_zero())
          throw DivisionByZero();
        r *= d.constant().inverse();
      } else {
        return r;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_ || pos_ - start > 4)
        fail("bad exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial r = expr();
      if (!accept(')'))
        fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      Rational q;
      q.set_str(text_.substr(start, pos_ - start), 10);
      return Polynomial(Cyclotomic(q));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (name == "z")
        return Polynomial(Cyclotomic::zeta());
      if (name == "zb")
        return Polynomial(Cyclotomic::zeta_bar());
      if (name == "i")
        return Polynomial(Cyclotomic::imag());
      if (name == "w")
        return Polynomial(Cyclotomic::root12());
      try {
        return Polynomial::variable(parse_var(name));
      } catch (const ParseError &) {
        pos_ = start;
        fail("unknown name '" + name + "'");
      }
    }
    fail("unexpected character");
  }

  const std::string &text_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string &text) { return Parser(text).parse(); }

Cyclotomic parse_cyclotomic(const std::string &text) {
  Polynomial p = parse_polynomial(text);
  if (!p.is_constant())
    throw ParseError("expected a constant, got '" + text + "'");
  return p.constant();
}

} // namespace invmm
