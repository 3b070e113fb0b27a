#include "invmm/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "invmm/errors.hpp"

namespace invmm {

Perm perm_identity() { return {0, 1, 2}; }

Perm perm_compose(const Perm &f, const Perm &g) {
  return {f[g[0]], f[g[1]], f[g[2]]};
}

Perm perm_inverse(const Perm &p) {
  Perm q{};
  for (std::uint8_t k = 0; k < 3; ++k)
    q[p[k]] = k;
  return q;
}

int perm_sign(const Perm &p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      inversions += p[i] > p[j];
  return inversions % 2 == 0 ? 1 : -1;
}

std::string perm_to_cycles(const Perm &p) {
  std::string s;
  std::array<bool, 3> seen{};
  for (int start = 0; start < 3; ++start) {
    if (seen[start] || p[start] == start)
      continue;
    s += '(';
    for (int k = start; !seen[k]; k = p[k]) {
      seen[k] = true;
      s += static_cast<char>('1' + k);
    }
    s += ')';
  }
  return s.empty() ? "1" : s;
}

Perm perm_from_cycles(const std::string &text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      t += ch;
  Perm p = perm_identity();
  if (t == "1" || t.empty())
    return p;
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] != '(')
      throw ParseError("bad permutation '" + text + "'");
    const auto close = t.find(')', pos);
    if (close == std::string::npos)
      throw ParseError("bad permutation '" + text + "'");
    std::vector<int> cycle;
    for (auto k = pos + 1; k < close; ++k) {
      const int v = t[k] - '1';
      if (v < 0 || v > 2 || std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw ParseError("bad permutation '" + text + "'");
      cycle.push_back(v);
    }
    Perm c = perm_identity();
    for (std::size_t k = 0; k < cycle.size(); ++k)
      c[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    // cycles are written left to right and composed as disjoint cycles
    p = perm_compose(p, c);
    pos = close + 1;
  }
  return p;
}

int MonomialMatrix::det() const { return perm_sign(perm) * signs[0] * signs[1] * signs[2]; }

FactorMatrix MonomialMatrix::matrix() const {
  FactorMatrix m;
  for (int j = 0; j < 3; ++j)
    m.at(perm[j] + 1, j + 1) = Polynomial(signs[perm[j]]);
  return m;
}

MonomialMatrix operator*(const MonomialMatrix &x, const MonomialMatrix &y) {
  // c1 pi1 c2 pi2 = c1 (pi1 c2 pi1^-1) pi1 pi2
  MonomialMatrix r;
  r.perm = perm_compose(x.perm, y.perm);
  for (int j = 0; j < 3; ++j)
    r.signs[x.perm[j]] = static_cast<std::int8_t>(x.signs[x.perm[j]] * y.signs[j]);
  return r;
}

Perm FactorPerm::positions() const {
  const Perm cyc{1, 2, 0};
  const Perm swap{1, 0, 2};
  Perm p = perm_identity();
  for (int k = 0; k < sigma; ++k)
    p = perm_compose(cyc, p);
  if (rho)
    p = perm_compose(swap, p);
  return p;
}

FactorPerm operator*(const FactorPerm &x, const FactorPerm &y) {
  // sigma^k rho = rho sigma^-k
  const int moved = y.rho ? (3 - x.sigma) % 3 : x.sigma;
  return {static_cast<std::uint8_t>((x.rho + y.rho) % 2), static_cast<std::uint8_t>((moved + y.sigma) % 3)};
}

std::string to_string(const FactorPerm &b) {
  std::string s;
  if (b.rho)
    s = "rho";
  if (b.sigma) {
    if (!s.empty())
      s += '*';
    s += b.sigma == 1 ? "sigma" : "sigma^2";
  }
  return s.empty() ? "1" : s;
}

FactorPerm parse_factor_perm(const std::string &text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      t += ch;
  if (t.empty())
    throw ParseError("empty word for b");
  FactorPerm r;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    auto star = t.find('*', pos);
    if (star == std::string::npos)
      star = t.size();
    std::string tok = t.substr(pos, star - pos);
    int power = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      const std::string digits = tok.substr(caret + 1);
      if (digits.empty() || digits.size() > 3 ||
          !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw ParseError("bad exponent in '" + text + "'");
      power = std::stoi(digits);
      tok = tok.substr(0, caret);
    }
    FactorPerm gen;
    if (tok == "rho")
      gen = FactorPerm::make_rho();
    else if (tok == "sigma")
      gen = FactorPerm::make_sigma();
    else if (tok != "1")
      throw ParseError("bad word for b '" + text + "'");
    for (int k = 0; k < power; ++k)
      r = r * gen;
    pos = star + 1;
  }
  return r;
}

std::string to_string(const GroupElement &g) {
  std::string signs;
  for (auto s : g.a.signs)
    signs += s > 0 ? '+' : '-';
  std::string perm = perm_to_cycles(g.a.perm);
  if (perm == "1")
    perm = "()";
  return "a=(perm=" + perm + ",signs=" + signs + ");b=" + to_string(g.b);
}

GroupElement parse_group_element(const std::string &text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      t += ch;
  auto fail = [&]() -> GroupElement { throw ParseError("bad group element '" + text + "'"); };
  const std::string head = "a=(perm=";
  if (t.rfind(head, 0) != 0)
    return fail();
  const auto comma = t.find(",signs=", head.size());
  if (comma == std::string::npos)
    return fail();
  const auto tail = t.find(");b=", comma);
  if (tail == std::string::npos)
    return fail();
  GroupElement g;
  g.a.perm = perm_from_cycles(t.substr(head.size(), comma - head.size()));
  const std::string signs = t.substr(comma + 7, tail - comma - 7);
  if (signs.size() != 3)
    return fail();
  for (int k = 0; k < 3; ++k) {
    if (signs[k] == '+')
      g.a.signs[k] = 1;
    else if (signs[k] == '-')
      g.a.signs[k] = -1;
    else
      return fail();
  }
  g.b = parse_factor_perm(t.substr(tail + 4));
  return g;
}

namespace {

std::vector<GroupElement> build_group(bool require_det_one) {
  std::vector<GroupElement> out;
  Perm p = perm_identity();
  do {
    for (int bits = 0; bits < 8; ++bits) {
      MonomialMatrix a;
      a.perm = p;
      for (int k = 0; k < 3; ++k)
        a.signs[k] = (bits >> (2 - k)) & 1 ? -1 : 1;
      if (require_det_one && a.det() != 1)
        continue;
      for (std::uint8_t r = 0; r < 2; ++r)
        for (std::uint8_t k = 0; k < 3; ++k)
          out.push_back({a, {r, k}});
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace

const std::vector<GroupElement> &enumerate_group(GroupKind which) {
  static const std::vector<GroupElement> g = build_group(true);
  static const std::vector<GroupElement> g1 = build_group(false);
  return which == GroupKind::G ? g : g1;
}

std::vector<GroupElement> diagonal_subgroup() {
  std::vector<GroupElement> out;
  for (const auto &g : enumerate_group(GroupKind::G))
    if (g.a.perm == perm_identity() && g.b == FactorPerm{})
      out.push_back(g);
  return out;
}

std::pair<Perm, Perm> phi(const GroupElement &g) { return {g.a.perm, g.b.positions()}; }

namespace {

BasisIndex apply_sigma(const BasisIndex &a) { return {{{a.pairs[2], a.pairs[0], a.pairs[1]}}}; }

BasisIndex apply_rho(const BasisIndex &a) {
  auto t = [](const std::pair<int, int> &p) { return std::pair<int, int>{p.second, p.first}; };
  return {{{t(a.pairs[1]), t(a.pairs[0]), t(a.pairs[2])}}};
}

BasisIndex apply_word(const FactorPerm &b, BasisIndex a) {
  for (int k = 0; k < b.sigma; ++k)
    a = apply_sigma(a);
  if (b.rho)
    a = apply_rho(a);
  return a;
}

BasisIndex relabel(const Perm &p, BasisIndex a) {
  for (auto &[i, j] : a.pairs) {
    i = p[i - 1] + 1;
    j = p[j - 1] + 1;
  }
  return a;
}

} // namespace

BasisIndex act_s3xs3(const Perm &lines, const Perm &positions, const BasisIndex &a) {
  for (std::uint8_t r = 0; r < 2; ++r)
    for (std::uint8_t k = 0; k < 3; ++k) {
      const FactorPerm b{r, k};
      if (b.positions() == positions)
        return relabel(lines, apply_word(b, a));
    }
  throw Error("unreachable: positions not in S3"); // every permutation of 3 points is some rho^r sigma^k
}

SignedIndexMap act_on_index(const GroupElement &g, const BasisIndex &a) {
  SignedIndexMap out;
  out.image = relabel(g.a.perm, apply_word(g.b, a));
  int sign = 1;
  for (const auto &[i, j] : out.image.pairs)
    sign *= g.a.signs[i - 1] * g.a.signs[j - 1];
  out.sign = sign;
  return out;
}

Tensor act_on_tensor(const GroupElement &g, const Tensor &t) {
  Tensor r;
  for (const auto &[code, c] : t.entries()) {
    const auto m = act_on_index(g, BasisIndex::decode(code));
    r.add(m.image, m.sign > 0 ? c : -c);
  }
  return r;
}

FactorTriple act_on_factors(const GroupElement &g, const FactorTriple &t) {
  FactorTriple r = t;
  for (int k = 0; k < g.b.sigma; ++k)
    r = {r.z, r.x, r.y};
  if (g.b.rho)
    r = {r.y.transpose(), r.x.transpose(), r.z.transpose()};
  const FactorMatrix a = g.a.matrix();
  const FactorMatrix a_inv = a.transpose(); // signed permutation matrices are orthogonal
  return {a * r.x * a_inv, a * r.y * a_inv, a * r.z * a_inv};
}

std::vector<Tensor> orbit_of(const Tensor &t) {
  std::vector<Tensor> out;
  std::set<Tensor> seen;
  for (const auto &g : enumerate_group(GroupKind::G)) {
    Tensor img = act_on_tensor(g, t);
    if (seen.insert(img).second)
      out.push_back(std::move(img));
  }
  return out;
}

std::vector<FactorTriple> orbit_of_factors(const FactorTriple &t) {
  std::vector<FactorTriple> out;
  std::set<Tensor> seen;
  for (const auto &g : enumerate_group(GroupKind::G)) {
    FactorTriple img = act_on_factors(g, t);
    if (seen.insert(img.expand()).second)
      out.push_back(std::move(img));
  }
  return out;
}

int stabilizer_order(const Tensor &t) {
  int n = 0;
  for (const auto &g : enumerate_group(GroupKind::G))
    n += act_on_tensor(g, t) == t;
  return n;
}

} // namespace invmm
