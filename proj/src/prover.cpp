#include "invmm/prover.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "invmm/brent.hpp"
#include "invmm/catalog.hpp"
#include "invmm/errors.hpp"

namespace invmm {

int TypeMultiset::total_length() const {
  int n = 0;
  for (const auto &[id, k] : counts)
    n += k * family(id).length;
  return n;
}

int TypeMultiset::size() const {
  int n = 0;
  for (const auto &[id, k] : counts)
    n += k;
  return n;
}

std::vector<int> TypeMultiset::members() const {
  std::vector<int> out;
  for (const auto &[id, k] : counts)
    out.insert(out.end(), k, id);
  std::stable_sort(out.begin(), out.end(), [](int x, int y) { return family(x).length > family(y).length; });
  return out;
}

std::string to_string(const TypeMultiset &m) {
  std::string s = "{";
  for (int id : m.members()) {
    if (s.size() > 1)
      s += ", ";
    s += std::to_string(id);
  }
  return s + "}";
}

TypeMultiset parse_multiset(const std::string &text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}')
      t += ch;
  TypeMultiset m;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.size() > 2 || !std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw ParseError("bad type list '" + text + "'");
    const int id = std::stoi(tok);
    if (id < 1 || id > static_cast<int>(catalog().size()))
      throw ParseError("no catalog family " + tok);
    ++m.counts[id];
  }
  if (m.counts.empty())
    throw ParseError("empty type list");
  return m;
}

const std::map<int, GammaVector> &gamma_table() {
  static const std::map<int, GammaVector> table = [] {
    std::map<int, GammaVector> t;
    for (const auto &f : catalog())
      t.emplace(f.id, orbit_sum(f.tensor(0), f.length));
    return t;
  }();
  return table;
}

std::vector<GammaVector> multiset_gamma(const TypeMultiset &m) {
  std::vector<GammaVector> out;
  std::uint32_t slot = 1;
  for (int id : m.members())
    out.push_back(gamma_table().at(id).with_slot(slot++));
  return out;
}

std::vector<TypeMultiset> enumerate_multisets(int max_length) {
  if (max_length < 1)
    throw DomainError("max length must be at least 1");
  std::vector<const OrbitFamily *> order;
  for (const auto &f : catalog())
    order.push_back(&f);
  std::stable_sort(order.begin(), order.end(),
                   [](const OrbitFamily *x, const OrbitFamily *y) { return x->length < y->length; });

  std::vector<TypeMultiset> out;
  TypeMultiset cur;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t from, int budget) {
    for (std::size_t k = from; k < order.size(); ++k) {
      const OrbitFamily &f = *order[k];
      if (f.length > budget)
        break; // sorted by length
      ++cur.counts[f.id];
      out.push_back(cur);
      dfs(k, budget - f.length);
      if (--cur.counts[f.id] == 0)
        cur.counts.erase(f.id);
    }
  };
  dfs(0, max_length);
  return out;
}

namespace {

const std::vector<int> kReducible{16, 18, 21, 25, 33, 42};
const std::vector<int> kReplaceable{4, 39, 43};
const std::vector<int> kGammaEqual{17, 22, 23, 26, 27, 28, 30, 31, 36, 37};
const std::vector<int> kGammaTable{24, 29, 32, 38};
constexpr int kE111221Family = 35;
constexpr int kMaxLength = 23;

bool in(const std::vector<int> &v, int id) { return std::find(v.begin(), v.end(), id) != v.end(); }

std::string w(int id) { return "w" + std::to_string(id); }
std::string g(int m) { return "g" + std::to_string(m); }

const GammaVector &T_gamma() {
  static const GammaVector v = project(matmul_tensor());
  return v;
}

/// c with p == c * q, if q is nonzero and such a constant exists.
std::optional<Cyclotomic> constant_ratio(const Polynomial &p, const Polynomial &q) {
  if (q.is_zero())
    return std::nullopt;
  const auto &[mono, qc] = *q.terms().begin();
  auto it = p.terms().find(mono);
  const Cyclotomic c = it == p.terms().end() ? Cyclotomic(0) : it->second / qc;
  if (p != q * c)
    return std::nullopt;
  return c;
}

Polynomial pa(char c) { return Polynomial::param(c); }

/// Per-family properties of the symbolic orbit sum, all decided exactly.
struct FamilyFacts {
  bool diag_only = false;   // zero outside g1, g2, g6
  bool delta_diag = false;  // g1 = g2 = g6
  bool g9_12_equal = false;
  bool g9_12_zero = false;
  bool g3_zero = false;
  bool g3_eq_g5 = false;
  // g9 = k9 a^2 d, g12 = k12 b^2 d, g10|b=0 = c10 * g9|b=0 with all constants nonzero
  bool chain = false;
  Cyclotomic k9, k12, c10;
};

FamilyFacts compute_facts(int id) {
  const GammaVector &v = gamma_table().at(id);
  FamilyFacts f;
  f.diag_only = true;
  for (int m = 1; m <= kClassCount; ++m)
    if (m != 1 && m != 2 && m != 6 && !v[m].is_zero())
      f.diag_only = false;
  f.delta_diag = v[1] == v[2] && v[2] == v[6];
  f.g9_12_equal = v[9] == v[10] && v[10] == v[11] && v[11] == v[12];
  f.g9_12_zero = f.g9_12_equal && v[9].is_zero();
  f.g3_zero = v[3].is_zero();
  f.g3_eq_g5 = v[3] == v[5];

  const auto k9 = constant_ratio(v[9], pa('a').pow(2) * pa('d'));
  const auto k12 = constant_ratio(v[12], pa('b').pow(2) * pa('d'));
  const std::map<Var, Cyclotomic> b0{{Var::param('b'), Cyclotomic(0)}};
  const auto c10 = constant_ratio(v[10].substitute(b0), v[9].substitute(b0));
  if (k9 && k12 && c10 && !k9->is_zero() && !k12->is_zero() && !c10->is_zero()) {
    f.chain = true;
    f.k9 = *k9;
    f.k12 = *k12;
    f.c10 = *c10;
  }
  return f;
}

const FamilyFacts &facts(int id) {
  static const std::map<int, FamilyFacts> all = [] {
    std::map<int, FamilyFacts> m;
    for (const auto &f : catalog())
      m.emplace(f.id, compute_facts(f.id));
    return m;
  }();
  return all.at(id);
}

void require(bool ok, const std::string &what) {
  if (!ok)
    throw ProofStepFailure(what);
}

std::string show(const Polynomial &p) { return to_string(p); }

std::string coords(const GammaVector &v, std::initializer_list<int> ms) {
  std::string s;
  for (int m : ms) {
    if (!s.empty())
      s += ", ";
    s += g(m) + " = " + show(v[m]);
  }
  return s;
}

Cyclotomic det3(const std::array<std::array<Cyclotomic, 3>, 3> &m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

GammaVector concrete_orbit_sum(int id, std::vector<Cyclotomic> values) {
  return orbit_sum(family_tensor(id, values), family(id).length, OrbitSumCheck::CrossCheck);
}

std::string id_list(const std::vector<int> &ids) {
  std::string s;
  for (int id : ids)
    s += (s.empty() ? "" : ", ") + std::to_string(id);
  return "{" + s + "}";
}

std::vector<int> ids_fitting(int budget) {
  std::vector<int> out;
  for (const auto &f : catalog())
    if (f.length <= budget)
      out.push_back(f.id);
  return out;
}

} // namespace

std::vector<std::string> check_reducible_types() {
  std::vector<std::string> out;
  const GammaVector s1 = concrete_orbit_sum(7, {1});
  const GammaVector s2 = concrete_orbit_sum(6, {1});
  const GammaVector s3 = concrete_orbit_sum(5, {0, 1});
  require(s1 == parse_gamma_vector("g1 + g2 + g6"), "orbit sum of w7(1) is " + to_string(s1));
  require(s2 == parse_gamma_vector("2*g1 - g2 + 2*g6"), "orbit sum of w6(1) is " + to_string(s2));
  require(s3 == parse_gamma_vector("g1"), "orbit sum of w5(0,1) is " + to_string(s3));
  out.push_back("orbit sum of w7(1) = " + to_string(s1));
  out.push_back("orbit sum of w6(1) = " + to_string(s2));
  out.push_back("orbit sum of w5(0,1) = " + to_string(s3));

  std::array<std::array<Cyclotomic, 3>, 3> m;
  const std::array<const GammaVector *, 3> rows{&s1, &s2, &s3};
  const std::array<int, 3> cols{1, 2, 6};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      require((*rows[r])[cols[c]].is_constant(), "spanning vectors must be constant");
      m[r][c] = (*rows[r])[cols[c]].constant();
    }
  const Cyclotomic d = det3(m);
  require(!d.is_zero(), "spanning vectors are dependent");
  out.push_back("det of the three orbit sums on (g1, g2, g6) = " + to_string(d));

  // Replacement costs at most one orbit each of types 7, 6, 5.
  const int cost = family(7).length + family(6).length + family(5).length;
  out.push_back("replacement cost l7 + l6 + l5 = " + std::to_string(cost));
  for (int id : kReducible) {
    require(facts(id).diag_only, w(id) + " has an orbit sum outside <g1, g2, g6>");
    require(family(id).length > cost, w(id) + " is not longer than its replacement");
    out.push_back(w(id) + ": orbit sum in <g1, g2, g6>, l = " + std::to_string(family(id).length) + " > " + std::to_string(cost));
  }
  for (int id : kReplaceable) {
    require(facts(id).diag_only, w(id) + " has an orbit sum outside <g1, g2, g6>");
    require(family(id).length >= cost, w(id) + " is shorter than its replacement");
    out.push_back(w(id) + ": orbit sum in <g1, g2, g6>, l = " + std::to_string(family(id).length) + " >= " + std::to_string(cost));
  }
  return out;
}

std::vector<std::string> check_gamma_9_12() {
  std::vector<std::string> out;
  const auto &tab = gamma_table();
  int min_len = kMaxLength;
  for (int id : kGammaEqual) {
    require(facts(id).g9_12_zero, w(id) + ": " + coords(tab.at(id), {9, 10, 11, 12}));
    min_len = std::min(min_len, family(id).length);
    out.push_back(w(id) + ": g9 = g10 = g11 = g12 = 0");
  }
  const auto companions = ids_fitting(kMaxLength - min_len);
  out.push_back("families fitting in the residual budget " + std::to_string(kMaxLength) + " - " + std::to_string(min_len) +
                ": " + id_list(companions));
  for (int id : companions) {
    if (id == 9)
      continue; // stated below with its value
    require(facts(id).g9_12_equal, w(id) + ": " + coords(tab.at(id), {9, 10, 11, 12}));
    out.push_back(w(id) + ": g9 = g10 = g11 = g12 = " + show(tab.at(id)[9]));
  }
  const Polynomial four_b3 = parse_polynomial("4*b^3");
  for (int m = 9; m <= 12; ++m)
    require(tab.at(9)[m] == four_b3, "w9: " + g(m) + " = " + show(tab.at(9)[m]));
  out.push_back("w9: g9 = g10 = g11 = g12 = 4*b^3");

  require(T_gamma() == parse_gamma_vector("g1 + g3 + g9"), "p(T) = " + to_string(T_gamma()));
  out.push_back("p(T) = " + to_string(T_gamma()));
  require(T_gamma()[9] == Polynomial(1) && T_gamma()[10].is_zero(), "T must have (g9, g10) = (1, 0)");
  out.push_back("T: (g9, g10) = (1, 0)");
  return out;
}

const std::map<std::pair<int, int>, std::string> &gamma_table_reference() {
  // (family, coordinate) -> expected orbit-sum coordinate.
  // The (32, g10) cell has the sign given by direct expansion, -2*a^2*d,
  // not +2*a^2*d as in the tabulated reference.
  static const std::map<std::pair<int, int>, std::string> ref{
      {{24, 9}, "6*a^2*d"},          {{24, 10}, "2*a^2*d + 4*a*b*d"},
      {{24, 11}, "2*b^2*d + 4*a*b*d"}, {{24, 12}, "6*b^2*d"},
      {{29, 9}, "6*i*a^2*d"},        {{29, 10}, "2*i*a^2*d + 4*i*a*b*d"},
      {{29, 11}, "2*i*b^2*d + 4*i*a*b*d"}, {{29, 12}, "6*i*b^2*d"},
      {{32, 9}, "6*a^2*d"},          {{32, 10}, "-2*a^2*d + 4*a*b*d"},
      {{32, 11}, "2*b^2*d - 4*a*b*d"}, {{32, 12}, "-6*b^2*d"},
      {{38, 9}, "6*i*a^2*d"},        {{38, 10}, "-2*i*a^2*d + 4*i*a*b*d"},
      {{38, 11}, "2*i*b^2*d - 4*i*a*b*d"}, {{38, 12}, "-6*i*b^2*d"},
  };
  return ref;
}

std::vector<std::string> check_gamma_table() {
  std::vector<std::string> out;
  const auto &tab = gamma_table();
  for (const auto &[key, text] : gamma_table_reference()) {
    const auto &[id, m] = key;
    const Polynomial expected = parse_polynomial(text);
    require(tab.at(id)[m] == expected, w(id) + ": " + g(m) + " = " + show(tab.at(id)[m]) + ", expected " + text);
    out.push_back(w(id) + ": " + g(m) + " = " + show(expected));
  }

  // Diagonal part: the long orbits contribute nothing at e_{ii,jj,kk}.
  const Tensor T = matmul_tensor();
  for (int id : kGammaTable) {
    const Tensor t = family_tensor(id);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
          require(t.at(BasisIndex{{{{i, i}, {j, j}, {k, k}}}}).is_zero(), w(id) + " has a diagonal-triple entry");
    out.push_back(w(id) + ": zero at every e_{ii,jj,kk}");
  }
  const Tensor s9 = direct_orbit_sum(family_tensor(9));
  const Polynomial four_a3 = parse_polynomial("4*a^3");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        require(s9.at(BasisIndex{{{{i, i}, {j, j}, {k, k}}}}) == four_a3, "orbit sum of w9 is not 4*a^3 on diagonal triples");
  out.push_back("orbit sum of w9: coefficient 4*a^3 at every e_{ii,jj,kk}");
  require(T.at(parse_index("11,11,11")) == Polynomial(1) && T.at(parse_index("11,11,22")).is_zero(),
          "T must have e_{11,11,11} but not e_{11,11,22}");
  out.push_back("T: coefficient 1 at e_{11,11,11}, 0 at e_{11,11,22}");
  for (int id : {7, 9}) {
    require(facts(id).delta_diag, w(id) + ": g1, g2, g6 differ");
    out.push_back(w(id) + ": g1 = g2 = g6 = " + show(tab.at(id)[1]));
  }

  for (int id : kGammaTable) {
    const FamilyFacts &f = facts(id);
    require(f.chain, w(id) + ": g9, g10, g12 do not have the a^2*d, b^2*d shape");
    out.push_back(w(id) + ": g9 = (" + to_string(f.k9) + ")*a^2*d, g12 = (" + to_string(f.k12) +
                  ")*b^2*d, g10|b=0 = (" + to_string(f.c10) + ")*g9|b=0");
  }
  for (int id : ids_fitting(kMaxLength - family(24).length))
    if (id != 9) {
      require(facts(id).g9_12_zero, w(id) + ": nonzero g9..g12");
      out.push_back(w(id) + ": g9 = g10 = g11 = g12 = 0");
    }
  require(T_gamma()[9] == Polynomial(1) && T_gamma()[10].is_zero() && T_gamma()[11].is_zero() && T_gamma()[12].is_zero(),
          "T must have (g9, g10, g11, g12) = (1, 0, 0, 0)");
  out.push_back("T: (g9, g10, g11, g12) = (1, 0, 0, 0)");
  return out;
}

std::vector<std::string> check_e11_12_21() {
  std::vector<std::string> out;
  const auto &tab = gamma_table();
  for (int id : {kE111221Family, 5, 6, 7}) {
    require(facts(id).g3_zero, w(id) + ": g3 = " + show(tab.at(id)[3]));
    out.push_back(w(id) + ": g3 = 0");
  }
  for (int id : {kE111221Family, 9, 7}) {
    require(facts(id).delta_diag, w(id) + ": g1, g2, g6 differ");
    out.push_back(w(id) + ": g1 = g2 = g6 = " + show(tab.at(id)[1]));
  }
  require(T_gamma()[3] == Polynomial(1), "T must have g3 = 1");
  out.push_back("T: g3 = 1");
  return out;
}

std::vector<std::string> check_gamma_3_eq_5() {
  std::vector<std::string> out;
  std::vector<int> remaining;
  for (const auto &f : catalog())
    if (!in(kReducible, f.id) && !in(kReplaceable, f.id) && !in(kGammaEqual, f.id) && !in(kGammaTable, f.id) &&
        f.id != kE111221Family)
      remaining.push_back(f.id);
  const std::vector<int> expected{1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 19, 20, 34, 40, 41, 44};
  require(remaining == expected, "remaining types are " + id_list(remaining));
  out.push_back("remaining types: " + id_list(remaining));
  const auto &tab = gamma_table();
  for (int id : remaining) {
    if (id == 44) {
      require(tab.at(id)[3].is_zero() && tab.at(id)[5].is_zero(), w(id) + ": " + coords(tab.at(id), {3, 5}));
      out.push_back(w(id) + ": g3 = g5 = 0");
      continue;
    }
    const Tensor t = family_tensor(id);
    require(pi12(t) == t, w(id) + " is not fixed by pi12");
    require(facts(id).g3_eq_g5, w(id) + ": " + coords(tab.at(id), {3, 5}));
    out.push_back(w(id) + ": pi12 w = w, g3 = g5 = " + show(tab.at(id)[3]));
  }
  require(T_gamma()[3] == Polynomial(1) && T_gamma()[5].is_zero(), "T must have (g3, g5) = (1, 0)");
  out.push_back("T: (g3, g5) = (1, 0)");
  return out;
}

std::string rule_name(Rule r) {
  switch (r) {
  case Rule::ReducibleTypes:
    return "REDUCIBLE_TYPES";
  case Rule::Gamma9to12:
    return "GAMMA_9_12";
  case Rule::DiagonalOrGammaTable:
    return "DIAGONAL_OR_GAMMA_TABLE";
  case Rule::E111221:
    return "E_11_12_21";
  case Rule::Gamma3Eq5:
    return "GAMMA_3_EQ_5";
  }
  return "?";
}

namespace {

std::string rule_description(Rule r) {
  switch (r) {
  case Rule::ReducibleTypes:
    return "an orbit whose sum lies in <g1, g2, g6> is replaced by at most one orbit each of types 7, 6, 5 "
           "(strictly shorter for 16, 18, 21, 25, 33, 42; no longer for 4, 39, 43)";
  case Rule::Gamma9to12:
    return "every orbit has g9 = g10 = g11 = g12, while T has g9 = 1, g10 = 0";
  case Rule::DiagonalOrGammaTable:
    return "with type 9: all diagonal parts are multiples of delta^3 (g1 = g2), while T has g1 = 1, g2 = 0; "
           "without: g9 != 0 forces a^2*d != 0, g12 = 0 forces b = 0, then g10 != 0";
  case Rule::E111221:
    return "with type 9: as for the long orbits with a gamma table; without: every orbit has g3 = 0, while T has g3 = 1";
  case Rule::Gamma3Eq5:
    return "every orbit has g3 = g5, while T has g3 = 1, g5 = 0";
  }
  return "";
}

std::vector<int> distinct(const TypeMultiset &m) {
  std::vector<int> out;
  for (int id : m.members())
    if (out.empty() || out.back() != id)
      out.push_back(id);
  return out;
}

bool all_members(const std::vector<int> &ids, bool FamilyFacts::*p) {
  return std::all_of(ids.begin(), ids.end(), [p](int id) { return facts(id).*p; });
}

std::vector<std::string> per_member(const std::vector<int> &ids, const std::string &pattern) {
  std::vector<std::string> out;
  for (int id : ids) {
    std::string s = pattern;
    for (std::size_t pos; (pos = s.find('#')) != std::string::npos;)
      s.replace(pos, 1, w(id));
    out.push_back(s);
  }
  return out;
}

EliminationCertificate make(const TypeMultiset &m, Rule r, std::vector<std::string> ids) {
  return {m, r, std::move(ids)};
}

} // namespace

std::optional<EliminationCertificate> eliminate(const TypeMultiset &m) {
  const auto ids = distinct(m);
  auto with = [](std::vector<std::string> v, std::initializer_list<std::string> more) {
    v.insert(v.end(), more);
    return v;
  };

  for (int id : ids) {
    if ((in(kReducible, id) || in(kReplaceable, id)) && facts(id).diag_only)
      return make(m, Rule::ReducibleTypes,
                  {"orbit sum of " + w(id) + " in <g1, g2, g6>", "<g1, g2, g6> spanned by orbit sums of w7(1), w6(1), w5(0,1)",
                   in(kReducible, id) ? "l" + std::to_string(id) + " > l7 + l6 + l5" : "l" + std::to_string(id) + " >= l7 + l6 + l5"});
  }

  if (std::any_of(ids.begin(), ids.end(), [](int id) { return in(kGammaEqual, id); }) &&
      all_members(ids, &FamilyFacts::g9_12_equal))
    return make(m, Rule::Gamma9to12, with(per_member(ids, "g9(#) = g10(#) = g11(#) = g12(#)"), {"T: (g9, g10) = (1, 0)"}));

  const auto diagonal_case = [&](Rule r) -> std::optional<EliminationCertificate> {
    if (m.contains(9) && all_members(ids, &FamilyFacts::delta_diag))
      return make(m, r, with(per_member(ids, "g1(#) = g2(#) = g6(#)"), {"T: (g1, g2) = (1, 0)"}));
    return std::nullopt;
  };

  std::vector<int> table_members;
  for (int id : ids)
    if (in(kGammaTable, id))
      table_members.push_back(id);
  if (table_members.size() == 1 && m.counts.at(table_members[0]) == 1) {
    const int l = table_members[0];
    if (auto c = diagonal_case(Rule::DiagonalOrGammaTable))
      return c;
    std::vector<int> rest;
    for (int id : ids)
      if (id != l)
        rest.push_back(id);
    if (!m.contains(9) && facts(l).chain && all_members(rest, &FamilyFacts::g9_12_zero)) {
      auto v = per_member(rest, "g9(#) = g10(#) = g11(#) = g12(#) = 0");
      v.push_back("g9(" + w(l) + ") = (" + to_string(facts(l).k9) + ")*a^2*d");
      v.push_back("g12(" + w(l) + ") = (" + to_string(facts(l).k12) + ")*b^2*d");
      v.push_back("g10(" + w(l) + ")|b=0 = (" + to_string(facts(l).c10) + ")*g9(" + w(l) + ")|b=0");
      v.push_back("T: (g9, g10, g12) = (1, 0, 0)");
      return make(m, Rule::DiagonalOrGammaTable, v);
    }
  }

  if (m.contains(kE111221Family)) {
    if (auto c = diagonal_case(Rule::E111221))
      return c;
    if (all_members(ids, &FamilyFacts::g3_zero))
      return make(m, Rule::E111221, with(per_member(ids, "g3(#) = 0"), {"T: g3 = 1"}));
  }

  if (all_members(ids, &FamilyFacts::g3_eq_g5))
    return make(m, Rule::Gamma3Eq5, with(per_member(ids, "g3(#) = g5(#)"), {"T: (g3, g5) = (1, 0)"}));
  return std::nullopt;
}

std::string TheoremReport::summary() const {
  return std::string(verified() ? "VERIFIED: " : "FAILED: ") + std::to_string(survivors.size()) + " survivors of " +
         std::to_string(multiset_count) + " multisets at max length " + std::to_string(max_length);
}

TheoremReport verify_theorem(int max_length) {
  TheoremReport r;
  r.max_length = max_length;
  r.checks.emplace_back("reducible types", check_reducible_types());
  r.checks.emplace_back("equal g9..g12", check_gamma_9_12());
  r.checks.emplace_back("diagonal part or gamma table", check_gamma_table());
  r.checks.emplace_back("e_{11,12,21}", check_e11_12_21());
  r.checks.emplace_back("g3 = g5", check_gamma_3_eq_5());

  const int order = static_cast<int>(enumerate_group(GroupKind::G).size());
  std::vector<int> gap;
  for (int d = 19; d <= max_length; ++d)
    if (order % d == 0)
      gap.push_back(d);
  if (max_length >= 19)
    r.notes.push_back("|G| = " + std::to_string(order) + " has no divisor in [19, " + std::to_string(max_length) +
                      "]: " + (gap.empty() ? "confirmed" : "VIOLATED by " + id_list(gap)));
  else
    r.notes.push_back("every orbit length up to " + std::to_string(max_length) + " is covered by the catalog");
  r.notes.push_back("completeness of the catalog for orbits of length <= 18 is taken as input; every listed length is recomputed");
  r.notes.push_back("a degenerate parameter instance has a shorter orbit, so its decomposition has a type of smaller total length, "
                    "which is itself in the enumeration");
  r.notes.push_back("types 4, 39, 43 are reduced to multisets with fewer such orbits and no greater length, which are also enumerated");

  const auto all = enumerate_multisets(max_length);
  r.multiset_count = static_cast<int>(all.size());
  for (const auto &m : all) {
    if (auto c = eliminate(m))
      r.certificates.push_back(std::move(*c));
    else
      r.survivors.push_back(m);
  }
  return r;
}

std::string report_text(const TheoremReport &r) {
  std::ostringstream os;
  os << "Invariant decompositions of T of length <= " << r.max_length << "\n\n";
  os << "Verified identities\n";
  for (const auto &[name, facts] : r.checks) {
    os << "  [" << name << "]\n";
    for (const auto &f : facts)
      os << "    " << f << "\n";
  }
  os << "\nRules, first applicable wins\n";
  for (Rule rule : {Rule::ReducibleTypes, Rule::Gamma9to12, Rule::DiagonalOrGammaTable, Rule::E111221, Rule::Gamma3Eq5})
    os << "  " << rule_name(rule) << ": " << rule_description(rule) << "\n";
  os << "\nNotes\n";
  for (const auto &n : r.notes)
    os << "  " << n << "\n";
  os << "\nCertificates\n";
  for (const auto &c : r.certificates) {
    os << "  " << to_string(c.multiset) << " l=" << c.multiset.total_length() << " " << rule_name(c.rule) << ": ";
    for (std::size_t k = 0; k < c.identities.size(); ++k)
      os << (k ? "; " : "") << c.identities[k];
    os << "\n";
  }
  if (!r.survivors.empty()) {
    os << "\nSurvivors\n";
    for (const auto &m : r.survivors) {
      os << "  " << to_string(m) << "\n";
      std::istringstream sys(export_system(invariant_system(m), ExportFormat::Text));
      for (std::string line; std::getline(sys, line);)
        os << "    " << line << "\n";
    }
  }
  os << "\n" << r.summary() << "\n";
  return os.str();
}

std::string report_json(const TheoremReport &r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["max_length"] = r.max_length;
  j["multiset_count"] = r.multiset_count;
  ordered_json checks = ordered_json::array();
  for (const auto &[name, facts] : r.checks)
    checks.push_back({{"name", name}, {"facts", facts}});
  j["checks"] = checks;
  j["notes"] = r.notes;
  ordered_json certs = ordered_json::array();
  for (const auto &c : r.certificates)
    certs.push_back({{"multiset", c.multiset.members()}, {"rule", rule_name(c.rule)}, {"identities", c.identities}});
  j["certificates"] = certs;
  ordered_json surv = ordered_json::array();
  for (const auto &m : r.survivors)
    surv.push_back({{"multiset", m.members()},
                    {"brent_system", ordered_json::parse(export_system(invariant_system(m), ExportFormat::Json))}});
  j["survivors"] = surv;
  j["summary"] = r.summary();
  return j.dump(1) + "\n";
}

} // namespace invmm
