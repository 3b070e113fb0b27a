#include "invmm/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "invmm/errors.hpp"
#include "invmm/group.hpp"

namespace invmm {

const std::array<ClassTableRow, kClassCount> &reference_class_table() {
  static const std::array<ClassTableRow, kClassCount> table{{
      {"11,11,11", 3},
      {"11,11,22", 18},
      {"11,12,21", 18},
      {"11,12,12", 36},
      {"11,21,12", 18},
      {"11,22,33", 6},
      {"11,23,23", 18},
      {"11,23,32", 18},
      {"12,23,31", 6},
      {"12,23,13", 18},
      {"12,32,13", 18},
      {"12,31,23", 6},
  }};
  return table;
}

namespace {

std::vector<OrbitClass> build_classes() {
  const Perm id = perm_identity();
  const Perm swap{1, 0, 2};
  const Perm cyc{1, 2, 0};
  const std::array<std::pair<Perm, Perm>, 4> gens{{{swap, id}, {cyc, id}, {id, swap}, {id, cyc}}};

  std::vector<int> owner(BasisIndex::count, 0);
  std::vector<std::vector<BasisIndex>> orbits;
  for (int code = 0; code < BasisIndex::count; ++code) {
    const BasisIndex start = BasisIndex::decode(code);
    if (!index_is_even(start) || owner[code] != 0)
      continue;
    orbits.emplace_back();
    const int tag = static_cast<int>(orbits.size());
    std::vector<BasisIndex> stack{start};
    owner[code] = tag;
    while (!stack.empty()) {
      const BasisIndex a = stack.back();
      stack.pop_back();
      orbits.back().push_back(a);
      for (const auto &[lines, positions] : gens) {
        const BasisIndex b = act_s3xs3(lines, positions, a);
        if (owner[b.encode()] == 0) {
          owner[b.encode()] = tag;
          stack.push_back(b);
        }
      }
    }
  }

  const auto &table = reference_class_table();
  if (orbits.size() != table.size())
    throw IntegrityError("found " + std::to_string(orbits.size()) + " classes on even indices, expected 12");

  std::vector<OrbitClass> classes;
  std::set<int> used;
  for (int id = 1; id <= kClassCount; ++id) {
    const auto &row = table[id - 1];
    const BasisIndex rep = parse_index(row.representative);
    if (!index_is_even(rep))
      throw IntegrityError(std::string("reference representative ") + row.representative + " is not even");
    const int tag = owner[rep.encode()];
    if (!used.insert(tag).second)
      throw IntegrityError(std::string("representative ") + row.representative + " shares a class with another row");
    OrbitClass cls;
    cls.id = id;
    cls.representative = rep;
    cls.members = orbits[tag - 1];
    std::sort(cls.members.begin(), cls.members.end(),
              [](const BasisIndex &x, const BasisIndex &y) { return x.encode() < y.encode(); });
    if (static_cast<int>(cls.size()) != row.size)
      throw IntegrityError("class Q" + std::to_string(id) + " has " + std::to_string(cls.size()) +
                           " members, expected " + std::to_string(row.size));
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<int> build_class_lookup() {
  std::vector<int> lookup(BasisIndex::count, 0);
  for (const auto &cls : compute_classes())
    for (const auto &a : cls.members)
      lookup[a.encode()] = cls.id;
  return lookup;
}

} // namespace

const std::vector<OrbitClass> &compute_classes() {
  static const std::vector<OrbitClass> classes = build_classes();
  return classes;
}

int class_of(const BasisIndex &a) {
  static const std::vector<int> lookup = build_class_lookup();
  return lookup[a.encode()];
}

bool GammaVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Polynomial &p) { return p.is_zero(); });
}

GammaVector &GammaVector::operator+=(const GammaVector &o) {
  for (int k = 0; k < kClassCount; ++k)
    coords[k] += o.coords[k];
  return *this;
}

GammaVector GammaVector::scaled(const Polynomial &c) const {
  GammaVector r;
  for (int k = 0; k < kClassCount; ++k)
    r.coords[k] = coords[k] * c;
  return r;
}

GammaVector GammaVector::substitute(const std::map<Var, Cyclotomic> &assignment) const {
  GammaVector r;
  for (int k = 0; k < kClassCount; ++k)
    r.coords[k] = coords[k].substitute(assignment);
  return r;
}

GammaVector GammaVector::with_slot(std::uint32_t slot) const {
  GammaVector r;
  for (int k = 0; k < kClassCount; ++k)
    r.coords[k] = coords[k].with_slot(slot);
  return r;
}

std::string to_string(const GammaVector &v) {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= kClassCount; ++i) {
    const Polynomial &c = v[i];
    if (c.is_zero())
      continue;
    bool negative = false;
    std::string coef;
    if (c.is_constant() && is_single_term(c.constant())) {
      coef = to_string(c.constant());
      if (coef[0] == '-') {
        negative = true;
        coef.erase(0, 1);
      }
    } else {
      coef = "(" + to_string(c) + ")";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (coef != "1")
      os << coef << '*';
    os << 'g' << i;
  }
  return first ? "0" : os.str();
}

GammaVector parse_gamma_vector(const std::string &text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      t += ch;
  GammaVector v;
  if (t == "0")
    return v;
  auto fail = [&]() -> GammaVector { throw ParseError("bad gamma vector '" + text + "'"); };
  std::size_t pos = 0;
  bool first = true;
  while (pos < t.size()) {
    bool negative = false;
    if (t[pos] == '+' || t[pos] == '-') {
      negative = t[pos] == '-';
      ++pos;
    } else if (!first) {
      return fail();
    }
    first = false;
    // coefficient runs up to the "g<digits>" that ends the term at depth 0
    std::size_t k = pos;
    int depth = 0;
    std::size_t gpos = std::string::npos;
    for (; k < t.size(); ++k) {
      const char ch = t[k];
      if (ch == '(')
        ++depth;
      else if (ch == ')')
        --depth;
      else if (depth == 0 && ch == 'g' && (k == pos || t[k - 1] == '*')) {
        gpos = k;
        break;
      }
    }
    if (gpos == std::string::npos)
      return fail();
    std::size_t end = gpos + 1;
    while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end])))
      ++end;
    if (end == gpos + 1 || end - gpos > 3)
      return fail();
    const int idx = std::stoi(t.substr(gpos + 1, end - gpos - 1));
    if (idx < 1 || idx > kClassCount)
      return fail();
    Polynomial coef(1);
    if (gpos > pos)
      coef = parse_polynomial(t.substr(pos, gpos - pos - 1));
    v[idx] += negative ? -coef : coef;
    pos = end;
  }
  return v;
}

Polynomial r_sum(const Tensor &w, int class_id) {
  Polynomial s;
  for (const auto &[code, c] : w.entries())
    if (class_of(BasisIndex::decode(code)) == class_id)
      s += c;
  return s;
}

GammaVector project(const Tensor &w) {
  GammaVector v;
  for (const auto &[code, c] : w.entries()) {
    const int id = class_of(BasisIndex::decode(code));
    if (id != 0)
      v[id] += c;
  }
  const auto &classes = compute_classes();
  for (int i = 1; i <= kClassCount; ++i)
    v[i] *= Cyclotomic(Rational(1, static_cast<unsigned long>(classes[i - 1].size())));
  return v;
}

Tensor group_average(const Tensor &w) {
  Tensor sum;
  const auto &group = enumerate_group(GroupKind::G);
  for (const auto &g : group)
    sum += act_on_tensor(g, w);
  return sum.scaled(Polynomial(Cyclotomic(Rational(1, static_cast<unsigned long>(group.size())))));
}

Tensor gamma_to_tensor(const GammaVector &v) {
  Tensor t;
  for (const auto &cls : compute_classes()) {
    const Polynomial &c = v[cls.id];
    if (c.is_zero())
      continue;
    for (const auto &a : cls.members)
      t.add(a, c);
  }
  return t;
}

Tensor direct_orbit_sum(const Tensor &w) {
  Tensor sum;
  for (const auto &img : orbit_of(w))
    sum += img;
  return sum;
}

GammaVector orbit_sum(const Tensor &w, int length, OrbitSumCheck check) {
  GammaVector v = project(w).scaled(Polynomial(length));
  if (check == OrbitSumCheck::CrossCheck) {
    const Tensor direct = direct_orbit_sum(w);
    if (direct != gamma_to_tensor(v))
      throw OrbitSumMismatch("direct orbit summation disagrees with " + std::to_string(length) +
                             " * p(w); actual orbit length is " + std::to_string(orbit_of(w).size()));
  }
  return v;
}

} // namespace invmm
