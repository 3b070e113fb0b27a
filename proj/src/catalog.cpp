#include "invmm/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

#include "invmm/catalog_data.hpp"
#include "invmm/errors.hpp"

namespace invmm {

namespace {

FactorMatrix matrix_of(std::initializer_list<std::pair<const char *, Cyclotomic>> entries) {
  FactorMatrix m;
  for (const auto &[ij, c] : entries)
    m.at(ij[0] - '0', ij[1] - '0') += Polynomial(c);
  return m;
}

} // namespace

FactorMatrix delta() { return matrix_of({{"11", 1}, {"22", 1}, {"33", 1}}); }

FactorMatrix kappa() {
  return matrix_of({{"12", 1}, {"21", 1}, {"13", 1}, {"31", 1}, {"23", 1}, {"32", 1}});
}

FactorMatrix eta() { return matrix_of({{"11", 1}, {"22", Cyclotomic::zeta()}, {"33", Cyclotomic::zeta_bar()}}); }

FactorMatrix eta_bar() { return matrix_of({{"11", 1}, {"22", Cyclotomic::zeta_bar()}, {"33", Cyclotomic::zeta()}}); }

FactorMatrix tau() {
  return matrix_of({{"12", 1}, {"23", 1}, {"31", 1}, {"21", -1}, {"32", -1}, {"13", -1}});
}

Tensor matmul_tensor() {
  Tensor t;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        t.add(BasisIndex{{{{i, j}, {j, k}, {k, i}}}}, Polynomial(1));
  return t;
}

std::vector<Var> OrbitFamily::param_vars(std::uint32_t slot) const {
  std::vector<Var> vs;
  for (char c : params)
    vs.push_back(Var::param(c, slot));
  return vs;
}

namespace {

FactorMatrix map_entries(const FactorMatrix &m, const auto &fn) {
  FactorMatrix r;
  for (int k = 0; k < 9; ++k)
    r.entries[k] = fn(m.entries[k]);
  return r;
}

FactorTriple assemble(const OrbitFamily &f, const auto &fn) {
  std::vector<FactorMatrix> fs;
  for (const auto &m : f.factors)
    fs.push_back(map_entries(m, fn));
  FactorTriple t;
  switch (f.shape) {
  case FamilyShape::Cube:
    t = {fs[0], fs[0], fs[0]};
    break;
  case FamilyShape::Square:
    t = {fs[0], fs[0], fs[1]};
    break;
  case FamilyShape::Triple:
    t = {fs[0], fs[1], fs[2]};
    break;
  }
  t.x = fn(f.scale) * t.x;
  return t;
}

} // namespace

FactorTriple OrbitFamily::triple(std::uint32_t slot) const {
  if (slot == 0)
    return assemble(*this, [](const Polynomial &p) { return p; });
  return assemble(*this, [slot](const Polynomial &p) { return p.with_slot(slot); });
}

FactorTriple OrbitFamily::triple(std::span<const Cyclotomic> values) const {
  if (static_cast<int>(values.size()) != param_count())
    throw ArityError("family " + std::to_string(id) + " takes " + std::to_string(param_count()) +
                     " parameters, got " + std::to_string(values.size()));
  std::map<Var, Cyclotomic> assignment;
  for (std::size_t k = 0; k < values.size(); ++k)
    assignment.emplace(Var::param(params[k], 0), values[k]);
  return assemble(*this, [&](const Polynomial &p) { return p.substitute(assignment); });
}

std::vector<OrbitFamily> parse_catalog(const std::string &json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("catalog json: ") + e.what());
  }
  if (!doc.contains("families") || !doc["families"].is_array())
    throw ParseError("catalog json: missing \"families\" array");

  std::vector<OrbitFamily> out;
  for (const auto &rec : doc["families"]) {
    OrbitFamily f;
    try {
      f.id = rec.at("id").get<int>();
      f.length = rec.at("length").get<int>();
      for (const auto &p : rec.at("params")) {
        const auto s = p.get<std::string>();
        if (s.size() != 1 || !is_param_letter(s[0]))
          throw ParseError("catalog json: bad parameter name '" + s + "'");
        f.params.push_back(s[0]);
      }
      const auto shape = rec.at("shape").get<std::string>();
      std::size_t expected = 0;
      if (shape == "cube") {
        f.shape = FamilyShape::Cube;
        expected = 1;
      } else if (shape == "square") {
        f.shape = FamilyShape::Square;
        expected = 2;
      } else if (shape == "uvw") {
        f.shape = FamilyShape::Triple;
        expected = 3;
      } else {
        throw ParseError("catalog json: unknown shape '" + shape + "'");
      }
      if (rec.contains("scale"))
        f.scale = parse_polynomial(rec["scale"].get<std::string>());
      const auto &factors = rec.at("factors");
      if (!factors.is_array() || factors.size() != expected)
        throw ParseError("catalog json: family " + std::to_string(f.id) + " has the wrong number of factors");
      for (const auto &m : factors) {
        FactorMatrix fm;
        if (!m.is_array() || m.size() != 3)
          throw ParseError("catalog json: factor must be 3x3");
        for (int r = 0; r < 3; ++r) {
          if (!m[r].is_array() || m[r].size() != 3)
            throw ParseError("catalog json: factor must be 3x3");
          for (int c = 0; c < 3; ++c)
            fm.at(r + 1, c + 1) = parse_polynomial(m[r][c].get<std::string>());
        }
        f.factors.push_back(std::move(fm));
      }
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(std::string("catalog json: ") + e.what());
    }

    // The declared parameters must be exactly the letters the templates use.
    std::set<Var> used = f.scale.variables();
    for (const auto &m : f.factors)
      for (const auto &e : m.entries)
        for (const auto &v : e.variables())
          used.insert(v);
    std::set<Var> declared;
    for (const auto &v : f.param_vars(0))
      declared.insert(v);
    if (used != declared || declared.size() != f.params.size())
      throw IntegrityError("catalog: family " + std::to_string(f.id) + " declares parameters that differ from its templates");
    out.push_back(std::move(f));
  }
  for (std::size_t k = 0; k < out.size(); ++k)
    if (out[k].id != static_cast<int>(k) + 1)
      throw IntegrityError("catalog: family ids must run 1..n in order");
  return out;
}

const std::string &catalog_json() {
  static const std::string text(kCatalogJson);
  return text;
}

const std::vector<OrbitFamily> &catalog() {
  static const std::vector<OrbitFamily> families = parse_catalog(catalog_json());
  return families;
}

const OrbitFamily &family(int id) {
  const auto &all = catalog();
  if (id < 1 || id > static_cast<int>(all.size()))
    throw ArityError("no catalog family with id " + std::to_string(id));
  return all[id - 1];
}

Tensor family_tensor(int id, std::uint32_t slot) { return family(id).tensor(slot); }

Tensor family_tensor(int id, std::span<const Cyclotomic> values) { return family(id).tensor(values); }

const std::vector<int> &linear_scaling_families() {
  static const std::vector<int> ids{6, 7, 17, 18, 19, 20, 39, 41};
  return ids;
}

namespace {

Tensor scaled_params(const OrbitFamily &f, long factor) {
  std::map<Var, Polynomial> sub;
  for (const auto &v : f.param_vars(0))
    sub.emplace(v, Polynomial(factor) * Polynomial::variable(v));
  const Tensor w = f.tensor(0);
  Tensor out;
  for (const auto &[code, c] : w.entries())
    out.add(code, c.compose(sub));
  return out;
}

} // namespace

FamilyCheck verify_family(const OrbitFamily &f) {
  auto fail = [&](const std::string &what) {
    throw IntegrityError("catalog family " + std::to_string(f.id) + ": " + what);
  };
  FamilyCheck chk;
  chk.id = f.id;
  const Tensor w = f.tensor(0);
  chk.orbit_length = static_cast<int>(orbit_of(w).size());
  chk.stabilizer = stabilizer_order(w);
  if (chk.orbit_length != f.length)
    fail("orbit length " + std::to_string(chk.orbit_length) + ", expected " + std::to_string(f.length));
  if (chk.orbit_length * chk.stabilizer != static_cast<int>(enumerate_group(GroupKind::G).size()))
    fail("orbit length times stabilizer order is not |G|");

  chk.pi12_fixed = pi12(w) == w;
  if (f.shape != FamilyShape::Triple && !chk.pi12_fixed)
    fail("pi12 does not fix a cube or square-shaped tensor");

  const auto &lin = linear_scaling_families();
  const bool expect_linear = std::find(lin.begin(), lin.end(), f.id) != lin.end();
  chk.linear_scaling = w.scaled(Polynomial(5)) == scaled_params(f, 5);
  const bool cubic = w.scaled(Polynomial(8)) == scaled_params(f, 2);
  if (expect_linear && !chk.linear_scaling)
    fail("expected z w(p) = w(z p) at z = 5");
  if (!expect_linear && (!cubic || chk.linear_scaling))
    fail("expected 8 w(p) = w(2 p)");
  return chk;
}

std::vector<FamilyCheck> verify_catalog() {
  std::vector<FamilyCheck> out;
  for (const auto &f : catalog())
    out.push_back(verify_family(f));
  return out;
}

} // namespace invmm
