#include "invmm/brent.hpp"

#include <sstream>

#include "json.hpp"

#include "invmm/catalog.hpp"
#include "invmm/errors.hpp"

namespace invmm {

BrentSystem generic_system(int rank) {
  if (rank < 1)
    throw DomainError("rank must be at least 1");
  BrentSystem s;
  s.mode = SystemMode::Generic;
  s.rank = rank;
  const auto r = static_cast<std::uint32_t>(rank);
  for (std::uint32_t j = 1; j <= r; ++j)
    for (char which : {'x', 'y', 'z'})
      for (int row = 1; row <= 3; ++row)
        for (int col = 1; col <= 3; ++col)
          s.variables.push_back(Var::factor(which, j, row, col));

  const Tensor T = matmul_tensor();
  for (int code = 0; code < BasisIndex::count; ++code) {
    const BasisIndex a = BasisIndex::decode(code);
    const auto &[p1, p2, p3] = a.pairs;
    Polynomial lhs;
    for (std::uint32_t j = 1; j <= r; ++j)
      lhs += Polynomial::variable(Var::factor('x', j, p1.first, p1.second)) *
             Polynomial::variable(Var::factor('y', j, p2.first, p2.second)) *
             Polynomial::variable(Var::factor('z', j, p3.first, p3.second));
    const Polynomial &rhs = T.at(a);
    s.equations.push_back({to_string(a), std::move(lhs), rhs.constant()});
  }
  return s;
}

BrentSystem invariant_system(const TypeMultiset &m) {
  if (m.counts.empty())
    throw DomainError("multiset must be nonempty");
  BrentSystem s;
  s.mode = SystemMode::Invariant;
  s.multiset = m;
  std::uint32_t slot = 1;
  for (int id : m.members()) {
    for (const auto &v : family(id).param_vars(slot))
      s.variables.push_back(v);
    ++slot;
  }
  const auto parts = multiset_gamma(m);
  const GammaVector target = project(matmul_tensor());
  for (int k = 1; k <= kClassCount; ++k) {
    Polynomial lhs;
    for (const auto &v : parts)
      lhs += v[k];
    s.equations.push_back({"g" + std::to_string(k), std::move(lhs), target[k].constant()});
  }
  return s;
}

SolutionCheck check_solution(const BrentSystem &s, const SolutionAssignment &sol) {
  for (const auto &v : s.variables)
    if (!sol.count(v))
      throw MissingVariable("no value for variable " + to_string(v));
  SolutionCheck out;
  for (std::size_t k = 0; k < s.equations.size(); ++k) {
    const Polynomial value = s.equations[k].lhs.substitute(sol);
    if (!value.is_constant())
      throw MissingVariable("equation " + s.equations[k].label + " uses variables outside the system");
    if (value.constant() != s.equations[k].rhs)
      out.failing.push_back(static_cast<int>(k));
  }
  out.satisfied = out.failing.empty();
  return out;
}

SolutionAssignment assignment_from_factors(const std::vector<FactorTriple> &terms) {
  SolutionAssignment sol;
  std::uint32_t j = 1;
  for (const auto &t : terms) {
    for (const auto &[which, m] : {std::pair<char, const FactorMatrix *>{'x', &t.x}, {'y', &t.y}, {'z', &t.z}})
      for (int row = 1; row <= 3; ++row)
        for (int col = 1; col <= 3; ++col) {
          const Polynomial &e = m->at(row, col);
          if (!e.is_constant())
            throw DomainError("factor entries must be concrete");
          sol[Var::factor(which, j, row, col)] = e.constant();
        }
    ++j;
  }
  return sol;
}

std::vector<FactorTriple> trivial_decomposition() {
  std::vector<FactorTriple> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        out.push_back({FactorMatrix::unit(i, j), FactorMatrix::unit(j, k), FactorMatrix::unit(k, i)});
  return out;
}

ExportFormat parse_export_format(const std::string &name) {
  if (name == "json")
    return ExportFormat::Json;
  if (name == "text")
    return ExportFormat::Text;
  if (name == "m2")
    return ExportFormat::M2;
  throw UnknownFormat("unknown export format '" + name + "' (expected json, text or m2)");
}

namespace {

std::string m2_name(const Var &v) {
  if (v.is_param())
    return std::string(1, v.letter) + "_" + std::to_string(v.slot);
  return std::string(1, v.letter) + "_(" + std::to_string(v.slot) + "," + std::to_string(v.row()) + "," +
         std::to_string(v.col()) + ")";
}

std::string header(const BrentSystem &s) {
  if (s.mode == SystemMode::Generic)
    return "generic, rank " + std::to_string(s.rank);
  return "invariant, types " + to_string(s.multiset);
}

} // namespace

std::string export_system(const BrentSystem &s, ExportFormat f) {
  std::ostringstream os;
  switch (f) {
  case ExportFormat::Json: {
    nlohmann::ordered_json j;
    j["mode"] = s.mode == SystemMode::Generic ? "generic" : "invariant";
    if (s.mode == SystemMode::Generic)
      j["rank"] = s.rank;
    else
      j["multiset"] = s.multiset.members();
    std::vector<std::string> vars;
    for (const auto &v : s.variables)
      vars.push_back(to_string(v));
    j["variables"] = vars;
    auto eqs = nlohmann::ordered_json::array();
    for (const auto &e : s.equations)
      eqs.push_back({{"label", e.label}, {"lhs", to_string(e.lhs)}, {"rhs", to_string(e.rhs)}});
    j["equations"] = eqs;
    os << j.dump(1) << "\n";
    break;
  }
  case ExportFormat::Text:
    for (const auto &e : s.equations)
      os << to_string(e.lhs) << " = " << to_string(e.rhs) << "\n";
    break;
  case ExportFormat::M2: {
    PrintOptions opts;
    opts.w_basis = true;
    opts.var_name = m2_name;
    os << "-- Brent system: " << header(s) << "\n";
    os << "K = toField(QQ[w] / ideal(w^4 - w^2 + 1));\n";
    os << "R = K[";
    for (std::size_t k = 0; k < s.variables.size(); ++k)
      os << (k ? ", " : "") << m2_name(s.variables[k]);
    os << "];\n";
    os << "I = ideal(\n";
    for (std::size_t k = 0; k < s.equations.size(); ++k) {
      const auto &e = s.equations[k];
      os << "  " << to_string(e.lhs - Polynomial(e.rhs), opts) << (k + 1 < s.equations.size() ? ",\n" : "\n");
    }
    os << ");\n";
    break;
  }
  }
  return os.str();
}

BrentSystem parse_system_json(const std::string &text) {
  BrentSystem s;
  try {
    const auto j = nlohmann::json::parse(text);
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "generic") {
      s.mode = SystemMode::Generic;
      s.rank = j.at("rank").get<int>();
    } else if (mode == "invariant") {
      s.mode = SystemMode::Invariant;
      for (const auto &id : j.at("multiset"))
        ++s.multiset.counts[id.get<int>()];
    } else {
      throw ParseError("unknown system mode '" + mode + "'");
    }
    for (const auto &v : j.at("variables"))
      s.variables.push_back(parse_var(v.get<std::string>()));
    for (const auto &e : j.at("equations"))
      s.equations.push_back({e.value("label", std::string()), parse_polynomial(e.at("lhs").get<std::string>()),
                             parse_cyclotomic(e.at("rhs").get<std::string>())});
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("system json: ") + e.what());
  }
  return s;
}

SolutionAssignment parse_assignment_json(const std::string &text) {
  SolutionAssignment sol;
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object())
      throw ParseError("assignment json must be an object");
    for (const auto &[name, value] : j.items()) {
      const std::string v = value.is_string() ? value.get<std::string>() : value.dump();
      sol[parse_var(name)] = parse_cyclotomic(v);
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("assignment json: ") + e.what());
  }
  return sol;
}

std::string assignment_to_json(const SolutionAssignment &sol) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto &[v, c] : sol)
    j[to_string(v)] = to_string(c);
  return j.dump(1) + "\n";
}

} // namespace invmm
