#include "invmm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "invmm/brent.hpp"
#include "invmm/catalog.hpp"
#include "invmm/errors.hpp"
#include "invmm/group.hpp"
#include "invmm/invariants.hpp"
#include "invmm/prover.hpp"

namespace invmm {

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &data) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << data))
    throw IoError("cannot write " + path);
}

std::vector<std::string> split_commas(const std::string &s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');)
    parts.push_back(tok);
  return parts;
}

class UsageError : public Error {
public:
  using Error::Error;
};

struct Options {
  int max_length = 23;
  std::string report = "text";

  int type = 0;
  std::string params;
  bool gamma = false;
  bool full = false;

  std::string mode;
  int rank = 0;
  std::string types;
  std::string format = "json";
  std::string out_path;

  std::string system_path;
  std::string assignment_path;

  std::string element;
  std::string in_path;
};

int cmd_verify(const Options &o, std::ostream &out) {
  if (o.max_length < 1)
    throw UsageError("--max-length must be at least 1");
  const TheoremReport r = verify_theorem(o.max_length);
  out << (o.report == "json" ? report_json(r) : report_text(r));
  return r.verified() ? kExitOk : kExitCheckFailed;
}

int cmd_orbit_sum(const Options &o, std::ostream &out, std::ostream &err) {
  const OrbitFamily &f = family(o.type);
  Tensor w;
  if (o.params.empty()) {
    w = f.tensor(0);
  } else {
    std::vector<Cyclotomic> values;
    for (const auto &p : split_commas(o.params))
      values.push_back(parse_cyclotomic(p));
    w = f.tensor(values);
    const auto actual = orbit_of(w).size();
    if (static_cast<int>(actual) != f.length)
      err << "warning: degenerate parameters: orbit length " << actual << " < " << f.length
          << "; printing " << f.length << "*p(w)\n";
  }
  const GammaVector v = orbit_sum(w, f.length);
  if (o.full)
    out << tensor_to_json(gamma_to_tensor(v)) << "\n";
  else
    out << to_string(v) << "\n";
  return kExitOk;
}

int cmd_classes(std::ostream &out) {
  std::size_t total = 0;
  for (const auto &c : compute_classes()) {
    out << "Q" << c.id << "\t" << to_string(c.representative) << "\t" << c.size() << "\n";
    total += c.size();
  }
  out << "even indices\t" << total << "\n";
  return kExitOk;
}

int cmd_multisets(const Options &o, std::ostream &out) {
  if (o.max_length < 1)
    throw UsageError("--max-length must be at least 1");
  const auto all = enumerate_multisets(o.max_length);
  for (const auto &m : all)
    out << to_string(m) << "\t" << m.total_length() << "\n";
  out << all.size() << " multisets\n";
  return kExitOk;
}

int cmd_brent(const Options &o, std::ostream &out) {
  const ExportFormat fmt = parse_export_format(o.format);
  BrentSystem s;
  if (o.mode == "generic") {
    if (o.rank < 1)
      throw UsageError("--mode generic needs --rank >= 1");
    s = generic_system(o.rank);
  } else if (o.mode == "invariant") {
    if (o.types.empty())
      throw UsageError("--mode invariant needs --types");
    s = invariant_system(parse_multiset(o.types));
  } else {
    throw UsageError("--mode must be generic or invariant");
  }
  const std::string text = export_system(s, fmt);
  if (o.out_path.empty())
    out << text;
  else
    write_file(o.out_path, text);
  return kExitOk;
}

int cmd_check_solution(const Options &o, std::ostream &out) {
  const BrentSystem s = parse_system_json(read_file(o.system_path));
  const SolutionAssignment sol = parse_assignment_json(read_file(o.assignment_path));
  const SolutionCheck c = check_solution(s, sol);
  if (c.satisfied) {
    out << "satisfied: " << s.equations.size() << " equations\n";
    return kExitOk;
  }
  out << "violated: " << c.failing.size() << " of " << s.equations.size() << " equations\n";
  for (int k : c.failing)
    out << k << "\t" << s.equations[k].label << "\n";
  return kExitCheckFailed;
}

int cmd_act(const Options &o, std::ostream &out) {
  const GroupElement g = parse_group_element(o.element);
  const Tensor t = tensor_from_json(read_file(o.in_path));
  out << tensor_to_json(act_on_tensor(g, t)) << "\n";
  return kExitOk;
}

int fail(std::ostream &err, const char *kind, const std::string &msg, int code) {
  std::string line = msg;
  std::replace(line.begin(), line.end(), '\n', ' ');
  err << "error: " << kind << ": " << line << "\n";
  return code;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact verification toolkit for invariant decompositions of the 3x3 matrix multiplication tensor", "invmm"};
  app.require_subcommand(1, 1);
  Options o;

  auto *verify = app.add_subcommand("verify", "Check every elimination step for all type multisets");
  verify->add_option("--max-length", o.max_length, "Largest total orbit length")->capture_default_str();
  verify->add_option("--report", o.report, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto *orbit = app.add_subcommand("orbit-sum", "Orbit sum of a catalog family");
  orbit->add_option("--type", o.type, "Family id 1..44")->required()->check(CLI::Range(1, 44));
  orbit->add_option("--params", o.params, "Comma-separated parameter values (symbolic if omitted)");
  auto *gamma_flag = orbit->add_flag("--gamma", o.gamma, "Print gamma coordinates (default)");
  auto *full_flag = orbit->add_flag("--full", o.full, "Print the full orbit-sum tensor as JSON");
  gamma_flag->excludes(full_flag);

  app.add_subcommand("classes", "Print the classes Q1..Q12 of even indices");

  auto *multisets = app.add_subcommand("multisets", "List type multisets by total length");
  multisets->add_option("--max-length", o.max_length, "Largest total orbit length")->required();

  auto *brent = app.add_subcommand("brent", "Export a Brent equation system");
  brent->add_option("--mode", o.mode, "generic or invariant")->required()->check(CLI::IsMember({"generic", "invariant"}));
  brent->add_option("--rank", o.rank, "Number of rank-one terms (generic mode)");
  brent->add_option("--types", o.types, "Comma-separated family ids (invariant mode)");
  brent->add_option("--format", o.format, "json, text or m2")->capture_default_str();
  brent->add_option("--out", o.out_path, "Write to this file instead of stdout");

  auto *check = app.add_subcommand("check-solution", "Substitute an assignment into a JSON system");
  check->add_option("--system", o.system_path, "System JSON")->required();
  check->add_option("--assignment", o.assignment_path, "Assignment JSON")->required();

  auto *act = app.add_subcommand("act", "Apply a group element to a tensor");
  act->add_option("--g", o.element, "Element, e.g. a=(perm=(123),signs=+--);b=rho*sigma")->required();
  act->add_option("--in", o.in_path, "Tensor JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    return fail(err, "usage", e.what(), kExitUsage);
  }

  try {
    if (verify->parsed())
      return cmd_verify(o, out);
    if (orbit->parsed())
      return cmd_orbit_sum(o, out, err);
    if (app.got_subcommand("classes"))
      return cmd_classes(out);
    if (multisets->parsed())
      return cmd_multisets(o, out);
    if (brent->parsed())
      return cmd_brent(o, out);
    if (check->parsed())
      return cmd_check_solution(o, out);
    if (act->parsed())
      return cmd_act(o, out);
  } catch (const UsageError &e) {
    return fail(err, "usage", e.what(), kExitUsage);
  } catch (const UnknownFormat &e) {
    return fail(err, "usage", e.what(), kExitUsage);
  } catch (const ArityError &e) {
    return fail(err, "usage", e.what(), kExitUsage);
  } catch (const DomainError &e) {
    return fail(err, "usage", e.what(), kExitUsage);
  } catch (const IoError &e) {
    return fail(err, "io", e.what(), kExitInput);
  } catch (const ParseError &e) {
    return fail(err, "parse", e.what(), kExitInput);
  } catch (const MissingVariable &e) {
    return fail(err, "input", e.what(), kExitInput);
  } catch (const DivisionByZero &e) {
    return fail(err, "parse", e.what(), kExitInput);
  } catch (const Error &e) {
    return fail(err, "check", e.what(), kExitCheckFailed);
  }
  return fail(err, "usage", "no subcommand", kExitUsage);
}

} // namespace invmm
