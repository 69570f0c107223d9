// qnull: command-line front end for the quaternion Nullstellensatz kernel.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qnull/qnull.hpp>

namespace {

using namespace qnull;

enum class Status { Ok, Error, NotFound, PossiblyIncomplete };

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Error: return "error";
    case Status::NotFound: return "not-found";
    case Status::PossiblyIncomplete: return "possibly-incomplete";
  }
  return "error";
}

struct Report {
  std::string command;
  Status status = Status::Ok;
  json payload = json::object();
  std::string provenance;
  std::vector<std::pair<std::string, std::string>> lines;  // text mode

  void add(const std::string& key, const std::string& value, json j) {
    lines.emplace_back(key, value);
    payload[key] = std::move(j);
  }
  void add(const std::string& key, const std::string& value) { add(key, value, value); }
};

void emit(const Report& r, bool as_json) {
  if (as_json) {
    json out{{"command", r.command},
             {"status", status_name(r.status)},
             {"payload", r.payload},
             {"provenance", r.provenance}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::size_t width = std::string("provenance").size();
  for (const auto& [k, v] : r.lines) width = std::max(width, k.size());
  auto row = [&](const std::string& k, const std::string& v) {
    std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  };
  row("status", status_name(r.status));
  for (const auto& [k, v] : r.lines) row(k, v);
  row("provenance", r.provenance);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t n = 0; n < parts.size(); ++n) out += (n ? sep : "") + parts[n];
  return out;
}

std::vector<Quat> parse_quats(const std::vector<std::string>& texts) {
  std::vector<Quat> out;
  for (const auto& t : texts) out.push_back(parse_quat(t));
  return out;
}

json read_json_arg(const std::string& arg) {
  if (arg == "-") return json::parse(std::cin);
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw InvalidInput("cannot open " + arg);
  return json::parse(in);
}

std::string qvector_str(const QVector& v) {
  std::vector<std::string> parts;
  for (const auto& q : v) parts.push_back(q.str());
  return "(" + join(parts, ", ") + ")";
}

std::string point_str(const CommutingPoint& pt) { return qvector_str(pt.components()); }

// Subcommand handlers.

Report cmd_eval(const std::string& poly, const std::string& at, const std::string& side) {
  UPoly p = parse_upoly(poly);
  Quat a = parse_quat(at);
  Report r{"eval"};
  bool left = side == "left";
  Quat v = left ? eval_left(p, a) : eval_right(p, a);
  r.add("side", side);
  r.add("value", v.str(), to_json(v));
  r.provenance = left ? "left evaluation, product formula" : "right evaluation";
  return r;
}

Report cmd_roots(const std::string& poly) {
  UPoly p = parse_upoly(poly);
  auto rep = right_roots(p);
  Report r{"roots"};
  json classes = json::array();
  std::vector<std::string> text;
  for (const auto& c : rep.classes) {
    classes.push_back(to_json(c));
    text.push_back(c.str());
  }
  r.add("classes", text.empty() ? "none" : join(text, ", "), classes);
  r.status = rep.status == RootStatus::Complete ? Status::Ok : Status::PossiblyIncomplete;
  r.provenance = "root classes via the companion polynomial";
  return r;
}

Report cmd_minpoly(const std::string& element, const std::vector<std::string>& over, bool right) {
  Quat b = parse_quat(element);
  auto set = parse_quats(over);
  CentralizerDesc c = centralizer_of_set(set);
  UPoly p = right ? min_right_poly(b, c) : min_left_poly(b, c);
  Report r{"minpoly"};
  r.add("centralizer", c.str());
  r.add("polynomial", p.str(), to_json(p));
  r.add("degree", std::to_string(p.degree()), p.degree());
  r.provenance = right ? "minimal right polynomial over a centralizer" : "minimal left polynomial over a centralizer";
  return r;
}

Report cmd_wedderburn(const std::string& element, const std::vector<std::string>& conj) {
  Quat b = parse_quat(element);
  auto gens = parse_quats(conj);
  UPoly p = wedderburn_lclm(b, gens);
  auto e = e_space(p, b);
  Report r{"wedderburn"};
  r.add("polynomial", p.str(), to_json(p));
  r.add("dim_E", std::to_string(e.dim()), e.dim());
  r.provenance = "Wedderburn polynomial of a conjugation orbit";
  return r;
}

Report cmd_espace(const std::string& poly, const std::string& root) {
  UPoly p = parse_upoly(poly);
  Quat a = parse_quat(root);
  auto e = e_space(p, a);
  Report r{"espace"};
  std::vector<std::string> text;
  json basis = json::array();
  for (const auto& q : e.basis) {
    text.push_back(q.str());
    basis.push_back(to_json(q));
  }
  r.add("over", e.over.str());
  r.add("dim", std::to_string(e.dim()), e.dim());
  r.add("basis", "{" + join(text, ", ") + "}", basis);
  r.provenance = "solution space E(p,a) as a right C(a)-space";
  return r;
}

Report cmd_indep(const std::string& at, const std::vector<std::string>& bs_text) {
  Quat a = parse_quat(at);
  auto bs = parse_quats(bs_text);
  std::vector<Quat> assignment{a};
  assignment.insert(assignment.end(), bs.begin(), bs.end());
  EvalOutcome l = eval_ratexpr(build_L(static_cast<int>(bs.size())), assignment);
  bool via_l = l.is_defined_nonzero(), oracle = indep_oracle(a, bs);
  if (via_l != oracle) throw InternalError("L_n criterion disagrees with the rank computation");
  Report r{"indep"};
  r.add("L_n", l.str(), l.value ? json(to_json(*l.value)) : json(nullptr));
  r.add("independent", via_l ? "true" : "false", via_l);
  r.add("over", centralizer_of(a).str());
  r.provenance = "L_n independence criterion";
  return r;
}

Report cmd_degree(const std::string& at, const std::string& bt) {
  Quat a = parse_quat(at), b = parse_quat(bt);
  int via_f = left_degree_via_F(a, b), oracle = left_degree_via_oracle(a, b);
  if (via_f != oracle) throw InternalError("F_n criterion disagrees with the minimal polynomial");
  int right = right_degree(b, a);
  Report r{"degree"};
  r.add("left_degree", std::to_string(oracle), oracle);
  r.add("right_degree", std::to_string(right), right);
  r.provenance = "F_n algebraicity criterion, degree symmetry";
  return r;
}

Report cmd_witness(const std::string& at, const std::string& bt) {
  Quat a = parse_quat(at), b = parse_quat(bt);
  auto w = closure_witness(a, b);
  Report r{"witness"};
  r.add("coefficients", qvector_str(w), to_json(w));
  r.provenance = "closure under centralizers, degree symmetry";
  return r;
}

Report cmd_reduce(const std::string& poly, const std::vector<std::string>& point) {
  CommutingPoint pt(parse_quats(point));
  MPoly p = parse_mpoly(poly, pt.size());
  auto red = reduce_mod_point(p, pt);
  Report r{"reduce"};
  std::vector<std::string> text;
  json qs = json::array();
  for (const auto& q : red.quotients) {
    text.push_back(q.str());
    qs.push_back(to_json(q));
  }
  r.add("remainder", red.remainder.str(), to_json(red.remainder));
  r.add("quotients", "[" + join(text, "; ") + "]", qs);
  r.add("in_point_ideal", red.remainder.is_zero() ? "true" : "false", red.remainder.is_zero());
  r.provenance = "point ideals, division by x_i - a_i";
  return r;
}

Report cmd_eigen(const std::string& module_arg, const std::vector<std::string>& seed_text) {
  ModulePresentation mod = module_from_json(read_json_arg(module_arg));
  QVector seed;
  if (seed_text.empty()) {
    seed.assign(mod.m, Quat());
    if (mod.m > 0) seed[0] = Quat(1);
  } else {
    seed = parse_quats(seed_text);
  }
  auto out = find_eigen_tuple(mod, seed);
  Report r{"eigen"};
  r.provenance = "eigen-tuple extraction for commuting module actions";
  if (out.found()) {
    r.add("vector", qvector_str(out.tuple->v), to_json(out.tuple->v));
    r.add("point", point_str(out.tuple->point), to_json(out.tuple->point));
    return r;
  }
  r.status = Status::NotFound;
  r.add("reason", "RootNotFound");
  r.add("variable", "x" + std::to_string(out.unsolved_var + 1), out.unsolved_var + 1);
  r.add("polynomial", out.unsolved->str(), to_json(*out.unsolved));
  return r;
}

Report cmd_rabinowitsch(const std::vector<std::string>& ideal_text, const std::string& p_text, const std::string& a_text,
                        unsigned max_n, unsigned degbound, std::size_t nvars) {
  std::vector<MPoly> gens;
  for (const auto& g : ideal_text) gens.push_back(parse_mpoly(g, nvars));
  LeftIdealGens ideal(std::move(gens), nvars);
  MPoly p = parse_mpoly(p_text, nvars);
  Quat a = parse_quat(a_text);
  auto cert = find_certificate(ideal, p, a, max_n, degbound);
  Report r{"rabinowitsch"};
  r.provenance = "explicit Nullstellensatz certificate (ap)^N in I + I(ap) + ... + I(ap)^N";
  if (!cert) {
    r.status = Status::NotFound;
    r.add("reason", "NotFoundWithinBounds");
    r.add("maxN", std::to_string(max_n), max_n);
    r.add("degbound", std::to_string(degbound), degbound);
    return r;
  }
  r.add("N", std::to_string(cert->N), cert->N);
  for (std::size_t k = 0; k < cert->cofactors.size(); ++k)
    for (std::size_t j = 0; j < cert->cofactors[k].size(); ++j)
      if (!cert->cofactors[k][j].is_zero())
        r.lines.emplace_back("h[" + std::to_string(k) + "][" + std::to_string(j) + "]", cert->cofactors[k][j].str());
  r.payload["certificate"] = to_json(*cert);
  r.add("verified", verify_certificate(ideal, p, a, *cert) ? "true" : "false", true);
  return r;
}

int cmd_selfcheck(std::size_t count, std::uint64_t seed, bool as_json) {
  auto results = run_selfcheck(seed, count);
  bool all = true;
  json suites = json::array();
  for (const auto& s : results) {
    all = all && s.ok();
    suites.push_back({{"name", s.name},
                      {"passed", s.passed},
                      {"total", s.total},
                      {"seconds", s.seconds},
                      {"failures", s.failures}});
  }
  if (as_json) {
    json out{{"command", "selfcheck"}, {"status", all ? "ok" : "error"}, {"payload", {{"suites", suites}}},
             {"provenance", "kernel property suites"}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& s : results) {
      std::cout << (s.ok() ? "PASS  " : "FAIL  ") << s.name << std::string(28 - std::min<std::size_t>(27, s.name.size()), ' ')
                << s.passed << "/" << s.total << "\n";
      for (const auto& f : s.failures) std::cout << "      " << f << "\n";
    }
    std::cout << (all ? "all suites passed" : "some suites failed") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quaternion polynomial and Nullstellensatz toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  std::string poly, at, side = "left", element, root, module_arg, p_text, a_text, b_text;
  std::vector<std::string> over, conj, bs, point, seed_text, ideal_text;
  bool right = false;
  unsigned max_n = 5, degbound = 2;
  std::size_t nvars = 1, count = 500;
  std::uint64_t seed = 1;

  auto* eval = app.add_subcommand("eval", "Evaluate p at a");
  eval->add_option("--poly", poly, "Polynomial in x")->required();
  eval->add_option("--at", at, "Quaternion")->required();
  eval->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));

  auto* roots = app.add_subcommand("roots", "Conjugacy classes of right roots");
  roots->add_option("--poly", poly, "Polynomial in x")->required();

  auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial over a centralizer");
  minpoly->add_option("--element", element, "Quaternion b")->required();
  minpoly->add_option("--over", over, "Elements whose common centralizer is used (repeatable)");
  minpoly->add_flag("--right", right, "Minimal right polynomial instead");

  auto* wedderburn = app.add_subcommand("wedderburn", "Wedderburn polynomial of a conjugation orbit");
  wedderburn->add_option("--element", element, "Quaternion b")->required();
  wedderburn->add_option("--conj", conj, "Conjugating generator (repeatable)")->required();

  auto* espace = app.add_subcommand("espace", "Solution space E(p, a)");
  espace->add_option("--poly", poly, "Polynomial in x")->required();
  espace->add_option("--root", root, "Right root a")->required();

  auto* indep = app.add_subcommand("indep", "Left independence over C(a) via L_n");
  indep->add_option("--a", a_text, "Quaternion a")->required();
  indep->add_option("--b", bs, "Vector (repeatable)")->required();

  auto* degree = app.add_subcommand("degree", "Left degree of b over C(a) via F_n");
  degree->add_option("--a", a_text, "Quaternion a")->required();
  degree->add_option("--b", b_text, "Quaternion b")->required();

  auto* witness = app.add_subcommand("witness", "Coefficients in C(b) annihilating a on the right");
  witness->add_option("--a", a_text, "Quaternion a")->required();
  witness->add_option("--b", b_text, "Quaternion b")->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce p modulo a point ideal");
  reduce->add_option("--poly", poly, "Polynomial in x1..xn")->required();
  reduce->add_option("--point", point, "Point component (repeatable, in order)")->required();

  auto* eigen = app.add_subcommand("eigen", "Common eigen-tuple of a module presentation");
  eigen->add_option("--module", module_arg, "JSON file, inline JSON, or - for stdin")->required();
  eigen->add_option("--seed", seed_text, "Seed vector entries (repeatable)");

  auto* rab = app.add_subcommand("rabinowitsch", "Search for a Nullstellensatz certificate");
  rab->add_option("--ideal", ideal_text, "Ideal generator (repeatable)")->required();
  rab->add_option("--p", p_text, "Polynomial p")->required();
  rab->add_option("--a", a_text, "Quaternion a")->default_str("1");
  rab->add_option("--maxN", max_n, "Largest exponent tried")->check(CLI::PositiveNumber);
  rab->add_option("--degbound", degbound, "Cofactor total degree bound");
  rab->add_option("--nvars", nvars, "Number of variables")->check(CLI::PositiveNumber);

  auto* selfcheck = app.add_subcommand("selfcheck", "Run every kernel property suite");
  selfcheck->add_option("--count", count, "Cases per suite")->check(CLI::PositiveNumber);
  selfcheck->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report report;
  try {
    if (*selfcheck) return cmd_selfcheck(count, seed, as_json);
    if (a_text.empty()) a_text = "1";
    if (*eval) report = cmd_eval(poly, at, side);
    else if (*roots) report = cmd_roots(poly);
    else if (*minpoly) report = cmd_minpoly(element, over, right);
    else if (*wedderburn) report = cmd_wedderburn(element, conj);
    else if (*espace) report = cmd_espace(poly, root);
    else if (*indep) report = cmd_indep(a_text, bs);
    else if (*degree) report = cmd_degree(a_text, b_text);
    else if (*witness) report = cmd_witness(a_text, b_text);
    else if (*reduce) report = cmd_reduce(poly, point);
    else if (*eigen) report = cmd_eigen(module_arg, seed_text);
    else if (*rab) report = cmd_rabinowitsch(ideal_text, p_text, a_text, max_n, degbound, nvars);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    // Parse errors, invalid input, division by zero, malformed JSON.
    Report err{app.get_subcommands().front()->get_name(), Status::Error};
    err.add("message", e.what());
    err.provenance = "input validation";
    emit(err, as_json);
    return 2;
  }
  emit(report, as_json);
  return 0;
}
