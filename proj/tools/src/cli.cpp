#include "bvs_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

namespace bvs::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

const char* command_name(Command c) {
  switch (c) {
    case Command::solve: return "solve";
    case Command::mult: return "mult";
    case Command::count: return "count";
    case Command::ineq: return "ineq";
    case Command::topology: return "topology";
    default: return "bench";
  }
}

const char* solver_name(Solver s) {
  switch (s) {
    case Solver::grid: return "grid";
    case Solver::mrur: return "mrur";
    default: return "grur";
  }
}

BivPoly parse_line(const InputLine& l, std::size_t offset = 0) {
  try {
    return parse_poly(std::string_view(l.text).substr(offset));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), e.column() + offset, l.number);
  }
}

FilterConfig filter_of(const JobSpec& s) {
  FilterConfig c;
  c.enabled = s.filter;
  return c;
}

RealAlgNum shown(const RealAlgNum& a, const JobSpec& s) { return refine(a, std::min(s.refine_width, canonical_width())); }

std::string interval_text(const RealAlgNum& a, const char* var) {
  return "[" + to_string(a.lo) + ", " + to_string(a.hi) + "] by " + to_string(a.defining, var);
}

ordered_json alg_json(const RealAlgNum& a, const char* var) {
  return ordered_json{{"lo", to_string(a.lo)}, {"hi", to_string(a.hi)}, {"defining", to_string(a.defining, var)}};
}

void need_lines(const std::vector<InputLine>& lines, std::size_t lo, std::size_t hi, const char* what) {
  if (lines.size() < lo || lines.size() > hi) throw UsageError(std::string("input must contain ") + what);
}

void emit_solutions(const JobSpec& spec, const std::vector<BivPoly>& polys, const std::vector<SolutionBox>& sols,
                    std::ostream& out) {
  if (spec.format == Format::text) {
    for (const auto& s : sols) {
      out << "root: x in " << interval_text(shown(s.alpha, spec), "x") << "; y in "
          << interval_text(shown(s.beta, spec), "y");
      if (s.multiplicity) out << "; mult " << *s.multiplicity;
      out << "\n";
    }
    return;
  }
  ordered_json j;
  j["command"] = command_name(spec.command);
  j["solver"] = solver_name(spec.solver);
  j["refine_width"] = to_string(spec.refine_width);
  j["polynomials"] = ordered_json::array();
  for (const auto& p : polys) j["polynomials"].push_back(to_string(p));
  j["solutions"] = ordered_json::array();
  for (const auto& s : sols) {
    ordered_json e{{"x", alg_json(shown(s.alpha, spec), "x")}, {"y", alg_json(shown(s.beta, spec), "y")}};
    if (s.multiplicity) e["multiplicity"] = *s.multiplicity;
    j["solutions"].push_back(std::move(e));
  }
  out << j.dump(2) << "\n";
}

void verbose_solutions(const std::vector<SolutionBox>& sols, const BivPoly& F, const BivPoly& G, std::ostream& err) {
  UniPoly rx = resultant(F, G, Var::y), ry = resultant(F, G, Var::x);
  std::size_t bits = 0;
  for (const auto& s : sols)
    for (const RealAlgNum* a : {&s.alpha, &s.beta})
      bits += mpz_sizeinbase(a->lo.get_num_mpz_t(), 2) + mpz_sizeinbase(a->lo.get_den_mpz_t(), 2) +
              mpz_sizeinbase(a->hi.get_num_mpz_t(), 2) + mpz_sizeinbase(a->hi.get_den_mpz_t(), 2);
  err << "deg res_y = " << rx.degree() << ", deg res_x = " << ry.degree() << ", solutions = " << sols.size()
      << ", total endpoint bitsize = " << bits << "\n";
}

int cmd_solve(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  auto lines = read_input(spec.input_path);
  if (lines.size() < 2) throw UsageError("input must contain at least two polynomials");
  std::vector<BivPoly> polys;
  for (const auto& l : lines) polys.push_back(parse_line(l));
  const BivPoly &F = polys[0], &G = polys[1];
  FilterConfig cfg = filter_of(spec);
  auto sols = solve(spec.solver, F, G, cfg);
  // further lines are extra equations; multiplicities stay those of F and G
  if (polys.size() > 2) {
    std::vector<SolutionBox> kept;
    for (const auto& s : sols)
      if (std::all_of(polys.begin() + 2, polys.end(),
                      [&](const BivPoly& P) { return sign_at_biv(P, s.alpha, s.beta, cfg) == 0; }))
        kept.push_back(s);
    sols = std::move(kept);
  }
  if (spec.mult || spec.command == Command::mult) sols = with_multiplicities(F, G, sols, cfg);
  if (spec.verbose) verbose_solutions(sols, F, G, err);
  emit_solutions(spec, polys, sols, out);
  return ok;
}

int cmd_ineq(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  auto lines = read_input(spec.input_path);
  if (lines.size() < 2) throw UsageError("input must contain two polynomials followed by sign conditions");
  BivPoly P = parse_line(lines[0]), Q = parse_line(lines[1]);
  std::vector<SignCondition> conds;
  std::vector<BivPoly> polys{P, Q};
  for (std::size_t i = 2; i < lines.size(); ++i) {
    SignCondition c;
    switch (lines[i].text[0]) {
      case '>': c.relation = SignCondition::Relation::positive; break;
      case '<': c.relation = SignCondition::Relation::negative; break;
      case '=': c.relation = SignCondition::Relation::zero; break;
      default: throw ParseError("sign condition must start with '>', '<' or '='", 1, lines[i].number);
    }
    c.polynomial = parse_line(lines[i], 1);
    polys.push_back(c.polynomial);
    conds.push_back(std::move(c));
  }
  FilterConfig cfg = filter_of(spec);
  auto sols = simultaneous_inequalities(P, Q, conds, cfg);
  if (spec.mult) sols = with_multiplicities(P, Q, sols, cfg);
  if (spec.verbose) verbose_solutions(sols, P, Q, err);
  emit_solutions(spec, polys, sols, out);
  return ok;
}

int cmd_count(const JobSpec& spec, std::ostream& out, std::ostream&) {
  auto lines = read_input(spec.input_path);
  need_lines(lines, 1, 2, "one polynomial and an optional rational fiber value");
  BivPoly F = parse_line(lines[0]);
  if (F.deg_y() < 1) throw PreconditionError("count: the polynomial must depend on y");
  FilterConfig cfg = filter_of(spec);
  struct Row {
    RealAlgNum x;
    std::string kind;
    int roots;
  };
  std::vector<Row> rows;
  if (lines.size() == 2) {
    Rational c;
    try {
      c = parse_rational(lines[1].text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 1, lines[1].number);
    }
    RealAlgNum a = RealAlgNum::rational(c);
    rows.push_back({a, "given", count_fiber_roots(F, a, FiberRange::all(), cfg, LeadingMode::truncate)});
  } else {
    UniPoly r = resultant(F, derivative(F, Var::y), Var::y);
    if (r.is_zero()) throw PreconditionError("count: F has a square factor; pass its square-free part");
    RootList xs = isolate(r);
    auto q = intermediate_points(xs);
    for (std::size_t i = 0; i < q.size(); ++i) {
      RealAlgNum qi = RealAlgNum::rational(q[i]);
      rows.push_back({qi, "intermediate", count_fiber_roots(F, qi, FiberRange::all(), cfg, LeadingMode::truncate)});
      if (i < xs.roots.size()) {
        RealAlgNum a = refine(xs.roots[i], canonical_width());
        rows.push_back({a, "critical", count_fiber_roots(F, a, FiberRange::all(), cfg, LeadingMode::truncate)});
      }
    }
  }
  if (spec.format == Format::text) {
    for (const auto& r : rows) {
      out << "fiber: x ";
      if (r.x.is_point()) out << "= " << to_string(r.x.lo);
      else out << "in " << interval_text(shown(r.x, spec), "x");
      out << "; " << r.kind << "; roots " << r.roots << "\n";
    }
    return ok;
  }
  ordered_json j;
  j["command"] = "count";
  j["polynomial"] = to_string(F);
  j["fibers"] = ordered_json::array();
  for (const auto& r : rows)
    j["fibers"].push_back({{"x", alg_json(shown(r.x, spec), "x")}, {"kind", r.kind}, {"roots", r.roots}});
  out << j.dump(2) << "\n";
  return ok;
}

const char* kind_name(TopologyVertex::Kind k) {
  switch (k) {
    case TopologyVertex::Kind::critical: return "critical";
    case TopologyVertex::Kind::end: return "end";
    default: return "intermediate";
  }
}

int cmd_topology(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  auto lines = read_input(spec.input_path);
  need_lines(lines, 1, 1, "exactly one polynomial");
  BivPoly F = parse_line(lines[0]);
  TopologyGraph g = curve_topology(F, filter_of(spec));
  if (spec.verbose)
    err << "fibers = " << g.fibers.size() << ", components = " << g.components() << ", first Betti number = " << g.betti1()
        << "\n";
  if (spec.format == Format::text) {
    out << "topology: vertices " << g.vertices.size() << "; edges " << g.edges.size() << "; shear "
        << to_string(g.shear) << "\n";
    out << to_dot(g);
    return ok;
  }
  ordered_json j;
  j["command"] = "topology";
  j["polynomial"] = to_string(F);
  j["shear"] = to_string(g.shear);
  j["fibers"] = ordered_json::array();
  for (std::size_t f = 0; f < g.fibers.size(); ++f)
    j["fibers"].push_back({{"x", alg_json(shown(g.fibers[f], spec), "x")}, {"critical", static_cast<bool>(g.fiber_is_critical[f])}});
  j["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices) {
    ordered_json e{{"fiber", v.fiber},
                   {"kind", kind_name(v.kind)},
                   {"critical_point", v.critical_point},
                   {"y_lo", to_string(v.y_lo)},
                   {"y_hi", to_string(v.y_hi)},
                   {"above", v.above}};
    if (v.y) e["y"] = alg_json(*v.y, "y");
    j["vertices"].push_back(std::move(e));
  }
  j["edges"] = ordered_json::array();
  for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
  j["dot"] = to_dot(g);
  out << j.dump(2) << "\n";
  return ok;
}

int cmd_bench(const JobSpec& spec, std::ostream& out, std::ostream&) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(spec.input_path)) throw UsageError("bench expects a directory of .sys files");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(spec.input_path))
    if (e.path().extension() == ".sys") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  FilterConfig cfg = filter_of(spec);
  bool agree = true;
  ordered_json all = ordered_json::array();
  for (const auto& f : files) {
    auto lines = read_input(f.string());
    if (lines.size() != 2) continue;  // not a system
    BivPoly F, G;
    try {
      F = parse_line(lines[0]);
      G = parse_line(lines[1]);
    } catch (const ParseError& e) {
      throw UsageError(f.string() + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
    }
    ordered_json row{{"system", f.filename().string()}};
    std::vector<SolutionBox> ref;
    bool have_ref = false;
    std::string outcome_ref;
    std::ostringstream line;
    line << "bench: " << f.filename().string();
    for (Solver s : {Solver::grid, Solver::grur, Solver::mrur}) {
      auto t0 = std::chrono::steady_clock::now();
      std::string outcome;
      std::vector<SolutionBox> sols;
      try {
        sols = solve(s, F, G, cfg);
        outcome = std::to_string(sols.size());
      } catch (const GenericityError&) {
        outcome = "generic-position error";
      } catch (const CoprimalityError&) {
        outcome = "coprimality error";
      }
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      bool counted = outcome.find("error") == std::string::npos;
      if (s != Solver::mrur || outcome != "generic-position error") {
        if (!have_ref) {
          have_ref = true;
          ref = sols;
          outcome_ref = outcome;
        } else if (outcome != outcome_ref || (counted && !same_solutions(ref, sols, cfg))) {
          agree = false;
          line << " DISAGREE";
        }
      }
      std::ostringstream t;
      t.precision(3);
      t << std::fixed << ms;
      line << "; " << solver_name(s) << " " << outcome << " (" << t.str() << " ms)";
      row[solver_name(s)] = {{"outcome", outcome}, {"ms", ms}};
    }
    if (spec.format == Format::text) out << line.str() << "\n";
    all.push_back(std::move(row));
  }
  if (spec.format == Format::structured) out << all.dump(2) << "\n";
  if (!agree) throw InternalError("bench: solvers disagree");
  return ok;
}

}  // namespace

std::vector<InputLine> read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::vector<InputLine> lines;
  std::string s;
  std::size_t n = 0;
  while (std::getline(in, s)) {
    ++n;
    if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = s.find_last_not_of(" \t\r");
    lines.push_back({n, s.substr(b, e - b + 1)});
  }
  return lines;
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    switch (spec.command) {
      case Command::solve:
      case Command::mult: return cmd_solve(spec, out, err);
      case Command::ineq: return cmd_ineq(spec, out, err);
      case Command::count: return cmd_count(spec, out, err);
      case Command::topology: return cmd_topology(spec, out, err);
      case Command::bench: return cmd_bench(spec, out, err);
    }
  } catch (const ParseError& e) {
    err << spec.input_path << ":" << e.line() << ":" << e.column() << ": parse error: " << e.what() << "\n";
    return usage_error;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const GenericityError& e) {
    err << "genericity error (" << e.condition() << "): " << e.what() << "\n";
    return precondition;
  } catch (const CoprimalityError& e) {
    err << "coprimality error: " << e.what() << "\n";
    return precondition;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return precondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n"
        << "job: command=" << command_name(spec.command) << " solver=" << solver_name(spec.solver)
        << " input=" << spec.input_path << " filter=" << (spec.filter ? "on" : "off") << "\n";
    try {
      for (const auto& l : read_input(spec.input_path)) err << "  line " << l.number << ": " << l.text << "\n";
    } catch (...) {
    }
    return internal;
  }
  return internal;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact real solving of bivariate polynomial systems", "bvsolve"};
  JobSpec spec;
  std::string command, solver = "grur", format = "text", width = "1/65536";
  bool no_filter = false;
  app.add_option("command", command, "solve | mult | count | ineq | topology | bench")
      ->required()
      ->check(CLI::IsMember({"solve", "mult", "count", "ineq", "topology", "bench"}));
  app.add_option("input", spec.input_path, "input file (a directory for bench)")->required();
  app.add_option("--solver", solver, "grid | mrur | grur")->check(CLI::IsMember({"grid", "mrur", "grur"}));
  app.add_flag("--mult", spec.mult, "report intersection multiplicities");
  app.add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--refine-width", width, "interval width of reported roots, a positive rational");
  app.add_flag("--no-filter", no_filter, "disable the interval filter");
  app.add_flag("--verbose", spec.verbose, "diagnostics on stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }
  static const std::pair<const char*, Command> commands[] = {{"solve", Command::solve}, {"mult", Command::mult},
                                                             {"count", Command::count}, {"ineq", Command::ineq},
                                                             {"topology", Command::topology}, {"bench", Command::bench}};
  for (const auto& [n, c] : commands)
    if (command == n) spec.command = c;
  spec.solver = solver == "grid" ? Solver::grid : solver == "mrur" ? Solver::mrur : Solver::grur;
  spec.format = format == "structured" ? Format::structured : Format::text;
  spec.filter = !no_filter;
  try {
    spec.refine_width = parse_rational(width);
  } catch (const std::invalid_argument& e) {
    err << "error: --refine-width: " << e.what() << "\n";
    return usage_error;
  }
  if (sgn(spec.refine_width) <= 0) {
    err << "error: --refine-width must be positive\n";
    return usage_error;
  }
  return run(spec, out, err);
}

}  // namespace bvs::cli
