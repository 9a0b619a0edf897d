#pragma once

// Command-line front end. JSON on stdout, one-line summary on stderr.
// Exit codes: 0 pass, 1 verification failure (report still emitted), 2 input error.

#include "z22/catalog.hpp"
#include "z22/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace z22::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

struct Options {
  std::string input;   // file path; empty or "-" for stdin
  std::string output;  // file path; empty for stdout
  unsigned workers = 1;
  double tol = 1e-10;
  double hermiticity_tol = 1e-12;
  int p = 1;
  int cutoff = 8;
  int margin = 4;
  std::int64_t dim_cap = 4096;
  std::string algebra_file;
  std::string builtin_name;
  std::vector<std::string> degrees;
  std::string entry_pool;
  std::optional<std::size_t> sparsity_budget;
  std::optional<std::uint64_t> cap;
  bool canonicalize = false;
  bool no_verify = false;
  std::string name;
};

inline io::Json read_input(const Options& o, std::istream& in) {
  if (o.input.empty() || o.input == "-") return io::read_stream(in);
  std::ifstream f(o.input);
  if (!f) throw InputError(o.input + ": cannot open");
  return io::read_stream(f, o.input);
}

inline void write_output(const Options& o, std::ostream& out, const io::Json& j) {
  const auto text = io::dump(j);
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw InputError(o.output + ": cannot write");
  f << text;
}

inline Degree parse_degree(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ',' && c != ' ') s += c;
  if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1'))
    throw InputError("malformed degree '" + text + "', expected i,j with i,j in {0,1}");
  return Degree(s[0] - '0', s[1] - '0');
}

inline std::vector<Rational> parse_pool(const std::string& text) {
  std::vector<Rational> pool;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) pool.push_back(parse_rational(item));
  if (pool.empty()) throw InputError("--entry-pool: empty");
  return pool;
}

inline io::Json shape_json(Degree a, Degree b, Degree c) {
  const auto s = classify_shapes(a, b, c);
  io::Json terms = io::Json::array();
  for (const auto& t : s.terms) terms.push_back({{"outer", to_string(t.outer)}, {"inner", to_string(t.inner)}});
  const bool z2 = a.i == 0 && b.i == 0 && c.i == 0;
  return {{"degrees", {a.str(), b.str(), c.str()}}, {"shape", to_string(s.shape)}, {"z2_sector", z2}, {"terms", terms}};
}

inline int cmd_check(const Options& o, Streams s) {
  const auto A = io::algebra_from_json(read_input(o, s.in));
  const auto closure = check_closure(A);
  const auto anti = check_antisymmetry(A);
  const auto jacobi = check_all_jacobi(A, o.workers);
  auto j = io::to_json(jacobi, A);
  j["closure"] = io::to_json(closure, A);
  j["antisymmetry"] = io::to_json(anti, A);
  write_output(o, s.out, j);
  const bool ok = closure.passed() && anti.passed() && jacobi.passed();
  s.err << "check " << A.name() << ": " << jacobi.checked << " triples, " << jacobi.failures.size()
        << " Jacobi failures, " << closure.failures.size() << " closure failures, " << anti.failures.size()
        << " antisymmetry failures\n";
  return ok ? kPass : kFail;
}

inline int cmd_classify(const Options& o, Streams s) {
  if (!o.degrees.empty()) {
    if (o.degrees.size() != 3) throw InputError("classify: expected three degrees");
    write_output(o, s.out, shape_json(parse_degree(o.degrees[0]), parse_degree(o.degrees[1]), parse_degree(o.degrees[2])));
    s.err << "classify: " << to_string(classify_shapes(parse_degree(o.degrees[0]), parse_degree(o.degrees[1]),
                                                       parse_degree(o.degrees[2]))
                                           .shape)
          << "\n";
    return kPass;
  }
  io::Json classes = io::Json::array();
  io::Json shapes = io::Json::object();
  for (const char* id : {"comm-comm", "comm-anti", "mixed-anti-in-comm", "anti-anti"}) shapes[id] = 0;
  for (const auto& c : identity_classes()) {
    auto j = shape_json(c.degrees[0], c.degrees[1], c.degrees[2]);
    shapes[j["shape"].get<std::string>()] = shapes[j["shape"].get<std::string>()].get<int>() + 1;
    classes.push_back(std::move(j));
  }
  write_output(o, s.out, {{"classes", classes.size()}, {"shape_counts", shapes}, {"identities", classes}});
  s.err << "classify: " << classes.size() << " identity classes\n";
  return kPass;
}

inline int cmd_constraints(const Options& o, Streams s) {
  const auto cs = io::coefficients_from_json(read_input(o, s.in));
  const auto report = check_constraints(cs, o.workers);
  write_output(o, s.out, io::to_json(report));
  s.err << "constraints: " << report.checked << " instances, " << report.failures.size() << " failures\n";
  return report.passed() ? kPass : kFail;
}

inline int cmd_assemble(const Options& o, Streams s) {
  const auto cs = io::coefficients_from_json(read_input(o, s.in));
  NamingScheme names;
  if (!o.name.empty()) names.algebra = o.name;
  try {
    const auto A = assemble(cs, names, o.no_verify ? AssemblyCheck::Skip : AssemblyCheck::Verify);
    write_output(o, s.out, io::to_json(A));
    s.err << "assemble: " << A.size() << " generators\n";
    return kPass;
  } catch (const ConstraintViolation& e) {
    write_output(o, s.out, io::to_json(e.report()));
    s.err << "assemble: " << e.what() << "\n";
    return kFail;
  }
}

inline int cmd_decompose(const Options& o, Streams s) {
  const auto A = io::algebra_from_json(read_input(o, s.in));
  const auto cs = decompose(A);
  write_output(o, s.out, io::to_json(cs));
  s.err << "decompose " << A.name() << ": dimL01=" << cs.dim01 << " dimL10=" << cs.dim10 << "\n";
  return kPass;
}

inline int cmd_solve(const Options& o, Streams s) {
  SolverConfig config;
  if (!o.input.empty()) config = io::solver_config_from_json(read_input(o, s.in));
  if (!o.entry_pool.empty()) config.entry_pool = parse_pool(o.entry_pool);
  if (o.sparsity_budget) config.sparsity_budget = *o.sparsity_budget;
  if (o.cap) config.cap = *o.cap;
  if (o.canonicalize) config.canonicalize = true;
  config.workers = o.workers;
  const auto result = solve(config);
  write_output(o, s.out, io::to_json(result));
  s.err << "solve: " << result.solutions.size() << " solution(s)\n";
  return kPass;
}

inline int cmd_builtin(const Options& o, Streams s) {
  const auto& n = o.builtin_name;
  io::Json j;
  if (n == "u11-z22") {
    j = io::to_json(catalog::u11_z22_algebra());
  } else if (n == "u11-z2") {
    j = io::to_json(catalog::u11_z2_subalgebra());
  } else if (n == "paper-solution") {
    j = io::to_json(catalog::paper_solution());
  } else if (n == "trivial-solution") {
    j = io::to_json(catalog::trivial_solution());
  } else if (n == "u11-structure-constants") {
    const auto C = catalog::u11_structure_constants();
    j = {{"dimL00", C.dim()}, {"C", io::to_json(C)}};
  } else {
    throw InputError("unknown builtin '" + n +
                     "'; expected u11-z22, u11-z2, paper-solution, trivial-solution or u11-structure-constants");
  }
  write_output(o, s.out, j);
  s.err << "builtin " << n << "\n";
  return kPass;
}

inline bool all_within(const std::vector<NamedResidual>& rs, double tol) {
  for (const auto& r : rs)
    if (!(r.residual <= tol)) return false;
  return true;
}

inline int cmd_rep_verify(const Options& o, Streams s) {
  GradedAlgebra A;
  if (o.algebra_file.empty()) {
    A = catalog::u11_z22_algebra();
  } else {
    Options f = o;
    f.input = o.algebra_file;
    A = io::algebra_from_json(read_input(f, s.in));
  }
  const auto g = green_combined(o.p, o.cutoff, o.dim_cap);
  const auto safe = safe_subspace(g.space, o.margin);
  const auto map = realize(g);
  const auto report = verify_realization(map, A, o.tol, o.margin, o.workers);
  const auto components = green_component_relations(g, safe);
  const auto parabose = parabose_relations(g.a, g.a_dag, safe);
  const auto parafermi = parafermi_relations(g.f, g.f_dag, o.p, safe);
  const auto relative = relative_relations(g.a, g.a_dag, g.f, g.f_dag, safe);
  const auto herm = hermiticity_relations(map);

  auto j = io::to_json(report, A);
  j["p"] = o.p;
  j["cutoff"] = o.cutoff;
  j["dimension"] = g.a.rows();
  j["safe_states"] = safe.states.size();
  j["convention"] = kGreenConvention;
  j["components"] = io::to_json(components);
  j["parabose"] = io::to_json(parabose);
  j["parafermi"] = io::to_json(parafermi);
  j["relative"] = io::to_json(relative);
  j["hermiticity_tolerance"] = io::format_double(o.hermiticity_tol);
  j["hermiticity"] = io::to_json(herm);
  write_output(o, s.out, j);

  const bool ok = report.passed() && all_within(components, o.tol) && all_within(parabose, o.tol) &&
                  all_within(parafermi, o.tol) && all_within(relative, o.tol) && all_within(herm, o.hermiticity_tol);
  s.err << "rep-verify p=" << o.p << " cutoff=" << o.cutoff << ": " << report.entries.size() << " entries, "
        << report.failures() << " failures, max residual " << report.max_residual() << "\n";
  return ok ? kPass : kFail;
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, Streams s) {
  CLI::App app{"Verification engine and solver for (Z2)^2-graded Lie algebras", "z22"};
  app.require_subcommand(1);
  detail::Options o;
  int (*handler)(const detail::Options&, Streams) = nullptr;

  const auto io_opts = [&](CLI::App* c, const char* what) {
    c->add_option("input", o.input, std::string(what) + " (default stdin)");
    c->add_option("-o,--output", o.output, "write JSON here instead of stdout");
  };
  const auto workers = [&](CLI::App* c) {
    c->add_option("--workers", o.workers, "parallel workers")->check(CLI::Range(1u, 256u));
  };

  auto* check = app.add_subcommand("check", "closure, antisymmetry and Jacobi sweep of an algebra file");
  io_opts(check, "algebra JSON");
  workers(check);
  check->callback([&] { handler = detail::cmd_check; });

  auto* classify = app.add_subcommand("classify", "Jacobi shape of three degrees, or the full census");
  classify->add_option("degrees", o.degrees, "three degrees such as 1,0 0,1 1,1");
  classify->add_option("-o,--output", o.output, "write JSON here instead of stdout");
  classify->callback([&] { handler = detail::cmd_classify; });

  auto* constraints = app.add_subcommand("constraints", "evaluate every relation family on a coefficient set");
  io_opts(constraints, "coefficient-set JSON");
  workers(constraints);
  constraints->callback([&] { handler = detail::cmd_constraints; });

  auto* assemble_cmd = app.add_subcommand("assemble", "coefficient set to algebra");
  io_opts(assemble_cmd, "coefficient-set JSON");
  assemble_cmd->add_option("--name", o.name, "algebra name");
  assemble_cmd->add_flag("--no-verify", o.no_verify, "skip the constraint check");
  assemble_cmd->callback([&] { handler = detail::cmd_assemble; });

  auto* decompose_cmd = app.add_subcommand("decompose", "algebra to coefficient set");
  io_opts(decompose_cmd, "algebra JSON");
  decompose_cmd->callback([&] { handler = detail::cmd_decompose; });

  auto* solve_cmd = app.add_subcommand("solve", "staged search for coefficient sets");
  solve_cmd->add_option("config", o.input, "solver config JSON (default built-in config)");
  solve_cmd->add_option("-o,--output", o.output, "write JSON here instead of stdout");
  solve_cmd->add_option("--entry-pool", o.entry_pool, "comma-separated rationals, e.g. -1,0,1,2");
  solve_cmd->add_option("--sparsity-budget", o.sparsity_budget, "max nonzeros per l, m, n matrix");
  solve_cmd->add_option("--cap", o.cap, "refuse searches larger than this");
  solve_cmd->add_flag("--canonicalize", o.canonicalize, "deduplicate under signed permutations");
  workers(solve_cmd);
  solve_cmd->callback([&] { handler = detail::cmd_solve; });

  auto* builtin = app.add_subcommand("builtin", "emit a catalog entry");
  builtin->add_option("name", o.builtin_name, "u11-z22 | u11-z2 | paper-solution | trivial-solution | u11-structure-constants")
      ->required();
  builtin->add_option("-o,--output", o.output, "write JSON here instead of stdout");
  builtin->callback([&] { handler = detail::cmd_builtin; });

  auto* rep = app.add_subcommand("rep-verify", "check the para-oscillator realization of an algebra");
  rep->add_option("--algebra", o.algebra_file, "algebra JSON (default builtin u11-z22)");
  rep->add_option("--p", o.p, "parastatistics order")->check(CLI::Range(1, 8));
  rep->add_option("--cutoff", o.cutoff, "boson level cutoff per component");
  rep->add_option("--tol", o.tol, "residual tolerance");
  rep->add_option("--hermiticity-tol", o.hermiticity_tol, "hermiticity tolerance");
  rep->add_option("--margin", o.margin, "safe-subspace margin");
  rep->add_option("--cap", o.dim_cap, "max matrix dimension");
  rep->add_option("-o,--output", o.output, "write JSON here instead of stdout");
  workers(rep);
  rep->callback([&] { handler = detail::cmd_rep_verify; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    s.out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    s.out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    s.err << "usage error: " << e.what() << "\n";
    return kInputError;
  }
  try {
    return handler(o, s);
  } catch (const InputError& e) {
    s.err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    s.err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace z22::cli
