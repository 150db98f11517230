#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "serialize.hpp"
#include "su3st/invariants.hpp"
#include "su3st/ninerep.hpp"

namespace su3st::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kGensCombos =
    "valid combinations: --rep 3: J, K, V; --rep 3bar: J; "
    "--rep 6: J, K, V, P (P needs --branch); --rep 9: J, K (K needs --branch; the momenta are "
    "not carried to the 9-rep); --rep 10: J, P, K (K needs --branch)";

Branch parse_branch(const std::string& value) {
  if (value == "+" || value == "plus") return Branch::Plus;
  if (value == "-" || value == "minus") return Branch::Minus;
  throw UsageError("--branch must be one of +, -, plus, minus");
}

std::vector<double> parse_reals(const std::string& text, size_t count, const char* flag) {
  std::vector<double> out;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t used = 0;
        out.push_back(std::stod(item, &used));
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": '" + item + "' is not a real number");
      }
    }
  }
  if (out.empty()) out.assign(count, 0.0);
  if (out.size() != count)
    throw UsageError(std::string(flag) + ": expected " + std::to_string(count) +
                     " comma-separated reals, got " + std::to_string(out.size()));
  return out;
}

std::vector<std::string> indexed_names(char prefix, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::string(1, prefix) + std::to_string(i));
  return names;
}

NamedMatrices<ExactScalar> collect_gens(const std::string& rep, const std::string& which,
                                        const std::optional<Branch>& branch) {
  NamedMatrices<ExactScalar> nm;
  nm.rep = rep;
  nm.which = which;
  auto need_branch = [&]() -> Branch {
    if (!branch) throw UsageError("--rep " + rep + " --which " + which +
                                  " needs --branch (+ or -); " + kGensCombos);
    return *branch;
  };

  if (rep == "3") {
    if (which == "J") {
      nm.mats = gellmann().js;
      nm.names = indexed_names('J', 8);
      return nm;
    }
    if (which == "K") {
      nm.mats = triplet_vk<ExactScalar>(ExactScalar(1), ExactScalar(1)).ks;
      nm.names = indexed_names('K', 8);
      return nm;
    }
    if (which == "V") {
      nm.mats = triplet_vk<ExactScalar>(ExactScalar(1), ExactScalar(1)).vs;
      nm.names = indexed_names('V', 9);
      nm.config = "c = 1, c9 = 1";
      return nm;
    }
  } else if (rep == "3bar") {
    if (which == "J") {
      nm.mats = antitriplet().js;
      nm.names = indexed_names('J', 8);
      return nm;
    }
  } else if (rep == "6") {
    if (which == "J" || which == "K") {
      const GeneratorSet<ExactScalar> six = six_rep<ExactScalar>(Branch::Plus);
      nm.mats = which == "J" ? six.js : six.ks;
      nm.names = indexed_names(which[0], 8);
      return nm;
    }
    if (which == "V") {
      SixRepConfig<ExactScalar> cfg;  // both families at unit scale
      cfg.c9_plus = ExactScalar(1);
      cfg.c9_minus = ExactScalar(1);
      nm.mats = build_six(cfg).vs;
      nm.names = indexed_names('V', 9);
      nm.config = "unconstrained family: c+ = c- = c9+ = c9- = 1";
      return nm;
    }
    if (which == "P") {
      nm.mats = momentum_matrices<ExactScalar>(need_branch(), ExactScalar(1)).ps;
      nm.names = indexed_names('P', 9);
      nm.config = "branch solution with c = 1, alpha = 1";
      return nm;
    }
  } else if (rep == "9") {
    if (which == "J") {
      nm.mats = j9_generators<ExactScalar>();
      nm.names = indexed_names('J', 8);
      return nm;
    }
    if (which == "K") {
      nm.mats = k9_generators<ExactScalar>(need_branch());
      nm.names = indexed_names('K', 8);
      return nm;
    }
  } else if (rep == "10") {
    if (which == "J" || which == "P") {
      const GeneratorSet<ExactScalar> ten = ten_rep<ExactScalar>(Branch::Plus);
      nm.mats = which == "J" ? ten.js : ten.vs;
      nm.names = indexed_names(which[0], which == "J" ? 8 : 9);
      return nm;
    }
    if (which == "K") {
      nm.mats = ten_rep<ExactScalar>(need_branch()).ks;
      nm.names = indexed_names('K', 8);
      return nm;
    }
  } else {
    throw UsageError("--rep must be one of 3, 3bar, 6, 9, 10");
  }
  throw UsageError("--rep " + rep + " does not provide --which " + which + "; " + kGensCombos);
}

void write_artifact(const std::string& output, const std::string& content) {
  if (output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream os(output);
  if (!os) throw std::runtime_error("cannot open output file '" + output + "'");
  os << content;
  std::cout << "wrote " << output << "\n";
}

struct GensArgs {
  std::string rep = "3", which = "J", branch, backend = "exact", format = "json", output;
};

int run_gens(const GensArgs& a) {
  if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");
  std::optional<Branch> branch;
  if (!a.branch.empty()) branch = parse_branch(a.branch);
  const NamedMatrices<ExactScalar> exact = collect_gens(a.rep, a.which, branch);

  std::string content;
  if (a.backend == "exact") {
    if (a.format == "json")
      content = gens_json(exact, "exact", a.branch).dump(2) + "\n";
    else {
      std::ostringstream os;
      gens_csv(os, exact);
      content = os.str();
    }
  } else if (a.backend == "float") {
    NamedMatrices<Complex> f{exact.rep, exact.which, exact.names, {}, exact.config};
    for (const auto& m : exact.mats) f.mats.push_back(to_float(m));
    if (a.format == "json")
      content = gens_json(f, "float", a.branch).dump(2) + "\n";
    else {
      std::ostringstream os;
      gens_csv(os, f);
      content = os.str();
    }
  } else {
    throw UsageError("--backend must be exact or float");
  }
  write_artifact(a.output, content);
  return 0;
}

struct StructureArgs {
  std::string backend = "exact", format = "json", output;
};

int run_structure(const StructureArgs& a) {
  if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");
  std::string content;
  if (a.backend == "exact") {
    const auto& sc = canonical_structure();
    if (a.format == "json")
      content = structure_json(sc).dump(2) + "\n";
    else {
      std::ostringstream os;
      structure_csv(os, sc);
      content = os.str();
    }
  } else if (a.backend == "float") {
    const auto& sc = canonical_structure_float();
    if (a.format == "json")
      content = structure_json(sc).dump(2) + "\n";
    else {
      std::ostringstream os;
      structure_csv(os, sc);
      content = os.str();
    }
  } else {
    throw UsageError("--backend must be exact or float");
  }
  write_artifact(a.output, content);
  return 0;
}

struct TransformArgs {
  std::string theta, phi, a, x, branch = "+", output;
};

int run_transform(const TransformArgs& args) {
  TransformParams p;
  p.branch = parse_branch(args.branch);
  const std::vector<double> theta = parse_reals(args.theta, 8, "--theta");
  const std::vector<double> phi = parse_reals(args.phi, 8, "--phi");
  const std::vector<double> a = parse_reals(args.a, 9, "--a");
  const std::vector<double> xs = parse_reals(args.x, 9, "--x");
  std::copy(theta.begin(), theta.end(), p.theta.begin());
  std::copy(phi.begin(), phi.end(), p.phi.begin());
  std::copy(a.begin(), a.end(), p.a.begin());
  NineVector x;
  std::copy(xs.begin(), xs.end(), x.v.begin());

  const NineVector xp = apply(poincare10(p), x);

  struct Entry {
    const char* name;
    double before, after;
  };
  const Entry ledger[] = {
      {"quad_space", quad_space(x), quad_space(xp)},
      {"interval", interval(x), interval(xp)},
      {"cubic_sym", cubic_sym(x), cubic_sym(xp)},
      {"I_plus", cubic_invariant(x, Branch::Plus), cubic_invariant(xp, Branch::Plus)},
      {"I_minus", cubic_invariant(x, Branch::Minus), cubic_invariant(xp, Branch::Minus)},
  };

  std::ostringstream os;
  os << "x'      =";
  for (int mu = 1; mu <= 9; ++mu) os << ' ' << std::setprecision(12) << xp.comp(mu);
  os << "\n";
  os << std::left << std::setw(12) << "quantity" << std::right << std::setw(18) << "before"
     << std::setw(18) << "after" << std::setw(18) << "delta" << "\n";
  for (const Entry& e : ledger)
    os << std::left << std::setw(12) << e.name << std::right << std::setw(18)
       << std::setprecision(10) << e.before << std::setw(18) << e.after << std::setw(18)
       << e.after - e.before << "\n";
  std::cout << os.str();

  if (!args.output.empty()) {
    json jx = json::array(), jxp = json::array();
    for (int mu = 1; mu <= 9; ++mu) {
      jx.push_back(x.comp(mu));
      jxp.push_back(xp.comp(mu));
    }
    json jledger;
    for (const Entry& e : ledger)
      jledger[e.name] = json{{"before", e.before}, {"after", e.after}, {"delta", e.after - e.before}};
    const json out{{"command", "transform"}, {"branch", args.branch},    {"x", jx},
                   {"x_prime", jxp},         {"ledger", jledger}};
    std::ofstream f(args.output);
    if (!f) throw std::runtime_error("cannot open output file '" + args.output + "'");
    f << out.dump(2) << "\n";
    std::cout << "wrote " << args.output << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all", backend = "float", output, corrupt;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 1e-12;
  double exp_tolerance = 1e-9;
};

Corruption parse_corruption(const std::string& text) {
  // format: <f|d>:i,j,k:delta  e.g. f:1,2,3:1e-6
  Corruption c;
  const auto first = text.find(':');
  const auto last = text.rfind(':');
  if (first == std::string::npos || last == first || text.size() < 7)
    throw UsageError("--corrupt expects <f|d>:i,j,k:<delta>, e.g. f:1,2,3:1e-6");
  const std::string tensor = text.substr(0, first);
  if (tensor != "f" && tensor != "d")
    throw UsageError("--corrupt tensor must be f or d");
  c.tensor = tensor[0];
  try {
    const std::string idx = text.substr(first + 1, last - first - 1);
    std::stringstream ss(idx);
    std::string item;
    std::vector<int> ids;
    while (std::getline(ss, item, ',')) ids.push_back(std::stoi(item));
    if (ids.size() != 3) throw std::invalid_argument(idx);
    c.i = ids[0];
    c.j = ids[1];
    c.k = ids[2];
    c.delta = std::stod(text.substr(last + 1));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("--corrupt expects <f|d>:i,j,k:<delta>, e.g. f:1,2,3:1e-6");
  }
  if (c.i < 1 || c.i > 9 || c.j < 1 || c.j > 9 || c.k < 1 || c.k > 9)
    throw UsageError("--corrupt indices must lie in 1..9");
  return c;
}

int run_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  if (a.backend == "exact")
    opt.backend = BackendKind::Exact;
  else if (a.backend == "float")
    opt.backend = BackendKind::Float;
  else
    throw UsageError("--backend must be exact or float");
  bool known = false;
  for (const auto& name : suite_names()) known = known || name == a.suite;
  if (!known) {
    std::string all;
    for (const auto& name : suite_names()) all += (all.empty() ? "" : ", ") + name;
    throw UsageError("--suite must be one of: " + all);
  }
  opt.seed = a.seed;
  opt.tol.algebraic = a.tolerance;
  opt.tol.post_exp = a.exp_tolerance;
  if (!a.corrupt.empty()) opt.corrupt = parse_corruption(a.corrupt);

  const SuiteReport rep = run_suite(a.suite, opt);
  report_console(std::cout, rep);
  if (!a.output.empty()) {
    std::ofstream f(a.output);
    if (!f) throw std::runtime_error("cannot open output file '" + a.output + "'");
    f << report_json(rep, opt.tol, opt.corrupt).dump(2) << "\n";
    std::cout << "wrote " << a.output << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace
}  // namespace su3st::cli

int main(int argc, char** argv) {
  using namespace su3st::cli;

  CLI::App app{
      "su3st: builds the generator families, structure constants, and finite transformations "
      "of the 8+1-dimensional spacetime derived from the su(3) commutation and anticommutation "
      "relations, and machine-verifies the algebra"};
  app.require_subcommand(1);

  GensArgs gens_args;
  CLI::App* gens = app.add_subcommand("gens", "emit generator matrices");
  gens->add_option("--rep", gens_args.rep, "rep: 3, 3bar, 6, 9, 10")->required();
  gens->add_option("--which", gens_args.which, "family: J, K, V, P")->required();
  gens->add_option("--branch", gens_args.branch, "momentum branch: + or -");
  gens->add_option("--backend", gens_args.backend, "exact or float (default exact)");
  gens->add_option("--format", gens_args.format, "json or csv (default json)");
  gens->add_option("--output", gens_args.output, "write to file instead of stdout");

  StructureArgs structure_args;
  CLI::App* structure = app.add_subcommand("structure", "emit the f and d tensors");
  structure->add_option("--backend", structure_args.backend, "exact or float (default exact)");
  structure->add_option("--format", structure_args.format, "json or csv (default json)");
  structure->add_option("--output", structure_args.output, "write to file instead of stdout");

  TransformArgs transform_args;
  CLI::App* transform = app.add_subcommand(
      "transform", "apply a rotation+boost+translation to a 9-vector and report the invariants");
  transform->add_option("--theta", transform_args.theta, "8 comma-separated rotation angles");
  transform->add_option("--phi", transform_args.phi, "8 comma-separated boost parameters");
  transform->add_option("--a", transform_args.a, "9 comma-separated translation components");
  transform->add_option("--x", transform_args.x, "9 comma-separated point components");
  transform->add_option("--branch", transform_args.branch, "boost branch: + or - (default +)");
  transform->add_option("--output", transform_args.output, "also write a JSON record here");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", verify_args.suite,
                     "fundamental, sixrep, ninerep, invariants, exercises, all (default all)");
  verify->add_option("--backend", verify_args.backend,
                     "exact or float (default float); exponential-based checks always run float");
  verify->add_option("--seed", verify_args.seed, "RNG seed for sampled checks")
      ->envname("SU3ST_SEED");
  verify->add_option("--tolerance", verify_args.tolerance,
                     "float-backend tolerance for algebraic residuals (default 1e-12)")
      ->envname("SU3ST_TOLERANCE");
  verify->add_option("--exp-tolerance", verify_args.exp_tolerance,
                     "tolerance for post-exponential residuals (default 1e-9)")
      ->envname("SU3ST_EXP_TOLERANCE");
  verify->add_option("--output", verify_args.output, "write the JSON report here");
  verify->add_option("--corrupt", verify_args.corrupt,
                     "mutation probe: perturb one structure-constant entry, <f|d>:i,j,k:<delta>; "
                     "a healthy build must then fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gens->parsed()) return run_gens(gens_args);
    if (structure->parsed()) return run_structure(structure_args);
    if (transform->parsed()) return run_transform(transform_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
