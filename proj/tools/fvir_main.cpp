// fvir: exact-arithmetic toolkit for Frobenius algebras, their Virasoro
// algebroids, and the enveloping vertex algebra V_F.
//
// Subcommands:
//   validate <file>              check the axioms of an algebra/algebroid file
//   check-axioms <file>          check the six algebroid identities (builds
//                                Vir(F) first when given an algebra file)
//   build <file> --degree N      list the PBW basis per degree
//   character <file> --degree N  print graded dimensions 0..N on one line
//   verify <file> --degree N     run the full verification suite
//   demo <builtin>               print a built-in algebra as a definition file
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 parse or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fvir/envelope.hpp"
#include "fvir/frobenius.hpp"
#include "fvir/parser.hpp"
#include "fvir/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fvir::FrobeniusAlgebra require_algebra(const fvir::ParsedSpec& spec, const char* cmd) {
  if (!std::holds_alternative<fvir::AlgebraSpec>(spec))
    throw std::runtime_error(std::string(cmd) + " requires an algebra file, not an algebroid");
  return fvir::to_algebra(std::get<fvir::AlgebraSpec>(spec));
}

void warn_degree(int dim, int degree) {
  const int bound = dim <= 2 ? 12 : 8;
  if (degree > bound)
    std::cerr << "warning: degree " << degree << " exceeds the safety bound (" << bound
              << " for dimension " << dim << "); expect long runtimes and large output\n";
}

int report_result(const fvir::ValidationReport& rep, bool machine) {
  if (machine) {
    for (const auto& v : rep.violations) {
      std::string where;
      for (long long w : v.where) {
        if (!where.empty()) where += ',';
        where += std::to_string(w);
      }
      std::cout << "violation\t" << v.identity << "\t(" << where << ")\tcount=" << v.count << "\t"
                << v.lhs << " != " << v.rhs << "\n";
    }
    std::cout << "result\t" << (rep.ok() ? "pass" : "fail");
    if (rep.form_rank >= 0) std::cout << "\tform_rank=" << rep.form_rank;
    std::cout << "\n";
  } else {
    std::cout << rep.describe() << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int run_validate(const fvir::ParsedSpec& spec, bool machine) {
  if (std::holds_alternative<fvir::AlgebraSpec>(spec))
    return report_result(fvir::validate(fvir::to_algebra(std::get<fvir::AlgebraSpec>(spec))),
                         machine);
  return report_result(fvir::check_axioms(fvir::to_algebroid(std::get<fvir::AlgebroidSpec>(spec))),
                       machine);
}

int run_check_axioms(const fvir::ParsedSpec& spec, bool machine) {
  if (std::holds_alternative<fvir::AlgebroidSpec>(spec))
    return report_result(fvir::check_axioms(fvir::to_algebroid(std::get<fvir::AlgebroidSpec>(spec))),
                         machine);
  const auto f = fvir::to_algebra(std::get<fvir::AlgebraSpec>(spec));
  const auto base = fvir::validate(f);
  if (!base.ok()) {
    std::cerr << "input algebra fails its own axioms; fix it before building Vir(F)\n";
    return report_result(base, machine);
  }
  return report_result(fvir::check_axioms(fvir::from_frobenius(f)), machine);
}

int run_build(const fvir::FrobeniusAlgebra& f, int degree, bool machine) {
  warn_degree(f.dim, degree);
  for (int j = 0; j <= degree; ++j) {
    const auto basis = fvir::pbw_basis(f.dim, j);
    const long long closed = fvir::graded_dim(f.dim, j);
    if (closed != static_cast<long long>(basis.size())) {
      std::cerr << "internal error: closed-form dimension " << closed << " != enumerated "
                << basis.size() << " at degree " << j << "\n";
      return 1;
    }
    if (machine) {
      std::cout << "degree\t" << j << "\t" << basis.size() << "\n";
    } else {
      std::cout << "degree " << j << ": dim " << basis.size() << "\n";
      for (const auto& mono : basis) std::cout << "  " << fvir::monomial_str(mono, f.labels) << "\n";
    }
  }
  return 0;
}

int run_character(const fvir::FrobeniusAlgebra& f, int degree) {
  warn_degree(f.dim, degree);
  const auto dims = fvir::character(f, degree);
  for (std::size_t j = 0; j < dims.size(); ++j) std::cout << (j ? " " : "") << dims[j];
  std::cout << "\n";
  return 0;
}

int run_verify(const fvir::FrobeniusAlgebra& f, int degree, bool machine) {
  warn_degree(f.dim, degree);
  fvir::VerifyOptions opts;
  opts.degree = degree;
  const auto reports = fvir::run_all(f, opts);
  std::cout << (machine ? fvir::render_machine(reports) : fvir::render_human(reports));
  return fvir::all_pass(reports) ? 0 : 1;
}

int run_demo(const std::string& expr) {
  const auto f = fvir::builtin(expr);
  if (!f) {
    std::cerr << "unknown builtin: " << expr << "\navailable:";
    for (const auto& n : fvir::builtin_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }
  std::string name;
  for (char ch : expr)
    name += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') ? ch : '_';
  while (!name.empty() && name.back() == '_') name.pop_back();
  std::cout << fvir::print(fvir::to_spec(*f, name));
  const fvir::Scalar c = fvir::charge(*f);
  std::cout << "# charge <e,e> = " << fvir::scalar_str(c)
            << "; Virasoro-convention central charge 2<e,e> = " << fvir::scalar_str(2 * c)
            << " (normalization follows e_(3)e = <e,e>|0>)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for Frobenius algebras and their vertex algebras"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "line-oriented machine-readable output");

  std::string file;
  int degree = 8;
  std::string builtin_expr;

  auto* cmd_validate = app.add_subcommand("validate", "check the axioms of a definition file");
  cmd_validate->add_option("file", file, "algebra or algebroid file")->required();

  auto* cmd_axioms = app.add_subcommand("check-axioms", "check the six algebroid identities");
  cmd_axioms->add_option("file", file, "algebra or algebroid file")->required();

  auto* cmd_build = app.add_subcommand("build", "list the PBW basis of V_F per degree");
  cmd_build->add_option("file", file, "algebra file")->required();
  cmd_build->add_option("--degree", degree, "top degree (default 8)");

  auto* cmd_character = app.add_subcommand("character", "print graded dimensions of V_F");
  cmd_character->add_option("file", file, "algebra file")->required();
  cmd_character->add_option("--degree", degree, "top degree (default 8)");

  auto* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
  cmd_verify->add_option("file", file, "algebra file")->required();
  cmd_verify->add_option("--degree", degree, "top degree (default 8)");

  auto* cmd_demo = app.add_subcommand("demo", "print a built-in algebra as a definition file");
  cmd_demo->add_option("builtin", builtin_expr,
                       "builtin expression, e.g. k_c(5) or direct_sum(k_c(1),dual_numbers(0))")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_demo->parsed()) return run_demo(builtin_expr);
    const fvir::ParsedSpec spec = fvir::parse(read_file(file));
    if (cmd_validate->parsed()) return run_validate(spec, machine);
    if (cmd_axioms->parsed()) return run_check_axioms(spec, machine);
    if (cmd_build->parsed()) return run_build(require_algebra(spec, "build"), degree, machine);
    if (cmd_character->parsed()) return run_character(require_algebra(spec, "character"), degree);
    if (cmd_verify->parsed()) return run_verify(require_algebra(spec, "verify"), degree, machine);
  } catch (const fvir::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
