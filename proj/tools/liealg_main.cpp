// Batch front end: construct or load algebras, run the solvers, emit
// machine-readable reports. Exit code 0 means every check passed.

#include "CLI11.hpp"

#include "liealg/algebra_io.hpp"
#include "liealg/bider.hpp"
#include "liealg/builtins.hpp"
#include "liealg/report.hpp"
#include "liealg/suites.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace liealg;

struct InstanceOptions {
  std::string builtin;
  std::string file;
  std::string rep = "adjoint";
};

void add_instance_flags(CLI::App* cmd, InstanceOptions& opts) {
  cmd->add_option("--builtin", opts.builtin, "builtin algebra name (see 'liealg list')");
  cmd->add_option("--file", opts.file, "algebra file path");
}

struct LoadedInstance {
  std::string name;
  LieAlgebra algebra;
  std::vector<std::pair<std::string, Representation>> file_reps;
};

LoadedInstance load_instance(const InstanceOptions& opts) {
  if (!opts.builtin.empty() && !opts.file.empty()) {
    throw std::invalid_argument("pass either --builtin or --file, not both");
  }
  if (!opts.builtin.empty()) {
    return {opts.builtin, make_builtin(opts.builtin), {}};
  }
  if (!opts.file.empty()) {
    auto parsed = load_algebra_file_from_path(opts.file);
    return {parsed.name, std::move(parsed.algebra), std::move(parsed.representations)};
  }
  throw std::invalid_argument("one of --builtin or --file is required");
}

Representation pick_rep(const LoadedInstance& inst, const std::string& name) {
  for (const auto& [rep_name, rep] : inst.file_reps) {
    if (rep_name == name) {
      if (!validate(rep).ok()) {
        throw std::invalid_argument("representation '" + name + "' violates the module law");
      }
      return rep;
    }
  }
  return make_named_rep(inst.algebra, name);
}

int emit(const ReportDocument& doc, const std::string& json_path) {
  std::cout << doc.to_text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << doc.to_json().dump(2) << "\n";
  }
  return doc.pass() ? 0 : 1;
}

double ms_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

ReportDocument validate_report(const LoadedInstance& inst) {
  ReportDocument doc;
  doc.instance = "validate " + inst.name;
  const auto start = std::chrono::steady_clock::now();
  const auto report = validate(inst.algebra);
  CheckRecord algebra_record{"algebra axioms",
                             "antisymmetry, Jacobi identity, grading homogeneity",
                             "no violations",
                             report.ok() ? "no violations"
                                         : report.violations.front().detail + " (+" +
                                               std::to_string(report.violations.size() - 1) +
                                               " more)",
                             report.ok()};
  doc.checks.push_back(std::move(algebra_record));
  for (const auto& [rep_name, rep] : inst.file_reps) {
    const auto rep_report = validate(rep);
    doc.checks.push_back({"module law for rep '" + rep_name + "'",
                          "rho([x,y]) equals the (super-)commutator",
                          "no violations",
                          rep_report.ok() ? "no violations"
                                          : rep_report.violations.front().detail,
                          rep_report.ok()});
  }
  doc.timing_ms = ms_since(start);
  return doc;
}

std::string dims_of(const std::vector<RationalVector>& basis) {
  return std::to_string(basis.size());
}

void print_basis(const BilinearSolutionSpace& space) {
  const int n = space.algebra.dim();
  const int d = space.target.dim_v();
  for (std::size_t b = 0; b < space.basis.size(); ++b) {
    std::cout << "  basis[" << b << "]:";
    bool empty = true;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < d; ++k) {
          const auto& value =
              space.basis[b][static_cast<std::size_t>(bider_flat_index(n, d, i, j, k))];
          if (value != 0) {
            std::cout << " (" << i << "," << j << ")->" << k << ":" << format_rational(value);
            empty = false;
          }
        }
      }
    }
    if (empty) {
      std::cout << " 0";
    }
    std::cout << "\n";
  }
}

ReportDocument bider_report(const LoadedInstance& inst, const std::string& rep_name,
                            const std::string& mode_name, const std::string& parity_name) {
  ReportDocument doc;
  doc.instance = "bider " + inst.name + " rep=" + rep_name + " mode=" + mode_name;
  const auto start = std::chrono::steady_clock::now();

  BilinearSolutionSpace space;
  const bool graded_solve =
      mode_name == "super-symmetric" || (inst.algebra.graded() && mode_name == "full");
  if (graded_solve) {
    if (!inst.algebra.graded()) {
      throw std::invalid_argument("super-symmetric mode needs a graded algebra");
    }
    if (parity_name != "even" && parity_name != "odd") {
      throw std::invalid_argument("graded solve needs --parity even|odd");
    }
    if (rep_name != "adjoint") {
      throw std::invalid_argument("graded solves target the adjoint representation");
    }
    space = super_biderivation_space(inst.algebra,
                                     parity_name == "odd" ? Parity::odd : Parity::even,
                                     mode_name == "super-symmetric");
  } else {
    if (!parity_name.empty()) {
      throw std::invalid_argument("--parity only applies to graded algebras");
    }
    BiderMode mode;
    if (mode_name == "full") {
      mode = BiderMode::full;
    } else if (mode_name == "symmetric") {
      mode = BiderMode::symmetric;
    } else if (mode_name == "skew") {
      mode = BiderMode::skew;
    } else {
      throw std::invalid_argument("unknown mode '" + mode_name + "'");
    }
    space = biderivation_space(inst.algebra, pick_rep(inst, rep_name), mode);
  }

  doc.checks.push_back({"solution space dimension", "canonical nullspace of the identity system",
                        "n/a", dims_of(space.basis), true});

  // substitution check with a structured diagnosis on failure
  {
    bool clean = true;
    std::string diagnosis = "all solutions satisfy both identities";
    for (const auto& delta : space.basis) {
      const auto defect =
          graded_solve
              ? find_super_identity_defect(space.algebra,
                                           space.delta_parity == DeltaParity::odd
                                               ? Parity::odd
                                               : Parity::even,
                                           delta)
              : find_identity_defect(space.algebra, space.target, delta);
      if (defect) {
        clean = false;
        diagnosis = "identity " + std::to_string(defect->identity) + " fails on triple (" +
                    std::to_string(defect->triple[0]) + "," + std::to_string(defect->triple[1]) +
                    "," + std::to_string(defect->triple[2]) + ")";
        break;
      }
    }
    doc.checks.push_back({"substitution", "solutions satisfy the defining identities exactly",
                          "all solutions satisfy both identities", diagnosis, clean});
  }

  if (space.mode == BiderMode::symmetric) {
    doc.checks.push_back({"cyclic identity",
                          "delta(x,[y,z]) + delta(y,[z,x]) + delta(z,[x,y]) = 0",
                          "true", check_cyclic_identity(space) ? "true" : "false",
                          check_cyclic_identity(space)});
    doc.checks.push_back({"center annihilation", "delta vanishes on derived x center pairs",
                          "true", check_center_annihilation(space) ? "true" : "false",
                          check_center_annihilation(space)});
  }
  if (space.mode == BiderMode::skew) {
    if (is_perfect(space.algebra) && invariants_subspace(space.target).dim() == 0) {
      const auto factors = skew_factorization(space);
      bool all_zero = true;
      for (const auto& f : factors) {
        for (const auto& r : f.residual) {
          all_zero = all_zero && r == 0;
        }
      }
      doc.checks.push_back({"skew factorization", "every solution is gamma([x,y])",
                            "zero residual", all_zero ? "zero residual" : "nonzero residual",
                            all_zero});
    } else {
      doc.checks.push_back({"skew factorization", "every solution is gamma([x,y])",
                            "skipped (hypotheses not met)", "skipped", true});
    }
  }
  doc.timing_ms = ms_since(start);
  print_basis(space);
  return doc;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant computations for Lie (super)algebras"};
  app.require_subcommand(1);

  InstanceOptions validate_opts;
  std::string validate_json;
  auto* cmd_validate = app.add_subcommand("validate", "check the algebra axioms");
  add_instance_flags(cmd_validate, validate_opts);
  cmd_validate->add_option("--json", validate_json, "write the report as JSON");

  InstanceOptions bider_opts;
  std::string bider_mode = "full";
  std::string bider_parity;
  std::string bider_json;
  auto* cmd_bider = app.add_subcommand("bider", "solve the biderivation identities");
  add_instance_flags(cmd_bider, bider_opts);
  cmd_bider->add_option("--rep", bider_opts.rep, "target module (default adjoint)");
  cmd_bider->add_option("--mode", bider_mode, "full | symmetric | skew | super-symmetric");
  cmd_bider->add_option("--parity", bider_parity, "even | odd (graded algebras)");
  cmd_bider->add_option("--json", bider_json, "write the report as JSON");

  InstanceOptions der_opts;
  std::string der_json;
  auto* cmd_der = app.add_subcommand("der", "derivation and inner-derivation spaces");
  add_instance_flags(cmd_der, der_opts);
  cmd_der->add_option("--rep", der_opts.rep, "target module (default adjoint)");
  cmd_der->add_option("--json", der_json, "write the report as JSON");

  InstanceOptions h1_opts;
  std::string h1_json;
  auto* cmd_h1 = app.add_subcommand("h1", "first cohomology dimension");
  add_instance_flags(cmd_h1, h1_opts);
  cmd_h1->add_option("--rep", h1_opts.rep, "target module (default adjoint)");
  cmd_h1->add_option("--json", h1_json, "write the report as JSON");

  std::string suite_name;
  std::string suite_json;
  int suite_jobs = 1;
  auto* cmd_suite = app.add_subcommand("suite", "run a named check suite");
  cmd_suite->add_option("name", suite_name, "whitehead | theorem31 | applications | super | oracle")
      ->required();
  cmd_suite->add_option("--jobs", suite_jobs, "run instances concurrently");
  cmd_suite->add_option("--json", suite_json, "write the report as JSON");

  InstanceOptions export_opts;
  std::string export_out;
  auto* cmd_export = app.add_subcommand("export", "write an algebra file");
  add_instance_flags(cmd_export, export_opts);
  cmd_export->add_option("output", export_out, "output path (default stdout)");

  auto* cmd_list = app.add_subcommand("list", "list builtin algebras");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_validate) {
      return emit(validate_report(load_instance(validate_opts)), validate_json);
    }
    if (*cmd_bider) {
      const auto inst = load_instance(bider_opts);
      return emit(bider_report(inst, bider_opts.rep, bider_mode, bider_parity), bider_json);
    }
    if (*cmd_der || *cmd_h1) {
      const bool h1_only = static_cast<bool>(*cmd_h1);
      const auto inst = load_instance(h1_only ? h1_opts : der_opts);
      const auto& rep_name = h1_only ? h1_opts.rep : der_opts.rep;
      ReportDocument doc;
      doc.instance = (h1_only ? "h1 " : "der ") + inst.name + " rep=" + rep_name;
      const auto start = std::chrono::steady_clock::now();
      const auto space = derivation_space(pick_rep(inst, rep_name));
      if (h1_only) {
        doc.checks.push_back({"h1 dimension", "dim Der - dim IDer", "n/a",
                              std::to_string(space.h1_dim), true});
      } else {
        doc.checks.push_back({"Der dimension", "solutions of the derivation law", "n/a",
                              dims_of(space.der_basis), true});
        doc.checks.push_back({"IDer dimension", "image of v -> (x -> x v)", "n/a",
                              dims_of(space.inner_basis), true});
        doc.checks.push_back({"h1 dimension", "dim Der - dim IDer", "n/a",
                              std::to_string(space.h1_dim), true});
      }
      doc.timing_ms = ms_since(start);
      return emit(doc, h1_only ? h1_json : der_json);
    }
    if (*cmd_suite) {
      return emit(run_suite(suite_name, suite_jobs), suite_json);
    }
    if (*cmd_export) {
      const auto inst = load_instance(export_opts);
      AlgebraFile file{inst.name, inst.algebra, inst.file_reps};
      if (export_out.empty()) {
        save_algebra_file(std::cout, file);
      } else {
        std::ofstream out(export_out);
        if (!out) {
          std::cerr << "cannot write " << export_out << "\n";
          return 2;
        }
        save_algebra_file(out, file);
      }
      return 0;
    }
    if (*cmd_list) {
      for (const auto& name : builtin_names()) {
        std::cout << name << "\n";
      }
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
