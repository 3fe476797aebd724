#include "liealg/suites.hpp"

#include "liealg/bider.hpp"
#include "liealg/builtins.hpp"
#include "liealg/constructors.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

namespace liealg {

namespace {

using CheckFn = std::function<CheckRecord()>;

// fixed-order parallel map: results land by index, not completion order
std::vector<CheckRecord> run_checks(const std::vector<CheckFn>& checks, int jobs) {
  std::vector<CheckRecord> records(checks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) {
      records[i] = checks[i]();
    }
    return records;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= checks.size()) {
        return;
      }
      records[i] = checks[i]();
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<int>(jobs, static_cast<int>(checks.size()));
  pool.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) {
    pool.emplace_back(worker);
  }
  for (auto& t : pool) {
    t.join();
  }
  return records;
}

CheckRecord expect_int(std::string name, std::string claim, int expected, int computed) {
  return {std::move(name), std::move(claim), std::to_string(expected),
          std::to_string(computed), expected == computed};
}

CheckRecord expect_true(std::string name, std::string claim, bool computed) {
  return {std::move(name), std::move(claim), "true", computed ? "true" : "false", computed};
}

std::vector<CheckFn> whitehead_checks() {
  std::vector<CheckFn> checks;
  for (int m = 0; m <= 6; ++m) {
    checks.push_back([m] {
      const auto space = derivation_space(sl2_irrep(m));
      return expect_int("h1(sl2, V(" + std::to_string(m) + "))",
                        "first cohomology of a semisimple algebra vanishes", 0, space.h1_dim);
    });
  }
  checks.push_back([] {
    return expect_int("h1(sl3, adjoint)",
                      "first cohomology of a semisimple algebra vanishes", 0,
                      derivation_space(adjoint(special_linear(3))).h1_dim);
  });
  checks.push_back([] {
    return expect_int("h1(sp4, adjoint)",
                      "first cohomology of a semisimple algebra vanishes", 0,
                      derivation_space(adjoint(symplectic(4))).h1_dim);
  });
  return checks;
}

std::vector<CheckFn> theorem31_checks() {
  const char* claim = "symmetric biderivations into modules of semisimple algebras vanish";
  std::vector<CheckFn> checks;
  checks.push_back([claim] {
    const auto g = special_linear(2);
    return expect_int("sym(sl2, adjoint)", claim, 0,
                      biderivation_space(g, adjoint(g), BiderMode::symmetric).dim());
  });
  for (int m = 1; m <= 4; ++m) {
    checks.push_back([m, claim] {
      const auto rep = sl2_irrep(m);
      return expect_int("sym(sl2, V(" + std::to_string(m) + "))", claim, 0,
                        biderivation_space(rep.algebra(), rep, BiderMode::symmetric).dim());
    });
  }
  checks.push_back([claim] {
    const auto g = special_linear(3);
    return expect_int("sym(sl3, adjoint)", claim, 0,
                      biderivation_space(g, adjoint(g), BiderMode::symmetric).dim());
  });
  checks.push_back([claim] {
    const auto g = symplectic(4);
    return expect_int("sym(sp4, adjoint)", claim, 0,
                      biderivation_space(g, adjoint(g), BiderMode::symmetric).dim());
  });
  return checks;
}

std::vector<CheckFn> applications_checks() {
  std::vector<CheckFn> checks;
  checks.push_back([] {
    const auto g = takiff(special_linear(2));
    return expect_int("sym(takiff:sl2, adjoint)",
                      "symmetric biderivations of the double with square-zero ideal vanish", 0,
                      biderivation_space(g, adjoint(g), BiderMode::symmetric).dim());
  });
  checks.push_back([] {
    const auto g = takiff(special_linear(2));
    std::vector<RationalVector> sl2_part;
    for (int i = 0; i < 3; ++i) {
      RationalVector v(static_cast<std::size_t>(g.dim()), Rational(0));
      v[static_cast<std::size_t>(i)] = 1;
      sl2_part.push_back(std::move(v));
    }
    const auto criteria = check_reduction_criteria(g, Subspace(g.dim(), sl2_part));
    return expect_true("takiff:sl2 faithful over its sl2 part",
                       "faithful adjoint action of the semisimple subalgebra",
                       criteria.faithful_module);
  });
  checks.push_back([] {
    const auto g = oscillator(1);
    return expect_int("sym(oscillator:1, adjoint)",
                      "symmetric biderivations of the symplectic oscillator algebra vanish", 0,
                      biderivation_space(g, adjoint(g), BiderMode::symmetric).dim());
  });
  checks.push_back([] {
    const auto g = oscillator(1);
    std::vector<RationalVector> sp_part;
    for (int i = 0; i < 3; ++i) {
      RationalVector v(static_cast<std::size_t>(g.dim()), Rational(0));
      v[static_cast<std::size_t>(i)] = 1;
      sp_part.push_back(std::move(v));
    }
    const auto criteria = check_reduction_criteria(g, Subspace(g.dim(), sp_part));
    RationalVector z(static_cast<std::size_t>(g.dim()), Rational(0));
    z[static_cast<std::size_t>(g.dim() - 1)] = 1;
    const bool center_is_z = center(g) == Subspace(g.dim(), {z});
    return expect_true("oscillator:1 perfect with centralizer = center = span(z)",
                       "perfect, and the sp-part centralizer is exactly the center",
                       criteria.perfect && criteria.centralizer_equals_center && center_is_z);
  });
  checks.push_back([] {
    const auto g = make_builtin("reductive-sl2");
    const auto space = biderivation_space(g, adjoint(g), BiderMode::symmetric);
    return expect_int("sym(reductive-sl2, adjoint)",
                      "one-parameter family delta(c,c) = lambda c", 1, space.dim());
  });
  checks.push_back([] {
    const auto g = make_builtin("reductive-sl2");
    const auto space = biderivation_space(g, adjoint(g), BiderMode::symmetric);
    const int c = g.dim() - 1;
    bool supported_on_cc = space.dim() == 1;
    if (supported_on_cc) {
      const auto& delta = space.basis.front();
      for (int i = 0; i < g.dim(); ++i) {
        for (int j = 0; j < g.dim(); ++j) {
          for (int k = 0; k < g.dim(); ++k) {
            const auto& value =
                delta[static_cast<std::size_t>(bider_flat_index(g.dim(), g.dim(), i, j, k))];
            if (value != 0 && !(i == c && j == c && k == c)) {
              supported_on_cc = false;
            }
          }
        }
      }
    }
    return expect_true("reductive-sl2 family supported on (c,c) valued in span(c)",
                       "the family lives on the central slot only", supported_on_cc);
  });
  return checks;
}

std::vector<CheckFn> super_checks() {
  std::vector<CheckFn> checks;
  checks.push_back([] {
    return expect_int("supersym(sl21, even)",
                      "super-symmetric biderivations of a classical simple superalgebra vanish",
                      0, super_biderivation_space(make_builtin("sl21"), Parity::even, true).dim());
  });
  checks.push_back([] {
    return expect_int("supersym(sl21, odd)",
                      "super-symmetric biderivations of a classical simple superalgebra vanish",
                      0, super_biderivation_space(make_builtin("sl21"), Parity::odd, true).dim());
  });
  checks.push_back([] {
    const auto g = make_builtin("sl21");
    const auto space = super_biderivation_space(g, Parity::even, false);
    return expect_true("even super-biderivations of sl21 contain (x,y) -> [x,y]",
                       "the bracket map satisfies both super identities",
                       in_span(inner_family_vector(g), space.basis));
  });
  checks.push_back([] {
    const auto g = make_builtin("sl21");
    std::vector<RationalVector> g0_basis;
    for (int i = 0; i < g.dim(); ++i) {
      if (g.parity_of(i) == Parity::even) {
        RationalVector v(static_cast<std::size_t>(g.dim()), Rational(0));
        v[static_cast<std::size_t>(i)] = 1;
        g0_basis.push_back(std::move(v));
      }
    }
    const auto criteria = check_super_reduction_criteria(g, Subspace(g.dim(), g0_basis));
    return expect_true("sl21 perfect with odd centralizer dim <= 1",
                       "graded reduction criteria hold",
                       criteria.perfect && criteria.odd_centralizer_at_most_one);
  });
  return checks;
}

CheckRecord oracle_agreement(const std::string& name, const LieAlgebra& g,
                             const Representation& v, BiderMode mode) {
  const auto fast = biderivation_space(g, v, mode);
  const auto slow = brute_force_biderivation_space(g, v, mode);
  bool agree = fast.dim() == slow.dim();
  if (agree) {
    for (const auto& b : fast.basis) {
      agree = agree && in_span(b, slow.basis);
    }
    for (const auto& b : slow.basis) {
      agree = agree && in_span(b, fast.basis);
    }
  }
  CheckRecord record;
  record.name = "oracle " + name + " [" + to_string(mode) + "]";
  record.claim = "sparse solver and dense oracle agree";
  record.expected = "equal spaces";
  record.computed = agree ? "equal spaces (dim " + std::to_string(fast.dim()) + ")"
                          : "dims " + std::to_string(fast.dim()) + " vs " +
                                std::to_string(slow.dim());
  record.pass = agree;
  return record;
}

std::vector<CheckFn> oracle_checks() {
  std::vector<CheckFn> checks;
  auto add = [&checks](const std::string& name, auto make_g, auto make_rep, BiderMode mode) {
    checks.push_back([name, make_g, make_rep, mode] {
      const auto g = make_g();
      return oracle_agreement(name, g, make_rep(g), mode);
    });
  };
  auto adjoint_rep = [](const LieAlgebra& g) { return adjoint(g); };
  auto trivial_1 = [](const LieAlgebra& g) { return trivial_rep(g, 1); };

  add("abelian(1), trivial(1)", [] { return abelian(1); }, trivial_1, BiderMode::full);
  add("abelian(2), trivial(1)", [] { return abelian(2); }, trivial_1, BiderMode::full);
  for (const BiderMode mode : {BiderMode::full, BiderMode::symmetric, BiderMode::skew}) {
    add("sl2, adjoint", [] { return special_linear(2); }, adjoint_rep, mode);
    add("heisenberg(1), adjoint", [] { return heisenberg(1); }, adjoint_rep, mode);
    add("reductive-sl2, adjoint", [] { return make_builtin("reductive-sl2"); }, adjoint_rep,
        mode);
  }
  for (int m = 1; m <= 4; ++m) {
    checks.push_back([m] {
      const auto rep = sl2_irrep(m);
      return oracle_agreement("sl2, V(" + std::to_string(m) + ")", rep.algebra(), rep,
                              BiderMode::symmetric);
    });
  }
  return checks;
}

} // namespace

std::vector<std::string> suite_names() {
  return {"whitehead", "theorem31", "applications", "super", "oracle"};
}

ReportDocument run_suite(const std::string& name, int jobs) {
  std::vector<CheckFn> checks;
  if (name == "whitehead") {
    checks = whitehead_checks();
  } else if (name == "theorem31") {
    checks = theorem31_checks();
  } else if (name == "applications") {
    checks = applications_checks();
  } else if (name == "super") {
    checks = super_checks();
  } else if (name == "oracle") {
    checks = oracle_checks();
  } else {
    throw std::invalid_argument("unknown suite '" + name +
                                "' (known: whitehead, theorem31, applications, super, oracle)");
  }
  ReportDocument doc;
  doc.instance = "suite " + name;
  const auto start = std::chrono::steady_clock::now();
  doc.checks = run_checks(checks, jobs);
  doc.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return doc;
}

} // namespace liealg
