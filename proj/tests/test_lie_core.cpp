#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liealg/constructors.hpp"
#include "liealg/lie_algebra.hpp"

using namespace liealg;

namespace {

RationalVector basis_vec(int dim, int i) {
  RationalVector v(static_cast<std::size_t>(dim), Rational(0));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

LieAlgebra sl2_with_constant(int i, int j, int k, int value) {
  auto constants = special_linear(2).structure_constants();
  constants[{i, j, k}] = Rational(value);
  constants[{j, i, k}] = Rational(-value);
  return LieAlgebra(3, {"e", "h", "f"}, std::move(constants));
}

} // namespace

TEST_CASE("bracket on sl2") {
  const auto g = special_linear(2); // basis (e, h, f)
  const auto e = basis_vec(3, 0);
  const auto h = basis_vec(3, 1);
  const auto f = basis_vec(3, 2);
  CHECK(g.bracket(e, f) == h);
  CHECK(g.bracket(h, e) == RationalVector{Rational(2), Rational(0), Rational(0)});
  CHECK(g.bracket(e, e) == RationalVector(3, Rational(0)));
  CHECK_THROWS_AS(g.bracket(e, RationalVector(2, Rational(0))), std::invalid_argument);
}

TEST_CASE("bracket on heisenberg") {
  const auto g = heisenberg(1); // basis (e1, e2, z)
  CHECK(g.bracket(basis_vec(3, 0), basis_vec(3, 1)) == basis_vec(3, 2));
  CHECK(g.bracket(basis_vec(3, 2), basis_vec(3, 0)) == RationalVector(3, Rational(0)));
}

TEST_CASE("validate accepts the textbook algebras") {
  CHECK(validate(special_linear(2)).ok());
  CHECK(validate(heisenberg(2)).ok());
  CHECK(validate(abelian(4)).ok());
}

TEST_CASE("validate pins a broken Jacobi identity to its triple") {
  // [h,e] = 3e instead of 2e keeps antisymmetry intact but breaks Jacobi on
  // (e,h,f): [e,[h,f]] + [h,[f,e]] + [f,[e,h]] = -2h + 0 + 3h = h.
  const auto broken = sl2_with_constant(1, 0, 0, 3);
  const auto report = validate(broken);
  REQUIRE_FALSE(report.ok());
  bool jacobi_on_ehf = false;
  for (const auto& violation : report.violations) {
    if (violation.kind == Violation::Kind::jacobi &&
        violation.indices == std::array<int, 3>{0, 1, 2}) {
      jacobi_on_ehf = true;
    }
    CHECK(violation.kind == Violation::Kind::jacobi);
  }
  CHECK(jacobi_on_ehf);
}

TEST_CASE("validate flags antisymmetry violations") {
  auto constants = special_linear(2).structure_constants();
  constants[{0, 1, 0}] = Rational(5); // c(e,h,e) no longer matches -c(h,e,e)
  const auto report = validate(LieAlgebra(3, {}, std::move(constants)));
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().kind == Violation::Kind::antisymmetry);
}

TEST_CASE("validate accepts sl(2|1) and checks the super Jacobi identity") {
  const auto g = special_linear_super(2, 1);
  CHECK(validate(g).ok());

  // doubling a single odd-odd bracket (and its super-antisymmetric partner)
  // breaks the super Jacobi identity somewhere
  auto constants = g.structure_constants();
  std::array<int, 2> victim{-1, -1};
  for (const auto& [key, value] : constants) {
    (void)value;
    if (g.parity_of(key[0]) == Parity::odd && g.parity_of(key[1]) == Parity::odd) {
      victim = {key[0], key[1]};
      break;
    }
  }
  REQUIRE(victim[0] >= 0);
  for (auto& [key, value] : constants) {
    if ((key[0] == victim[0] && key[1] == victim[1]) ||
        (key[0] == victim[1] && key[1] == victim[0])) {
      value *= 2;
    }
  }
  const auto report =
      validate(LieAlgebra(g.dim(), g.basis_labels(), std::move(constants), g.parity()));
  bool found_jacobi = false;
  for (const auto& violation : report.violations) {
    found_jacobi = found_jacobi || violation.kind == Violation::Kind::jacobi;
  }
  CHECK(found_jacobi);
}

TEST_CASE("graded validator with all parities even agrees with the ungraded one") {
  const auto check = [](const LieAlgebra& g) {
    const std::vector<Parity> all_even(static_cast<std::size_t>(g.dim()), Parity::even);
    const LieAlgebra graded(g.dim(), g.basis_labels(), g.structure_constants(), all_even);
    CHECK(validate(g).ok() == validate(graded).ok());
  };
  check(special_linear(2));
  check(heisenberg(1));
  check(sl2_with_constant(1, 0, 0, 3)); // both reject
}

TEST_CASE("derived subalgebra") {
  CHECK(derived_subalgebra(abelian(3)).dim() == 0);
  CHECK(derived_subalgebra(special_linear(2)).dim() == 3);

  const auto h1 = heisenberg(1);
  const auto derived = derived_subalgebra(h1);
  CHECK(derived.dim() == 1);
  CHECK(derived.contains(basis_vec(3, 2)));
}

TEST_CASE("center") {
  CHECK(center(abelian(4)).dim() == 4);
  CHECK(center(special_linear(2)).dim() == 0);

  const auto osc = oscillator(1);
  const auto z = center(osc);
  CHECK(z.dim() == 1);
  CHECK(z.contains(basis_vec(osc.dim(), osc.dim() - 1)));
}

TEST_CASE("centralizer") {
  const auto sl2 = special_linear(2);
  const auto full = Subspace::full(3);
  CHECK(centralizer(sl2, full, full).dim() == 0);

  const auto osc = oscillator(1);
  std::vector<RationalVector> sp_part;
  for (int i = 0; i < 3; ++i) {
    sp_part.push_back(basis_vec(osc.dim(), i));
  }
  const auto zg0 = centralizer(osc, Subspace(osc.dim(), sp_part), Subspace::full(osc.dim()));
  CHECK(zg0.dim() == 1);
  CHECK(zg0.contains(basis_vec(osc.dim(), osc.dim() - 1)));

  CHECK_THROWS_AS(centralizer(sl2, Subspace::full(4), full), std::invalid_argument);
}

TEST_CASE("odd centralizer input for the graded criteria") {
  const auto g = special_linear_super(2, 1);
  std::vector<RationalVector> even_basis;
  for (int i = 0; i < g.dim(); ++i) {
    if (g.parity_of(i) == Parity::even) {
      even_basis.push_back(basis_vec(g.dim(), i));
    }
  }
  CHECK(centralizer(g, Subspace(g.dim(), even_basis), odd_part(g)).dim() == 0);
  // degenerate g0 = 0 centralizes everything
  CHECK(centralizer(g, Subspace::zero(g.dim()), odd_part(g)).dim() == 4);
}

TEST_CASE("is_perfect") {
  CHECK(is_perfect(special_linear(2)));
  CHECK_FALSE(is_perfect(abelian(2)));
  CHECK_FALSE(is_perfect(heisenberg(1)));
  CHECK(is_perfect(oscillator(1)));
}

TEST_CASE("derived subalgebra and center are ideals") {
  for (const auto& g : {heisenberg(2), oscillator(1), trivial_central_extension(special_linear(2))}) {
    for (const auto& ideal : {derived_subalgebra(g), center(g)}) {
      for (int i = 0; i < g.dim(); ++i) {
        for (const auto& v : ideal.basis()) {
          CHECK(in_span(g.bracket(basis_vec(g.dim(), i), v), ideal.basis()));
        }
      }
    }
  }
}

TEST_CASE("center is contained in every centralizer") {
  const auto g = trivial_central_extension(special_linear(2));
  const auto z = center(g);
  for (const auto& s : {Subspace::zero(g.dim()), Subspace::full(g.dim()),
                        Subspace(g.dim(), {basis_vec(g.dim(), 0)})}) {
    const auto c = centralizer(g, s, Subspace::full(g.dim()));
    for (const auto& v : z.basis()) {
      CHECK(c.contains(v));
    }
  }
}

TEST_CASE("sl2 triples") {
  const auto sl2 = special_linear(2);
  const Sl2Triple standard{basis_vec(3, 0), basis_vec(3, 1), basis_vec(3, 2)};
  const Sl2Triple degenerate{basis_vec(3, 0), basis_vec(3, 1), basis_vec(3, 0)};
  const auto found = find_sl2_triples(sl2, {standard, degenerate});
  REQUIRE(found.size() == 1);
  CHECK(found.front().h == basis_vec(3, 1));

  // matrix units inside sl3: (E12, E11 - E22, E21) sit at indices (0, 3, 5)
  const auto sl3 = special_linear(3);
  const Sl2Triple units{basis_vec(8, 0), basis_vec(8, 3), basis_vec(8, 5)};
  CHECK(find_sl2_triples(sl3, {units}).size() == 1);
}

TEST_CASE("subspace basics") {
  CHECK_THROWS_AS(Subspace(2, {RationalVector{Rational(1), Rational(2)},
                               RationalVector{Rational(2), Rational(4)}}),
                  std::invalid_argument);
  const auto s = Subspace::span_of(2, {RationalVector{Rational(1), Rational(2)},
                                       RationalVector{Rational(2), Rational(4)}});
  CHECK(s.dim() == 1);
  CHECK(Subspace::full(3) == Subspace::span_of(3, Subspace::full(3).basis()));
}

TEST_CASE("dimension zero algebra is legal everywhere") {
  const LieAlgebra g;
  CHECK(g.dim() == 0);
  CHECK(validate(g).ok());
  CHECK(derived_subalgebra(g).dim() == 0);
  CHECK(center(g).dim() == 0);
  CHECK(is_perfect(g)); // vacuously: derived = g = 0
}
