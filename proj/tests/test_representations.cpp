#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liealg/constructors.hpp"
#include "liealg/representation.hpp"

using namespace liealg;

namespace {

RationalVector basis_vec(int dim, int i) {
  RationalVector v(static_cast<std::size_t>(dim), Rational(0));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

Subspace first_coords(int ambient, int count) {
  std::vector<RationalVector> basis;
  for (int i = 0; i < count; ++i) {
    basis.push_back(basis_vec(ambient, i));
  }
  return Subspace(ambient, std::move(basis));
}

} // namespace

TEST_CASE("adjoint of sl2 has the weight-diagonal Cartan action") {
  const auto rep = adjoint(special_linear(2));
  CHECK(validate(rep).ok());
  const auto& h = rep.matrix(1);
  CHECK(h.get(0, 0) == Rational(2));
  CHECK(h.get(1, 1) == Rational(0));
  CHECK(h.get(2, 2) == Rational(-2));
  CHECK(h.nnz() == 2);
}

TEST_CASE("adjoint of an abelian algebra is zero") {
  const auto rep = adjoint(abelian(3));
  for (const auto& m : rep.matrices()) {
    CHECK(m.is_zero());
  }
  CHECK(validate(rep).ok());
}

TEST_CASE("adjoint of sl(2|1) satisfies the super module law") {
  const auto rep = adjoint(special_linear_super(2, 1));
  CHECK(rep.parity().has_value());
  CHECK(validate(rep).ok());
}

TEST_CASE("trivial representation") {
  const auto g = special_linear(2);
  const auto rep = trivial_rep(g, 1);
  CHECK(validate(rep).ok());
  CHECK(invariants_subspace(rep).dim() == 1);
  CHECK(derivation_space(rep).h1_dim == 0);
}

TEST_CASE("sl2 irreducibles") {
  CHECK(sl2_irrep(0).dim_v() == 1);
  CHECK(validate(sl2_irrep(0)).ok());

  const auto natural = sl2_irrep(1);
  CHECK(natural.dim_v() == 2);
  CHECK(validate(natural).ok());
  CHECK(natural.matrix(1).get(0, 0) == Rational(1));
  CHECK(natural.matrix(1).get(1, 1) == Rational(-1));

  for (int m = 2; m <= 6; ++m) {
    CHECK(validate(sl2_irrep(m)).ok());
  }

  // V(2) is the adjoint module: a one-dimensional intertwiner space
  const auto v2 = sl2_irrep(2);
  const auto ad = Representation(v2.algebra(), 3, adjoint(special_linear(2)).matrices());
  CHECK(module_hom_space(ad, v2).size() == 1);
}

TEST_CASE("direct sums of representations") {
  const auto v1 = sl2_irrep(1);
  const auto v2 = sl2_irrep(2);
  const auto sum = direct_sum_rep(v1, v2);
  CHECK(sum.dim_v() == 5);
  CHECK(validate(sum).ok());
  CHECK(derivation_space(sum).h1_dim == 0);

  const auto with_zero = direct_sum_rep(v1, trivial_rep(v1.algebra(), 0));
  CHECK(with_zero.dim_v() == v1.dim_v());
  CHECK(with_zero.matrices() == v1.matrices());

  CHECK_THROWS_AS(direct_sum_rep(v1, adjoint(heisenberg(1))), std::invalid_argument);
}

TEST_CASE("invariants subspace") {
  const auto g = special_linear(2);
  CHECK(invariants_subspace(trivial_rep(g, 3)).dim() == 3);
  CHECK(invariants_subspace(adjoint(g)).dim() == 0);

  // restricting the oscillator adjoint to the sp-part leaves span(z)
  const auto osc = oscillator(1);
  const auto restricted = restrict_to(adjoint(osc), first_coords(6, 3));
  const auto inv = invariants_subspace(restricted);
  CHECK(inv.dim() == 1);
  CHECK(inv.contains(basis_vec(6, 5)));
}

TEST_CASE("restriction to subalgebras") {
  const auto g = special_linear(2);
  const auto ad = adjoint(g);
  const auto full = restrict_to(ad, Subspace::full(3));
  CHECK(same_structure(full.algebra(), g));
  CHECK(full.matrices() == ad.matrices());

  // takiff(sl2) as an sl2-module is faithful of dimension 6
  const auto tk = takiff(special_linear(2));
  const auto tk_rep = restrict_to(adjoint(tk), first_coords(6, 3));
  CHECK(tk_rep.dim_v() == 6);
  CHECK(validate(tk_rep).ok());
  CHECK(invariants_subspace(tk_rep).dim() == 0);

  // the central extension keeps exactly span(c) invariant
  const auto ext = trivial_central_extension(special_linear(2));
  const auto ext_rep = restrict_to(adjoint(ext), first_coords(4, 3));
  const auto inv = invariants_subspace(ext_rep);
  CHECK(inv.dim() == 1);
  CHECK(inv.contains(basis_vec(4, 3)));

  // a non-subalgebra span is rejected: inside the oscillator, [b11, e2] = e1
  // escapes span(b11, e2)
  const auto osc = oscillator(1);
  CHECK_THROWS_AS(restrict_to(adjoint(osc),
                              Subspace(6, {basis_vec(6, 1), basis_vec(6, 4)})),
                  std::invalid_argument);
}

TEST_CASE("module hom spaces") {
  const auto g = special_linear(2);
  const auto ad = adjoint(g);
  const auto schur = module_hom_space(ad, ad);
  REQUIRE(schur.size() == 1); // scalars of the identity
  const auto& t = schur.front();
  CHECK(t.get(0, 0) == t.get(1, 1));
  CHECK(t.get(1, 1) == t.get(2, 2));
  CHECK(t.get(0, 1) == Rational(0));

  const auto v1 = sl2_irrep(1);
  const auto v2_over_v1_algebra = Representation(v1.algebra(), 3, sl2_irrep(2).matrices());
  CHECK(module_hom_space(v1, v2_over_v1_algebra).empty());

  CHECK(module_hom_space(v1, direct_sum_rep(v1, v1)).size() == 2);

  // intertwiner equation rechecked entry by entry
  for (const auto& hom : module_hom_space(v1, direct_sum_rep(v1, v1))) {
    for (int i = 0; i < 3; ++i) {
      const auto lhs = hom * v1.matrix(i);
      const auto rhs = direct_sum_rep(v1, v1).matrix(i) * hom;
      CHECK(lhs == rhs);
    }
  }

  CHECK_THROWS_AS(module_hom_space(v1, adjoint(heisenberg(1))), std::invalid_argument);
}

TEST_CASE("derivation spaces and first cohomology") {
  for (int m = 0; m <= 6; ++m) {
    CHECK(derivation_space(sl2_irrep(m)).h1_dim == 0);
  }

  // over a 1-dim abelian algebra with trivial coefficients every linear map
  // is a derivation and none is inner
  const auto line = derivation_space(trivial_rep(abelian(1), 1));
  CHECK(line.der_basis.size() == 1);
  CHECK(line.inner_basis.empty());
  CHECK(line.h1_dim == 1);

  // derivations of heisenberg(1) into the trivial line vanish on the derived
  // algebra span(z), leaving two dimensions
  const auto h1 = derivation_space(trivial_rep(heisenberg(1), 1));
  CHECK(h1.der_basis.size() == 2);
  CHECK(h1.inner_basis.empty());
  CHECK(h1.h1_dim == 2);

  CHECK_THROWS_AS(derivation_space(adjoint(special_linear_super(2, 1))),
                  std::invalid_argument);
}

TEST_CASE("inner derivations count matches the invariants") {
  const auto check = [](const Representation& rep) {
    const auto space = derivation_space(rep);
    CHECK(static_cast<int>(space.inner_basis.size()) ==
          rep.dim_v() - invariants_subspace(rep).dim());
    // inner derivations really are derivations
    for (const auto& inner : space.inner_basis) {
      CHECK(in_span(inner, space.der_basis));
    }
  };
  check(adjoint(special_linear(2)));
  check(adjoint(heisenberg(1)));
  check(sl2_irrep(3));
  check(trivial_rep(special_linear(2), 2));
  check(adjoint(trivial_central_extension(special_linear(2))));
}

TEST_CASE("representation constructor validation") {
  const auto g = special_linear(2);
  CHECK_THROWS_AS(Representation(g, 2, {RationalMatrix(2, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(Representation(g, 2,
                                 {RationalMatrix(2, 2), RationalMatrix(3, 3),
                                  RationalMatrix(2, 2)}),
                  std::invalid_argument);
}
