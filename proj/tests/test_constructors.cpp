#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liealg/constructors.hpp"

using namespace liealg;

namespace {

RationalVector basis_vec(int dim, int i) {
  RationalVector v(static_cast<std::size_t>(dim), Rational(0));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

// checks that T is an isomorphism of brackets: T[b_i, b_j] = [T b_i, T b_j]
bool preserves_brackets(const LieAlgebra& from, const LieAlgebra& to,
                        const std::vector<RationalVector>& images) {
  for (int i = 0; i < from.dim(); ++i) {
    for (int j = 0; j < from.dim(); ++j) {
      const auto lhs_coords = from.bracket_basis(i, j);
      RationalVector lhs(static_cast<std::size_t>(to.dim()), Rational(0));
      for (int k = 0; k < from.dim(); ++k) {
        const auto& c = lhs_coords[static_cast<std::size_t>(k)];
        if (c == 0) {
          continue;
        }
        for (int t = 0; t < to.dim(); ++t) {
          lhs[static_cast<std::size_t>(t)] +=
              c * images[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)];
        }
      }
      if (lhs != to.bracket(images[static_cast<std::size_t>(i)],
                            images[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

} // namespace

TEST_CASE("every constructor output validates cleanly") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(validate(special_linear(n)).ok());
  }
  for (int n = 1; n <= 4; ++n) {
    CHECK(validate(symplectic(2 * n)).ok());
    CHECK(validate(heisenberg(n)).ok());
  }
  CHECK(validate(takiff(special_linear(2))).ok());
  CHECK(validate(direct_sum(special_linear(2), heisenberg(1))).ok());
  CHECK(validate(trivial_central_extension(special_linear(2))).ok());
  CHECK(validate(oscillator(1)).ok());
  CHECK(validate(oscillator(2)).ok());
  CHECK(validate(special_linear_super(2, 1)).ok());
  CHECK(validate(special_linear_super(1, 2)).ok());
  CHECK(validate(special_linear_super(3, 1)).ok());
}

TEST_CASE("dimension formulas") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(special_linear(n).dim() == n * n - 1);
  }
  for (int n = 1; n <= 4; ++n) {
    CHECK(symplectic(2 * n).dim() == n * (2 * n + 1));
    CHECK(heisenberg(n).dim() == 2 * n + 1);
    CHECK(oscillator(n).dim() == n * (2 * n + 1) + 2 * n + 1);
  }
  CHECK(takiff(special_linear(3)).dim() == 16);
  CHECK(special_linear_super(2, 1).dim() == 8);
  CHECK(special_linear_super(3, 2).dim() == 24);
}

TEST_CASE("sl2 structure constants") {
  const auto g = special_linear(2); // (e, h, f)
  CHECK(g.constant(1, 0, 0) == Rational(2));   // [h,e] = 2e
  CHECK(g.constant(1, 2, 2) == Rational(-2));  // [h,f] = -2f
  CHECK(g.constant(0, 2, 1) == Rational(1));   // [e,f] = h
  CHECK(center(g).dim() == 0);
  CHECK(center(special_linear(3)).dim() == 0);
  CHECK(is_perfect(g));
}

TEST_CASE("sp2 is isomorphic to sl2") {
  const auto sl2 = special_linear(2); // (e, h, f)
  const auto sp2 = symplectic(2);     // (a11, b11, c11) = (h, e, f)
  CHECK(sp2.dim() == 3);
  const std::vector<RationalVector> images = {basis_vec(3, 1), basis_vec(3, 0),
                                              basis_vec(3, 2)};
  CHECK(preserves_brackets(sl2, sp2, images));
}

TEST_CASE("symplectic block constraint") {
  // every basis matrix of sp4 sits inside the constraint blocks; indirectly
  // visible through the natural representation matrices
  const auto rep = symplectic_natural_rep(4);
  for (const auto& m : rep.matrices()) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        CHECK(m.get(i, j) == -m.get(2 + j, 2 + i));         // D = -A^T
        CHECK(m.get(i, 2 + j) == m.get(j, 2 + i));          // B symmetric
        CHECK(m.get(2 + i, j) == m.get(2 + j, i));          // C symmetric
      }
    }
  }
}

TEST_CASE("heisenberg structure") {
  const auto g = heisenberg(1);
  CHECK(center(g).dim() == 1);
  CHECK(center(g).contains(basis_vec(3, 2)));
  CHECK(derived_subalgebra(g) == center(g));
  CHECK_FALSE(is_perfect(g));
  CHECK(derived_subalgebra(heisenberg(3)).dim() == 1);
}

TEST_CASE("takiff of sl2") {
  const auto g = takiff(special_linear(2));
  CHECK(g.dim() == 6);
  CHECK(is_perfect(g)); // [g, g*t] = g*t recovers the whole ideal
  CHECK(center(g).dim() == 0);

  // the t-copy brackets to zero
  for (int i = 3; i < 6; ++i) {
    for (int j = 3; j < 6; ++j) {
      CHECK(g.bracket_basis(i, j) == RationalVector(6, Rational(0)));
    }
  }
  // g sits inside on the first coordinates
  std::vector<RationalVector> head;
  for (int i = 0; i < 3; ++i) {
    head.push_back(basis_vec(6, i));
  }
  CHECK(is_subalgebra(g, Subspace(6, head)));
  CHECK_THROWS_AS(takiff(special_linear_super(2, 1)), std::invalid_argument);
}

TEST_CASE("direct sums") {
  const auto two_sl2 = direct_sum(special_linear(2), special_linear(2));
  CHECK(two_sl2.dim() == 6);
  CHECK(center(two_sl2).dim() == 0);
  CHECK(validate(two_sl2).ok());

  const auto with_zero = direct_sum(special_linear(2), abelian(0));
  CHECK(with_zero == special_linear(2));

  CHECK_FALSE(is_perfect(direct_sum(special_linear(2), abelian(1))));
  CHECK_THROWS_AS(direct_sum(special_linear(2), special_linear_super(2, 1)),
                  std::invalid_argument);
}

TEST_CASE("trivial central extension") {
  const auto g = trivial_central_extension(special_linear(2));
  CHECK(g.dim() == 4);
  const auto z = center(g);
  CHECK(z.dim() == 1);
  CHECK(z.contains(basis_vec(4, 3)));
  const auto derived = derived_subalgebra(g);
  CHECK(derived.dim() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(derived.contains(basis_vec(4, i))); // derived part is the original sl2
  }
  CHECK_FALSE(is_perfect(g));
}

TEST_CASE("semidirect products with a Heisenberg ideal") {
  const auto sp2 = symplectic(2);
  const auto osc = semidirect_with_heisenberg(sp2, symplectic_natural_rep(2), 1);
  CHECK(osc == oscillator(1));
  CHECK(validate(osc).ok());

  // z stays central
  CHECK(center(osc).contains(basis_vec(6, 5)));

  // an action by the identity matrix is a representation of the abelian
  // algebra but does not preserve the symplectic form: Jacobi on (x, e1, e2)
  // needs 0 = [xe1, e2] + [e1, xe2] = 2z
  const auto line = abelian(1);
  const Representation bad(line, 2, {RationalMatrix::identity(2)});
  CHECK(validate(bad).ok());
  CHECK_THROWS_WITH_AS(semidirect_with_heisenberg(line, bad, 1),
                       "semidirect_with_heisenberg: action does not preserve the symplectic form",
                       std::invalid_argument);

  // the trivial action is symplectic, so the construction degenerates to a
  // direct sum and is accepted
  const auto split = semidirect_with_heisenberg(sp2, trivial_rep(sp2, 2), 1);
  CHECK(validate(split).ok());
  CHECK(split == direct_sum(sp2, heisenberg(1)));
}

TEST_CASE("oscillator properties") {
  const auto g = oscillator(1);
  CHECK(g.dim() == 6);
  CHECK(is_perfect(g));
  const auto z = center(g);
  CHECK(z.dim() == 1);
  CHECK(z.contains(basis_vec(6, 5)));

  // the sp-part centralizer of the whole algebra equals span(z)
  std::vector<RationalVector> sp_part;
  for (int i = 0; i < 3; ++i) {
    sp_part.push_back(basis_vec(6, i));
  }
  CHECK(centralizer(g, Subspace(6, sp_part), Subspace::full(6)) == z);

  const auto g2 = oscillator(2); // dim 10 + 4 + 1
  std::vector<RationalVector> sp4_part;
  for (int i = 0; i < 10; ++i) {
    sp4_part.push_back(basis_vec(15, i));
  }
  const auto z2 = centralizer(g2, Subspace(15, sp4_part), Subspace::full(15));
  CHECK(z2.dim() == 1);
  CHECK(z2.contains(basis_vec(15, 14)));
  CHECK(z2 == center(g2));
}

TEST_CASE("sl(2|1)") {
  const auto g = special_linear_super(2, 1);
  REQUIRE(g.graded());
  int even = 0, odd = 0;
  for (int i = 0; i < g.dim(); ++i) {
    (g.parity_of(i) == Parity::even ? even : odd) += 1;
  }
  CHECK(even == 4);
  CHECK(odd == 4);

  // odd pairs commute symmetrically: [x,y] = [y,x]
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = 0; j < g.dim(); ++j) {
      if (g.parity_of(i) == Parity::odd && g.parity_of(j) == Parity::odd) {
        CHECK(g.bracket_basis(i, j) == g.bracket_basis(j, i));
      }
    }
  }
  CHECK(is_perfect(g));
  CHECK_THROWS_AS(special_linear_super(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(special_linear_super(0, 1), std::invalid_argument);
}

TEST_CASE("constructor argument validation") {
  CHECK_THROWS_AS(special_linear(1), std::invalid_argument);
  CHECK_THROWS_AS(symplectic(3), std::invalid_argument);
  CHECK_THROWS_AS(symplectic(0), std::invalid_argument);
  CHECK_THROWS_AS(heisenberg(0), std::invalid_argument);
  CHECK_THROWS_AS(oscillator(0), std::invalid_argument);
}
