#ifndef LIEALG_REPRESENTATION_HPP
#define LIEALG_REPRESENTATION_HPP

#include "liealg/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace liealg {

/// A module over a LieAlgebra, given by one exact matrix per basis element:
/// rho([b_i, b_j]) = rho(b_i) rho(b_j) - (-1)^{|b_i||b_j|} rho(b_j) rho(b_i)
/// (plain commutator when the algebra is ungraded). An optional parity of
/// the module coordinates makes the action parity-homogeneous.
class Representation {
public:
  Representation() : Representation(LieAlgebra(), 0, {}) {}
  Representation(LieAlgebra algebra, int dim_v, std::vector<RationalMatrix> matrices,
                 std::optional<std::vector<Parity>> parity = std::nullopt);

  const LieAlgebra& algebra() const { return algebra_; }
  int dim_v() const { return dim_v_; }
  const std::vector<RationalMatrix>& matrices() const { return matrices_; }
  const RationalMatrix& matrix(int i) const { return matrices_[static_cast<std::size_t>(i)]; }
  const std::optional<std::vector<Parity>>& parity() const { return parity_; }

  /// Action of a coordinate vector x on a module vector v.
  RationalVector act(const RationalVector& x, const RationalVector& v) const;

private:
  LieAlgebra algebra_;
  int dim_v_;
  std::vector<RationalMatrix> matrices_;
  std::optional<std::vector<Parity>> parity_;
};

/// Checks the (super-)commutation identity on all basis pairs, plus parity
/// homogeneity of the matrices when both gradings are present.
ValidationReport validate(const Representation& rep);

Representation adjoint(const LieAlgebra& g);
Representation trivial_rep(const LieAlgebra& g, int d);

/// The (m+1)-dimensional irreducible module of special_linear(2) in the
/// integral weight basis v_0..v_m:
///   h v_k = (m - 2k) v_k,  e v_k = (m - k + 1) v_{k-1},  f v_k = (k + 1) v_{k+1}.
Representation sl2_irrep(int m);

Representation direct_sum_rep(const Representation& a, const Representation& b);

/// Common kernel of all rho(b_i): the invariants Z_V(g).
Subspace invariants_subspace(const Representation& rep);

/// Views the module over the subalgebra spanned by s. The result's algebra
/// has s's basis order and recomputed structure constants; throws when s is
/// not closed under the bracket.
Representation restrict_to(const Representation& rep, const Subspace& s);

/// Basis of the intertwiner space {T : T rho_a(x) = rho_b(x) T for all x}.
std::vector<RationalMatrix> module_hom_space(const Representation& a,
                                             const Representation& b);

/// Bases for Der(g,V) and IDer(g,V) plus the first-cohomology dimension.
/// Maps g -> V are flattened with index i*dim_v + coordinate.
struct DerivationSpace {
  std::vector<RationalVector> der_basis;
  std::vector<RationalVector> inner_basis;
  int h1_dim = 0;
};

/// Solves the derivation law D([x,y]) = x D(y) - y D(x) on all basis pairs
/// and spans the inner derivations D_v: x -> x v. Ungraded algebras only.
DerivationSpace derivation_space(const Representation& rep);

} // namespace liealg

#endif
