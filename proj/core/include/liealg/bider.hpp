#ifndef LIEALG_BIDER_HPP
#define LIEALG_BIDER_HPP

#include "liealg/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liealg {

enum class BiderMode { full, symmetric, skew, super_symmetric };
enum class DeltaParity { even, odd, both }; // 'both' marks the ungraded case

std::string to_string(BiderMode mode);

/// Solutions delta of the two-sided derivation identities, as flattened
/// vectors with index (i, j, k) -> i*dim*dim_v + j*dim_v + k, meaning the
/// k-th coordinate of delta(b_i, b_j). The basis is the canonical nullspace
/// basis of the assembled system.
struct BilinearSolutionSpace {
  LieAlgebra algebra;
  Representation target;
  BiderMode mode = BiderMode::full;
  DeltaParity delta_parity = DeltaParity::both;
  std::vector<RationalVector> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

inline int bider_flat_index(int dim, int dim_v, int i, int j, int k) {
  return (i * dim + j) * dim_v + k;
}

/// delta(x, y) for a flattened solution vector and coordinate vectors x, y.
RationalVector bilinear_eval(const RationalVector& delta, int dim, int dim_v,
                             const RationalVector& x, const RationalVector& y);

/// Solves both identities
///   delta([x,y], z) = x delta(y,z) - y delta(x,z)
///   delta(x, [y,z]) = y delta(x,z) - z delta(x,y)
/// over all ordered basis triples, with the symmetry constraint
/// delta(x,y) -+ delta(y,x) = 0 added inside the system for the symmetric
/// and skew modes. Ungraded algebras only.
BilinearSolutionSpace biderivation_space(const LieAlgebra& g, const Representation& v,
                                         BiderMode mode);

/// The graded analogue into the adjoint module, for a homogeneous delta of
/// the given parity:
///   delta([x,y],z) = (-1)^{|d||x|}[x, delta(y,z)]
///                    - (-1)^{|y|(|d|+|x|)}[y, delta(x,z)]
///   delta(x,[y,z]) = (-1)^{(|d|+|x|)|y|}[y, delta(x,z)]
///                    - (-1)^{|z|(|d|+|x|+|y|)}[z, delta(x,y)]
/// with delta(x,y) = (-1)^{|x||y|} delta(y,x) when supersymmetric is set.
BilinearSolutionSpace super_biderivation_space(const LieAlgebra& g, Parity delta_parity,
                                               bool supersymmetric);

/// Independent oracle: the same solution space, derived by evaluating the
/// identities on elementary bilinear maps and running a naive dense
/// rational elimination. Guarded to dim*dim*dim_v <= 200 unknowns.
BilinearSolutionSpace brute_force_biderivation_space(const LieAlgebra& g,
                                                     const Representation& v,
                                                     BiderMode mode);

/// First failing identity instance of a solution vector, if any: which
/// identity (1 or 2), on which triple, at which coordinate.
struct IdentityDefect {
  int identity;
  std::array<int, 3> triple;
  int coordinate;
};
std::optional<IdentityDefect> find_identity_defect(const LieAlgebra& g,
                                                   const Representation& v,
                                                   const RationalVector& delta);
std::optional<IdentityDefect> find_super_identity_defect(const LieAlgebra& g,
                                                         Parity delta_parity,
                                                         const RationalVector& delta);

/// Encodes (x, y) -> [x, y] as a flattened solution vector over the adjoint.
RationalVector inner_family_vector(const LieAlgebra& g);

/// gamma together with the (zero) mismatch delta - gamma([.,.]), flattened.
struct SkewFactorization {
  RationalMatrix gamma;
  RationalVector residual;
};

/// Factors every basis solution of a skew space as gamma([x,y]) with gamma
/// an intertwiner adjoint -> target. Requires a perfect algebra and a
/// target without invariants; a missing factorization is a hard failure.
std::vector<SkewFactorization> skew_factorization(const BilinearSolutionSpace& space);

/// delta(x,[y,z]) + delta(y,[z,x]) + delta(z,[x,y]) = 0 on all basis
/// triples, for every basis solution. Symmetric-mode spaces only.
bool check_cyclic_identity(const BilinearSolutionSpace& space);

/// delta vanishes on (derived subalgebra) x (center) pairs for every basis
/// solution. Symmetric-mode spaces only.
bool check_center_annihilation(const BilinearSolutionSpace& space);

/// The two reduction routes for symmetric-triviality over a semisimple
/// subalgebra g0: a faithful adjoint g0-action, or perfectness with the
/// g0-centralizer equal to the center.
struct ReductionCriteria {
  bool perfect = false;
  bool centralizer_equals_center = false;
  bool faithful_module = false;
};
ReductionCriteria check_reduction_criteria(const LieAlgebra& g, const Subspace& g0);

/// The graded variant: reductivity of the even part is asserted by the
/// caller, not decided here; the computable parts are perfectness and the
/// dimension of the odd centralizer of g0.
struct SuperReductionCriteria {
  bool perfect = false;
  int odd_centralizer_dim = 0;
  bool odd_centralizer_at_most_one = false;
};
SuperReductionCriteria check_super_reduction_criteria(const LieAlgebra& g, const Subspace& g0);

} // namespace liealg

#endif
