#ifndef LIEALG_LIE_ALGEBRA_HPP
#define LIEALG_LIE_ALGEBRA_HPP

#include "liealg/rational_matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liealg {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 1u);
}

/// A finite-dimensional Lie (super)algebra given by structure constants:
/// [b_i, b_j] = sum_k c(i,j,k) b_k. A parity vector turns the same data into
/// a Z2-graded algebra; without one every element is even. The constants are
/// the single source of truth; instances are immutable once built and safe
/// to share across threads.
class LieAlgebra {
public:
  using Key = std::array<int, 3>; // (i, j, k)
  using Constants = std::map<Key, Rational>;

  LieAlgebra() : LieAlgebra(0, {}, {}) {} // the zero-dimensional algebra
  LieAlgebra(int dim, std::vector<std::string> basis_labels, Constants constants,
             std::optional<std::vector<Parity>> parity = std::nullopt);

  int dim() const { return dim_; }
  bool graded() const { return parity_.has_value(); }
  Parity parity_of(int i) const;
  const std::optional<std::vector<Parity>>& parity() const { return parity_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Constants& structure_constants() const { return constants_; }

  Rational constant(int i, int j, int k) const;

  /// Coordinates of [b_i, b_j].
  RationalVector bracket_basis(int i, int j) const;

  /// Bilinear extension of the structure constants. For graded algebras the
  /// signs live in the constants themselves; no extra factors are applied.
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

  /// [b_i, w] for a coordinate vector w.
  RationalVector bracket_basis_vector(int i, const RationalVector& w) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) = default;

private:
  int dim_;
  std::vector<std::string> labels_;
  Constants constants_;
  std::optional<std::vector<Parity>> parity_;
};

/// Structural equality that ignores basis labels; the compatibility notion
/// used when two representations must live over "the same" algebra.
bool same_structure(const LieAlgebra& a, const LieAlgebra& b);

/// A subspace of a fixed-dimension ambient space, stored as the basis the
/// caller handed in (order matters for restriction). Construction rejects
/// dependent vectors.
class Subspace {
public:
  Subspace(int ambient_dim, std::vector<RationalVector> basis_vectors);

  /// Canonicalizing factory: keeps only the row-space RREF basis.
  static Subspace span_of(int ambient_dim, const std::vector<RationalVector>& vectors);
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<RationalVector>& basis() const { return basis_; }

  bool contains(const RationalVector& v) const;

  /// Equal row spaces, independent of basis choice.
  friend bool operator==(const Subspace& a, const Subspace& b);

private:
  int ambient_dim_;
  std::vector<RationalVector> basis_;
};

struct Violation {
  enum class Kind { antisymmetry, jacobi, grading };
  Kind kind;
  std::array<int, 3> indices; // (i, j, k) or (i, j, -1) for pair constraints
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks (super-)antisymmetry, the (super-)Jacobi identity on basis triples,
/// and parity homogeneity of the constants. Violations are data, not errors.
ValidationReport validate(const LieAlgebra& g);

/// Span of all [b_i, b_j], as a canonical basis.
Subspace derived_subalgebra(const LieAlgebra& g);

/// {x : [x, b_j] = 0 for all j}, computed as a nullspace.
Subspace center(const LieAlgebra& g);

/// {x in within : [v, x] = 0 for every basis vector v of s}.
Subspace centralizer(const LieAlgebra& g, const Subspace& s, const Subspace& within);

bool is_perfect(const LieAlgebra& g);

/// Span of the odd basis elements (graded algebras only).
Subspace odd_part(const LieAlgebra& g);
Subspace even_part(const LieAlgebra& g);

/// True iff every pairwise bracket of s's basis stays inside s.
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

struct Sl2Triple {
  RationalVector e, h, f;
};

/// Keeps exactly the candidates satisfying [h,e] = 2e, [h,f] = -2f, [e,f] = h.
std::vector<Sl2Triple> find_sl2_triples(const LieAlgebra& g,
                                        const std::vector<Sl2Triple>& candidates);

} // namespace liealg

#endif
