#ifndef LIEALG_RATIONAL_MATRIX_HPP
#define LIEALG_RATIONAL_MATRIX_HPP

#include "liealg/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace liealg {

using RationalVector = std::vector<Rational>;

/// Sparse exact matrix over the rationals. Absent entries are zero and a
/// stored entry is never zero. Immutable use after assembly is the norm;
/// shared reads are safe.
class RationalMatrix {
public:
  using Index = std::pair<int, int>; // (row, col), row-major order

  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational get(int row, int col) const;
  void set(int row, int col, Rational value); // storing zero erases
  void add(int row, int col, const Rational& value);

  const std::map<Index, Rational>& entries() const { return entries_; }

  RationalVector row_dense(int row) const;
  std::vector<RationalVector> to_rows() const;

  /// Matrix-vector product m*x, exact.
  RationalVector apply(const RationalVector& x) const;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix scaled(const Rational& factor) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<Index, Rational> entries_;
};

/// Reduced row echelon form. Pivots are 1, pivot columns strictly increase,
/// entries above and below pivots vanish, and the row space is preserved.
/// Elimination runs fraction-free on gcd-normalized integer rows; the RREF
/// of a given row space is unique, so the result is deterministic.
RationalMatrix rref(const RationalMatrix& m);

/// Number of pivots of rref(m).
int rank(const RationalMatrix& m);

/// Canonical kernel basis read off the RREF: each free column, taken in
/// increasing order, is set to 1 with pivot coordinates solved back.
/// Size equals cols(m) - rank(m).
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

/// Canonical basis of the row space: the nonzero rows of rref(m).
std::vector<RationalVector> row_space_basis(const RationalMatrix& m);

/// True iff v is a rational linear combination of the basis vectors.
/// Throws std::invalid_argument on mismatched vector lengths.
bool in_span(const RationalVector& v, const std::vector<RationalVector>& basis);

/// One exact solution of m*x = rhs with all free variables set to zero,
/// or nullopt when the system is inconsistent.
std::optional<RationalVector> solve_particular(const RationalMatrix& m,
                                               const RationalVector& rhs);

} // namespace liealg

#endif
