#include "liealg/bider.hpp"

#include <stdexcept>

// Independent oracle path. The system is derived by evaluating the two
// identities on every elementary bilinear map (one unknown set to 1), and
// the kernel is computed by a plain dense Gauss-Jordan over rationals. No
// code is shared with the sparse assembly or the fraction-free eliminator.

namespace liealg {

namespace {

using DenseMatrix = std::vector<RationalVector>;

// Textbook reduced row echelon form, dense rational arithmetic.
void dense_rref(DenseMatrix& m, std::vector<int>& pivot_cols) {
  pivot_cols.clear();
  if (m.empty()) {
    return;
  }
  const std::size_t cols = m.front().size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < m.size(); ++col) {
    std::size_t found = m.size();
    for (std::size_t r = top; r < m.size(); ++r) {
      if (m[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found == m.size()) {
      continue;
    }
    std::swap(m[top], m[found]);
    const Rational inv = Rational(1) / m[top][col];
    for (std::size_t c = col; c < cols; ++c) {
      m[top][c] *= inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != top && m[r][col] != 0) {
        const Rational factor = m[r][col];
        for (std::size_t c = col; c < cols; ++c) {
          m[r][c] -= factor * m[top][c];
        }
      }
    }
    pivot_cols.push_back(static_cast<int>(col));
    ++top;
  }
}

std::vector<RationalVector> dense_kernel(DenseMatrix m, std::size_t cols) {
  std::vector<int> pivot_cols;
  dense_rref(m, pivot_cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) {
    is_pivot[static_cast<std::size_t>(c)] = true;
  }
  std::vector<RationalVector> kernel;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
      v[static_cast<std::size_t>(pivot_cols[p])] = -m[p][free];
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

} // namespace

BilinearSolutionSpace brute_force_biderivation_space(const LieAlgebra& g,
                                                     const Representation& v,
                                                     BiderMode mode) {
  if (g.graded()) {
    throw std::invalid_argument("brute_force_biderivation_space: ungraded algebras only");
  }
  if (mode == BiderMode::super_symmetric) {
    throw std::invalid_argument("brute_force_biderivation_space: ungraded modes only");
  }
  if (!same_structure(v.algebra(), g)) {
    throw std::invalid_argument(
        "brute_force_biderivation_space: representation is over a different algebra");
  }
  const int n = g.dim();
  const int d = v.dim_v();
  const int unknowns = n * n * d;
  if (unknowns > 200) {
    throw std::invalid_argument("brute_force_biderivation_space: size guard exceeded");
  }

  DenseMatrix system;
  std::vector<RationalVector> columns;
  columns.reserve(static_cast<std::size_t>(unknowns));

  // defect profile of one elementary delta, concatenating both identities
  // over all triples plus the symmetry constraint rows
  auto defect_column = [&](int u) {
    RationalVector delta(static_cast<std::size_t>(unknowns), Rational(0));
    delta[static_cast<std::size_t>(u)] = 1;
    RationalVector column;
    RationalVector ei(static_cast<std::size_t>(n), Rational(0));
    RationalVector ej(static_cast<std::size_t>(n), Rational(0));
    RationalVector ek(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
      ei.assign(static_cast<std::size_t>(n), Rational(0));
      ei[static_cast<std::size_t>(i)] = 1;
      for (int j = 0; j < n; ++j) {
        ej.assign(static_cast<std::size_t>(n), Rational(0));
        ej[static_cast<std::size_t>(j)] = 1;
        for (int k = 0; k < n; ++k) {
          ek.assign(static_cast<std::size_t>(n), Rational(0));
          ek[static_cast<std::size_t>(k)] = 1;
          const auto lhs1 = bilinear_eval(delta, n, d, g.bracket(ei, ej), ek);
          const auto r1a = v.act(ei, bilinear_eval(delta, n, d, ej, ek));
          const auto r1b = v.act(ej, bilinear_eval(delta, n, d, ei, ek));
          for (int p = 0; p < d; ++p) {
            column.push_back(lhs1[static_cast<std::size_t>(p)] -
                             r1a[static_cast<std::size_t>(p)] +
                             r1b[static_cast<std::size_t>(p)]);
          }
          const auto lhs2 = bilinear_eval(delta, n, d, ei, g.bracket(ej, ek));
          const auto r2a = v.act(ej, bilinear_eval(delta, n, d, ei, ek));
          const auto r2b = v.act(ek, bilinear_eval(delta, n, d, ei, ej));
          for (int p = 0; p < d; ++p) {
            column.push_back(lhs2[static_cast<std::size_t>(p)] -
                             r2a[static_cast<std::size_t>(p)] +
                             r2b[static_cast<std::size_t>(p)]);
          }
        }
      }
    }
    if (mode == BiderMode::symmetric || mode == BiderMode::skew) {
      const Rational s(mode == BiderMode::symmetric ? -1 : 1);
      for (int i = 0; i < n; ++i) {
        ei.assign(static_cast<std::size_t>(n), Rational(0));
        ei[static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < n; ++j) {
          ej.assign(static_cast<std::size_t>(n), Rational(0));
          ej[static_cast<std::size_t>(j)] = 1;
          const auto fwd = bilinear_eval(delta, n, d, ei, ej);
          const auto bwd = bilinear_eval(delta, n, d, ej, ei);
          for (int p = 0; p < d; ++p) {
            column.push_back(fwd[static_cast<std::size_t>(p)] +
                             s * bwd[static_cast<std::size_t>(p)]);
          }
        }
      }
    }
    return column;
  };

  for (int u = 0; u < unknowns; ++u) {
    columns.push_back(defect_column(u));
  }
  const std::size_t total_rows = columns.empty() ? 0 : columns.front().size();
  system.assign(total_rows, RationalVector(static_cast<std::size_t>(unknowns), Rational(0)));
  for (int u = 0; u < unknowns; ++u) {
    for (std::size_t r = 0; r < total_rows; ++r) {
      system[r][static_cast<std::size_t>(u)] = columns[static_cast<std::size_t>(u)][r];
    }
  }

  BilinearSolutionSpace space{g, v, mode, DeltaParity::both,
                              dense_kernel(std::move(system), static_cast<std::size_t>(unknowns))};
  return space;
}

} // namespace liealg
