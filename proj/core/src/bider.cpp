#include "liealg/bider.hpp"

#include <sstream>
#include <stdexcept>

namespace liealg {

namespace {

bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

int sign_exp(const LieAlgebra& g, int i) {
  return g.parity_of(i) == Parity::odd ? 1 : 0;
}

Rational pow_sign(int exponent) { return (exponent & 1) ? Rational(-1) : Rational(1); }

} // namespace

std::string to_string(BiderMode mode) {
  switch (mode) {
    case BiderMode::full: return "full";
    case BiderMode::symmetric: return "symmetric";
    case BiderMode::skew: return "skew";
    case BiderMode::super_symmetric: return "super-symmetric";
  }
  return "?";
}

RationalVector bilinear_eval(const RationalVector& delta, int dim, int dim_v,
                             const RationalVector& x, const RationalVector& y) {
  RationalVector out(static_cast<std::size_t>(dim_v), Rational(0));
  for (int i = 0; i < dim; ++i) {
    const auto& xi = x[static_cast<std::size_t>(i)];
    if (xi == 0) {
      continue;
    }
    for (int j = 0; j < dim; ++j) {
      const auto& yj = y[static_cast<std::size_t>(j)];
      if (yj == 0) {
        continue;
      }
      const Rational factor = xi * yj;
      const int base = (i * dim + j) * dim_v;
      for (int k = 0; k < dim_v; ++k) {
        const auto& d = delta[static_cast<std::size_t>(base + k)];
        if (d != 0) {
          out[static_cast<std::size_t>(k)] += factor * d;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Main solver: sparse assembly of the defining identities.
//
// Unknowns d(i,j,k) with flat index (i*dim + j)*dim_v + k. For basis triple
// (i,j,k) and target coordinate p the two identities read
//   sum_l c(i,j,l) d(l,k,p) - sum_m rho(i)_{p,m} d(j,k,m)
//                           + sum_m rho(j)_{p,m} d(i,k,m) = 0
//   sum_l c(j,k,l) d(i,l,p) - sum_m rho(j)_{p,m} d(i,k,m)
//                           + sum_m rho(k)_{p,m} d(i,j,m) = 0
// All ordered triples are enumerated for both identities; the redundancy is
// absorbed by the rank computation. Symmetry constraints are extra rows of
// the same system, so the returned canonical basis is stable.
// ---------------------------------------------------------------------------

BilinearSolutionSpace biderivation_space(const LieAlgebra& g, const Representation& v,
                                         BiderMode mode) {
  if (g.graded()) {
    throw std::invalid_argument("biderivation_space: use super_biderivation_space for graded algebras");
  }
  if (mode == BiderMode::super_symmetric) {
    throw std::invalid_argument("biderivation_space: super-symmetric needs a graded algebra");
  }
  if (!same_structure(v.algebra(), g)) {
    throw std::invalid_argument("biderivation_space: representation is over a different algebra");
  }
  const int n = g.dim();
  const int d = v.dim_v();
  const int unknowns = n * n * d;
  auto flat = [&](int i, int j, int k) { return bider_flat_index(n, d, i, j, k); };

  int sym_rows = 0;
  if (mode == BiderMode::symmetric) {
    sym_rows = n * (n - 1) / 2 * d;
  } else if (mode == BiderMode::skew) {
    sym_rows = (n * (n - 1) / 2 + n) * d;
  }
  RationalMatrix system(sym_rows + 2 * n * n * n * d, unknowns);
  int row = 0;

  // symmetry rows first: they are two-term and keep later reductions sparse
  if (mode == BiderMode::symmetric || mode == BiderMode::skew) {
    const Rational swap_sign(mode == BiderMode::symmetric ? -1 : 1);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = 0; k < d; ++k) {
          system.set(row, flat(i, j, k), Rational(1));
          system.set(row, flat(j, i, k), swap_sign);
          ++row;
        }
      }
    }
    if (mode == BiderMode::skew) {
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < d; ++k) {
          system.set(row, flat(i, i, k), Rational(1));
          ++row;
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto cij = g.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) {
        const int base = row;
        for (int l = 0; l < n; ++l) {
          const auto& c = cij[static_cast<std::size_t>(l)];
          if (c != 0) {
            for (int p = 0; p < d; ++p) {
              system.add(base + p, flat(l, k, p), c);
            }
          }
        }
        for (const auto& [idx, value] : v.matrix(i).entries()) {
          system.add(base + idx.first, flat(j, k, idx.second), -value);
        }
        for (const auto& [idx, value] : v.matrix(j).entries()) {
          system.add(base + idx.first, flat(i, k, idx.second), value);
        }
        row += d;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const int base = row;
        const auto cjk = g.bracket_basis(j, k);
        for (int l = 0; l < n; ++l) {
          const auto& c = cjk[static_cast<std::size_t>(l)];
          if (c != 0) {
            for (int p = 0; p < d; ++p) {
              system.add(base + p, flat(i, l, p), c);
            }
          }
        }
        for (const auto& [idx, value] : v.matrix(j).entries()) {
          system.add(base + idx.first, flat(i, k, idx.second), -value);
        }
        for (const auto& [idx, value] : v.matrix(k).entries()) {
          system.add(base + idx.first, flat(i, j, idx.second), value);
        }
        row += d;
      }
    }
  }

  BilinearSolutionSpace space{g, v, mode, DeltaParity::both, nullspace_basis(system)};
  return space;
}

BilinearSolutionSpace super_biderivation_space(const LieAlgebra& g, Parity delta_parity,
                                               bool supersymmetric) {
  if (!g.graded()) {
    throw std::invalid_argument("super_biderivation_space: algebra is not graded");
  }
  const Representation v = adjoint(g);
  const int n = g.dim();
  const int d = n;
  const int dp = delta_parity == Parity::odd ? 1 : 0;
  auto flat = [&](int i, int j, int k) { return bider_flat_index(n, d, i, j, k); };

  // rows: parity selection + optional supersymmetry + two identities
  int parity_rows = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (sign_exp(g, k) != ((dp + sign_exp(g, i) + sign_exp(g, j)) & 1)) {
          ++parity_rows;
        }
      }
    }
  }
  int sym_rows = 0;
  if (supersymmetric) {
    sym_rows = n * (n - 1) / 2 * d;
    for (int i = 0; i < n; ++i) {
      if (g.parity_of(i) == Parity::odd) {
        sym_rows += d;
      }
    }
  }
  RationalMatrix system(parity_rows + sym_rows + 2 * n * n * n * d, n * n * d);
  int row = 0;

  // homogeneity: coordinates of the wrong parity vanish
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (sign_exp(g, k) != ((dp + sign_exp(g, i) + sign_exp(g, j)) & 1)) {
          system.set(row++, flat(i, j, k), Rational(1));
        }
      }
    }
  }

  if (supersymmetric) {
    // delta(x,y) = (-1)^{|x||y|} delta(y,x); odd diagonals vanish outright
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Rational s = -pow_sign(sign_exp(g, i) * sign_exp(g, j));
        for (int k = 0; k < d; ++k) {
          system.set(row, flat(i, j, k), Rational(1));
          system.set(row, flat(j, i, k), s);
          ++row;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (g.parity_of(i) == Parity::odd) {
        for (int k = 0; k < d; ++k) {
          system.set(row++, flat(i, i, k), Rational(1));
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    const int xi = sign_exp(g, i);
    for (int j = 0; j < n; ++j) {
      const int xj = sign_exp(g, j);
      const auto cij = g.bracket_basis(i, j);
      const Rational s1 = pow_sign(dp * xi);
      const Rational s2 = pow_sign(xj * (dp + xi));
      for (int k = 0; k < n; ++k) {
        const int base = row;
        for (int l = 0; l < n; ++l) {
          const auto& c = cij[static_cast<std::size_t>(l)];
          if (c != 0) {
            for (int p = 0; p < d; ++p) {
              system.add(base + p, flat(l, k, p), c);
            }
          }
        }
        for (const auto& [idx, value] : v.matrix(i).entries()) {
          system.add(base + idx.first, flat(j, k, idx.second), -s1 * value);
        }
        for (const auto& [idx, value] : v.matrix(j).entries()) {
          system.add(base + idx.first, flat(i, k, idx.second), s2 * value);
        }
        row += d;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const int xi = sign_exp(g, i);
    for (int j = 0; j < n; ++j) {
      const int xj = sign_exp(g, j);
      const Rational s1 = pow_sign((dp + xi) * xj);
      for (int k = 0; k < n; ++k) {
        const int xk = sign_exp(g, k);
        const Rational s2 = pow_sign(xk * (dp + xi + xj));
        const int base = row;
        const auto cjk = g.bracket_basis(j, k);
        for (int l = 0; l < n; ++l) {
          const auto& c = cjk[static_cast<std::size_t>(l)];
          if (c != 0) {
            for (int p = 0; p < d; ++p) {
              system.add(base + p, flat(i, l, p), c);
            }
          }
        }
        for (const auto& [idx, value] : v.matrix(j).entries()) {
          system.add(base + idx.first, flat(i, k, idx.second), -s1 * value);
        }
        for (const auto& [idx, value] : v.matrix(k).entries()) {
          system.add(base + idx.first, flat(i, j, idx.second), s2 * value);
        }
        row += d;
      }
    }
  }

  BilinearSolutionSpace space{g, v,
                              supersymmetric ? BiderMode::super_symmetric : BiderMode::full,
                              delta_parity == Parity::odd ? DeltaParity::odd : DeltaParity::even,
                              nullspace_basis(system)};
  return space;
}

std::optional<IdentityDefect> find_identity_defect(const LieAlgebra& g,
                                                   const Representation& v,
                                                   const RationalVector& delta) {
  const int n = g.dim();
  const int d = v.dim_v();
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

        const auto d_jk = bilinear_eval(delta, n, d, ej, ek);
        const auto d_ik = bilinear_eval(delta, n, d, ei, ek);
        const auto d_ij = bilinear_eval(delta, n, d, ei, ej);

        auto lhs1 = bilinear_eval(delta, n, d, g.bracket_basis(i, j), ek);
        const auto t1 = v.matrix(i).apply(d_jk);
        const auto t2 = v.matrix(j).apply(d_ik);
        for (int p = 0; p < d; ++p) {
          const Rational defect = lhs1[static_cast<std::size_t>(p)] -
                                  t1[static_cast<std::size_t>(p)] +
                                  t2[static_cast<std::size_t>(p)];
          if (defect != 0) {
            return IdentityDefect{1, {i, j, k}, p};
          }
        }
        auto lhs2 = bilinear_eval(delta, n, d, ei, g.bracket_basis(j, k));
        const auto t3 = v.matrix(j).apply(d_ik);
        const auto t4 = v.matrix(k).apply(d_ij);
        for (int p = 0; p < d; ++p) {
          const Rational defect = lhs2[static_cast<std::size_t>(p)] -
                                  t3[static_cast<std::size_t>(p)] +
                                  t4[static_cast<std::size_t>(p)];
          if (defect != 0) {
            return IdentityDefect{2, {i, j, k}, p};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<IdentityDefect> find_super_identity_defect(const LieAlgebra& g,
                                                         Parity delta_parity,
                                                         const RationalVector& delta) {
  const int n = g.dim();
  const int dp = delta_parity == Parity::odd ? 1 : 0;
  const Representation v = adjoint(g);
  for (int i = 0; i < n; ++i) {
    const int xi = sign_exp(g, i);
    for (int j = 0; j < n; ++j) {
      const int xj = sign_exp(g, j);
      for (int k = 0; k < n; ++k) {
        const int xk = sign_exp(g, k);
        RationalVector ei(static_cast<std::size_t>(n), Rational(0));
        RationalVector ej(static_cast<std::size_t>(n), Rational(0));
        RationalVector ek(static_cast<std::size_t>(n), Rational(0));
        ei[static_cast<std::size_t>(i)] = 1;
        ej[static_cast<std::size_t>(j)] = 1;
        ek[static_cast<std::size_t>(k)] = 1;

        const auto d_jk = bilinear_eval(delta, n, n, ej, ek);
        const auto d_ik = bilinear_eval(delta, n, n, ei, ek);
        const auto d_ij = bilinear_eval(delta, n, n, ei, ej);

        {
          const auto lhs = bilinear_eval(delta, n, n, g.bracket_basis(i, j), ek);
          const auto t1 = g.bracket_basis_vector(i, d_jk);
          const auto t2 = g.bracket_basis_vector(j, d_ik);
          const Rational s1 = pow_sign(dp * xi);
          const Rational s2 = pow_sign(xj * (dp + xi));
          for (int p = 0; p < n; ++p) {
            const Rational defect = lhs[static_cast<std::size_t>(p)] -
                                    s1 * t1[static_cast<std::size_t>(p)] +
                                    s2 * t2[static_cast<std::size_t>(p)];
            if (defect != 0) {
              return IdentityDefect{1, {i, j, k}, p};
            }
          }
        }
        {
          const auto lhs = bilinear_eval(delta, n, n, ei, g.bracket_basis(j, k));
          const auto t1 = g.bracket_basis_vector(j, d_ik);
          const auto t2 = g.bracket_basis_vector(k, d_ij);
          const Rational s1 = pow_sign((dp + xi) * xj);
          const Rational s2 = pow_sign(xk * (dp + xi + xj));
          for (int p = 0; p < n; ++p) {
            const Rational defect = lhs[static_cast<std::size_t>(p)] -
                                    s1 * t1[static_cast<std::size_t>(p)] +
                                    s2 * t2[static_cast<std::size_t>(p)];
            if (defect != 0) {
              return IdentityDefect{2, {i, j, k}, p};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

RationalVector inner_family_vector(const LieAlgebra& g) {
  const int n = g.dim();
  RationalVector out(static_cast<std::size_t>(n * n * n), Rational(0));
  for (const auto& [key, value] : g.structure_constants()) {
    out[static_cast<std::size_t>(bider_flat_index(n, n, key[0], key[1], key[2]))] = value;
  }
  return out;
}

std::vector<SkewFactorization> skew_factorization(const BilinearSolutionSpace& space) {
  if (space.mode != BiderMode::skew) {
    throw std::invalid_argument("skew_factorization: space is not in skew mode");
  }
  const auto& g = space.algebra;
  const auto& v = space.target;
  if (!is_perfect(g)) {
    throw std::invalid_argument("skew_factorization: algebra is not perfect");
  }
  if (invariants_subspace(v).dim() != 0) {
    throw std::invalid_argument("skew_factorization: target has nonzero invariants");
  }
  const int n = g.dim();
  const int d = v.dim_v();
  const auto homs = module_hom_space(adjoint(g), v);
  const int h = static_cast<int>(homs.size());

  std::vector<SkewFactorization> out;
  for (const auto& delta : space.basis) {
    // delta(b_i, b_j) = sum_t a_t T_t([b_i, b_j]) over all pairs
    RationalMatrix system(n * n * d, h);
    RationalVector rhs;
    rhs.reserve(static_cast<std::size_t>(n * n * d));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto cij = g.bracket_basis(i, j);
        for (int t = 0; t < h; ++t) {
          const auto mapped = homs[static_cast<std::size_t>(t)].apply(cij);
          for (int p = 0; p < d; ++p) {
            system.add((i * n + j) * d + p, t, mapped[static_cast<std::size_t>(p)]);
          }
        }
        for (int p = 0; p < d; ++p) {
          rhs.push_back(delta[static_cast<std::size_t>(bider_flat_index(n, d, i, j, p))]);
        }
      }
    }
    const auto coeffs = solve_particular(system, rhs);
    if (!coeffs) {
      throw std::runtime_error(
          "skew_factorization: solution does not factor through the bracket");
    }
    RationalMatrix gamma(d, n);
    for (int t = 0; t < h; ++t) {
      if ((*coeffs)[static_cast<std::size_t>(t)] != 0) {
        gamma = gamma + homs[static_cast<std::size_t>(t)].scaled(
                            (*coeffs)[static_cast<std::size_t>(t)]);
      }
    }
    RationalVector residual(static_cast<std::size_t>(n * n * d), Rational(0));
    bool clean = true;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto mapped = gamma.apply(g.bracket_basis(i, j));
        for (int p = 0; p < d; ++p) {
          const auto idx = static_cast<std::size_t>(bider_flat_index(n, d, i, j, p));
          residual[idx] = delta[idx] - mapped[static_cast<std::size_t>(p)];
          clean = clean && residual[idx] == 0;
        }
      }
    }
    if (!clean) {
      throw std::runtime_error("skew_factorization: nonzero residual");
    }
    out.push_back({std::move(gamma), std::move(residual)});
  }
  return out;
}

bool check_cyclic_identity(const BilinearSolutionSpace& space) {
  if (space.mode != BiderMode::symmetric) {
    throw std::invalid_argument("check_cyclic_identity: symmetric-mode spaces only");
  }
  const auto& g = space.algebra;
  const int n = g.dim();
  const int d = space.target.dim_v();
  for (const auto& delta : space.basis) {
    for (int i = 0; i < n; ++i) {
      RationalVector ei(static_cast<std::size_t>(n), Rational(0));
      ei[static_cast<std::size_t>(i)] = 1;
      for (int j = 0; j < n; ++j) {
        RationalVector ej(static_cast<std::size_t>(n), Rational(0));
        ej[static_cast<std::size_t>(j)] = 1;
        for (int k = 0; k < n; ++k) {
          RationalVector ek(static_cast<std::size_t>(n), Rational(0));
          ek[static_cast<std::size_t>(k)] = 1;
          const auto a = bilinear_eval(delta, n, d, ei, g.bracket_basis(j, k));
          const auto b = bilinear_eval(delta, n, d, ej, g.bracket_basis(k, i));
          const auto c = bilinear_eval(delta, n, d, ek, g.bracket_basis(i, j));
          for (int p = 0; p < d; ++p) {
            if (a[static_cast<std::size_t>(p)] + b[static_cast<std::size_t>(p)] +
                    c[static_cast<std::size_t>(p)] !=
                0) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool check_center_annihilation(const BilinearSolutionSpace& space) {
  if (space.mode != BiderMode::symmetric) {
    throw std::invalid_argument("check_center_annihilation: symmetric-mode spaces only");
  }
  const auto& g = space.algebra;
  const int n = g.dim();
  const int d = space.target.dim_v();
  const auto derived = derived_subalgebra(g);
  const auto z = center(g);
  for (const auto& delta : space.basis) {
    for (const auto& u : derived.basis()) {
      for (const auto& c : z.basis()) {
        if (!is_zero_vector(bilinear_eval(delta, n, d, u, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

ReductionCriteria check_reduction_criteria(const LieAlgebra& g, const Subspace& g0) {
  if (g0.ambient_dim() != g.dim()) {
    throw std::invalid_argument("check_reduction_criteria: ambient mismatch");
  }
  if (!is_subalgebra(g, g0)) {
    throw std::invalid_argument("check_reduction_criteria: g0 is not a subalgebra");
  }
  ReductionCriteria out;
  out.perfect = is_perfect(g);
  const auto zg0 = centralizer(g, g0, Subspace::full(g.dim()));
  out.centralizer_equals_center = (zg0 == center(g));
  out.faithful_module = zg0.dim() == 0;
  return out;
}

SuperReductionCriteria check_super_reduction_criteria(const LieAlgebra& g,
                                                      const Subspace& g0) {
  if (!g.graded()) {
    throw std::invalid_argument("check_super_reduction_criteria: algebra is not graded");
  }
  if (g0.ambient_dim() != g.dim()) {
    throw std::invalid_argument("check_super_reduction_criteria: ambient mismatch");
  }
  for (const auto& v : g0.basis()) {
    for (int i = 0; i < g.dim(); ++i) {
      if (v[static_cast<std::size_t>(i)] != 0 && g.parity_of(i) == Parity::odd) {
        throw std::invalid_argument(
            "check_super_reduction_criteria: g0 is not inside the even part");
      }
    }
  }
  if (!is_subalgebra(g, g0)) {
    throw std::invalid_argument("check_super_reduction_criteria: g0 is not a subalgebra");
  }
  SuperReductionCriteria out;
  out.perfect = is_perfect(g);
  out.odd_centralizer_dim = centralizer(g, g0, odd_part(g)).dim();
  out.odd_centralizer_at_most_one = out.odd_centralizer_dim <= 1;
  return out;
}

} // namespace liealg
