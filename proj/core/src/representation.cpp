#include "liealg/representation.hpp"

#include <sstream>
#include <stdexcept>

namespace liealg {

Representation::Representation(LieAlgebra algebra, int dim_v,
                               std::vector<RationalMatrix> matrices,
                               std::optional<std::vector<Parity>> parity)
    : algebra_(std::move(algebra)), dim_v_(dim_v), matrices_(std::move(matrices)),
      parity_(std::move(parity)) {
  if (dim_v_ < 0) {
    throw std::invalid_argument("negative module dimension");
  }
  if (static_cast<int>(matrices_.size()) != algebra_.dim()) {
    throw std::invalid_argument("need one matrix per basis element");
  }
  for (const auto& m : matrices_) {
    if (m.rows() != dim_v_ || m.cols() != dim_v_) {
      throw std::invalid_argument("representation matrix has wrong shape");
    }
  }
  if (parity_ && static_cast<int>(parity_->size()) != dim_v_) {
    throw std::invalid_argument("module parity length does not match dimension");
  }
}

RationalVector Representation::act(const RationalVector& x, const RationalVector& v) const {
  if (static_cast<int>(x.size()) != algebra_.dim()) {
    throw std::invalid_argument("act: element length mismatch");
  }
  RationalVector out(static_cast<std::size_t>(dim_v_), Rational(0));
  for (int i = 0; i < algebra_.dim(); ++i) {
    const auto& xi = x[static_cast<std::size_t>(i)];
    if (xi == 0) {
      continue;
    }
    const auto partial = matrices_[static_cast<std::size_t>(i)].apply(v);
    for (int p = 0; p < dim_v_; ++p) {
      out[static_cast<std::size_t>(p)] += xi * partial[static_cast<std::size_t>(p)];
    }
  }
  return out;
}

ValidationReport validate(const Representation& rep) {
  ValidationReport report;
  const auto& g = rep.algebra();
  const int n = g.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool both_odd = g.parity_of(i) == Parity::odd && g.parity_of(j) == Parity::odd;
      RationalMatrix lhs(rep.dim_v(), rep.dim_v());
      for (int k = 0; k < n; ++k) {
        const Rational c = g.constant(i, j, k);
        if (c != 0) {
          lhs = lhs + rep.matrix(k).scaled(c);
        }
      }
      const RationalMatrix commutator =
          both_odd ? rep.matrix(i) * rep.matrix(j) + rep.matrix(j) * rep.matrix(i)
                   : rep.matrix(i) * rep.matrix(j) - rep.matrix(j) * rep.matrix(i);
      if (!(lhs == commutator)) {
        std::ostringstream detail;
        detail << "module law fails on pair (" << g.basis_labels()[static_cast<std::size_t>(i)]
               << ", " << g.basis_labels()[static_cast<std::size_t>(j)] << ")";
        report.violations.push_back({Violation::Kind::jacobi, {i, j, -1}, detail.str()});
      }
    }
  }
  if (g.graded() && rep.parity()) {
    const auto& vp = *rep.parity();
    for (int i = 0; i < n; ++i) {
      for (const auto& [idx, value] : rep.matrix(i).entries()) {
        (void)value;
        if (vp[static_cast<std::size_t>(idx.first)] !=
            g.parity_of(i) + vp[static_cast<std::size_t>(idx.second)]) {
          report.violations.push_back(
              {Violation::Kind::grading,
               {i, idx.first, idx.second},
               "matrix entry breaks module grading"});
        }
      }
    }
  }
  return report;
}

Representation adjoint(const LieAlgebra& g) {
  std::vector<RationalMatrix> matrices(static_cast<std::size_t>(g.dim()),
                                       RationalMatrix(g.dim(), g.dim()));
  for (const auto& [key, value] : g.structure_constants()) {
    // rho(b_i) column j is [b_i, b_j]
    matrices[static_cast<std::size_t>(key[0])].set(key[2], key[1], value);
  }
  return Representation(g, g.dim(), std::move(matrices), g.parity());
}

Representation trivial_rep(const LieAlgebra& g, int d) {
  std::vector<RationalMatrix> matrices(static_cast<std::size_t>(g.dim()),
                                       RationalMatrix(d, d));
  return Representation(g, d, std::move(matrices));
}

namespace {

LieAlgebra sl2_for_irreps() {
  LieAlgebra::Constants c;
  auto put = [&](int i, int j, int k, int v) {
    c[{i, j, k}] = Rational(v);
    c[{j, i, k}] = Rational(-v);
  };
  // basis (e, h, f)
  put(1, 0, 0, 2);  // [h,e] = 2e
  put(1, 2, 2, -2); // [h,f] = -2f
  put(0, 2, 1, 1);  // [e,f] = h
  return LieAlgebra(3, {"e", "h", "f"}, std::move(c));
}

} // namespace

Representation sl2_irrep(int m) {
  if (m < 0) {
    throw std::invalid_argument("sl2_irrep: highest weight must be nonnegative");
  }
  const int d = m + 1;
  RationalMatrix e(d, d), h(d, d), f(d, d);
  for (int k = 0; k <= m; ++k) {
    h.set(k, k, Rational(m - 2 * k));
    if (k >= 1) {
      e.set(k - 1, k, Rational(m - k + 1));
    }
    if (k + 1 <= m) {
      f.set(k + 1, k, Rational(k + 1));
    }
  }
  return Representation(sl2_for_irreps(), d, {std::move(e), std::move(h), std::move(f)});
}

Representation direct_sum_rep(const Representation& a, const Representation& b) {
  if (!same_structure(a.algebra(), b.algebra())) {
    throw std::invalid_argument("direct_sum_rep: algebra mismatch");
  }
  if (a.parity().has_value() != b.parity().has_value()) {
    throw std::invalid_argument("direct_sum_rep: grading mismatch");
  }
  const int d = a.dim_v() + b.dim_v();
  std::vector<RationalMatrix> matrices;
  for (int i = 0; i < a.algebra().dim(); ++i) {
    RationalMatrix m(d, d);
    for (const auto& [idx, value] : a.matrix(i).entries()) {
      m.set(idx.first, idx.second, value);
    }
    for (const auto& [idx, value] : b.matrix(i).entries()) {
      m.set(a.dim_v() + idx.first, a.dim_v() + idx.second, value);
    }
    matrices.push_back(std::move(m));
  }
  std::optional<std::vector<Parity>> parity;
  if (a.parity()) {
    parity.emplace(*a.parity());
    parity->insert(parity->end(), b.parity()->begin(), b.parity()->end());
  }
  return Representation(a.algebra(), d, std::move(matrices), std::move(parity));
}

Subspace invariants_subspace(const Representation& rep) {
  const int n = rep.algebra().dim();
  const int d = rep.dim_v();
  RationalMatrix stacked(n * d, d);
  for (int i = 0; i < n; ++i) {
    for (const auto& [idx, value] : rep.matrix(i).entries()) {
      stacked.set(i * d + idx.first, idx.second, value);
    }
  }
  return Subspace(d, nullspace_basis(stacked));
}

Representation restrict_to(const Representation& rep, const Subspace& s) {
  const auto& g = rep.algebra();
  if (s.ambient_dim() != g.dim()) {
    throw std::invalid_argument("restrict_to: ambient mismatch");
  }
  if (!is_subalgebra(g, s)) {
    throw std::invalid_argument("restrict_to: span is not a subalgebra");
  }
  const int k = s.dim();

  // columns of S are the subalgebra basis vectors; coordinates of brackets
  // are solved against them exactly
  RationalMatrix s_cols(g.dim(), k);
  for (int t = 0; t < k; ++t) {
    for (int r = 0; r < g.dim(); ++r) {
      s_cols.set(r, t, s.basis()[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)]);
    }
  }
  LieAlgebra::Constants constants;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const auto br = g.bracket(s.basis()[static_cast<std::size_t>(i)],
                                s.basis()[static_cast<std::size_t>(j)]);
      const auto coords = solve_particular(s_cols, br);
      if (!coords) {
        throw std::invalid_argument("restrict_to: span is not a subalgebra");
      }
      for (int t = 0; t < k; ++t) {
        if ((*coords)[static_cast<std::size_t>(t)] != 0) {
          constants[{i, j, t}] = (*coords)[static_cast<std::size_t>(t)];
        }
      }
    }
  }

  std::optional<std::vector<Parity>> parity;
  if (g.graded()) {
    std::vector<Parity> p;
    for (int t = 0; t < k; ++t) {
      std::optional<Parity> found;
      for (int r = 0; r < g.dim(); ++r) {
        if (s.basis()[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)] != 0) {
          const Parity pr = g.parity_of(r);
          if (found && *found != pr) {
            throw std::invalid_argument("restrict_to: basis vector is not homogeneous");
          }
          found = pr;
        }
      }
      p.push_back(found.value_or(Parity::even));
    }
    parity = std::move(p);
  }

  std::vector<std::string> labels;
  for (int t = 0; t < k; ++t) {
    labels.push_back("u" + std::to_string(t));
  }
  LieAlgebra sub(k, std::move(labels), std::move(constants), std::move(parity));

  std::vector<RationalMatrix> matrices;
  for (int t = 0; t < k; ++t) {
    RationalMatrix m(rep.dim_v(), rep.dim_v());
    const auto& v = s.basis()[static_cast<std::size_t>(t)];
    for (int a = 0; a < g.dim(); ++a) {
      if (v[static_cast<std::size_t>(a)] != 0) {
        m = m + rep.matrix(a).scaled(v[static_cast<std::size_t>(a)]);
      }
    }
    matrices.push_back(std::move(m));
  }
  return Representation(std::move(sub), rep.dim_v(), std::move(matrices), rep.parity());
}

std::vector<RationalMatrix> module_hom_space(const Representation& a,
                                             const Representation& b) {
  if (!same_structure(a.algebra(), b.algebra())) {
    throw std::invalid_argument("module_hom_space: algebra mismatch");
  }
  const int n = a.algebra().dim();
  const int da = a.dim_v();
  const int db = b.dim_v();
  // unknown T is db x da, flattened row-major: (r, c) -> r*da + c
  RationalMatrix system(n * db * da, db * da);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < db; ++r) {
      for (int c = 0; c < da; ++c) {
        const int row = (i * db + r) * da + c;
        for (const auto& [idx, value] : a.matrix(i).entries()) {
          if (idx.second == c) {
            system.add(row, r * da + idx.first, value); // T_{r,s} rho_a(i)_{s,c}
          }
        }
        for (const auto& [idx, value] : b.matrix(i).entries()) {
          if (idx.first == r) {
            system.add(row, idx.second * da + c, -value); // -rho_b(i)_{r,s} T_{s,c}
          }
        }
      }
    }
  }
  std::vector<RationalMatrix> homs;
  for (const auto& flat : nullspace_basis(system)) {
    RationalMatrix t(db, da);
    for (int r = 0; r < db; ++r) {
      for (int c = 0; c < da; ++c) {
        t.set(r, c, flat[static_cast<std::size_t>(r * da + c)]);
      }
    }
    homs.push_back(std::move(t));
  }
  return homs;
}

DerivationSpace derivation_space(const Representation& rep) {
  const auto& g = rep.algebra();
  if (g.graded()) {
    throw std::invalid_argument("derivation_space: ungraded algebras only");
  }
  const int n = g.dim();
  const int d = rep.dim_v();

  // D([b_i,b_j]) - b_i D(b_j) + b_j D(b_i) = 0, flattened unknowns i*d + p
  RationalMatrix system(n * n * d, n * d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int base = (i * n + j) * d;
      for (int l = 0; l < n; ++l) {
        const Rational c = g.constant(i, j, l);
        if (c == 0) {
          continue;
        }
        for (int p = 0; p < d; ++p) {
          system.add(base + p, l * d + p, c);
        }
      }
      for (const auto& [idx, value] : rep.matrix(i).entries()) {
        system.add(base + idx.first, j * d + idx.second, -value);
      }
      for (const auto& [idx, value] : rep.matrix(j).entries()) {
        system.add(base + idx.first, i * d + idx.second, value);
      }
    }
  }
  DerivationSpace out;
  out.der_basis = nullspace_basis(system);

  // inner derivations are the image of v -> (x -> x v)
  RationalMatrix image(n * d, d);
  for (int i = 0; i < n; ++i) {
    for (const auto& [idx, value] : rep.matrix(i).entries()) {
      image.set(i * d + idx.first, idx.second, value);
    }
  }
  RationalMatrix image_t(d, n * d);
  for (const auto& [idx, value] : image.entries()) {
    image_t.set(idx.second, idx.first, value);
  }
  out.inner_basis = row_space_basis(image_t);
  out.h1_dim = static_cast<int>(out.der_basis.size()) - static_cast<int>(out.inner_basis.size());
  return out;
}

} // namespace liealg
