#include "liealg/lie_algebra.hpp"

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

std::string triple_label(const LieAlgebra& g, int i, int j, int k) {
  std::ostringstream out;
  out << "(" << g.basis_labels()[static_cast<std::size_t>(i)] << ", "
      << g.basis_labels()[static_cast<std::size_t>(j)] << ", "
      << g.basis_labels()[static_cast<std::size_t>(k)] << ")";
  return out.str();
}

} // namespace

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basis_labels,
                       Constants constants, std::optional<std::vector<Parity>> parity)
    : dim_(dim), labels_(std::move(basis_labels)), constants_(std::move(constants)),
      parity_(std::move(parity)) {
  if (dim_ < 0) {
    throw std::invalid_argument("negative dimension");
  }
  if (labels_.empty()) {
    labels_.reserve(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
      labels_.push_back("b" + std::to_string(i));
    }
  }
  if (static_cast<int>(labels_.size()) != dim_) {
    throw std::invalid_argument("label count does not match dimension");
  }
  if (parity_ && static_cast<int>(parity_->size()) != dim_) {
    throw std::invalid_argument("parity vector length does not match dimension");
  }
  for (auto it = constants_.begin(); it != constants_.end();) {
    const auto& [key, value] = *it;
    if (key[0] < 0 || key[0] >= dim_ || key[1] < 0 || key[1] >= dim_ || key[2] < 0 ||
        key[2] >= dim_) {
      throw std::invalid_argument("structure constant index out of range");
    }
    it = (value == 0) ? constants_.erase(it) : std::next(it);
  }
}

Parity LieAlgebra::parity_of(int i) const {
  return parity_ ? (*parity_)[static_cast<std::size_t>(i)] : Parity::even;
}

Rational LieAlgebra::constant(int i, int j, int k) const {
  const auto it = constants_.find({i, j, k});
  return it == constants_.end() ? Rational(0) : it->second;
}

RationalVector LieAlgebra::bracket_basis(int i, int j) const {
  RationalVector out(static_cast<std::size_t>(dim_), Rational(0));
  for (auto it = constants_.lower_bound({i, j, 0});
       it != constants_.end() && it->first[0] == i && it->first[1] == j; ++it) {
    out[static_cast<std::size_t>(it->first[2])] = it->second;
  }
  return out;
}

RationalVector LieAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_) {
    throw std::invalid_argument("bracket: vector length does not match dimension");
  }
  RationalVector out(static_cast<std::size_t>(dim_), Rational(0));
  for (const auto& [key, value] : constants_) {
    const auto& xi = x[static_cast<std::size_t>(key[0])];
    if (xi == 0) {
      continue;
    }
    const auto& yj = y[static_cast<std::size_t>(key[1])];
    if (yj == 0) {
      continue;
    }
    out[static_cast<std::size_t>(key[2])] += xi * yj * value;
  }
  return out;
}

RationalVector LieAlgebra::bracket_basis_vector(int i, const RationalVector& w) const {
  RationalVector out(static_cast<std::size_t>(dim_), Rational(0));
  for (auto it = constants_.lower_bound({i, 0, 0});
       it != constants_.end() && it->first[0] == i; ++it) {
    const auto& wj = w[static_cast<std::size_t>(it->first[1])];
    if (wj != 0) {
      out[static_cast<std::size_t>(it->first[2])] += wj * it->second;
    }
  }
  return out;
}

bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
  return a.dim() == b.dim() && a.structure_constants() == b.structure_constants() &&
         a.parity() == b.parity();
}

Subspace::Subspace(int ambient_dim, std::vector<RationalVector> basis_vectors)
    : ambient_dim_(ambient_dim), basis_(std::move(basis_vectors)) {
  for (const auto& v : basis_) {
    if (static_cast<int>(v.size()) != ambient_dim_) {
      throw std::invalid_argument("subspace basis vector has wrong length");
    }
  }
  if (rank(RationalMatrix::from_rows(basis_)) != static_cast<int>(basis_.size())) {
    throw std::invalid_argument("subspace basis vectors are dependent");
  }
}

Subspace Subspace::span_of(int ambient_dim, const std::vector<RationalVector>& vectors) {
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient_dim) {
      throw std::invalid_argument("span_of: vector has wrong length");
    }
  }
  auto m = RationalMatrix::from_rows(vectors);
  if (m.cols() == 0 && ambient_dim > 0) {
    m = RationalMatrix(0, ambient_dim);
  }
  return Subspace(ambient_dim, row_space_basis(m));
}

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(int ambient_dim) {
  std::vector<RationalVector> basis;
  for (int i = 0; i < ambient_dim; ++i) {
    RationalVector v(static_cast<std::size_t>(ambient_dim), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    basis.push_back(std::move(v));
  }
  return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains(const RationalVector& v) const {
  if (static_cast<int>(v.size()) != ambient_dim_) {
    throw std::invalid_argument("contains: vector has wrong length");
  }
  return in_span(v, basis_);
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_) {
    return false;
  }
  return row_space_basis(RationalMatrix::from_rows(a.basis_)) ==
         row_space_basis(RationalMatrix::from_rows(b.basis_));
}

ValidationReport validate(const LieAlgebra& g) {
  ValidationReport report;
  const int n = g.dim();

  // (super-)antisymmetry: c(j,i,k) = -(-1)^{|i||j|} c(i,j,k)
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const bool both_odd = g.parity_of(i) == Parity::odd && g.parity_of(j) == Parity::odd;
      const Rational sign(both_odd ? 1 : -1);
      for (int k = 0; k < n; ++k) {
        const Rational forward = g.constant(i, j, k);
        const Rational backward = g.constant(j, i, k);
        if (i == j && !both_odd) {
          if (forward != 0) {
            report.violations.push_back(
                {Violation::Kind::antisymmetry,
                 {i, j, k},
                 "[x,x] must vanish: " + triple_label(g, i, j, k)});
          }
          continue;
        }
        if (backward != sign * forward) {
          report.violations.push_back(
              {Violation::Kind::antisymmetry,
               {i, j, k},
               "antisymmetry fails at " + triple_label(g, i, j, k)});
        }
      }
    }
  }

  // parity homogeneity of the constants
  if (g.graded()) {
    for (const auto& [key, value] : g.structure_constants()) {
      (void)value;
      if (g.parity_of(key[2]) != g.parity_of(key[0]) + g.parity_of(key[1])) {
        report.violations.push_back({Violation::Kind::grading,
                                     {key[0], key[1], key[2]},
                                     "constant mixes parities at " +
                                         triple_label(g, key[0], key[1], key[2])});
      }
    }
  }

  // (super-)Jacobi: (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]]
  //               + (-1)^{|z||y|}[z,[x,y]] = 0 on basis triples. For graded
  // algebras repeated odd indices carry content, so sorted triples include
  // repetitions; ungraded repetitions follow from antisymmetry.
  auto koszul = [&](int a, int b) {
    return (g.parity_of(a) == Parity::odd && g.parity_of(b) == Parity::odd) ? Rational(-1)
                                                                            : Rational(1);
  };
  for (int i = 0; i < n; ++i) {
    const int jlo = g.graded() ? i : i + 1;
    for (int j = jlo; j < n; ++j) {
      const int klo = g.graded() ? j : j + 1;
      for (int k = klo; k < n; ++k) {
        RationalVector sum(static_cast<std::size_t>(n), Rational(0));
        auto accumulate = [&](int x, int y, int z) {
          const Rational s = koszul(x, z);
          const auto inner = g.bracket_basis(y, z);
          const auto outer = g.bracket_basis_vector(x, inner);
          for (int t = 0; t < n; ++t) {
            sum[static_cast<std::size_t>(t)] += s * outer[static_cast<std::size_t>(t)];
          }
        };
        accumulate(i, j, k);
        accumulate(j, k, i);
        accumulate(k, i, j);
        if (!is_zero_vector(sum)) {
          report.violations.push_back({Violation::Kind::jacobi,
                                       {i, j, k},
                                       "Jacobi identity fails on " +
                                           triple_label(g, i, j, k)});
        }
      }
    }
  }
  return report;
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  std::vector<RationalVector> brackets;
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i; j < g.dim(); ++j) {
      auto v = g.bracket_basis(i, j);
      if (!is_zero_vector(v)) {
        brackets.push_back(std::move(v));
      }
    }
  }
  return Subspace::span_of(g.dim(), brackets);
}

Subspace center(const LieAlgebra& g) {
  const int n = g.dim();
  RationalMatrix system(n * n, n);
  for (const auto& [key, value] : g.structure_constants()) {
    // row (j,k), unknown i: sum_i x_i c(i,j,k) = 0
    system.set(key[1] * n + key[2], key[0], value);
  }
  return Subspace(n, nullspace_basis(system));
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s, const Subspace& within) {
  if (s.ambient_dim() != g.dim() || within.ambient_dim() != g.dim()) {
    throw std::invalid_argument("centralizer: ambient mismatch");
  }
  const int n = g.dim();
  const int w = within.dim();
  RationalMatrix system(s.dim() * n, w);
  for (int a = 0; a < s.dim(); ++a) {
    const auto& v = s.basis()[static_cast<std::size_t>(a)];
    for (int t = 0; t < w; ++t) {
      const auto bracket = g.bracket(v, within.basis()[static_cast<std::size_t>(t)]);
      for (int k = 0; k < n; ++k) {
        system.add(a * n + k, t, bracket[static_cast<std::size_t>(k)]);
      }
    }
  }
  std::vector<RationalVector> ambient_vectors;
  for (const auto& y : nullspace_basis(system)) {
    RationalVector x(static_cast<std::size_t>(n), Rational(0));
    for (int t = 0; t < w; ++t) {
      if (y[static_cast<std::size_t>(t)] == 0) {
        continue;
      }
      const auto& wt = within.basis()[static_cast<std::size_t>(t)];
      for (int k = 0; k < n; ++k) {
        x[static_cast<std::size_t>(k)] += y[static_cast<std::size_t>(t)] * wt[static_cast<std::size_t>(k)];
      }
    }
    ambient_vectors.push_back(std::move(x));
  }
  return Subspace::span_of(n, ambient_vectors);
}

bool is_perfect(const LieAlgebra& g) { return derived_subalgebra(g).dim() == g.dim(); }

Subspace odd_part(const LieAlgebra& g) {
  std::vector<RationalVector> basis;
  for (int i = 0; i < g.dim(); ++i) {
    if (g.parity_of(i) == Parity::odd) {
      RationalVector v(static_cast<std::size_t>(g.dim()), Rational(0));
      v[static_cast<std::size_t>(i)] = 1;
      basis.push_back(std::move(v));
    }
  }
  return Subspace(g.dim(), std::move(basis));
}

Subspace even_part(const LieAlgebra& g) {
  std::vector<RationalVector> basis;
  for (int i = 0; i < g.dim(); ++i) {
    if (g.parity_of(i) == Parity::even) {
      RationalVector v(static_cast<std::size_t>(g.dim()), Rational(0));
      v[static_cast<std::size_t>(i)] = 1;
      basis.push_back(std::move(v));
    }
  }
  return Subspace(g.dim(), std::move(basis));
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) {
    throw std::invalid_argument("is_subalgebra: ambient mismatch");
  }
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = i; j < s.dim(); ++j) {
      const auto v = g.bracket(s.basis()[static_cast<std::size_t>(i)],
                               s.basis()[static_cast<std::size_t>(j)]);
      if (!in_span(v, s.basis())) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Sl2Triple> find_sl2_triples(const LieAlgebra& g,
                                        const std::vector<Sl2Triple>& candidates) {
  std::vector<Sl2Triple> accepted;
  for (const auto& cand : candidates) {
    RationalVector two_e = cand.e;
    RationalVector minus_two_f = cand.f;
    for (auto& x : two_e) {
      x *= 2;
    }
    for (auto& x : minus_two_f) {
      x *= -2;
    }
    if (g.bracket(cand.h, cand.e) == two_e && g.bracket(cand.h, cand.f) == minus_two_f &&
        g.bracket(cand.e, cand.f) == cand.h) {
      accepted.push_back(cand);
    }
  }
  return accepted;
}

} // namespace liealg
