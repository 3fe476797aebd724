#include "liealg/constructors.hpp"

#include <stdexcept>
#include <string>

namespace liealg {

namespace {

std::string unit_label(const char* stem, int i, int j) {
  return std::string(stem) + std::to_string(i) + std::to_string(j);
}

// Compiles a matrix realization into structure constants: expand the
// (super-)commutator of every basis pair and solve its coordinates against
// the flattened basis matrices. The matrices must span a bracket-closed
// independent family.
LieAlgebra compile_matrix_algebra(const std::vector<RationalMatrix>& matrices,
                                  std::vector<std::string> labels,
                                  std::optional<std::vector<Parity>> parity) {
  const int n = static_cast<int>(matrices.size());
  const int d = n == 0 ? 0 : matrices.front().rows();
  RationalMatrix flat(d * d, n);
  for (int t = 0; t < n; ++t) {
    for (const auto& [idx, value] : matrices[static_cast<std::size_t>(t)].entries()) {
      flat.set(idx.first * d + idx.second, t, value);
    }
  }
  LieAlgebra::Constants constants;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool both_odd = parity && (*parity)[static_cast<std::size_t>(i)] == Parity::odd &&
                            (*parity)[static_cast<std::size_t>(j)] == Parity::odd;
      const auto& a = matrices[static_cast<std::size_t>(i)];
      const auto& b = matrices[static_cast<std::size_t>(j)];
      const RationalMatrix br = both_odd ? a * b + b * a : a * b - b * a;
      RationalVector rhs(static_cast<std::size_t>(d * d), Rational(0));
      for (const auto& [idx, value] : br.entries()) {
        rhs[static_cast<std::size_t>(idx.first * d + idx.second)] = value;
      }
      const auto coords = solve_particular(flat, rhs);
      if (!coords) {
        throw std::logic_error("matrix basis is not closed under the bracket");
      }
      for (int k = 0; k < n; ++k) {
        if ((*coords)[static_cast<std::size_t>(k)] != 0) {
          constants[{i, j, k}] = (*coords)[static_cast<std::size_t>(k)];
        }
      }
    }
  }
  return LieAlgebra(n, std::move(labels), std::move(constants), std::move(parity));
}

RationalMatrix unit(int d, int r, int c) {
  RationalMatrix m(d, d);
  m.set(r, c, Rational(1));
  return m;
}

std::pair<std::vector<RationalMatrix>, std::vector<std::string>> symplectic_basis(int n) {
  const int d = 2 * n;
  std::vector<RationalMatrix> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RationalMatrix m(d, d);
      m.set(i, j, Rational(1));
      m.set(n + j, n + i, Rational(-1));
      basis.push_back(std::move(m));
      labels.push_back(unit_label("a", i + 1, j + 1));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      RationalMatrix m(d, d);
      m.set(i, n + j, Rational(1));
      if (i != j) {
        m.set(j, n + i, Rational(1));
      }
      basis.push_back(std::move(m));
      labels.push_back(unit_label("b", i + 1, j + 1));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      RationalMatrix m(d, d);
      m.set(n + i, j, Rational(1));
      if (i != j) {
        m.set(n + j, i, Rational(1));
      }
      basis.push_back(std::move(m));
      labels.push_back(unit_label("c", i + 1, j + 1));
    }
  }
  return {std::move(basis), std::move(labels)};
}

} // namespace

LieAlgebra abelian(int n) {
  if (n < 0) {
    throw std::invalid_argument("abelian: negative dimension");
  }
  return LieAlgebra(n, {}, {});
}

LieAlgebra special_linear(int n) {
  if (n < 2) {
    throw std::invalid_argument("special_linear: need n >= 2");
  }
  std::vector<RationalMatrix> basis;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> uppers;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      uppers.emplace_back(i, j);
    }
  }
  for (const auto& [i, j] : uppers) {
    basis.push_back(unit(n, i, j));
    labels.push_back(unit_label("e", i + 1, j + 1));
  }
  for (int i = 0; i + 1 < n; ++i) {
    RationalMatrix m(n, n);
    m.set(i, i, Rational(1));
    m.set(i + 1, i + 1, Rational(-1));
    basis.push_back(std::move(m));
    labels.push_back("h" + std::to_string(i + 1));
  }
  for (const auto& [i, j] : uppers) {
    basis.push_back(unit(n, j, i));
    labels.push_back(unit_label("f", j + 1, i + 1));
  }
  return compile_matrix_algebra(basis, std::move(labels), std::nullopt);
}

LieAlgebra symplectic(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) {
    throw std::invalid_argument("symplectic: need an even argument >= 2");
  }
  auto [basis, labels] = symplectic_basis(two_n / 2);
  return compile_matrix_algebra(basis, std::move(labels), std::nullopt);
}

Representation symplectic_natural_rep(int two_n) {
  auto algebra = symplectic(two_n);
  auto [basis, labels] = symplectic_basis(two_n / 2);
  (void)labels;
  return Representation(std::move(algebra), two_n, std::move(basis));
}

LieAlgebra heisenberg(int n) {
  if (n < 1) {
    throw std::invalid_argument("heisenberg: need n >= 1");
  }
  const int dim = 2 * n + 1;
  LieAlgebra::Constants constants;
  std::vector<std::string> labels;
  for (int i = 0; i < 2 * n; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
  }
  labels.push_back("z");
  for (int i = 0; i < n; ++i) {
    constants[{i, n + i, 2 * n}] = Rational(1);
    constants[{n + i, i, 2 * n}] = Rational(-1);
  }
  return LieAlgebra(dim, std::move(labels), std::move(constants));
}

LieAlgebra takiff(const LieAlgebra& g) {
  if (g.graded()) {
    throw std::invalid_argument("takiff: ungraded input only");
  }
  const int n = g.dim();
  LieAlgebra::Constants constants;
  for (const auto& [key, value] : g.structure_constants()) {
    constants[{key[0], key[1], key[2]}] = value;
    constants[{key[0], n + key[1], n + key[2]}] = value;
    constants[{n + key[0], key[1], n + key[2]}] = value;
  }
  std::vector<std::string> labels = g.basis_labels();
  for (const auto& base : g.basis_labels()) {
    labels.push_back(base + "*t");
  }
  return LieAlgebra(2 * n, std::move(labels), std::move(constants));
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  if (g.graded() != h.graded()) {
    throw std::invalid_argument("direct_sum: grading mismatch");
  }
  const int n = g.dim();
  LieAlgebra::Constants constants = g.structure_constants();
  for (const auto& [key, value] : h.structure_constants()) {
    constants[{n + key[0], n + key[1], n + key[2]}] = value;
  }
  std::vector<std::string> labels = g.basis_labels();
  labels.insert(labels.end(), h.basis_labels().begin(), h.basis_labels().end());
  std::optional<std::vector<Parity>> parity;
  if (g.graded()) {
    parity.emplace(*g.parity());
    parity->insert(parity->end(), h.parity()->begin(), h.parity()->end());
  }
  return LieAlgebra(n + h.dim(), std::move(labels), std::move(constants), std::move(parity));
}

LieAlgebra trivial_central_extension(const LieAlgebra& g) {
  LieAlgebra::Constants constants = g.structure_constants();
  std::vector<std::string> labels = g.basis_labels();
  labels.push_back("c");
  std::optional<std::vector<Parity>> parity;
  if (g.graded()) {
    parity.emplace(*g.parity());
    parity->push_back(Parity::even);
  }
  return LieAlgebra(g.dim() + 1, std::move(labels), std::move(constants), std::move(parity));
}

LieAlgebra semidirect_with_heisenberg(const LieAlgebra& g, const Representation& rho, int n) {
  if (n < 1) {
    throw std::invalid_argument("semidirect_with_heisenberg: need n >= 1");
  }
  if (g.graded()) {
    throw std::invalid_argument("semidirect_with_heisenberg: ungraded input only");
  }
  if (!same_structure(rho.algebra(), g) || rho.dim_v() != 2 * n) {
    throw std::invalid_argument("semidirect_with_heisenberg: rho must act on C^(2n) for g");
  }
  if (!validate(rho).ok()) {
    throw std::invalid_argument("semidirect_with_heisenberg: rho is not a representation");
  }
  const int m = g.dim();
  const int dim = m + 2 * n + 1;
  const int z = m + 2 * n;
  LieAlgebra::Constants constants = g.structure_constants();
  for (int i = 0; i < m; ++i) {
    for (const auto& [idx, value] : rho.matrix(i).entries()) {
      constants[{i, m + idx.second, m + idx.first}] = value;
      constants[{m + idx.second, i, m + idx.first}] = -value;
    }
  }
  for (int i = 0; i < n; ++i) {
    constants[{m + i, m + n + i, z}] = Rational(1);
    constants[{m + n + i, m + i, z}] = Rational(-1);
  }
  std::vector<std::string> labels = g.basis_labels();
  for (int i = 0; i < 2 * n; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
  }
  labels.push_back("z");
  LieAlgebra result(dim, std::move(labels), std::move(constants));
  if (!validate(result).ok()) {
    throw std::invalid_argument(
        "semidirect_with_heisenberg: action does not preserve the symplectic form");
  }
  return result;
}

LieAlgebra oscillator(int n) {
  if (n < 1) {
    throw std::invalid_argument("oscillator: need n >= 1");
  }
  return semidirect_with_heisenberg(symplectic(2 * n), symplectic_natural_rep(2 * n), n);
}

LieAlgebra special_linear_super(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("special_linear_super: need m, n >= 1");
  }
  if (m == n) {
    throw std::invalid_argument("special_linear_super: m = n is excluded");
  }
  const int d = m + n;
  std::vector<RationalMatrix> basis;
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  auto push = [&](RationalMatrix mat, std::string label, Parity p) {
    basis.push_back(std::move(mat));
    labels.push_back(std::move(label));
    parity.push_back(p);
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j) {
        push(unit(d, i, j), unit_label("E", i + 1, j + 1), Parity::even);
      }
    }
  }
  for (int i = m; i < d; ++i) {
    for (int j = m; j < d; ++j) {
      if (i != j) {
        push(unit(d, i, j), unit_label("E", i + 1, j + 1), Parity::even);
      }
    }
  }
  for (int k = 0; k + 1 < d; ++k) {
    RationalMatrix h(d, d);
    h.set(k, k, Rational(1));
    // crossing the m|n boundary flips the sign that keeps the supertrace zero
    h.set(k + 1, k + 1, Rational(k + 1 == m ? 1 : -1));
    push(std::move(h), "h" + std::to_string(k + 1), Parity::even);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = m; j < d; ++j) {
      push(unit(d, i, j), unit_label("E", i + 1, j + 1), Parity::odd);
    }
  }
  for (int i = m; i < d; ++i) {
    for (int j = 0; j < m; ++j) {
      push(unit(d, i, j), unit_label("E", i + 1, j + 1), Parity::odd);
    }
  }
  return compile_matrix_algebra(basis, std::move(labels), parity);
}

} // namespace liealg
