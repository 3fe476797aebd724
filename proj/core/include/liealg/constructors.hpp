#ifndef LIEALG_CONSTRUCTORS_HPP
#define LIEALG_CONSTRUCTORS_HPP

#include "liealg/representation.hpp"

namespace liealg {

/// n-dimensional abelian algebra (all brackets zero).
LieAlgebra abelian(int n);

/// sl(n): traceless matrices, dim n^2 - 1. Basis order: strictly upper
/// matrix units E_ij (i<j, lex), diagonal h_i = E_ii - E_{i+1,i+1}, then the
/// transposes of the upper part in the same pair order. For n = 2 this is
/// (e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra special_linear(int n);

/// sp(2n) in the block realization [[A, B], [C, -A^T]] with B, C symmetric;
/// dim n(2n+1). Basis order: A-part E_ij - E_{n+j,n+i} (lex over (i,j)),
/// B-part (i <= j, lex), C-part (i <= j, lex).
LieAlgebra symplectic(int two_n);

/// Matrices of the natural sp(2n) action on C^{2n}, aligned with the basis
/// order of symplectic(two_n).
Representation symplectic_natural_rep(int two_n);

/// Heisenberg algebra H_n: basis (e_1..e_2n, z), [e_i, e_{n+i}] = z, z central.
LieAlgebra heisenberg(int n);

/// g (x) C[t]/(t^2): basis (b_1..b_n, b_1 t..b_n t), the t-copy an abelian
/// ideal with [x, y t] = [x,y] t. Ungraded input only.
LieAlgebra takiff(const LieAlgebra& g);

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

/// g + C c with c central; c is the last basis element.
LieAlgebra trivial_central_extension(const LieAlgebra& g);

/// g acting on H_n through rho on the 2n-dimensional part:
/// [x, e_a] = rho(x) e_a, [x, z] = 0, plus the Heisenberg brackets.
/// Basis order: g's basis, then e_1..e_2n, then z. The output is fully
/// validated; an action that does not preserve the symplectic form breaks
/// the Jacobi identity and is rejected.
LieAlgebra semidirect_with_heisenberg(const LieAlgebra& g, const Representation& rho, int n);

/// Symplectic oscillator algebra sp(2n) x| H_n via the natural action;
/// dim n(2n+1) + 2n + 1.
LieAlgebra oscillator(int n);

/// sl(m|n), m != n: supertraceless matrices on C^{m|n} with block parity;
/// dim (m+n)^2 - 1. Basis order: even off-diagonal units of the top block
/// (lex), even off-diagonal units of the bottom block (lex), the Cartan
/// h_k = E_kk - E_{k+1,k+1} (k != m) and h_m = E_mm + E_{m+1,m+1}, then odd
/// units E_{i,m+j} (lex) and E_{m+j,i} (lex by (row, col)).
LieAlgebra special_linear_super(int m, int n);

} // namespace liealg

#endif
