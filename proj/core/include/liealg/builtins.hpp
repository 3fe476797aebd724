#ifndef LIEALG_BUILTINS_HPP
#define LIEALG_BUILTINS_HPP

#include "liealg/representation.hpp"

#include <string>
#include <vector>

namespace liealg {

/// Registry names: sl2, sl3, sp4, heisenberg:n, takiff:sl2, reductive-sl2,
/// oscillator:n, sl21.
std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
LieAlgebra make_builtin(const std::string& name);

/// Representation names understood everywhere: "adjoint", "trivial:d", and
/// "irrep:m" (the latter only over the sl2 structure constants).
Representation make_named_rep(const LieAlgebra& g, const std::string& name);

} // namespace liealg

#endif
