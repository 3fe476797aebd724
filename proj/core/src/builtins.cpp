#include "liealg/builtins.hpp"

#include "liealg/constructors.hpp"

#include <stdexcept>

namespace liealg {

namespace {

// splits "name:arg", returning arg < 0 when absent
std::pair<std::string, int> split_arg(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) {
    return {name, -1};
  }
  const std::string head = name.substr(0, colon);
  const std::string tail = name.substr(colon + 1);
  try {
    std::size_t used = 0;
    const int arg = std::stoi(tail, &used);
    if (used != tail.size()) {
      throw std::invalid_argument("");
    }
    return {head, arg};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad builtin argument in '" + name + "'");
  }
}

} // namespace

std::vector<std::string> builtin_names() {
  return {"sl2",          "sl3",          "sp4",          "heisenberg:n",
          "takiff:sl2",   "reductive-sl2", "oscillator:n", "sl21"};
}

bool is_builtin(const std::string& name) {
  try {
    make_builtin(name);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

LieAlgebra make_builtin(const std::string& name) {
  if (name == "sl2") {
    return special_linear(2);
  }
  if (name == "sl3") {
    return special_linear(3);
  }
  if (name == "sp4") {
    return symplectic(4);
  }
  if (name == "takiff:sl2") {
    return takiff(special_linear(2));
  }
  if (name == "reductive-sl2") {
    return trivial_central_extension(special_linear(2));
  }
  if (name == "sl21") {
    return special_linear_super(2, 1);
  }
  const auto [head, arg] = split_arg(name);
  if (head == "heisenberg" && arg >= 1) {
    return heisenberg(arg);
  }
  if (head == "oscillator" && arg >= 1) {
    return oscillator(arg);
  }
  throw std::invalid_argument("unknown builtin '" + name +
                              "' (known: sl2, sl3, sp4, heisenberg:n, takiff:sl2, "
                              "reductive-sl2, oscillator:n, sl21)");
}

Representation make_named_rep(const LieAlgebra& g, const std::string& name) {
  const auto [head, arg] = split_arg(name);
  if (head == "adjoint" && arg < 0) {
    return adjoint(g);
  }
  if (head == "trivial") {
    return trivial_rep(g, arg < 0 ? 1 : arg);
  }
  if (head == "irrep" && arg >= 0) {
    const Representation rep = sl2_irrep(arg);
    if (!same_structure(rep.algebra(), g)) {
      throw std::invalid_argument("irrep:m only applies to the sl2 structure constants");
    }
    return Representation(g, rep.dim_v(), rep.matrices());
  }
  throw std::invalid_argument("unknown representation '" + name +
                              "' (known: adjoint, trivial:d, irrep:m)");
}

} // namespace liealg
