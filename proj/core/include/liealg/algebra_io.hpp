#ifndef LIEALG_ALGEBRA_IO_HPP
#define LIEALG_ALGEBRA_IO_HPP

#include "liealg/representation.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liealg {

/// Line-oriented plain-text description of an algebra and named modules:
///   algebra <name> dim <n> [graded <bit> ... <bit>]
///   label <i> <text>                 (optional)
///   b <i> <j> <k> <p/q>              structure constant c(i,j,k)
///   rep <name> dim <d>
///   m <i> <r> <c> <p/q>              entry rho(b_i)[r,c]
/// Indices are 0-based; '#' starts a comment. Rationals are "p/q" or "p".
struct AlgebraFile {
  std::string name;
  LieAlgebra algebra;
  std::vector<std::pair<std::string, Representation>> representations;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
};

AlgebraFile load_algebra_file(std::istream& input);
AlgebraFile load_algebra_file_from_path(const std::string& path);

void save_algebra_file(std::ostream& output, const AlgebraFile& file);
std::string algebra_file_text(const AlgebraFile& file);

} // namespace liealg

#endif
