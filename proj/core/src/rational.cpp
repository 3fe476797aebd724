#include "liealg/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace liealg {

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    const Integer num{std::string(text.substr(0, slash))};
    const Integer den{std::string(text.substr(slash + 1))};
    if (den == 0) {
      throw std::invalid_argument("zero denominator");
    }
    // Division canonicalizes sign and gcd.
    return Rational(num) / Rational(den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << value; // mpq prints "p" or "p/q" in canonical form
  return out.str();
}

} // namespace liealg
