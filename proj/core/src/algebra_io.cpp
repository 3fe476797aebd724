#include "liealg/algebra_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace liealg {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    if (token.front() == '#') {
      break;
    }
    tokens.push_back(token);
  }
  return tokens;
}

int parse_index(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size() || value < 0) {
      throw std::invalid_argument("");
    }
    return value;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a nonnegative index, got '" + token + "'");
  }
}

Rational parse_entry(const std::string& token, int line) {
  try {
    return parse_rational(token);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a rational 'p/q', got '" + token + "'");
  }
}

struct PendingRep {
  std::string name;
  int dim = 0;
  std::vector<RationalMatrix> matrices;
};

} // namespace

AlgebraFile load_algebra_file(std::istream& input) {
  std::string line;
  int line_no = 0;

  std::string name;
  int dim = -1;
  std::optional<std::vector<Parity>> parity;
  std::vector<std::string> labels;
  LieAlgebra::Constants constants;
  std::vector<PendingRep> reps;
  PendingRep* current_rep = nullptr;

  while (std::getline(input, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      continue;
    }
    const std::string& kind = tokens.front();
    if (kind == "algebra") {
      if (dim >= 0) {
        throw ParseError(line_no, "duplicate algebra header");
      }
      if (tokens.size() < 4 || tokens[2] != "dim") {
        throw ParseError(line_no, "expected 'algebra <name> dim <n>'");
      }
      name = tokens[1];
      dim = parse_index(tokens[3], line_no);
      labels.assign(static_cast<std::size_t>(dim), "");
      for (int i = 0; i < dim; ++i) {
        labels[static_cast<std::size_t>(i)] = "b" + std::to_string(i);
      }
      if (tokens.size() > 4) {
        if (tokens[4] != "graded" || static_cast<int>(tokens.size()) != 5 + dim) {
          throw ParseError(line_no, "expected 'graded' followed by one bit per basis element");
        }
        std::vector<Parity> p;
        for (int i = 0; i < dim; ++i) {
          const auto& bit = tokens[static_cast<std::size_t>(5 + i)];
          if (bit != "0" && bit != "1") {
            throw ParseError(line_no, "parity bits must be 0 or 1");
          }
          p.push_back(bit == "1" ? Parity::odd : Parity::even);
        }
        parity = std::move(p);
      }
    } else if (dim < 0) {
      throw ParseError(line_no, "file must start with an algebra header");
    } else if (kind == "label") {
      if (tokens.size() != 3) {
        throw ParseError(line_no, "expected 'label <i> <text>'");
      }
      const int i = parse_index(tokens[1], line_no);
      if (i >= dim) {
        throw ParseError(line_no, "label index out of range");
      }
      labels[static_cast<std::size_t>(i)] = tokens[2];
    } else if (kind == "b") {
      if (tokens.size() != 5) {
        throw ParseError(line_no, "expected 'b <i> <j> <k> <p/q>'");
      }
      const int i = parse_index(tokens[1], line_no);
      const int j = parse_index(tokens[2], line_no);
      const int k = parse_index(tokens[3], line_no);
      if (i >= dim || j >= dim || k >= dim) {
        throw ParseError(line_no, "bracket index out of range");
      }
      constants[{i, j, k}] = parse_entry(tokens[4], line_no);
    } else if (kind == "rep") {
      if (tokens.size() != 4 || tokens[2] != "dim") {
        throw ParseError(line_no, "expected 'rep <name> dim <d>'");
      }
      PendingRep rep;
      rep.name = tokens[1];
      rep.dim = parse_index(tokens[3], line_no);
      rep.matrices.assign(static_cast<std::size_t>(dim), RationalMatrix(rep.dim, rep.dim));
      reps.push_back(std::move(rep));
      current_rep = &reps.back();
    } else if (kind == "m") {
      if (current_rep == nullptr) {
        throw ParseError(line_no, "matrix entry outside a rep block");
      }
      if (tokens.size() != 5) {
        throw ParseError(line_no, "expected 'm <i> <r> <c> <p/q>'");
      }
      const int i = parse_index(tokens[1], line_no);
      const int r = parse_index(tokens[2], line_no);
      const int c = parse_index(tokens[3], line_no);
      if (i >= dim || r >= current_rep->dim || c >= current_rep->dim) {
        throw ParseError(line_no, "matrix entry index out of range");
      }
      current_rep->matrices[static_cast<std::size_t>(i)].set(r, c, parse_entry(tokens[4], line_no));
    } else {
      throw ParseError(line_no, "unknown directive '" + kind + "'");
    }
  }
  if (dim < 0) {
    throw ParseError(line_no, "missing algebra header");
  }

  AlgebraFile out{std::move(name),
                  LieAlgebra(dim, std::move(labels), std::move(constants), std::move(parity)),
                  {}};
  for (auto& rep : reps) {
    out.representations.emplace_back(
        rep.name, Representation(out.algebra, rep.dim, std::move(rep.matrices)));
  }
  return out;
}

AlgebraFile load_algebra_file_from_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return load_algebra_file(in);
}

void save_algebra_file(std::ostream& output, const AlgebraFile& file) {
  const auto& g = file.algebra;
  output << "algebra " << file.name << " dim " << g.dim();
  if (g.graded()) {
    output << " graded";
    for (int i = 0; i < g.dim(); ++i) {
      output << ' ' << (g.parity_of(i) == Parity::odd ? 1 : 0);
    }
  }
  output << '\n';
  for (int i = 0; i < g.dim(); ++i) {
    output << "label " << i << ' ' << g.basis_labels()[static_cast<std::size_t>(i)] << '\n';
  }
  for (const auto& [key, value] : g.structure_constants()) {
    output << "b " << key[0] << ' ' << key[1] << ' ' << key[2] << ' '
           << format_rational(value) << '\n';
  }
  for (const auto& [rep_name, rep] : file.representations) {
    output << "rep " << rep_name << " dim " << rep.dim_v() << '\n';
    for (int i = 0; i < g.dim(); ++i) {
      for (const auto& [idx, value] : rep.matrix(i).entries()) {
        output << "m " << i << ' ' << idx.first << ' ' << idx.second << ' '
               << format_rational(value) << '\n';
      }
    }
  }
}

std::string algebra_file_text(const AlgebraFile& file) {
  std::ostringstream out;
  save_algebra_file(out, file);
  return out.str();
}

} // namespace liealg
