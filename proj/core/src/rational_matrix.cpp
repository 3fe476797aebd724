#include "liealg/rational_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace liealg {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("negative matrix dimension");
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, Rational(1));
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw std::invalid_argument("ragged row lengths");
    }
    for (int j = 0; j < c; ++j) {
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

Rational RationalMatrix::get(int row, int col) const {
  const auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

void RationalMatrix::set(int row, int col, Rational value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  if (value == 0) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = std::move(value);
  }
}

void RationalMatrix::add(int row, int col, const Rational& value) {
  if (value == 0) {
    return;
  }
  set(row, col, get(row, col) + value);
}

RationalVector RationalMatrix::row_dense(int row) const {
  RationalVector out(static_cast<std::size_t>(cols_), Rational(0));
  for (auto it = entries_.lower_bound({row, 0});
       it != entries_.end() && it->first.first == row; ++it) {
    out[static_cast<std::size_t>(it->first.second)] = it->second;
  }
  return out;
}

std::vector<RationalVector> RationalMatrix::to_rows() const {
  std::vector<RationalVector> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    out.push_back(row_dense(r));
  }
  return out;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  RationalVector out(static_cast<std::size_t>(rows_), Rational(0));
  for (const auto& [idx, value] : entries_) {
    const auto& xi = x[static_cast<std::size_t>(idx.second)];
    if (xi != 0) {
      out[static_cast<std::size_t>(idx.first)] += value * xi;
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  RationalMatrix out(rows_, rhs.cols_);
  for (const auto& [lidx, lval] : entries_) {
    // row lidx.first of the product picks up lval * (row lidx.second of rhs)
    for (auto it = rhs.entries_.lower_bound({lidx.second, 0});
         it != rhs.entries_.end() && it->first.first == lidx.second; ++it) {
      out.add(lidx.first, it->first.second, lval * it->second);
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix sum dimension mismatch");
  }
  RationalMatrix out = *this;
  for (const auto& [idx, value] : rhs.entries_) {
    out.add(idx.first, idx.second, value);
  }
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  return *this + rhs.scaled(Rational(-1));
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix out(rows_, cols_);
  if (factor == 0) {
    return out;
  }
  for (const auto& [idx, value] : entries_) {
    out.entries_[idx] = value * factor;
  }
  return out;
}

namespace {

// One sparse integer row, terms sorted by column, coefficients nonzero,
// content (gcd of coefficients) 1, leading coefficient positive.
using IntTerm = std::pair<int, Integer>;
struct IntRow {
  std::vector<IntTerm> terms;
};

void normalize(IntRow& row) {
  if (row.terms.empty()) {
    return;
  }
  Integer content = 0;
  for (const auto& [col, coeff] : row.terms) {
    content = boost::multiprecision::gcd(content, coeff);
    if (content == 1) {
      break;
    }
  }
  if (row.terms.front().second < 0) {
    content = -content;
  }
  if (content != 1) {
    for (auto& [col, coeff] : row.terms) {
      coeff /= content;
    }
  }
}

// r <- (b/g)*r - (a/g)*p where a, b are the coefficients of r, p at p's
// leading column. Fraction-free: all arithmetic stays integral, and the
// gcd renormalization afterwards keeps coefficients small.
IntRow combine(const IntRow& r, const IntRow& p, const Integer& a, const Integer& b) {
  const Integer g = boost::multiprecision::gcd(a, b);
  const Integer rs = b / g;
  const Integer ps = a / g;
  IntRow out;
  out.terms.reserve(r.terms.size() + p.terms.size());
  auto ri = r.terms.begin();
  auto pi = p.terms.begin();
  while (ri != r.terms.end() || pi != p.terms.end()) {
    if (pi == p.terms.end() || (ri != r.terms.end() && ri->first < pi->first)) {
      out.terms.emplace_back(ri->first, rs * ri->second);
      ++ri;
    } else if (ri == r.terms.end() || pi->first < ri->first) {
      out.terms.emplace_back(pi->first, -ps * pi->second);
      ++pi;
    } else {
      Integer coeff = rs * ri->second - ps * pi->second;
      if (coeff != 0) {
        out.terms.emplace_back(ri->first, std::move(coeff));
      }
      ++ri;
      ++pi;
    }
  }
  normalize(out);
  return out;
}

// Incremental echelon accumulator over integer rows. Rows are inserted in
// any order; the final reduced form depends only on the row space (RREF is
// unique), so insertion order never changes the output.
class Eliminator {
public:
  void insert(IntRow row) {
    normalize(row);
    while (!row.terms.empty()) {
      const int lead = row.terms.front().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        pivots_.emplace(lead, std::move(row));
        return;
      }
      row = combine(row, it->second, row.terms.front().second,
                    it->second.terms.front().second);
    }
  }

  void insert_rational(const RationalVector& dense) {
    IntRow row;
    Integer lcm = 1;
    for (const auto& v : dense) {
      if (v != 0) {
        lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(v)));
      }
    }
    for (int c = 0; c < static_cast<int>(dense.size()); ++c) {
      if (dense[static_cast<std::size_t>(c)] != 0) {
        const auto& v = dense[static_cast<std::size_t>(c)];
        row.terms.emplace_back(
            c, Integer(boost::multiprecision::numerator(v)) *
                   (lcm / Integer(boost::multiprecision::denominator(v))));
      }
    }
    insert(std::move(row));
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

  // Full Gauss-Jordan finalization: clear every pivot column above its
  // pivot row, then rescale so pivots are exactly 1.
  std::vector<std::pair<int, RationalVector>> reduced_rows(int cols) const {
    std::vector<IntRow> rows;
    std::vector<int> lead_cols;
    rows.reserve(pivots_.size());
    for (const auto& [col, row] : pivots_) {
      lead_cols.push_back(col);
      rows.push_back(row);
    }
    for (int t = static_cast<int>(rows.size()) - 1; t >= 1; --t) {
      const int pc = lead_cols[static_cast<std::size_t>(t)];
      for (int s = 0; s < t; ++s) {
        auto& upper = rows[static_cast<std::size_t>(s)];
        const auto hit = std::lower_bound(
            upper.terms.begin(), upper.terms.end(), pc,
            [](const IntTerm& term, int col) { return term.first < col; });
        if (hit != upper.terms.end() && hit->first == pc) {
          upper = combine(upper, rows[static_cast<std::size_t>(t)], hit->second,
                          rows[static_cast<std::size_t>(t)].terms.front().second);
        }
      }
    }
    std::vector<std::pair<int, RationalVector>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
      RationalVector dense(static_cast<std::size_t>(cols), Rational(0));
      const Rational lead(row.terms.front().second);
      for (const auto& [col, coeff] : row.terms) {
        dense[static_cast<std::size_t>(col)] = Rational(coeff) / lead;
      }
      out.emplace_back(row.terms.front().first, std::move(dense));
    }
    return out;
  }

private:
  std::map<int, IntRow> pivots_; // leading column -> row
};

Eliminator eliminate(const RationalMatrix& m) {
  Eliminator elim;
  int current = -1;
  RationalVector dense(static_cast<std::size_t>(m.cols()), Rational(0));
  auto flush = [&] {
    if (current >= 0) {
      elim.insert_rational(dense);
    }
  };
  for (const auto& [idx, value] : m.entries()) {
    if (idx.first != current) {
      flush();
      current = idx.first;
      dense.assign(static_cast<std::size_t>(m.cols()), Rational(0));
    }
    dense[static_cast<std::size_t>(idx.second)] = value;
  }
  flush();
  return elim;
}

} // namespace

RationalMatrix rref(const RationalMatrix& m) {
  const auto reduced = eliminate(m).reduced_rows(m.cols());
  RationalMatrix out(m.rows(), m.cols());
  int r = 0;
  for (const auto& [lead, dense] : reduced) {
    (void)lead;
    for (int c = 0; c < m.cols(); ++c) {
      out.set(r, c, dense[static_cast<std::size_t>(c)]);
    }
    ++r;
  }
  return out;
}

int rank(const RationalMatrix& m) { return eliminate(m).rank(); }

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
  const auto reduced = eliminate(m).reduced_rows(m.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (const auto& [lead, dense] : reduced) {
    (void)dense;
    is_pivot[static_cast<std::size_t>(lead)] = true;
  }
  std::vector<RationalVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) {
      continue;
    }
    RationalVector v(static_cast<std::size_t>(m.cols()), Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (const auto& [lead, dense] : reduced) {
      v[static_cast<std::size_t>(lead)] = -dense[static_cast<std::size_t>(free)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> row_space_basis(const RationalMatrix& m) {
  std::vector<RationalVector> out;
  for (auto& [lead, dense] : eliminate(m).reduced_rows(m.cols())) {
    (void)lead;
    out.push_back(std::move(dense));
  }
  return out;
}

bool in_span(const RationalVector& v, const std::vector<RationalVector>& basis) {
  for (const auto& b : basis) {
    if (b.size() != v.size()) {
      throw std::invalid_argument("in_span: vector length mismatch");
    }
  }
  Eliminator elim;
  for (const auto& b : basis) {
    elim.insert_rational(b);
  }
  const int base_rank = elim.rank();
  elim.insert_rational(v);
  return elim.rank() == base_rank;
}

std::optional<RationalVector> solve_particular(const RationalMatrix& m,
                                               const RationalVector& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) {
    throw std::invalid_argument("solve_particular: rhs length mismatch");
  }
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (const auto& [idx, value] : m.entries()) {
    aug.set(idx.first, idx.second, value);
  }
  for (int r = 0; r < m.rows(); ++r) {
    aug.set(r, m.cols(), rhs[static_cast<std::size_t>(r)]);
  }
  const auto reduced = eliminate(aug).reduced_rows(aug.cols());
  RationalVector x(static_cast<std::size_t>(m.cols()), Rational(0));
  for (const auto& [lead, dense] : reduced) {
    if (lead == m.cols()) {
      return std::nullopt; // pivot in the augmented column
    }
    x[static_cast<std::size_t>(lead)] = dense[static_cast<std::size_t>(m.cols())];
  }
  return x;
}

} // namespace liealg
