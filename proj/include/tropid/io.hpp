#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "tropid/error.hpp"
#include "tropid/matrix.hpp"

namespace tropid {

// Matrix text format: first line "ROWS COLS", then ROWS*COLS whitespace
// separated rationals ("p" or "p/q", q > 0) in row-major order. The reader is
// strict about the entry count and rejects trailing tokens; line breaks inside
// the body are not significant.
inline TropMatrix read_matrix(std::istream& in) {
  long long rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw ParseError("matrix: missing ROWS COLS header");
  if (rows <= 0 || cols <= 0 || rows > 1000000 || cols > 1000000)
    throw ParseError("matrix: invalid dimensions in header");
  TropMatrix m{int(rows), int(cols)};
  std::string tok;
  for (long long i = 0; i < rows; ++i) {
    for (long long j = 0; j < cols; ++j) {
      if (!(in >> tok))
        throw ParseError("matrix: expected " + std::to_string(rows * cols) +
                         " entries, input ended early");
      m(int(i), int(j)) = Rational::parse(tok);
    }
  }
  if (in >> tok) throw ParseError("matrix: trailing content after last entry");
  return m;
}

inline TropMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const TropMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j).str();
    }
    out << '\n';
  }
}

inline std::string format_matrix(const TropMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace tropid
