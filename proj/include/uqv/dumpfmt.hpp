#pragma once

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "uqv/matrix.hpp"

namespace uqv {

// Exact matrix dump: header lines starting with '#', a "rows= cols=" line,
// then row-major entries "(denominator, c_0 ... c_{r-2})" over the power
// basis of Z[zeta].
inline std::string render_matrix_dump(const CycMatrix& m,
                                      const std::vector<std::pair<std::string, std::string>>&
                                          header) {
  std::ostringstream os;
  for (const auto& [k, v] : header) os << "# " << k << "=" << v << "\n";
  os << "rows=" << m.rows() << " cols=" << m.cols() << " r=" << m.zr() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const CycRat& e = m.at(i, j);
      if (j) os << " ";
      os << "(" << e.den().get_str();
      for (int k = 0; k < m.zr() - 1; ++k) os << (k ? " " : ", ") << e.num()[k].get_str();
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

inline CycMatrix parse_matrix_dump(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int rows = -1, cols = -1, r = -1;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (std::sscanf(line.c_str(), "rows=%d cols=%d r=%d", &rows, &cols, &r) != 3)
      throw std::runtime_error("bad dump size line");
    break;
  }
  if (rows < 0) throw std::runtime_error("missing dump size line");
  CycMatrix m(r, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!std::getline(is, line)) throw std::runtime_error("truncated dump");
    std::string clean;
    for (char c : line)
      if (c != '(' && c != ')' && c != ',') clean += c;
      else clean += ' ';
    std::istringstream ls(clean);
    for (int j = 0; j < cols; ++j) {
      std::string den;
      if (!(ls >> den)) throw std::runtime_error("truncated dump row");
      CycInt num(r);
      for (int k = 0; k < r - 1; ++k) {
        std::string c;
        if (!(ls >> c)) throw std::runtime_error("truncated dump entry");
        num[k] = mpz_class(c);
      }
      m.at(i, j) = CycRat(num, mpz_class(den));
    }
  }
  return m;
}

}  // namespace uqv
