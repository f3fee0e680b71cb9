#include "lef/matrix_io.hpp"

#include <sstream>

#include "lef/errors.hpp"

namespace lef {

std::string write_matrices(const std::vector<MatFp>& mats) {
  if (mats.empty()) throw InvalidArgument("write_matrices: nothing to write");
  const auto d = mats[0].dim();
  const auto p = mats[0].modulus();
  std::string out = std::to_string(d) + " " + std::to_string(p) + "\n";
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].dim() != d || mats[k].modulus() != p) throw DimensionMismatch("write_matrices: mixed shapes");
    if (k) out += "\n";
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (j) out += ' ';
        out += std::to_string(mats[k](i, j));
      }
      out += '\n';
    }
  }
  return out;
}

std::vector<MatFp> read_matrices(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](bool& ok) {
    ok = static_cast<bool>(std::getline(in, line));
    ++lineno;
  };
  bool ok = false;
  next(ok);
  if (!ok) throw ParseError(1, "empty input");
  std::size_t d = 0;
  std::uint32_t p = 0;
  {
    std::istringstream h(line);
    std::string extra;
    if (!(h >> d >> p) || (h >> extra) || d == 0) throw ParseError(lineno, "expected header 'd p'");
    try {
      require_prime_modulus(p);
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  std::vector<MatFp> out;
  for (;;) {
    MatFp m(d, p);
    for (std::size_t i = 0; i < d; ++i) {
      next(ok);
      if (!ok) throw ParseError(lineno, "matrix ends early");
      std::istringstream row(line);
      for (std::size_t j = 0; j < d; ++j) {
        long long v = 0;
        if (!(row >> v)) throw ParseError(lineno, "expected " + std::to_string(d) + " entries");
        if (v < 0 || v >= static_cast<long long>(p)) throw ParseError(lineno, "entry out of range 0.." + std::to_string(p - 1));
        m.set(i, j, v);
      }
      std::string extra;
      if (row >> extra) throw ParseError(lineno, "too many entries");
    }
    out.push_back(std::move(m));
    next(ok);
    if (!ok) break;
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError(lineno, "expected a blank line between matrices");
    // A trailing blank line ends the file.
    if (in.peek() == std::char_traits<char>::eof()) break;
  }
  return out;
}

}  // namespace lef
