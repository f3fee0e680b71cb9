#pragma once

#include <string>
#include <vector>

#include "lef/mat_fp.hpp"

namespace lef {

/// Header "d p", then each matrix as d rows of d residues; matrices are
/// separated by a blank line. All matrices share d and p.
std::string write_matrices(const std::vector<MatFp>& mats);

/// Inverse of write_matrices; throws ParseError with the offending line.
std::vector<MatFp> read_matrices(const std::string& text);

}  // namespace lef
