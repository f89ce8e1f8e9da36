#pragma once

#include <iosfwd>
#include <string>

#include "condgrad/csr_matrix.hpp"

namespace condgrad {

/// Matrix Market coordinate reader, `%%MatrixMarket matrix coordinate real general`
/// only. Indices are 1-based on disk and converted to 0-based in memory.
CsrMatrix read_matrix_market(std::istream& in);
CsrMatrix read_matrix_market_file(const std::string& path);

/// Writes entries in row-major order with full double precision, so a
/// write/read round trip reproduces the matrix exactly.
void write_matrix_market(std::ostream& out, const CsrMatrix& A);
void write_matrix_market_file(const std::string& path, const CsrMatrix& A);

} // namespace condgrad
