#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "arsss/matrix.hpp"

namespace arsss {

/// Metadata carried in '#' comment lines of the matrix text format.
struct MatrixHeader {
  bool block = false;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> L;
  std::optional<int> l;
  std::string kind;
};

struct MatrixFile {
  IntMatrix matrix;
  MatrixHeader header;
};

/// One row per line, single-space separated, trailing newline.
std::string format_matrix(const IntMatrix& m);
/// Same layout; non-integral entries are written as "p/q".
std::string format_matrix(const RatMatrix& m);

std::string format_header(const MatrixHeader& header);

/// Parses integer rows; '#' lines are metadata, blank lines are skipped.
MatrixFile parse_matrix_file(std::string_view text);
RatMatrix parse_rational_matrix(std::string_view text);

MatrixFile read_matrix_file(const std::string& path);

/// 64-bit FNV-1a of format_matrix(m), as 16 lowercase hex digits.
std::string fingerprint(const IntMatrix& m);

}  // namespace arsss
