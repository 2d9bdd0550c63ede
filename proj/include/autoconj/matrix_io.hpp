#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "autoconj/linear_operator.hpp"

namespace autoconj {

/// Malformed operator input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Accepts either {"n": int, "rows": [[...], ...]} or whitespace-separated
/// rows, one per line. Rejects ragged rows, non-square matrices and a
/// declared n that disagrees with the rows.
Matrix parse_matrix(std::string_view text);

Matrix load_matrix(const std::string& path);

std::string matrix_to_json(const Matrix& a);

}  // namespace autoconj
