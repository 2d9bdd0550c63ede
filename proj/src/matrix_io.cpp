#include "autoconj/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace autoconj {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace {

void line_column_at(std::string_view text, std::size_t offset, int& line, int& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

Matrix from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return a;
}

Matrix parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1;
    int column = 1;
    line_column_at(text, e.byte > 0 ? e.byte - 1 : 0, line, column);
    throw ParseError("invalid JSON", line, column);
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError("expected an object with a \"rows\" array", 1, 1);
  }
  const auto& jrows = doc["rows"];
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < jrows.size(); ++i) {
    const auto& r = jrows[i];
    if (!r.is_array()) throw ParseError("row " + std::to_string(i + 1) + " is not an array", 1, 1);
    std::vector<double> row;
    for (const auto& v : r) {
      if (!v.is_number()) {
        throw ParseError("non-numeric entry in row " + std::to_string(i + 1), 1, 1);
      }
      row.push_back(v.get<double>());
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("ragged row " + std::to_string(i + 1), 1, 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no rows", 1, 1);
  if (rows.front().size() != rows.size()) throw ParseError("matrix is not square", 1, 1);
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(rows.size())) {
      throw ParseError("declared n does not match the number of rows", 1, 1);
    }
  }
  return from_rows(rows);
}

Matrix parse_text(std::string_view text) {
  std::vector<std::vector<double>> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    std::vector<double> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (line[i] == '#') break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      double v = 0.0;
      const char* first = line.data() + i;
      const char* last = line.data() + j;
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last) {
        throw ParseError("invalid number '" + std::string(line.substr(i, j - i)) + "'", line_no,
                         static_cast<int>(i) + 1);
      }
      row.push_back(v);
      i = j;
    }
    if (!row.empty()) {
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError("ragged row: expected " + std::to_string(rows.front().size()) +
                             " entries, got " + std::to_string(row.size()),
                         line_no, 1);
      }
      rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (rows.empty()) throw ParseError("no rows", 1, 1);
  if (rows.front().size() != rows.size()) {
    throw ParseError("matrix is not square", line_no, 1);
  }
  return from_rows(rows);
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_text(text);
  }
  throw ParseError("empty operator input", 1, 1);
}

Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open operator file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string matrix_to_json(const Matrix& a) {
  nlohmann::json doc;
  doc["n"] = a.rows();
  doc["rows"] = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    doc["rows"].push_back(row);
  }
  return doc.dump();
}

}  // namespace autoconj
