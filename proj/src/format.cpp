#include "autoconj/format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace autoconj {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), ptr);
}

std::string csv_cell(const ExtReal& v) { return v.is_finite() ? format_double(v.value()) : std::string(); }

nlohmann::json to_json(const ExtReal& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

ExtReal ext_from_json(const nlohmann::json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInf;
  if (j.is_number()) return j.get<double>();
  throw std::invalid_argument("expected a number or \"inf\"");
}

}  // namespace autoconj
