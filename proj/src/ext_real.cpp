#include "autoconj/ext_real.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace autoconj {

ExtReal::ExtReal(double v) {
  if (std::isnan(v)) throw std::domain_error("ExtReal: NaN is not an extended real");
  if (std::isinf(v)) {
    if (v < 0) throw std::domain_error("ExtReal: -inf never arises for proper functions");
    infinite_ = true;
    return;
  }
  value_ = v;
}

double ExtReal::value() const {
  if (infinite_) throw std::logic_error("ExtReal::value() called on +inf");
  return value_;
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.infinite_ || b.infinite_) return ExtReal::infinity();
  return ExtReal(a.value_ + b.value_);
}

ExtReal operator*(double s, const ExtReal& a) {
  if (s < 0) throw std::domain_error("ExtReal: scaling by a negative factor");
  if (a.infinite_) return ExtReal::infinity();
  return ExtReal(s * a.value_);
}

std::ostream& operator<<(std::ostream& os, const ExtReal& v) {
  if (v.is_infinite()) return os << "+inf";
  return os << v.value();
}

bool ext_close(const ExtReal& a, const ExtReal& b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return std::abs(a.value() - b.value()) <= tol * (1.0 + std::abs(b.value()));
}

}  // namespace autoconj
