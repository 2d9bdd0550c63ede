#pragma once

#include <compare>
#include <iosfwd>
#include <limits>

namespace autoconj {

/// Value in ]-inf, +inf]: a finite double or the distinguished element +inf.
///
/// There is no -inf and no NaN. Constructing from either throws
/// std::domain_error, so any arithmetic slip that would produce them is
/// caught at the boundary instead of silently propagating.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  // Implicit on purpose: finite doubles are the common case.
  ExtReal(double v);  // NOLINT(google-explicit-constructor)

  static constexpr ExtReal infinity() {
    ExtReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }

  /// Finite value; throws std::logic_error on +inf.
  double value() const;

  /// Finite value, or std::numeric_limits<double>::infinity().
  constexpr double to_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  ExtReal& operator+=(const ExtReal& o) {
    *this = *this + o;
    return *this;
  }

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  /// Scaling by a nonnegative factor; 0 * (+inf) = +inf (indicator semantics).
  friend ExtReal operator*(double s, const ExtReal& a);

  friend constexpr bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend constexpr std::partial_ordering operator<=>(const ExtReal& a,
                                                     const ExtReal& b) {
    if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
    if (a.infinite_) return std::partial_ordering::greater;
    if (b.infinite_) return std::partial_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

inline constexpr ExtReal kInf = ExtReal::infinity();

std::ostream& operator<<(std::ostream& os, const ExtReal& v);

/// Two extended reals agree when both are +inf, or both are finite and
/// |a - b| <= tol * (1 + |b|).
bool ext_close(const ExtReal& a, const ExtReal& b, double tol);

}  // namespace autoconj
