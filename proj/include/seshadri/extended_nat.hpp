#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace seshadri {

/// Non-negative integer or +infinity. Multiplicities and valuations of the
/// zero polynomial are infinite.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr ExtendedNat infinity() {
    ExtendedNat out;
    out.value_.reset();
    return out;
  }

  [[nodiscard]] constexpr bool is_infinite() const { return !value_.has_value(); }
  [[nodiscard]] constexpr bool is_finite() const { return value_.has_value(); }
  /// Throws std::bad_optional_access for infinity.
  [[nodiscard]] constexpr std::uint64_t value() const { return value_.value(); }

  [[nodiscard]] std::string str() const { return is_infinite() ? "inf" : std::to_string(*value_); }

  friend constexpr ExtendedNat operator+(ExtendedNat a, ExtendedNat b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtendedNat(*a.value_ + *b.value_);
  }
  /// 0 * inf is taken to be inf; callers that care handle the zero
  /// polynomial before multiplying.
  friend constexpr ExtendedNat operator*(ExtendedNat a, ExtendedNat b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtendedNat(*a.value_ * *b.value_);
  }

  friend constexpr bool operator==(const ExtendedNat&, const ExtendedNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return *a.value_ <=> *b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedNat& v) { return os << v.str(); }

 private:
  std::optional<std::uint64_t> value_ = std::uint64_t{0};
};

}  // namespace seshadri
