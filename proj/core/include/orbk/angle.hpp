#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <string>
#include <string_view>

namespace orbk {

/// An element of Q/Z, i.e. U(1) written additively: num/den with
/// 0 <= num < den and gcd(num, den) = 1.
class RationalAngle {
 public:
  constexpr RationalAngle() = default;
  RationalAngle(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  RationalAngle operator-() const;
  RationalAngle& operator+=(const RationalAngle& o);
  RationalAngle& operator-=(const RationalAngle& o) { return *this += -o; }
  friend RationalAngle operator+(RationalAngle a, const RationalAngle& b) { return a += b; }
  friend RationalAngle operator-(RationalAngle a, const RationalAngle& b) { return a -= b; }
  /// Integer multiple, e.g. a sign.
  friend RationalAngle operator*(std::int64_t k, const RationalAngle& a);
  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
  friend auto operator<=>(const RationalAngle&, const RationalAngle&) = default;

  std::string to_string() const;
  /// Accepts "p/q" or "p".
  static RationalAngle parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const RationalAngle& a);

}  // namespace orbk
