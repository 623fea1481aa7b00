#include "orbk/angle.hpp"

#include <ostream>
#include <stdexcept>

#include "orbk/group.hpp"

namespace orbk {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

RationalAngle::RationalAngle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("angle with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RationalAngle RationalAngle::operator-() const { return RationalAngle(den_ - num_, den_); }

RationalAngle& RationalAngle::operator+=(const RationalAngle& o) {
  const std::int64_t l = std::lcm(den_, o.den_);
  // Both numerators are reduced below their denominators, so this stays small
  // as long as l does.
  const __int128 n = static_cast<__int128>(num_) * (l / den_) + static_cast<__int128>(o.num_) * (l / o.den_);
  *this = RationalAngle(static_cast<std::int64_t>(n % l), l);
  return *this;
}

RationalAngle operator*(std::int64_t k, const RationalAngle& a) {
  const __int128 n = static_cast<__int128>(k % a.den_) * a.num_;
  return RationalAngle(static_cast<std::int64_t>(n % a.den_), a.den_);
}

std::string RationalAngle::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RationalAngle RationalAngle::parse(std::string_view text) {
  const std::string s(text);
  try {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const std::int64_t n = std::stoll(s, &used);
      if (used != s.size()) throw ValidationError("bad angle '" + s + "'");
      return RationalAngle(n, 1);
    }
    const std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    const std::int64_t n = std::stoll(ns, &used);
    if (used != ns.size()) throw ValidationError("bad angle '" + s + "'");
    const std::int64_t d = std::stoll(ds, &used);
    if (used != ds.size()) throw ValidationError("bad angle '" + s + "'");
    return RationalAngle(n, d);
  } catch (const std::invalid_argument&) {
    throw ValidationError("bad angle '" + s + "'");
  } catch (const std::out_of_range&) {
    throw ValidationError("angle out of range '" + s + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const RationalAngle& a) { return os << a.to_string(); }

}  // namespace orbk
