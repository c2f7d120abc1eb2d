#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "dicolor/error.hpp"

namespace dicolor {

// Floor division for signed integers (rounds toward negative infinity).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Exact half-integer: stores twice the represented value.
///
/// All degree averages, partition ceilings and objective values in the
/// toolkit are multiples of 1/2, so they are kept in this type and never
/// touch floating point.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t whole) : twice_(2 * whole) {}  // NOLINT

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  /// Parses "7", "-3", "5/2" or "2.5".
  static HalfInt parse(const std::string& text) {
    auto bad = [&] {
      return Error(ErrorCode::invalid_argument,
                   "not a half-integer: '" + text + "'");
    };
    try {
      std::size_t pos = 0;
      if (auto slash = text.find('/'); slash != std::string::npos) {
        std::int64_t num = std::stoll(text.substr(0, slash), &pos);
        if (pos != slash) throw bad();
        std::string den_text = text.substr(slash + 1);
        std::int64_t den = std::stoll(den_text, &pos);
        if (pos != den_text.size()) throw bad();
        if (den == 1) return HalfInt(num);
        if (den == 2) return from_twice(num);
        throw bad();
      }
      if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        std::int64_t whole = dot == 0 ? 0 : std::stoll(text.substr(0, dot), &pos);
        if (dot != 0 && pos != dot) throw bad();
        bool negative = !text.empty() && text[0] == '-';
        if (frac.empty()) return HalfInt(whole);
        if (frac != "5") throw bad();
        return from_twice(2 * whole + (negative ? -1 : 1));
      }
      std::int64_t whole = std::stoll(text, &pos);
      if (pos != text.size()) throw bad();
      return HalfInt(whole);
    } catch (const std::logic_error&) {
      throw bad();
    }
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr std::int64_t floor() const { return floor_div(twice_, 2); }
  constexpr std::int64_t ceil() const { return -floor_div(-twice_, 2); }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(HalfInt a, std::int64_t k) {
    return from_twice(a.twice_ * k);
  }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return a * k; }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  /// "2", "-1", "5/2", "-1/2".
  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend std::ostream& operator<<(std::ostream& os, HalfInt h) {
    return os << h.to_string();
  }

 private:
  std::int64_t twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

/// floor(a / b) for b > 0.
constexpr std::int64_t floor_ratio(HalfInt a, HalfInt b) {
  return floor_div(a.twice(), b.twice());
}

}  // namespace dicolor
