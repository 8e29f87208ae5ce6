// Exact rational numbers and the extended value used for "no constraint" results.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace overlap {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Serializes as "p/q" with q >= 1, always including the denominator.
std::string to_string(const Rational& r);

/// Accepts "p/q", "p" and an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational floor(const Rational& r);

/// A rational or +infinity. Empty minima (cosystole of a complex with no
/// cohomology, expansion over an empty quotient) evaluate to infinity.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static ExtRational infinity() {
    ExtRational e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

/// "inf" for infinity, otherwise the rational as "p/q".
std::string to_string(const ExtRational& r);
ExtRational parse_ext_rational(std::string_view text);

/// min(r, cap), treating infinity as larger than every rational.
Rational min_with(const ExtRational& r, const Rational& cap);

}  // namespace overlap
