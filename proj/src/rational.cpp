#include "overlap/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace overlap {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    v = v * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-v) : v;
}

}  // namespace

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt den = parse_integer(den_text, text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational floor(const Rational& r) {
  BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  // cpp_int division truncates toward zero
  if (r < 0 && Rational(q) != r) q -= 1;
  return Rational(q);
}

const Rational& ExtRational::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite ExtRational");
  return value_;
}

std::string to_string(const ExtRational& r) {
  return r.is_infinite() ? std::string("inf") : to_string(r.value());
}

ExtRational parse_ext_rational(std::string_view text) {
  if (text == "inf") return ExtRational::infinity();
  return ExtRational(parse_rational(text));
}

Rational min_with(const ExtRational& r, const Rational& cap) {
  if (r.is_infinite()) return cap;
  return r.value() < cap ? r.value() : cap;
}

}  // namespace overlap
