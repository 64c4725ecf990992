#include "involute/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace involute {

namespace {

bool is_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num_text) || !is_digits(den_text)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (negative) num = -num;
  return make_rational(num, den);
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::size_t to_size(const Integer& value) {
  if (value < 0 || !value.fits_ulong_p()) {
    throw std::overflow_error("integer " + value.get_str() + " is not a valid size");
  }
  return static_cast<std::size_t>(value.get_ui());
}

}  // namespace involute
