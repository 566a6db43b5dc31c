#include "toda/arith.hpp"

#include <regex>

namespace toda {

namespace {

std::string normalize_sign(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return {};
  }
  s = s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
  // U+2212 MINUS SIGN, UTF-8 encoded
  static const std::string kMinus = "\xE2\x88\x92";
  if (s.rfind(kMinus, 0) == 0) {
    s = "-" + s.substr(kMinus.size());
  }
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  static const std::regex kPattern(R"([+-]?[0-9]+(/[0-9]+)?)");
  std::string s = normalize_sign(text);
  if (!std::regex_match(s, kPattern)) {
    throw InputError("malformed rational literal: '" + std::string(text) + "'");
  }
  if (s.front() == '+') {
    s.erase(0, 1);
  }
  const auto slash = s.find('/');
  if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0) {
    throw InputError("zero denominator: '" + std::string(text) + "'");
  }
  Rational value(s, 10);
  value.canonicalize();
  return value;
}

Integer parse_integer(std::string_view text) {
  static const std::regex kPattern(R"([+-]?[0-9]+)");
  std::string s = normalize_sign(text);
  if (!std::regex_match(s, kPattern)) {
    throw InputError("malformed integer literal: '" + std::string(text) + "'");
  }
  if (s.front() == '+') {
    s.erase(0, 1);
  }
  return Integer(s, 10);
}

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer catalan(unsigned long n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace toda
