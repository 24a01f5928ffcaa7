#ifndef MRING_RATIONAL_HPP
#define MRING_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "mring/core.hpp"

namespace mring {

// Exact arithmetic; boost::rational keeps values reduced with positive denominator.
using Rational = boost::rational<long long>;

inline std::string render_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw validation_error("zero denominator in rational: " + text);
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw validation_error("malformed rational literal: " + text);
  } catch (const std::out_of_range&) {
    throw validation_error("rational literal out of range: " + text);
  }
}

}  // namespace mring

#endif
