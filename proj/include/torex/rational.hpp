#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace torex {

// Exact arithmetic everywhere outside the numeric verification layer.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

struct MalformedDocument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p/q" or a bare integer string. Rationals are serialized the same
// way; no decimal forms are accepted so values survive round trips exactly.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw MalformedDocument("empty rational literal");
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw MalformedDocument("bad rational literal: " + text);
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    throw MalformedDocument("bad rational literal: " + text);
  }
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace torex
