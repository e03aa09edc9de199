#pragma once

// Exact scalars and the error types shared by every heckelab module.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace heckelab {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                                   boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NegativeExponentSubstitution : public Error {
 public:
  using Error::Error;
};

class MissingAssignment : public Error {
 public:
  using Error::Error;
};

class ZeroToNegativePower : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class Oversize : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

inline void require_range(bool ok, std::string_view what) {
  if (!ok) throw IndexOutOfRange(std::string(what));
}

// Parses "7", "-3", "3/2", "-10/4" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ')) s.pop_back();
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(t.begin());
    return Integer(t);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("not a rational number: '" + s + "'");
    return Rational(to_int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw ParseError("not a rational number: '" + s + "'");
  Integer d = to_int(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Integer n = to_int(num);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// v_p of a nonzero integer.
inline int p_valuation(Integer x, unsigned p) {
  if (x == 0) throw Error("p-valuation of zero");
  if (x < 0) x = -x;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// v_p of a nonzero rational.
inline int p_valuation(const Rational& x, unsigned p) {
  return p_valuation(numerator(x), p) - p_valuation(denominator(x), p);
}

inline Integer ipow(const Integer& base, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// Cap on oracle enumeration sizes. HECKELAB_MAX_ENUM overrides the default.
inline std::uint64_t max_enumeration() {
  constexpr std::uint64_t kDefault = 5'000'000;
  if (const char* env = std::getenv("HECKELAB_MAX_ENUM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefault;
}

}  // namespace heckelab
