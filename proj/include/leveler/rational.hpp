#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>
#include <boost/version.hpp>

#if BOOST_VERSION < 107500
namespace boost {
// Older Boost.Rational recurses forever on rational == integer under C++20
// rewritten comparisons; exact-match non-templates win overload resolution.
inline constexpr bool operator==(const rational<std::int64_t>& r, int i) {
  return r.denominator() == 1 && r.numerator() == i;
}
inline constexpr bool operator==(const rational<std::int64_t>& r, std::int64_t i) {
  return r.denominator() == 1 && r.numerator() == i;
}
}  // namespace boost
#endif

namespace leveler {

using Hours = std::int64_t;
using Rational = boost::rational<std::int64_t>;

// "p/q" in lowest terms, or just "p" when the value is integral.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

}  // namespace leveler
