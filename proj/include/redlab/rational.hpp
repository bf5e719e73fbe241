#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <sstream>
#include <string>

namespace redlab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline Rat rat(long long num, long long den = 1) { return Rat(BigInt(num), BigInt(den)); }

inline std::string rat_text(const Rat& r) {
  std::ostringstream os;
  os << r.numerator() << '/' << r.denominator();
  return os.str();
}

}  // namespace redlab
