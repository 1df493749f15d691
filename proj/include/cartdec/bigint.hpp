#ifndef CARTDEC_BIGINT_HPP
#define CARTDEC_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace cartdec {

// Group orders routinely exceed 64 bits (|Alt(12960)| and friends).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace cartdec

#endif
