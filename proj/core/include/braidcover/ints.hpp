#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace braidcover {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int absInt(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Int gcdInt(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// error categories map to CLI exit codes: parse=1, precondition=2, cap=3
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace braidcover
