#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace partlaw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Natural log of a nonnegative big integer; -inf for zero.
double log_big(const BigInt& x);

// Error taxonomy. The CLI maps each family onto an exit code.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two algebraically equivalent routes disagreed.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace partlaw
