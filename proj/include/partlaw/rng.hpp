#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "partlaw/types.hpp"

namespace partlaw {

// A reproducible random stream addressed by (seed, stream_id). Each Monte
// Carlo replicate gets its own stream_id, so results do not depend on how
// replicates are scheduled across workers.
//
// All derived variates are computed here from raw 64-bit words rather than
// through <random> distributions, whose algorithms are implementation
// defined.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  // [0, 1) on a 2^-53 lattice.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // (0, 1), never 0 or 1.
  double uniform_open01() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }
  // Unit-rate exponential.
  double exponential();

  // Uniform on [0, bound), bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);
  BigInt uniform_below(const BigInt& bound);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace partlaw
