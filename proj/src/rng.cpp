#include "partlaw/rng.hpp"

#include <cmath>

namespace partlaw {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream_id) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32),
                       0x9e3779b9u};
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {
  auto seq = make_seed_seq(seed, stream_id);
  engine_.seed(seq);
}

double RngStream::exponential() { return -std::log(uniform_open01()); }

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below: bound must be positive");
  // Rejection on the largest multiple of bound.
  const std::uint64_t limit = max() - max() % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

BigInt RngStream::uniform_below(const BigInt& bound) {
  if (bound <= 0) throw DomainError("uniform_below: bound must be positive");
  if (bound <= BigInt(max())) return BigInt(uniform_below(bound.convert_to<std::uint64_t>()));
  const auto bits = boost::multiprecision::msb(bound) + 1;
  const auto words = (bits + 63) / 64;
  const auto spare = words * 64 - bits;
  for (;;) {
    BigInt x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      x <<= 64;
      x |= engine_();
    }
    x >>= spare;
    if (x < bound) return x;
  }
}

}  // namespace partlaw
