#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace randlp {

/// xoshiro256** stream. A stream is identified by (seed, stream_id): the
/// base state is expanded from the seed with splitmix64 and then advanced by
/// stream_id jumps of 2^128 steps, so streams never overlap in practice.
/// Stream 0 is the sequential engine; workers use ids 1..L.
///
/// Satisfies UniformRandomBitGenerator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform value in the closed interval [l, r] built from 53 random bits.
  /// Throws DomainError unless l < r.
  double next_real(double l, double r);

  /// +1 or -1 with equal probability.
  int next_sign() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Advances the state by 2^128 steps.
  void jump() noexcept;

 private:
  std::array<std::uint64_t, 4> s_{};
  std::uint64_t seed_;
  std::uint64_t stream_id_;
};

inline RngStream derive_stream(std::uint64_t seed, std::uint64_t stream_id) {
  return RngStream(seed, stream_id);
}

}  // namespace randlp
