#pragma once

#include <cstdint>
#include <limits>
#include <span>

namespace sags {

// Counter-based generator: the i-th output is a pure function of (seed,
// stream, i), so sequences are identical on every platform and compiler.
// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  // Uniform on [0, 1) with 53 bits of precision.
  double uniform() noexcept;

  // Uniform on {0, ..., n-1}; n must be positive.
  std::uint64_t uniform_index(std::uint64_t n) noexcept;

  // Draws an index with probability proportional to weights[i]. Weights must
  // be nonnegative with a positive finite sum.
  std::size_t categorical(std::span<const double> weights);

  std::uint64_t draws() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace sags
