#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>

namespace sing {

// Mixes a base seed with a list of stream tags into an independent seed.
// Used to give every Monte-Carlo comparison and every split its own stream.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags);

// Thin wrapper over mt19937_64. Conversions to reals and indices are done
// by hand so that results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in the open interval (0, 1).
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). n must be > 0.
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = rng.index(i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace sing
