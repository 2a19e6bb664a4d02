#pragma once

#include <cstdint>

namespace mgo {

// splitmix64: tiny deterministic generator with identical output on every
// platform. Standard-library distributions are implementation-defined, which
// would break recorded-seed reproducibility, so bounded draws are done here
// by rejection sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [lo, hi] inclusive.
  long long uniform_int(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + static_cast<long long>(x % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace mgo
