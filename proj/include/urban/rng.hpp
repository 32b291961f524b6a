#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>

namespace urban {

// One generator per named stream, each derived from (scenario seed, stream id).
// Draw helpers avoid std::uniform_*_distribution so that sequences are
// identical across standard library implementations.
class RngStream {
 public:
  RngStream() : gen_(0) {}

  RngStream(std::uint64_t scenario_seed, std::string_view stream_id) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (char c : stream_id) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(scenario_seed),
                      static_cast<std::uint32_t>(scenario_seed >> 32),
                      static_cast<std::uint32_t>(h),
                      static_cast<std::uint32_t>(h >> 32)};
    gen_.seed(seq);
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0,1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo,hi); returns lo when the interval is degenerate.
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0,n).
  std::uint32_t uniform_int(std::uint32_t n) {
    return n == 0 ? 0 : static_cast<std::uint32_t>(next_u64() % n);
  }

 private:
  std::mt19937_64 gen_;
};

// Lazily created streams keyed by label; adding draws on one stream never
// perturbs another.
class RngSet {
 public:
  explicit RngSet(std::uint64_t seed) : seed_(seed) {}

  RngStream& stream(const std::string& id) {
    auto it = streams_.find(id);
    if (it == streams_.end()) it = streams_.emplace(id, RngStream(seed_, id)).first;
    return it->second;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::map<std::string, RngStream> streams_;
};

}  // namespace urban
