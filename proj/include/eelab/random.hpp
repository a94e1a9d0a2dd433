#pragma once

#include <cstdint>
#include <random>

namespace eelab {

// Seedable, splittable random source. Substream `id` of a seed is a
// mt19937_64 keyed by (seed, id) through std::seed_seq, so any substream can
// be regenerated independently of how work is spread across threads.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  RandomStream substream(std::uint64_t id) const { return {seed_, id}; }

  // Uniform on [0, 1) with 53 random bits; portable across standard libraries.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

inline RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  engine_.seed(seq);
}

}  // namespace eelab
