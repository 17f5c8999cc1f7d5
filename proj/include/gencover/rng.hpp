#pragma once

#include <cstdint>

namespace gencover {

// Counter-based randomness built on the SplitMix64 finalizer.  The value at
// position i of the stream keyed by `seed` is a pure function of (seed, i),
// so streams are random-access and a trial/word index can be mapped to its
// variate without generating predecessors.  All randomized operations in
// this library derive their randomness from these two functions.

/// SplitMix64 output at stream position `index` for the given seed.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Map a 64-bit value to a double in [0, 1).
inline double unit_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Sequential view over one SplitMix64 stream.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    /// Independent stream for (seed, stream_id); used to give every Monte
    /// Carlo trial its own key so trial order and parallelism are irrelevant.
    static CounterRng substream(std::uint64_t seed, std::uint64_t stream_id) {
        return CounterRng(splitmix64_at(seed, stream_id));
    }

    std::uint64_t next() { return splitmix64_at(key_, counter_++); }

    double next_unit() { return unit_from_bits(next()); }

    /// Uniform value in [0, bound), bias-free via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t v = next();
            if (v >= threshold) return v % bound;
        }
    }

    std::uint64_t key() const { return key_; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace gencover
