#ifndef RCM_RNG_HPP
#define RCM_RNG_HPP

#include <cstdint>

namespace rcm {

// Stafford mix13 finalizer. Bijective on u64 with full avalanche; the basis
// of every random stream in the project.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Domain-separation tags so that, e.g., edge sampling and walk replicas
// never share a stream even under equal numeric ids.
enum class StreamPurpose : std::uint64_t {
    kFieldEdge = 0x45444745,   // per-edge conductance draws
    kWalkReplica = 0x57414c4b, // per-replica trajectories
    kTrapPlant = 0x54524150,   // weak-edge resampling in plant_trap
    kGeneric = 0x47454e52,
};

constexpr std::uint64_t stream_key(std::uint64_t seed, StreamPurpose purpose,
                                   std::uint64_t id) {
    std::uint64_t k = mix64(seed ^ 0x6a09e667f3bcc909ull);
    k = mix64(k ^ static_cast<std::uint64_t>(purpose));
    return mix64(k ^ id);
}

// Counter-based stream: the i-th output is a pure function of (key, i), so
// values are reproducible bit-for-bit regardless of evaluation order,
// platform, or thread count.
class CounterStream {
  public:
    CounterStream() = default;
    explicit CounterStream(std::uint64_t key) : key_(key) {}
    CounterStream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t id)
        : key_(stream_key(seed, purpose, id)) {}

    std::uint64_t next_u64() {
        ++counter_;
        return mix64(key_ + 0x9e3779b97f4a7c15ull * counter_);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    std::uint64_t key() const { return key_; }
    std::uint64_t draws() const { return counter_; }

  private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace rcm

#endif
