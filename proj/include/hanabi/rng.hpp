#pragma once

#include <cstdint>
#include <span>

namespace hanabi {

// splitmix64 finalizer. All shuffles and rollout seeds go through this so
// that (seed, move list) replays are bit-exact across platforms and so that
// independently seeded agents can replicate each other's rollouts.
inline constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr uint64_t mixSeed(uint64_t a, uint64_t b) {
  return splitmix64(splitmix64(a) + b);
}

template <class... Rest>
constexpr uint64_t mixSeed(uint64_t a, uint64_t b, Rest... rest) {
  return mixSeed(mixSeed(a, b), static_cast<uint64_t>(rest)...);
}

// Counter-based splitmix64 stream.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Modulo draw; bias is O(n / 2^64), far below anything our statistical
  // tests can resolve.
  uint32_t below(uint32_t n) { return static_cast<uint32_t>(next() % n); }

  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  uint64_t state_;
};

// Fisher-Yates over the pinned generator; the shuffle order is part of the
// replay contract.
template <class T>
void shuffle(std::span<T> items, Rng& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    size_t j = rng.below(static_cast<uint32_t>(i));
    std::swap(items[i - 1], items[j]);
  }
}

// FNV-1a, used for canonical-string hashing (AOH keys, golden checksums).
inline uint64_t fnv1a(std::span<const char> bytes, uint64_t h = 0xcbf29ce484222325ULL) {
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace hanabi
