#pragma once

#include <cstdint>
#include <random>

#include "tutte/graph.hpp"

namespace tutte {

// Seeded generator with implementation-independent derived draws, so the
// same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, m) by rejection.
  int below(int m) {
    const std::uint64_t span = static_cast<std::uint64_t>(m);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return static_cast<int>(v % span);
  }

  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

// Random graph with edge density num/1000, then repaired claw-by-claw via
// local completion at the claw center until claw-free.
Graph random_clawfree_graph(Rng& rng, int n);

// As above but restarted until connected.
Graph random_connected_clawfree_graph(Rng& rng, int n);

}  // namespace tutte
