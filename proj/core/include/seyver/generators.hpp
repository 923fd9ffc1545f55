#pragma once

#include <cstdint>
#include <string>

#include "seyver/digraph.hpp"

namespace seyver {

/// SplitMix64 stream. The state transition is pinned so that generated
/// instances are reproducible bit-for-bit across platforms and languages:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform draw in [0, 1) with 53-bit resolution.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// k-th power of the directed n-cycle: arcs i -> i+1, ..., i+k (mod n).
/// Requires n >= 2k+1 (otherwise a digon appears) and k >= 1.
OrientedDigraph cycle_power(int n, int k);

/// Blow-up of the directed cycle of length len by factor t: vertices (i, a)
/// with arcs (i, a) -> (i+1 mod len, b) for all a, b. Vertex (i, a) has
/// index i*t + a. Requires len >= 3 and t >= 1.
OrientedDigraph blowup_cycle(int len, int t);

/// Random oriented digraph: each unordered pair is oriented one way with
/// probability p (include-draw compared against floor(p * 2^53), then a
/// direction draw when included). Pairs are visited in lexicographic order
/// (i, j), i < j. Deterministic given the seed.
OrientedDigraph random_oriented(int n, double p, uint64_t seed);

/// Random tournament: every pair oriented exactly one way by a single
/// direction draw per pair, lexicographic pair order.
OrientedDigraph random_tournament(int n, uint64_t seed);

enum class Family { cycle, cycle_power, blowup_cycle, random_oriented, tournament };

struct GenSpec {
  Family family = Family::cycle;
  int n = 1;
  int k = 1;       // cycle_power
  int t = 1;       // blowup_cycle
  double p = 0.5;  // random_oriented
  uint64_t seed = 0;
};

OrientedDigraph generate(const GenSpec& spec);

}  // namespace seyver
