#include "seyver/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "seyver/poly.hpp"

namespace seyver {

OrientedDigraph cycle_power(int n, int k) {
  if (k < 1) throw PreconditionError("cycle_power: k must be >= 1");
  if (n < 2 * k + 1) throw PreconditionError("cycle_power: need n >= 2k+1 to avoid digons");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<size_t>(n) * static_cast<size_t>(k));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= k; ++j) arcs.emplace_back(i, (i + j) % n);
  return OrientedDigraph(n, arcs);
}

OrientedDigraph blowup_cycle(int len, int t) {
  if (len < 3) throw PreconditionError("blowup_cycle: need cycle length >= 3");
  if (t < 1) throw PreconditionError("blowup_cycle: blow-up factor must be >= 1");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<size_t>(len) * static_cast<size_t>(t) * static_cast<size_t>(t));
  for (int i = 0; i < len; ++i)
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b) arcs.emplace_back(i * t + a, ((i + 1) % len) * t + b);
  return OrientedDigraph(len * t, arcs);
}

OrientedDigraph random_oriented(int n, double p, uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("random_oriented: p must lie in [0,1]");
  const uint64_t threshold = static_cast<uint64_t>(std::floor(p * 9007199254740992.0));  // p * 2^53
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((rng.next() >> 11) < threshold) {
        if (rng.next() & 1ULL) arcs.emplace_back(j, i);
        else arcs.emplace_back(i, j);
      }
    }
  }
  return OrientedDigraph(n, arcs);
}

OrientedDigraph random_tournament(int n, uint64_t seed) {
  if (n < 1) throw PreconditionError("random_tournament: need n >= 1");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng.next() & 1ULL) arcs.emplace_back(j, i);
      else arcs.emplace_back(i, j);
    }
  return OrientedDigraph(n, arcs);
}

OrientedDigraph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::cycle: return cycle_power(spec.n, 1);
    case Family::cycle_power: return cycle_power(spec.n, spec.k);
    case Family::blowup_cycle: return blowup_cycle(spec.n, spec.t);
    case Family::random_oriented: return random_oriented(spec.n, spec.p, spec.seed);
    case Family::tournament: return random_tournament(spec.n, spec.seed);
  }
  throw std::logic_error("generate: unknown family");
}

}  // namespace seyver
