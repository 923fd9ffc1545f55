#pragma once

#include <span>
#include <utility>
#include <vector>

#include "seyver/rational.hpp"

namespace seyver {

/// Loop-free, digon-free directed graph with sorted adjacency.
/// Immutable after construction; all queries are pure.
class OrientedDigraph {
 public:
  OrientedDigraph(int n, const std::vector<std::pair<int, int>>& arcs);

  int n() const { return n_; }
  long long arc_count() const { return arcs_; }
  std::span<const int> out_neighbors(int v) const;
  std::span<const int> in_neighbors(int v) const;
  bool has_arc(int u, int v) const;
  std::vector<std::pair<int, int>> arcs() const;

 private:
  int n_ = 0;
  long long arcs_ = 0;
  std::vector<std::vector<int>> out_, in_;
};

/// Distance marker for unreachable vertices.
inline constexpr int kUnreachable = -1;

/// Positive distances from u: for v != u the BFS distance, and for u itself
/// 1 + min over in-neighbors z of dist(u, z) (the shortest closed walk).
/// Unreachable entries are kUnreachable.
std::vector<int> positive_distances(const OrientedDigraph& d, int u);

struct VertexStats {
  int d1 = 0;  // |N+|
  int d2 = 0;  // |N++|
  int d3 = 0;  // |N+++|
};

struct Neighborhoods {
  std::vector<int> n1, n2, n3;  // sorted
  VertexStats stats;
};

Neighborhoods neighborhoods(const OrientedDigraph& d, int u);

/// d++(u) >= mu * d+(u), compared exactly.
bool is_seymour(const OrientedDigraph& d, int u, const Rational& mu);

struct RatioResult {
  int vertex = 0;
  bool infinite = false;  // d+ = 0 at the witness
  Rational ratio;         // meaningful when !infinite
};

/// Vertex maximizing d++/d+ (infinite when d+ = 0); smallest index on ties.
RatioResult best_seymour_ratio(const OrientedDigraph& d);

/// Vertex of minimum out-degree; smallest index on ties.
int degree_minimizer(const OrientedDigraph& d);

/// Vertex v in N+(u) minimizing w*|N+(v) cap N+(u)| + |N+(v) cap N++(u)|
/// under exact comparison; smallest index on ties. Throws PreconditionError
/// when N+(u) is empty. S is an exact scalar (Rational or FieldElement).
template <class S>
int weighted_minimizer(const OrientedDigraph& d, int u, const S& w);

/// Cell sizes of the partition of the first three neighborhoods of u by the
/// positive distance from v (distance >= 4 or unreachable counts as class 4).
/// The cell (3,1) is structurally empty and asserted to be so.
struct PartitionCounts {
  long long x11 = 0, x12 = 0, x13 = 0, x14 = 0;
  long long x21 = 0, x22 = 0, x23 = 0, x24 = 0;
  long long x32 = 0, x33 = 0, x34 = 0;
};

PartitionCounts partition_counts(const OrientedDigraph& d, int u, int v);

/// Arcs with tail in A and head in B; A and B may overlap.
long long edge_count(const OrientedDigraph& d, std::span<const int> a, std::span<const int> b);

/// Out-neighbors of the set A that lie outside A, sorted.
std::vector<int> out_neighbors_of_set(const OrientedDigraph& d, std::span<const int> a);

}  // namespace seyver
