#include "seyver/digraph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "seyver/field.hpp"
#include "seyver/poly.hpp"

namespace seyver {

OrientedDigraph::OrientedDigraph(int n, const std::vector<std::pair<int, int>>& arcs) : n_(n) {
  if (n < 0) throw std::invalid_argument("OrientedDigraph: negative vertex count");
  out_.resize(static_cast<size_t>(n));
  in_.resize(static_cast<size_t>(n));
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("OrientedDigraph: arc endpoint out of range");
    if (u == v) throw std::invalid_argument("OrientedDigraph: loop at vertex " + std::to_string(u));
    out_[static_cast<size_t>(u)].push_back(v);
    in_[static_cast<size_t>(v)].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& adj = out_[static_cast<size_t>(v)];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
      throw std::invalid_argument("OrientedDigraph: duplicate arc from vertex " + std::to_string(v));
    std::sort(in_[static_cast<size_t>(v)].begin(), in_[static_cast<size_t>(v)].end());
    arcs_ += static_cast<long long>(adj.size());
  }
  for (int u = 0; u < n; ++u)
    for (int v : out_[static_cast<size_t>(u)])
      if (u < v && has_arc(v, u))
        throw std::invalid_argument("OrientedDigraph: digon between " + std::to_string(u) +
                                    " and " + std::to_string(v));
}

std::span<const int> OrientedDigraph::out_neighbors(int v) const {
  return out_[static_cast<size_t>(v)];
}

std::span<const int> OrientedDigraph::in_neighbors(int v) const {
  return in_[static_cast<size_t>(v)];
}

bool OrientedDigraph::has_arc(int u, int v) const {
  const auto& adj = out_[static_cast<size_t>(u)];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<int, int>> OrientedDigraph::arcs() const {
  std::vector<std::pair<int, int>> r;
  r.reserve(static_cast<size_t>(arcs_));
  for (int u = 0; u < n_; ++u)
    for (int v : out_[static_cast<size_t>(u)]) r.emplace_back(u, v);
  return r;
}

std::vector<int> positive_distances(const OrientedDigraph& d, int u) {
  if (u < 0 || u >= d.n()) throw std::out_of_range("positive_distances: vertex out of range");
  std::vector<int> dist(static_cast<size_t>(d.n()), kUnreachable);
  std::deque<int> queue;
  dist[static_cast<size_t>(u)] = 0;
  queue.push_back(u);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : d.out_neighbors(x)) {
      if (dist[static_cast<size_t>(y)] == kUnreachable) {
        dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  // dist(u,u): shortest closed walk through any in-neighbor of u.
  int best = kUnreachable;
  for (int z : d.in_neighbors(u)) {
    int dz = dist[static_cast<size_t>(z)];
    if (dz != kUnreachable && (best == kUnreachable || dz + 1 < best)) best = dz + 1;
  }
  dist[static_cast<size_t>(u)] = best;
  return dist;
}

Neighborhoods neighborhoods(const OrientedDigraph& d, int u) {
  std::vector<int> dist = positive_distances(d, u);
  Neighborhoods nb;
  for (int v = 0; v < d.n(); ++v) {
    switch (dist[static_cast<size_t>(v)]) {
      case 1: nb.n1.push_back(v); break;
      case 2: nb.n2.push_back(v); break;
      case 3: nb.n3.push_back(v); break;
      default: break;
    }
  }
  nb.stats = {static_cast<int>(nb.n1.size()), static_cast<int>(nb.n2.size()),
              static_cast<int>(nb.n3.size())};
  return nb;
}

bool is_seymour(const OrientedDigraph& d, int u, const Rational& mu) {
  if (mu.sign() < 0) throw std::domain_error("is_seymour: mu must be nonnegative");
  VertexStats st = neighborhoods(d, u).stats;
  return Rational(st.d2) >= mu * Rational(st.d1);
}

RatioResult best_seymour_ratio(const OrientedDigraph& d) {
  if (d.n() < 1) throw std::domain_error("best_seymour_ratio: empty digraph");
  RatioResult best;
  bool have = false;
  for (int u = 0; u < d.n(); ++u) {
    VertexStats st = neighborhoods(d, u).stats;
    RatioResult cand;
    cand.vertex = u;
    if (st.d1 == 0) {
      cand.infinite = true;
    } else {
      cand.ratio = Rational(st.d2) / Rational(st.d1);
    }
    bool better;
    if (!have) better = true;
    else if (cand.infinite != best.infinite) better = cand.infinite;
    else if (cand.infinite) better = false;
    else better = cand.ratio > best.ratio;
    if (better) { best = cand; have = true; }
  }
  return best;
}

int degree_minimizer(const OrientedDigraph& d) {
  if (d.n() < 1) throw std::domain_error("degree_minimizer: empty digraph");
  int best = 0;
  for (int u = 1; u < d.n(); ++u)
    if (d.out_neighbors(u).size() < d.out_neighbors(best).size()) best = u;
  return best;
}

template <class S>
int weighted_minimizer(const OrientedDigraph& d, int u, const S& w) {
  Neighborhoods nb = neighborhoods(d, u);
  if (nb.n1.empty()) throw PreconditionError("weighted_minimizer: N+(u) is empty");
  std::vector<char> in1(static_cast<size_t>(d.n()), 0), in2(static_cast<size_t>(d.n()), 0);
  for (int x : nb.n1) in1[static_cast<size_t>(x)] = 1;
  for (int x : nb.n2) in2[static_cast<size_t>(x)] = 1;
  int best = -1;
  S best_score{};
  for (int v : nb.n1) {
    long a = 0, b = 0;
    for (int y : d.out_neighbors(v)) {
      if (in1[static_cast<size_t>(y)]) ++a;
      else if (in2[static_cast<size_t>(y)]) ++b;
    }
    S score = w * S(a) + S(b);
    if (best < 0 || score < best_score) {
      best = v;
      best_score = score;
    }
  }
  return best;
}

template int weighted_minimizer<Rational>(const OrientedDigraph&, int, const Rational&);
template int weighted_minimizer<FieldElement>(const OrientedDigraph&, int, const FieldElement&);

PartitionCounts partition_counts(const OrientedDigraph& d, int u, int v) {
  if (v < 0 || v >= d.n() || !d.has_arc(u, v))
    throw PreconditionError("partition_counts: v is not an out-neighbor of u");
  std::vector<int> du = positive_distances(d, u);
  std::vector<int> dv = positive_distances(d, v);
  PartitionCounts c;
  long long x31 = 0;
  for (int y = 0; y < d.n(); ++y) {
    int i = du[static_cast<size_t>(y)];
    if (i < 1 || i > 3) continue;
    int jraw = dv[static_cast<size_t>(y)];
    int j = (jraw == kUnreachable || jraw >= 4) ? 4 : jraw;
    switch (i * 10 + j) {
      case 11: ++c.x11; break;
      case 12: ++c.x12; break;
      case 13: ++c.x13; break;
      case 14: ++c.x14; break;
      case 21: ++c.x21; break;
      case 22: ++c.x22; break;
      case 23: ++c.x23; break;
      case 24: ++c.x24; break;
      case 31: ++x31; break;
      case 32: ++c.x32; break;
      case 33: ++c.x33; break;
      case 34: ++c.x34; break;
      default: break;
    }
  }
  if (x31 != 0)
    throw std::logic_error("partition_counts: nonempty cell (3,1) contradicts the arc (u,v)");
  return c;
}

long long edge_count(const OrientedDigraph& d, std::span<const int> a, std::span<const int> b) {
  std::vector<char> inb(static_cast<size_t>(d.n()), 0);
  for (int x : b) {
    if (x < 0 || x >= d.n()) throw std::out_of_range("edge_count: vertex out of range");
    inb[static_cast<size_t>(x)] = 1;
  }
  long long count = 0;
  for (int x : a) {
    if (x < 0 || x >= d.n()) throw std::out_of_range("edge_count: vertex out of range");
    for (int y : d.out_neighbors(x))
      if (inb[static_cast<size_t>(y)]) ++count;
  }
  return count;
}

std::vector<int> out_neighbors_of_set(const OrientedDigraph& d, std::span<const int> a) {
  std::vector<char> ina(static_cast<size_t>(d.n()), 0), seen(static_cast<size_t>(d.n()), 0);
  for (int x : a) {
    if (x < 0 || x >= d.n()) throw std::out_of_range("out_neighbors_of_set: vertex out of range");
    ina[static_cast<size_t>(x)] = 1;
  }
  std::vector<int> result;
  for (int x : a)
    for (int y : d.out_neighbors(x))
      if (!ina[static_cast<size_t>(y)] && !seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        result.push_back(y);
      }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace seyver
