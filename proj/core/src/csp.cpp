#include "seyver/csp.hpp"

namespace seyver {

AssignmentX<Rational> to_assignment(const PartitionCounts& c) {
  AssignmentX<Rational> x;
  x.x11 = Rational(c.x11); x.x12 = Rational(c.x12); x.x13 = Rational(c.x13);
  x.x14 = Rational(c.x14); x.x21 = Rational(c.x21); x.x22 = Rational(c.x22);
  x.x23 = Rational(c.x23); x.x24 = Rational(c.x24); x.x32 = Rational(c.x32);
  x.x33 = Rational(c.x33); x.x34 = Rational(c.x34);
  return x;
}

AssignmentX<FieldElement> from_y(const AssignmentY& y) {
  return from_y_generic<FieldElement>(y.y1, y.y2, y.y3, y.y4);
}

AssignmentY to_y(const AssignmentX<FieldElement>& x) {
  const FieldElement& g = consts::gamma();
  const FieldElement& th = consts::theta();
  const FieldElement zero;
  bool on_variety = g * x.sum1() - x.sum2() == zero &&
                    g * g * x.sum1() - x.sum3() == zero &&
                    g * (x.x11 + x.x21) - (x.x12 + x.x22 + x.x32) == zero &&
                    x.x14 == zero && x.x24 == zero && x.x34 == zero && x.x23 == zero;
  if (!on_variety)
    throw PreconditionError("to_y: assignment does not satisfy the equality system at mu=gamma");
  AssignmentY y;
  y.y3 = x.x32 * (g * th).inverse();
  y.y1 = y.y3 - x.x12 * consts::gamma_inv();
  y.y4 = x.x33 * (g * g).inverse();
  y.y2 = x.x22 * consts::gamma_inv() - y.y4;
  return y;
}

Extraction extract_assignment(const OrientedDigraph& d, const Rational& w) {
  int u = degree_minimizer(d);
  if (d.out_neighbors(u).empty())
    throw PreconditionError(
        "extract_assignment: a vertex has out-degree 0 (trivially a Seymour vertex)");
  int v = weighted_minimizer(d, u, w);
  Extraction e;
  e.selection = {u, v, w};
  e.counts = partition_counts(d, u, v);
  e.x = to_assignment(e.counts);
  return e;
}

}  // namespace seyver
