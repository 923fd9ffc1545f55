#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "seyver/constants.hpp"
#include "seyver/digraph.hpp"
#include "seyver/field.hpp"

namespace seyver {

/// The eleven constraint-system variables. There is no x31 slot: the cell
/// (3,1) is structurally empty. No constraints are enforced on construction;
/// they are checked by check_csp_a / check_csp_b.
template <class S>
struct AssignmentX {
  S x11{}, x12{}, x13{}, x14{};
  S x21{}, x22{}, x23{}, x24{};
  S x32{}, x33{}, x34{};

  S sum1() const { return x11 + x12 + x13 + x14; }
  S sum2() const { return x21 + x22 + x23 + x24; }
  S sum3() const { return x32 + x33 + x34; }
};

inline constexpr const char* kAssignmentFieldNames[11] = {
    "x11", "x12", "x13", "x14", "x21", "x22", "x23", "x24", "x32", "x33", "x34"};

template <class S>
std::array<S*, 11> assignment_fields(AssignmentX<S>& x) {
  return {&x.x11, &x.x12, &x.x13, &x.x14, &x.x21, &x.x22,
          &x.x23, &x.x24, &x.x32, &x.x33, &x.x34};
}

template <class S>
std::array<const S*, 11> assignment_fields(const AssignmentX<S>& x) {
  return {&x.x11, &x.x12, &x.x13, &x.x14, &x.x21, &x.x22,
          &x.x23, &x.x24, &x.x32, &x.x33, &x.x34};
}

AssignmentX<Rational> to_assignment(const PartitionCounts& c);

template <class S>
struct CSPParams {
  S mu{};
  S w{};
};

/// The quadratic quantity
///   F = x21(x32-x11-x13) + x22(x32+x23+x33) + x23*x12 - x14(x12+x21+x22)
///       + (x21+x22)^2/2 - (w*x11^2 + x12^2)/2 + (w-1)*x11*x12.
/// T may be any commutative ring type with +, -, *, construction from long
/// and a half_of overload; the same formula serves exact scalars, doubles
/// and symbolic quadratic forms.
template <class T>
T eval_F(const AssignmentX<T>& x, const T& w) {
  return x.x21 * (x.x32 - x.x11 - x.x13) + x.x22 * (x.x32 + x.x23 + x.x33) +
         x.x23 * x.x12 - x.x14 * (x.x12 + x.x21 + x.x22) +
         half_of((x.x21 + x.x22) * (x.x21 + x.x22)) -
         half_of(w * x.x11 * x.x11 + x.x12 * x.x12) + (w - T(1)) * x.x11 * x.x12;
}

enum class ConstraintKind { strict, nonstrict, equality };

template <class S>
struct ConstraintRecord {
  int group;            // constraint family 1..7
  ConstraintKind kind;
  std::string expr;
  S slack;              // lhs - rhs, tested against zero per kind
  bool satisfied;
};

template <class S>
struct ConstraintReport {
  std::vector<ConstraintRecord<S>> records;

  bool all_satisfied() const {
    for (const auto& r : records)
      if (!r.satisfied) return false;
    return true;
  }
  const ConstraintRecord<S>* first_failure() const {
    for (const auto& r : records)
      if (!r.satisfied) return &r;
    return nullptr;
  }
};

namespace detail {

template <class S>
void add_record(ConstraintReport<S>& rep, int group, ConstraintKind kind, std::string expr,
                S slack) {
  bool ok = false;
  S zero{};
  switch (kind) {
    case ConstraintKind::strict: ok = slack > zero; break;
    case ConstraintKind::nonstrict: ok = slack >= zero; break;
    case ConstraintKind::equality: ok = slack == zero; break;
  }
  rep.records.push_back({group, kind, std::move(expr), std::move(slack), ok});
}

template <class S>
ConstraintReport<S> check_csp(const AssignmentX<S>& x, const CSPParams<S>& p, bool equalities) {
  ConstraintKind k123 = equalities ? ConstraintKind::equality : ConstraintKind::strict;
  ConstraintKind k5 = equalities ? ConstraintKind::equality : ConstraintKind::nonstrict;
  ConstraintReport<S> rep;
  add_record(rep, 1, k123, "mu*(x11+x12+x13+x14) ? x21+x22+x23+x24",
             p.mu * x.sum1() - x.sum2());
  add_record(rep, 2, k123, "mu^2*(x11+x12+x13+x14) ? x32+x33+x34",
             p.mu * p.mu * x.sum1() - x.sum3());
  add_record(rep, 3, k123, "mu*(x11+x21) ? x12+x22+x32",
             p.mu * (x.x11 + x.x21) - (x.x12 + x.x22 + x.x32));
  add_record(rep, 4, ConstraintKind::nonstrict, "x21 >= x12+x13+x14",
             x.x21 - (x.x12 + x.x13 + x.x14));
  add_record(rep, 5, k5, "x14 ? 0", x.x14);
  add_record(rep, 5, k5, "x24 ? 0", x.x24);
  add_record(rep, 5, k5, "x34 ? 0", x.x34);
  add_record(rep, 5, k5, "x23 ? 0", x.x23);
  add_record(rep, 6, ConstraintKind::strict, "x11 > 0", x.x11);
  add_record(rep, 6, ConstraintKind::nonstrict, "x13 >= 0", x.x13);
  add_record(rep, 6, ConstraintKind::nonstrict, "x22 >= 0", x.x22);
  add_record(rep, 6, ConstraintKind::nonstrict, "x32 >= 0", x.x32);
  add_record(rep, 6, ConstraintKind::nonstrict, "x33 >= 0", x.x33);
  add_record(rep, 6, ConstraintKind::nonstrict, "x12+x13 >= 0", x.x12 + x.x13);
  add_record(rep, 6, ConstraintKind::nonstrict, "x12+x22 >= 0", x.x12 + x.x22);
  add_record(rep, 7, ConstraintKind::strict, "F > 0", eval_F(x, p.w));
  return rep;
}

}  // namespace detail

/// Constraint system with strict inequalities in groups (1)-(3) and
/// nonnegativity in group (5).
template <class S>
ConstraintReport<S> check_csp_a(const AssignmentX<S>& x, const CSPParams<S>& p) {
  return detail::check_csp(x, p, /*equalities=*/false);
}

/// Adjusted system: groups (1)-(3) as equalities, group (5) pinned to zero.
template <class S>
ConstraintReport<S> check_csp_b(const AssignmentX<S>& x, const CSPParams<S>& p) {
  return detail::check_csp(x, p, /*equalities=*/true);
}

// Directional derivatives of F along the three adjustment moves; exposed so
// tests can compare them against finite differences of eval_F.
template <class S>
S step3_rate(const AssignmentX<S>& x, const S& w) {
  return S(0) - (w - S(1)) * x.x11 + x.x32 + x.x33;
}
template <class S>
S step4a_rate(const AssignmentX<S>& x) {
  return x.x11 + x.x13 + x.x23 + x.x33;
}
template <class S>
S step4b_rate(const AssignmentX<S>& x, const S& w) {
  return (w - S(1)) * x.x11 + x.x21 - x.x12 - x.x14 + x.x23;
}

template <class S>
struct AdjustStep {
  std::string name;
  S delta{};
  S f_before{};
  S f_after{};
};

template <class S>
struct AdjustResult {
  AssignmentX<S> x;
  std::vector<AdjustStep<S>> trace;
};

/// Four-step closed-form adjustment carrying a point of the closed strict
/// system to one satisfying the equality system, never decreasing F:
///   1. fold x14 into x13, zero the distance->=4 cells,
///   2. raise x23 and x33 until groups (1) and (2) are equalities,
///   3. shift mass (x12,x23) -> (x13,x22) until x23 = 0,
///   4. rebalance (x21,x22), then (x12,x13), until group (3) is an equality.
/// Preconditions: the closed relaxation of the strict system (groups (1)-(3)
/// nonstrict, (4)-(6) nonnegativity) and 1 < w < 1 + mu^2. Every preserved
/// constraint and every F change is re-verified exactly after each step;
/// a violation throws std::logic_error.
template <class S>
AdjustResult<S> adjust(const AssignmentX<S>& input, const CSPParams<S>& params);

struct AssignmentY {
  FieldElement y1, y2, y3, y4;
};

/// The linear map behind from_y, usable with any carrier T admitting
/// FieldElement * T (exact scalars for values, symbolic forms for proofs).
template <class T>
AssignmentX<T> from_y_generic(const T& y1, const T& y2, const T& y3, const T& y4) {
  const FieldElement& g = consts::gamma();
  const FieldElement& th = consts::theta();
  const FieldElement one(1);
  AssignmentX<T> x;
  x.x32 = (g * th) * y3;
  x.x33 = (g * g) * y4;
  x.x12 = g * (y3 - y1);
  x.x22 = g * (y2 + y4);
  x.x21 = th * y3 - g * y2;
  x.x11 = (one + g) * y2 + y3 + y4 - y1;
  x.x13 = (one + g) * (y1 - y2) + (consts::gamma_inv() * th - g - one) * y3;
  return x;
}

/// Linear change of variables of the equality system at mu = gamma,
/// w = gamma^2 + 2*gamma^3. from_y always lands on the equality variety;
/// to_y requires its input to lie there and throws PreconditionError
/// otherwise. to_y(from_y(y)) = y exactly.
AssignmentX<FieldElement> from_y(const AssignmentY& y);
AssignmentY to_y(const AssignmentX<FieldElement>& x);

template <class S>
struct Selection {
  int u = -1;
  int v = -1;
  S w{};
};

struct Extraction {
  Selection<Rational> selection;
  PartitionCounts counts;
  AssignmentX<Rational> x;
};

/// Selects u as the out-degree minimizer and v as the weighted minimizer in
/// N+(u), and reads off the partition cell sizes. Requires minimum
/// out-degree >= 1 (otherwise a zero-out-degree vertex exists and extraction
/// is meaningless); throws PreconditionError.
Extraction extract_assignment(const OrientedDigraph& d, const Rational& w);

// ---- implementation of adjust -------------------------------------------

namespace detail {

template <class S>
void require(bool cond, const char* step, const char* what) {
  if (!cond)
    throw std::logic_error(std::string("adjust: ") + step + ": " + what);
}

template <class S>
void check_preserved(const AssignmentX<S>& x, const CSPParams<S>& p, const char* step,
                     bool eq1, bool eq2, bool eq3) {
  S zero{};
  S s1 = p.mu * x.sum1() - x.sum2();
  S s2 = p.mu * p.mu * x.sum1() - x.sum3();
  S s3 = p.mu * (x.x11 + x.x21) - (x.x12 + x.x22 + x.x32);
  require<S>(eq1 ? s1 == zero : s1 >= zero, step, "group (1) lost");
  require<S>(eq2 ? s2 == zero : s2 >= zero, step, "group (2) lost");
  require<S>(eq3 ? s3 == zero : s3 >= zero, step, "group (3) lost");
  require<S>(x.x21 - (x.x12 + x.x13 + x.x14) >= zero, step, "group (4) lost");
  require<S>(x.x14 >= zero && x.x24 >= zero && x.x34 >= zero && x.x23 >= zero, step,
             "group (5) lost");
  require<S>(x.x13 >= zero && x.x22 >= zero && x.x32 >= zero && x.x33 >= zero &&
                 x.x12 + x.x13 >= zero && x.x12 + x.x22 >= zero,
             step, "group (6) lost");
}

}  // namespace detail

template <class S>
AdjustResult<S> adjust(const AssignmentX<S>& input, const CSPParams<S>& params) {
  const S zero{};
  const S one(1);
  const S& mu = params.mu;
  const S& w = params.w;
  if (!(w > one && w < one + mu * mu))
    throw PreconditionError("adjust: w outside (1, 1+mu^2)");
  {
    // Closed relaxation of the strict system; strictness is not needed for
    // the procedure itself (an equality point is simply a fixed point).
    S s1 = mu * input.sum1() - input.sum2();
    S s2 = mu * mu * input.sum1() - input.sum3();
    S s3 = mu * (input.x11 + input.x21) - (input.x12 + input.x22 + input.x32);
    bool ok = s1 >= zero && s2 >= zero && s3 >= zero &&
              input.x21 - (input.x12 + input.x13 + input.x14) >= zero &&
              input.x14 >= zero && input.x24 >= zero && input.x34 >= zero &&
              input.x23 >= zero && input.x11 >= zero && input.x13 >= zero &&
              input.x22 >= zero && input.x32 >= zero && input.x33 >= zero &&
              input.x12 + input.x13 >= zero && input.x12 + input.x22 >= zero;
    if (!ok) throw PreconditionError("adjust: input violates the closed constraint system");
  }

  AdjustResult<S> out;
  AssignmentX<S> x = input;
  auto log_step = [&](const char* name, S delta, S fb, S fa) {
    out.trace.push_back({name, std::move(delta), std::move(fb), std::move(fa)});
  };

  // Step 1: fold the distance->=4 cells into x13.
  {
    S fb = eval_F(x, w);
    S delta = x.x14;
    S expected_gain = (x.x12 + x.x22) * delta;
    x.x13 += x.x14;
    x.x14 = zero;
    x.x24 = zero;
    x.x34 = zero;
    S fa = eval_F(x, w);
    detail::require<S>(fa - fb == expected_gain, "step 1", "F gain differs from (x12+x22)*x14");
    detail::require<S>(fa >= fb, "step 1", "F decreased");
    detail::check_preserved(x, params, "step 1", false, false, false);
    log_step("fold_j4_into_x13", std::move(delta), std::move(fb), std::move(fa));
  }

  // Step 2: raise x23 and x33 to make groups (1) and (2) equalities.
  {
    S fb = eval_F(x, w);
    S d23 = mu * x.sum1() - x.sum2();
    S d33 = mu * mu * x.sum1() - x.sum3();
    detail::require<S>(d23 >= zero && d33 >= zero, "step 2", "negative saturation amount");
    x.x23 += d23;
    x.x33 += d33;
    S fa = eval_F(x, w);
    detail::require<S>(fa >= fb, "step 2", "F decreased");
    detail::check_preserved(x, params, "step 2", true, true, false);
    log_step("saturate_groups_1_2", d23 + d33, std::move(fb), std::move(fa));
  }

  // Step 3: move (x12, x23) mass to (x13, x22) until x23 hits zero. F is
  // linear along this direction with slope -(w-1)x11 + x32 + x33.
  {
    S fb = eval_F(x, w);
    S delta = x.x23;
    S rate = step3_rate(x, w);
    x.x13 += delta;
    x.x22 += delta;
    x.x12 -= delta;
    x.x23 -= delta;
    S fa = eval_F(x, w);
    detail::require<S>(x.x23 == zero, "step 3", "x23 not cleared");
    detail::require<S>(fa - fb == rate * delta, "step 3", "F change differs from rate*delta");
    detail::require<S>(fa >= fb, "step 3", "F decreased");
    detail::require<S>(!(delta > zero && x.x11 > zero) || fa > fb, "step 3",
                       "F failed to strictly increase");
    detail::check_preserved(x, params, "step 3", true, true, false);
    log_step("clear_x23", std::move(delta), std::move(fb), std::move(fa));
  }

  // Step 4a: trade x21 for x22 toward equality in group (3), stopping early
  // if group (4) becomes tight.
  {
    S fb = eval_F(x, w);
    S gap = mu * (x.x11 + x.x21) - (x.x12 + x.x22 + x.x32);
    S room = x.x21 - (x.x12 + x.x13 + x.x14);
    S delta = gap / (one + mu);
    if (room < delta) delta = room;
    S rate = step4a_rate(x);
    x.x21 -= delta;
    x.x22 += delta;
    S fa = eval_F(x, w);
    detail::require<S>(fa - fb == rate * delta, "step 4a", "F change differs from rate*delta");
    detail::require<S>(fa >= fb, "step 4a", "F decreased");
    detail::require<S>(!(delta > zero && x.x11 > zero) || fa > fb, "step 4a",
                       "F failed to strictly increase");
    detail::check_preserved(x, params, "step 4a", true, true, false);
    log_step("rebalance_x21_x22", std::move(delta), std::move(fb), std::move(fa));
  }

  // Step 4b: if a gap remains, group (4) is tight; trade x13 for x12 to
  // close group (3) exactly.
  {
    S fb = eval_F(x, w);
    S gap = mu * (x.x11 + x.x21) - (x.x12 + x.x22 + x.x32);
    detail::require<S>(gap >= zero, "step 4b", "group (3) overshot");
    if (gap > zero) {
      detail::require<S>(x.x21 - (x.x12 + x.x13 + x.x14) == zero, "step 4b",
                         "group (4) not tight although a gap remains");
      S rate = step4b_rate(x, w);
      x.x12 += gap;
      x.x13 -= gap;
      S fa = eval_F(x, w);
      detail::require<S>(fa - fb == rate * gap - half_of(gap * gap), "step 4b",
                         "F change differs from the quadratic profile");
      detail::require<S>(fa >= fb, "step 4b", "F decreased");
      detail::require<S>(!(x.x11 > zero) || fa > fb, "step 4b", "F failed to strictly increase");
      detail::check_preserved(x, params, "step 4b", true, true, true);
      log_step("rebalance_x12_x13", std::move(gap), std::move(fb), std::move(fa));
    } else {
      detail::check_preserved(x, params, "step 4b", true, true, true);
      log_step("rebalance_x12_x13", zero, fb, fb);
    }
  }

  out.x = std::move(x);
  return out;
}

}  // namespace seyver
