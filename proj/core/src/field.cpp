#include "seyver/field.hpp"

#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace seyver {

namespace {

// Process-wide context for Q(gamma): the quintic, its Sturm chain, and a
// monotonically refined isolating interval for gamma.
struct GammaContext {
  Poly p;
  std::vector<Poly> chain;
  mutable std::mutex mu;
  mutable IsolatingInterval iv;

  GammaContext() : p{Rational(4), Rational(2), Rational(-7), Rational(-12), Rational(4), Rational(8)} {
    chain = sturm_chain(p);
    if (poly_gcd(p, p.derivative()).degree() != 0)
      throw std::logic_error("field: defining quintic is not squarefree");
    if (sturm_count(chain, Rational(0), Rational(1)) != 1)
      throw std::logic_error("field: defining quintic does not have a unique root in (0,1)");
    iv = isolate_root(p, Rational(0), Rational(1), Rational(1, 64));
  }

  // One bisection step on the cached interval. If the midpoint happens to be
  // a rational root, the interval is collapsed around it symmetrically.
  void refine_once_locked() const {
    Rational m = iv.mid();
    int sm = p.eval(m).sign();
    if (sm == 0) {
      Rational h = iv.width() * Rational(1, 8);
      while (!(p.eval(m - h).sign() * p.eval(m + h).sign() < 0)) h = h * Rational(1, 2);
      iv = {m - h, m + h};
      return;
    }
    if (sm == p.eval(iv.lo).sign()) iv.lo = m; else iv.hi = m;
  }

  IsolatingInterval refined(const Rational& width) const {
    std::lock_guard<std::mutex> lock(mu);
    while (iv.width() > width) refine_once_locked();
    return iv;
  }

  IsolatingInterval snapshot() const {
    std::lock_guard<std::mutex> lock(mu);
    return iv;
  }
};

const GammaContext& ctx() {
  static const GammaContext c;
  return c;
}

Poly to_poly(const std::array<Rational, 5>& c) {
  return Poly(std::vector<Rational>(c.begin(), c.end()));
}

std::array<Rational, 5> from_poly(const Poly& f) {
  if (f.degree() > 4) throw std::logic_error("field: representative not reduced");
  std::array<Rational, 5> c{};
  for (int i = 0; i <= f.degree(); ++i) c[static_cast<size_t>(i)] = f.coeff(i);
  return c;
}

// Extended Euclid over Q[x]: returns (g, u) with u*a + v*b = g for some v.
std::pair<Poly, Poly> xgcd_first(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly u0{Rational(1)}, u1{};
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    Poly u2 = u0 - q * u1;
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
  }
  return {r0, u0};
}

}  // namespace

const Poly& defining_quintic() { return ctx().p; }

const Poly& baseline_cubic() {
  static const Poly q{Rational(-1), Rational(0), Rational(1), Rational(2)};
  return q;
}

IsolatingInterval gamma_interval(const Rational& width) { return ctx().refined(width); }

FieldElement FieldElement::gamma() {
  return from_coords({Rational(0), Rational(1), Rational(0), Rational(0), Rational(0)});
}

FieldElement FieldElement::from_coords(std::array<Rational, 5> coords) {
  FieldElement a;
  a.c_ = std::move(coords);
  return a;
}

FieldElement reduce_mod_p(const std::vector<Rational>& raw) {
  Poly f(raw);
  if (f.degree() <= 4) return FieldElement::from_coords(from_poly(f));
  return FieldElement::from_coords(from_poly(f.divmod(ctx().p).second));
}

bool FieldElement::is_rational() const {
  return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero() && c_[4].is_zero();
}

bool FieldElement::is_zero() const {
  bool all_zero = true;
  for (const auto& r : c_) all_zero = all_zero && r.is_zero();
  if (all_zero) return true;
  Poly rep = to_poly(c_);
  Poly g = poly_gcd(rep, ctx().p);
  if (g.degree() == 0) return false;
  // gamma is a root of the representative iff it is a root of g. The roots
  // of g inside gamma's isolating interval are roots of the quintic there,
  // and gamma is the only one; endpoints are root-free because the quintic
  // does not vanish at them.
  IsolatingInterval iv = ctx().snapshot();
  return sturm_count(g, iv.lo, iv.hi) == 1;
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  Poly rep = to_poly(c_);
  IsolatingInterval iv = ctx().snapshot();
  Rational width = iv.width();
  while (true) {
    RatInterval v = eval_on_interval(rep, {iv.lo, iv.hi});
    if (!v.contains_zero()) return v.lo.sign() > 0 ? 1 : -1;
    width = width * Rational(1, 2);
    iv = ctx().refined(width);
  }
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: division by zero");
  auto [g, u] = xgcd_first(to_poly(c_), ctx().p);
  if (g.degree() != 0)
    throw std::domain_error(
        "FieldElement: representative shares a factor with the defining quintic");
  Poly inv = u.scaled(Rational(1) / g.leading());
  return FieldElement::from_coords(from_poly(inv.divmod(ctx().p).second));
}

FieldElement FieldElement::operator-() const {
  std::array<Rational, 5> c;
  for (size_t i = 0; i < 5; ++i) c[i] = -c_[i];
  return from_coords(std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  std::array<Rational, 5> c;
  for (size_t i = 0; i < 5; ++i) c[i] = a.c_[i] + b.c_[i];
  return FieldElement::from_coords(std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  Poly prod = to_poly(a.c_) * to_poly(b.c_);
  return FieldElement::from_coords(from_poly(prod.divmod(ctx().p).second));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) { return (a - b).is_zero(); }
bool operator<(const FieldElement& a, const FieldElement& b) { return (a - b).sign() < 0; }
bool operator<=(const FieldElement& a, const FieldElement& b) { return (a - b).sign() <= 0; }

FieldElement pow(const FieldElement& a, unsigned e) {
  FieldElement acc(Rational(1));
  FieldElement base = a;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

namespace {

// Value interval of a representative, refined until its width is below tol.
RatInterval value_interval(const Poly& rep, const Rational& tol) {
  IsolatingInterval iv = ctx().snapshot();
  Rational width = iv.width();
  while (true) {
    RatInterval v = eval_on_interval(rep, {iv.lo, iv.hi});
    if (v.hi - v.lo < tol) return v;
    width = width * Rational(1, 2);
    iv = ctx().refined(width);
  }
}

std::string format_scaled(const mpz_class& n, int digits) {
  bool neg = n < 0;
  mpz_class m = neg ? mpz_class(-n) : n;
  std::string s = m.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s = std::string(static_cast<size_t>(digits + 1 - static_cast<int>(s.size())), '0') + s;
  std::string out = neg ? "-" : "";
  if (digits == 0) return out + s;
  out += s.substr(0, s.size() - static_cast<size_t>(digits));
  out += ".";
  out += s.substr(s.size() - static_cast<size_t>(digits));
  return out;
}

mpz_class floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

}  // namespace

std::string FieldElement::approx(int digits) const {
  if (digits < 0) throw std::domain_error("approx: negative digit count");
  Rational scale = pow10(digits);
  Poly rep = to_poly(c_);
  Rational half(1, 2);
  // Width below 1/(4*scale) pins the rounded integer to at most two
  // candidates; an exact sign test against the tie point settles the rest.
  RatInterval v = value_interval(rep, Rational(1, 4) / scale);
  mpz_class n_hi = floor_of(v.hi * scale + half);
  mpz_class n = n_hi;
  Rational tie = (Rational(n_hi, 1) - half) / scale;
  int s = (*this - FieldElement(tie)).sign();
  if (s == 0) {
    mpz_class below = n_hi - 1;
    n = mpz_even_p(below.get_mpz_t()) ? below : n_hi;  // ties to even
  } else if (s < 0) {
    n = n_hi - 1;
  }
  return format_scaled(n, digits);
}

double FieldElement::to_double() const {
  RatInterval v = value_interval(to_poly(c_), pow10(-22));
  return ((v.lo + v.hi) * Rational(1, 2)).to_double();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  std::ostringstream body;
  bool first = true;
  static const char* names[5] = {"", "g", "g^2", "g^3", "g^4"};
  for (int i = 0; i < 5; ++i) {
    const Rational& r = a.coords()[static_cast<size_t>(i)];
    if (r.is_zero()) continue;
    if (!first) body << (r.sign() > 0 ? " + " : " - ");
    else if (r.sign() < 0) body << "-";
    first = false;
    Rational m = abs(r);
    if (i == 0 || m != Rational(1)) {
      body << m;
      if (i > 0) body << "*";
    }
    if (i > 0) body << names[i];
  }
  if (first) body << "0";
  return os << body.str();
}

}  // namespace seyver
