#include "seyver/poly.hpp"

#include <algorithm>
#include <sstream>

namespace seyver {

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
  return c_.back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly{};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  std::vector<Rational> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < d.size(); ++i) {
    if (i < a.c_.size()) d[i] += a.c_[i];
    if (i < b.c_.size()) d[i] += b.c_[i];
  }
  return Poly(std::move(d));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(d));
}

Poly Poly::scaled(const Rational& s) const {
  std::vector<Rational> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * s;
  return Poly(std::move(d));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  int dr = static_cast<int>(rem.size()) - 1;
  if (dr < dd) return {Poly{}, *this};
  std::vector<Rational> quot(static_cast<size_t>(dr - dd + 1));
  const Rational& lead = d.leading();
  for (int k = dr - dd; k >= 0; --k) {
    Rational q = rem[static_cast<size_t>(k + dd)] / lead;
    quot[static_cast<size_t>(k)] = q;
    if (!q.is_zero())
      for (int j = 0; j <= dd; ++j)
        rem[static_cast<size_t>(k + j)] -= q * d.c_[static_cast<size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (i == 0 || a != Rational(1)) os << a;
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain;
  if (f.is_zero()) return chain;
  chain.push_back(f);
  Poly d = f.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    Poly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

int sign_variations(const std::vector<Poly>& chain, const Rational& t) {
  int vars = 0, last = 0;
  for (const Poly& g : chain) {
    int s = g.eval(t).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++vars;
    last = s;
  }
  return vars;
}

}  // namespace

int sturm_count(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi) {
  if (chain.empty()) throw std::domain_error("sturm_count: zero polynomial");
  if (lo >= hi) throw std::domain_error("sturm_count: empty interval");
  if (chain.front().eval(lo).is_zero() || chain.front().eval(hi).is_zero())
    throw EndpointRootError("sturm_count: polynomial vanishes at an interval endpoint");
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int sturm_count(const Poly& f, const Rational& lo, const Rational& hi) {
  return sturm_count(sturm_chain(f), lo, hi);
}

IsolatingInterval isolate_root(const Poly& f, const Rational& lo, const Rational& hi,
                               const Rational& width) {
  if (sturm_count(f, lo, hi) != 1)
    throw PreconditionError("isolate_root: interval does not contain exactly one root");
  Rational a = lo, b = hi;
  int sa = f.eval(a).sign();
  int sb = f.eval(b).sign();
  if (sa == 0 || sb == 0 || sa == sb)
    throw PreconditionError("isolate_root: endpoint signs do not bracket a simple root");
  while (b - a > width) {
    Rational m = (a + b) * Rational(1, 2);
    int sm = f.eval(m).sign();
    if (sm == 0) {
      // The root is the rational m itself; shrink to a bracketing interval
      // around it by stepping in until the endpoints keep opposite signs.
      Rational h = (b - a) * Rational(1, 4);
      while (true) {
        Rational a2 = m - h, b2 = m + h;
        if (a2 > a && b2 < b && f.eval(a2).sign() == sa && f.eval(b2).sign() == sb &&
            b2 - a2 <= width)
          return {a2, b2};
        h = h * Rational(1, 2);
      }
    }
    if (sm == sa) a = m; else b = m;
  }
  return {a, b};
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi};
}

RatInterval RatInterval::scaled(const Rational& s) const {
  if (s.sign() >= 0) return {lo * s, hi * s};
  return {hi * s, lo * s};
}

RatInterval eval_on_interval(const Poly& f, const RatInterval& x) {
  RatInterval acc{Rational(0), Rational(0)};
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x) + *it;
  return acc;
}

}  // namespace seyver
