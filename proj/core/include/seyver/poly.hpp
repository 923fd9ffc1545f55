#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "seyver/rational.hpp"

namespace seyver {

/// Signalled when sturm_count is asked about an interval on whose endpoint
/// the polynomial vanishes.
struct EndpointRootError : std::domain_error {
  using std::domain_error::domain_error;
};

struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Univariate polynomial over Rational, coefficients lowest degree first.
/// The zero polynomial is the empty coefficient sequence; otherwise the
/// leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs_low_first);
  explicit Poly(std::vector<Rational> coeffs_low_first);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const;
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  Poly derivative() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& s) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division: *this = q*d + r with deg r < deg d. Throws on d = 0.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  /// Monic representative (leading coefficient 1); zero stays zero.
  Poly monic() const;

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Monic gcd over Q[x].
Poly poly_gcd(Poly a, Poly b);

/// Sturm chain of f: f, f', then negated remainders down to a constant.
std::vector<Poly> sturm_chain(const Poly& f);

/// Number of distinct real roots of f in the open interval (lo, hi).
/// Requires f(lo) != 0 and f(hi) != 0; throws EndpointRootError otherwise.
int sturm_count(const Poly& f, const Rational& lo, const Rational& hi);
int sturm_count(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi);

/// Interval certified to contain exactly one root of its polynomial.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) * Rational(1, 2); }
};

/// Shrinks [lo, hi] around the unique root of f until the width is at most
/// `width`, bisecting on the sign of f. Requires sturm_count(f, lo, hi) = 1;
/// throws PreconditionError otherwise.
IsolatingInterval isolate_root(const Poly& f, const Rational& lo, const Rational& hi,
                               const Rational& width);

/// Closed rational interval, used for exact range evaluation.
struct RatInterval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
  RatInterval operator+(const Rational& c) const { return {lo + c, hi + c}; }
  RatInterval scaled(const Rational& s) const;
};

/// Exact interval Horner evaluation: the image f([lo,hi]) is contained in the
/// returned interval.
RatInterval eval_on_interval(const Poly& f, const RatInterval& x);

}  // namespace seyver
