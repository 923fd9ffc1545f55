#include "seyver/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace seyver {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n) / mpq_class(d);  // operator/ canonicalizes
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  if (r.is_integer()) return os << r.num().get_str();
  return os << r.str();
}

std::optional<Rational> Rational::parse(std::string_view s) {
  auto is_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  auto dot = s.find('.');
  mpq_class v;
  if (slash != std::string_view::npos) {
    if (dot != std::string_view::npos) return std::nullopt;
    std::string_view np = s.substr(0, slash), dp = s.substr(slash + 1);
    if (!is_digits(np) || !is_digits(dp)) return std::nullopt;
    mpz_class n(std::string(np)), d(std::string(dp));
    if (d == 0) return std::nullopt;
    v = mpq_class(n) / mpq_class(d);
  } else if (dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) return std::nullopt;
    if (!ip.empty() && !is_digits(ip)) return std::nullopt;
    if (!fp.empty() && !is_digits(fp)) return std::nullopt;
    mpz_class n(ip.empty() ? "0" : std::string(ip));
    v = mpq_class(n);
    if (!fp.empty()) {
      mpz_class frac(std::string(fp));
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
      v += mpq_class(frac) / mpq_class(scale);
    }
  } else {
    if (!is_digits(s)) return std::nullopt;
    v = mpq_class(mpz_class(std::string(s)));
  }
  if (neg) v = -v;
  v.canonicalize();
  return Rational(std::move(v));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow10(int k) {
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rational(t, 1) : Rational(1, t);
}

}  // namespace seyver

std::size_t std::hash<seyver::Rational>::operator()(const seyver::Rational& r) const noexcept {
  std::size_t h1 = std::hash<std::string>{}(r.num().get_str());
  std::size_t h2 = std::hash<std::string>{}(r.den().get_str());
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}
