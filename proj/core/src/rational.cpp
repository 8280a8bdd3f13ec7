#include "padicoh/rational.hpp"

#include <stdexcept>

namespace padicoh {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Multiplicity of p in a nonzero integer.
long integer_valuation(Integer n, const Integer& p) {
  long v = 0;
  Integer q, r;
  for (;;) {
    boost::multiprecision::divide_qr(n, p, q, r);
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

} // namespace

Prime::Prime(unsigned long p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("Prime: " + std::to_string(p) + " is not prime");
  }
}

long padic_valuation(const Rational& r, const Prime& p) {
  if (r == 0) {
    throw std::domain_error("padic_valuation: valuation of zero undefined");
  }
  const Integer pi = p.as_integer();
  return integer_valuation(numerator(r), pi) - integer_valuation(denominator(r), pi);
}

Rational padic_abs(const Rational& r, const Prime& p) {
  if (r == 0) return Rational(0);
  const long v = padic_valuation(r, p);
  Integer pw = boost::multiprecision::pow(p.as_integer(), static_cast<unsigned>(v < 0 ? -v : v));
  return v >= 0 ? Rational(1, pw) : Rational(pw, 1);
}

Multiradius::Multiradius(std::vector<Rational> components) : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("Multiradius: needs at least one component");
  }
  for (const auto& c : components_) {
    if (c <= 0) {
      throw std::invalid_argument("Multiradius: components must be strictly positive");
    }
  }
}

Multiradius Multiradius::ones(std::size_t n) {
  return Multiradius(std::vector<Rational>(n, Rational(1)));
}

Multiradius Multiradius::constant(std::size_t n, const Rational& r) {
  return Multiradius(std::vector<Rational>(n, r));
}

bool is_strict_shrink(const Multiradius& eps_prime, const Multiradius& eps) {
  if (eps_prime.size() != eps.size()) return false;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps_prime[i] >= eps[i]) return false;
  }
  return true;
}

Rational multiradius_ratio(const Multiradius& eps, const Multiradius& eps_prime) {
  if (eps.size() != eps_prime.size()) {
    throw std::invalid_argument("multiradius_ratio: length mismatch");
  }
  if (!is_strict_shrink(eps_prime, eps)) {
    throw std::invalid_argument("multiradius_ratio: not a strict shrink");
  }
  Rational c = eps[0] / eps_prime[0];
  for (std::size_t i = 1; i < eps.size(); ++i) {
    Rational q = eps[i] / eps_prime[i];
    if (q > c) c = q;
  }
  return c;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
  }
}

} // namespace padicoh
