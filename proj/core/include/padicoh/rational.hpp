// Exact rational scalars with p-adic valuations and multiradius bookkeeping.
//
// The ground field is the rationals sitting inside Q_p for a chosen prime p.
// Everything here is exact: valuations are integers, absolute values and
// radius comparisons are rational numbers, and no rounding ever happens.

#ifndef PADICOH_RATIONAL_HPP
#define PADICOH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace padicoh {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A prime number fixing the nonarchimedean absolute value on Q.
/// Primality is verified at construction (trial division; these are desk-scale primes).
class Prime {
public:
  explicit Prime(unsigned long p);

  unsigned long value() const { return p_; }
  Integer as_integer() const { return Integer(p_); }

  friend bool operator==(const Prime&, const Prime&) = default;

private:
  unsigned long p_;
};

/// p-adic valuation of a nonzero rational: r = p^v * (u/w) with u, w coprime to p.
/// Throws std::domain_error for r = 0 ("valuation of zero undefined").
long padic_valuation(const Rational& r, const Prime& p);

/// p-adic absolute value |r|_p = p^{-v}, with |0|_p = 0. Exact rational result.
Rational padic_abs(const Rational& r, const Prime& p);

/// Tuple of per-variable convergence radii, all strictly positive rationals.
class Multiradius {
public:
  explicit Multiradius(std::vector<Rational> components);

  /// The all-ones multiradius in n variables.
  static Multiradius ones(std::size_t n);
  /// Constant multiradius (r, ..., r) in n variables.
  static Multiradius constant(std::size_t n, const Rational& r);

  std::size_t size() const { return components_.size(); }
  const Rational& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Rational>& components() const { return components_; }

  friend bool operator==(const Multiradius&, const Multiradius&) = default;

private:
  std::vector<Rational> components_;
};

/// C = max_i eps_i / eps_prime_i for a componentwise strict shrink eps_prime < eps.
/// C > 1 is guaranteed by the precondition; violations throw std::invalid_argument
/// ("not a strict shrink", or a length mismatch message).
Rational multiradius_ratio(const Multiradius& eps, const Multiradius& eps_prime);

/// True iff eps_prime < eps holds componentwise (strictly, same length).
bool is_strict_shrink(const Multiradius& eps_prime, const Multiradius& eps);

/// Canonical text form: "a" for integers, "a/b" otherwise (b > 0, reduced).
std::string to_string(const Rational& r);

/// Parses "a" or "a/b" (optionally signed). Throws std::invalid_argument on bad input.
Rational parse_rational(const std::string& text);

} // namespace padicoh

#endif
