// Truncated multivariate power series ("jets") with exact rational vector
// coefficients.
//
// A Jet stores finitely many terms a_I x^I with |I| <= cap and represents a
// power series modulo total degree > cap. All operations are exact on the
// retained range; operations that differentiate lose top-degree information,
// so callers wanting exact identities allocate cap headroom (see form.hpp).

#ifndef PADICOH_JET_HPP
#define PADICOH_JET_HPP

#include "padicoh/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace padicoh {

/// Coefficient vector in the (finite-dimensional) coefficient space W,
/// normed by the maximum of coordinatewise p-adic absolute values.
using Vec = std::vector<Rational>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
/// max_i |v_i|_p — the norm on W in the chosen basis.
Rational vec_max_abs(const Vec& v, const Prime& p);

/// Descriptor of the coefficient space W: a dimension plus distinct basis labels.
struct CoefficientSpace {
  std::size_t dim = 1;
  std::vector<std::string> labels; // optional; if present, size == dim and entries distinct

  /// Throws std::invalid_argument if dim == 0 or labels are inconsistent.
  void validate() const;
};

/// Exponent tuple I in N_0^n; |I| is the total degree.
class MultiIndex {
public:
  explicit MultiIndex(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}

  static MultiIndex zero(std::size_t nvars) { return MultiIndex(std::vector<unsigned>(nvars, 0)); }
  static MultiIndex unit(std::size_t nvars, std::size_t i);

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const;

  MultiIndex plus(std::size_t i) const;  // I + e_i
  MultiIndex minus(std::size_t i) const; // I - e_i, requires I[i] > 0
  MultiIndex operator+(const MultiIndex& other) const;

  const std::vector<unsigned>& exponents() const { return e_; }

  auto operator<=>(const MultiIndex&) const = default;

private:
  std::vector<unsigned> e_;
};

/// All multi-indices in `nvars` variables with |I| <= max_degree, in increasing
/// lexicographic order. This ordering is the basis order used everywhere a jet
/// space is treated as a coordinate vector space.
std::vector<MultiIndex> multi_indices_up_to(std::size_t nvars, unsigned max_degree);

/// eps^I = prod_i eps_i^{I_i}, exact.
Rational multiradius_power(const Multiradius& eps, const MultiIndex& I);

class Jet {
public:
  /// Zero jet with the given shape.
  Jet(std::size_t nvars, unsigned cap, std::size_t dim);

  static Jet constant(std::size_t nvars, unsigned cap, Vec value);
  static Jet scalar_constant(std::size_t nvars, unsigned cap, const Rational& c);
  /// Coordinate function x_i as a scalar jet.
  static Jet coordinate(std::size_t nvars, unsigned cap, std::size_t i);
  static Jet monomial(std::size_t nvars, unsigned cap, const MultiIndex& I, Vec coeff);

  std::size_t nvars() const { return nvars_; }
  unsigned cap() const { return cap_; }
  std::size_t dim() const { return dim_; }
  bool is_scalar() const { return dim_ == 1; }
  bool is_zero() const { return terms_.empty(); }

  const std::map<MultiIndex, Vec>& terms() const { return terms_; }

  /// Coefficient of x^I (zero vector if absent).
  Vec coefficient(const MultiIndex& I) const;
  /// Adds c to the coefficient of x^I; silently drops |I| > cap and zero results.
  void add_term(const MultiIndex& I, const Vec& c);
  void set_term(const MultiIndex& I, Vec c);

  Vec value_at_origin() const;

  /// Same series, new truncation bound (extending is lossless; shrinking truncates).
  Jet with_cap(unsigned new_cap) const;

  /// c-th coordinate as a scalar jet.
  Jet component(std::size_t c) const;

private:
  std::size_t nvars_;
  unsigned cap_;
  std::size_t dim_;
  std::map<MultiIndex, Vec> terms_;
};

/// Coefficientwise sum/difference; result cap = min of caps. Shapes must match.
Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet scale(const Rational& c, const Jet& a);
inline Jet operator*(const Rational& c, const Jet& a) { return scale(c, a); }

/// Cauchy product truncated to min cap. At least one factor must be scalar-valued;
/// otherwise throws std::invalid_argument ("undefined product").
Jet multiply(const Jet& a, const Jet& b);

/// f(g_1, ..., g_m) for scalar jets g_j with zero constant term (filtration-
/// preserving, so truncation at min cap is well defined). Throws
/// std::invalid_argument ("substitution not filtration-preserving") otherwise.
Jet substitute(const Jet& f, const std::vector<Jet>& args);

/// Formal d/dx_i; cap unchanged. Exact when f is a polynomial of degree <= cap
/// actually stored; in general the top degree is lost.
Jet partial_derivative(const Jet& f, std::size_t i);

/// Renames variable v of f to target[v] in a space of new_nvars variables.
/// target must be injective. Exact and cheap (no substitution).
Jet rename_vars(const Jet& f, const std::vector<std::size_t>& target, std::size_t new_nvars);

/// Equality of the represented truncations: same nvars and dim, and identical
/// terms up to the smaller cap.
bool operator==(const Jet& a, const Jet& b);

/// ||f||_eps = max_I ||a_I|| eps^I over the stored terms (norm of the truncated
/// series; zero jet has norm 0). Exact rational.
Rational eps_norm(const Jet& f, const Multiradius& eps, const Prime& p);

/// Builds a dim-k vector jet from k scalar jets of identical shape.
Jet from_components(const std::vector<Jet>& comps);

/// Human-readable rendering, mainly for diagnostics and reports.
std::string to_string(const Jet& f);

} // namespace padicoh

#endif
