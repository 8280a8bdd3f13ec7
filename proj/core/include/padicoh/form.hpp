// Vector-valued differential forms with jet coefficients.
//
// A Form of degree q in n variables is a finite sum of components
// a_K dx_{k_1} ^ ... ^ dx_{k_q} over strictly increasing tuples K, with each
// coefficient a_K a jet. Wedge evaluation uses the determinant convention
// (dx_{k_1}^...^dx_{k_q})(v_1,...,v_q) = det(dx_{k_i}(v_j)), no 1/q! factor.

#ifndef PADICOH_FORM_HPP
#define PADICOH_FORM_HPP

#include "padicoh/jet.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace padicoh {

/// Strictly increasing tuple of variable indices (0-based), the dx-multi-index.
using IndexTuple = std::vector<std::size_t>;

/// All strictly increasing q-tuples with entries in 0..n-1, lexicographic.
std::vector<IndexTuple> increasing_tuples(std::size_t n, unsigned q);

/// Sorts `indices` in place; returns +1/-1 for the permutation parity or 0 when
/// two entries coincide.
int sort_with_sign(std::vector<std::size_t>& indices);

/// An element of Lambda^q (K^n)^vee tensor V: a constant alternating tensor,
/// stored on increasing tuples. This is also the cochain type Hom(Lambda^q g, V).
class AlternatingTensor {
public:
  AlternatingTensor(std::size_t n, unsigned q, std::size_t dim);

  std::size_t n() const { return n_; }
  unsigned q() const { return q_; }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return comps_.empty(); }

  const std::map<IndexTuple, Vec>& components() const { return comps_; }
  Vec component(const IndexTuple& K) const;
  void add_component(const IndexTuple& K, const Vec& v); // K must be strictly increasing
  void set_component(const IndexTuple& K, Vec v);

  /// Evaluation on an arbitrary (not necessarily increasing) index tuple,
  /// extended antisymmetrically; repeated indices give zero.
  Vec evaluate(std::span<const std::size_t> indices) const;

  friend bool operator==(const AlternatingTensor&, const AlternatingTensor&) = default;

private:
  std::size_t n_;
  unsigned q_;
  std::size_t dim_;
  std::map<IndexTuple, Vec> comps_;
};

AlternatingTensor operator+(const AlternatingTensor& a, const AlternatingTensor& b);
AlternatingTensor operator-(const AlternatingTensor& a, const AlternatingTensor& b);
AlternatingTensor scale(const Rational& c, const AlternatingTensor& a);

/// Partition of the variables 0..n-1 into named blocks (the factors of a
/// product such as G x ... x G). Blocks are disjoint and cover all variables.
class BlockStructure {
public:
  BlockStructure(std::size_t nvars, std::vector<std::vector<std::size_t>> blocks,
                 std::vector<std::string> names = {});

  /// `count` consecutive blocks of equal size (the E_p G layout).
  static BlockStructure uniform(std::size_t count, std::size_t block_size);

  std::size_t nvars() const { return nvars_; }
  std::size_t count() const { return blocks_.size(); }
  const std::vector<std::size_t>& block(std::size_t i) const;
  const std::string& name(std::size_t i) const { return names_[i]; }
  /// Index of the named block; throws std::invalid_argument if unknown.
  std::size_t find(const std::string& name) const;

private:
  std::size_t nvars_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::string> names_;
};

class Form {
public:
  Form(std::size_t nvars, unsigned q, unsigned cap, std::size_t dim);

  /// Degree-0 form wrapping a jet.
  static Form from_jet(const Jet& f);
  /// The basis q-form dx_{K} with unit scalar coefficient.
  static Form basis(std::size_t nvars, unsigned cap, const IndexTuple& K);

  std::size_t nvars() const { return nvars_; }
  unsigned q() const { return q_; }
  unsigned cap() const { return cap_; }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return comps_.empty(); }

  const std::map<IndexTuple, Jet>& components() const { return comps_; }
  const Jet* component(const IndexTuple& K) const;
  void add_component(const IndexTuple& K, const Jet& a);

  /// The unique jet of a 0-form.
  const Jet& as_jet() const;

  Form with_cap(unsigned new_cap) const;

private:
  std::size_t nvars_;
  unsigned q_;
  unsigned cap_;
  std::size_t dim_;
  std::map<IndexTuple, Jet> comps_; // no zero jets stored
};

Form operator+(const Form& a, const Form& b);
Form operator-(const Form& a, const Form& b);
Form operator-(const Form& a);
Form scale(const Rational& c, const Form& a);

/// Equality of represented truncations (coefficients compared up to min cap).
bool operator==(const Form& a, const Form& b);

/// d(a dx_K) = sum_k (d a/d x_k) dx_k ^ dx_K. Throws std::invalid_argument
/// ("degree overflow") when q == nvars, surfacing misuse instead of returning 0.
Form exterior_derivative(const Form& w);

/// Exterior derivative restricted to the variables of one block (the d_i of a
/// product of factors): only dx_k with k in the block are produced.
Form partial_exterior_derivative(const Form& w, const BlockStructure& blocks, std::size_t block);
Form partial_exterior_derivative(const Form& w, const BlockStructure& blocks, const std::string& name);

/// phi^* w for phi given by one jet per variable of w (all filtration-
/// preserving, in a common target space). Chain rule on coefficients and dx's.
Form pullback(const Form& w, const std::vector<Jet>& phi);

/// Constant terms of all components: the value of the form at the chart origin
/// as an element of Lambda^q (K^n)^vee tensor V.
AlternatingTensor evaluate_at_origin(const Form& w);

/// Graded product; at most one factor may be vector-valued.
Form wedge(const Form& a, const Form& b);

/// Applies a linear map between coefficient spaces to every coefficient vector.
/// `rows` is the matrix of the map as rows (target dim x source dim).
Form apply_coefficient_map(const std::vector<Vec>& rows, const Form& w);
Vec apply_rows(const std::vector<Vec>& rows, const Vec& v);
AlternatingTensor apply_coefficient_map(const std::vector<Vec>& rows, const AlternatingTensor& t);

/// Max over components of the coefficient eps-norm (norm of the truncated form).
Rational eps_norm(const Form& w, const Multiradius& eps, const Prime& p);

std::string to_string(const Form& w);

} // namespace padicoh

#endif
