#include "padicoh/jet.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace padicoh {

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rational vec_max_abs(const Vec& v, const Prime& p) {
  Rational m(0);
  for (const auto& x : v) {
    Rational a = padic_abs(x, p);
    if (a > m) m = a;
  }
  return m;
}

void CoefficientSpace::validate() const {
  if (dim == 0) throw std::invalid_argument("CoefficientSpace: dim must be >= 1");
  if (!labels.empty()) {
    if (labels.size() != dim) {
      throw std::invalid_argument("CoefficientSpace: label count differs from dim");
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) {
      throw std::invalid_argument("CoefficientSpace: labels must be distinct");
    }
  }
}

MultiIndex MultiIndex::unit(std::size_t nvars, std::size_t i) {
  std::vector<unsigned> e(nvars, 0);
  e.at(i) = 1;
  return MultiIndex(std::move(e));
}

unsigned MultiIndex::degree() const {
  unsigned d = 0;
  for (unsigned x : e_) d += x;
  return d;
}

MultiIndex MultiIndex::plus(std::size_t i) const {
  std::vector<unsigned> e = e_;
  e.at(i) += 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::minus(std::size_t i) const {
  std::vector<unsigned> e = e_;
  if (e.at(i) == 0) throw std::invalid_argument("MultiIndex::minus: exponent already zero");
  e[i] -= 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (size() != other.size()) throw std::invalid_argument("MultiIndex: length mismatch");
  std::vector<unsigned> e(size());
  for (std::size_t i = 0; i < size(); ++i) e[i] = e_[i] + other.e_[i];
  return MultiIndex(std::move(e));
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> cur(nvars, 0);
  // depth-first in lexicographic order
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos == nvars) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  if (nvars == 0) {
    out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

Rational multiradius_power(const Multiradius& eps, const MultiIndex& I) {
  if (eps.size() != I.size()) throw std::invalid_argument("multiradius_power: length mismatch");
  Rational r(1);
  for (std::size_t i = 0; i < I.size(); ++i) {
    for (unsigned k = 0; k < I[i]; ++k) r *= eps[i];
  }
  return r;
}

Jet::Jet(std::size_t nvars, unsigned cap, std::size_t dim) : nvars_(nvars), cap_(cap), dim_(dim) {
  if (dim == 0) throw std::invalid_argument("Jet: coefficient dimension must be >= 1");
}

Jet Jet::constant(std::size_t nvars, unsigned cap, Vec value) {
  Jet j(nvars, cap, value.size());
  j.set_term(MultiIndex::zero(nvars), std::move(value));
  return j;
}

Jet Jet::scalar_constant(std::size_t nvars, unsigned cap, const Rational& c) {
  return constant(nvars, cap, Vec{c});
}

Jet Jet::coordinate(std::size_t nvars, unsigned cap, std::size_t i) {
  if (i >= nvars) throw std::invalid_argument("Jet::coordinate: index out of range");
  if (cap < 1) throw std::invalid_argument("Jet::coordinate: cap must be >= 1");
  Jet j(nvars, cap, 1);
  j.set_term(MultiIndex::unit(nvars, i), Vec{Rational(1)});
  return j;
}

Jet Jet::monomial(std::size_t nvars, unsigned cap, const MultiIndex& I, Vec coeff) {
  Jet j(nvars, cap, coeff.size());
  if (I.size() != nvars) throw std::invalid_argument("Jet::monomial: index length mismatch");
  j.set_term(I, std::move(coeff));
  return j;
}

Vec Jet::coefficient(const MultiIndex& I) const {
  auto it = terms_.find(I);
  if (it == terms_.end()) return Vec(dim_, Rational(0));
  return it->second;
}

void Jet::add_term(const MultiIndex& I, const Vec& c) {
  if (I.size() != nvars_) throw std::invalid_argument("Jet::add_term: index length mismatch");
  if (c.size() != dim_) throw std::invalid_argument("Jet::add_term: coefficient dimension mismatch");
  if (I.degree() > cap_) return;
  auto it = terms_.find(I);
  if (it == terms_.end()) {
    if (!vec_is_zero(c)) terms_.emplace(I, c);
    return;
  }
  it->second = vec_add(it->second, c);
  if (vec_is_zero(it->second)) terms_.erase(it);
}

void Jet::set_term(const MultiIndex& I, Vec c) {
  if (I.size() != nvars_) throw std::invalid_argument("Jet::set_term: index length mismatch");
  if (c.size() != dim_) throw std::invalid_argument("Jet::set_term: coefficient dimension mismatch");
  if (I.degree() > cap_) return;
  if (vec_is_zero(c)) {
    terms_.erase(I);
  } else {
    terms_[I] = std::move(c);
  }
}

Vec Jet::value_at_origin() const {
  return coefficient(MultiIndex::zero(nvars_));
}

Jet Jet::with_cap(unsigned new_cap) const {
  Jet j(nvars_, new_cap, dim_);
  for (const auto& [I, c] : terms_) {
    if (I.degree() <= new_cap) j.terms_.emplace(I, c);
  }
  return j;
}

Jet Jet::component(std::size_t c) const {
  if (c >= dim_) throw std::invalid_argument("Jet::component: index out of range");
  Jet j(nvars_, cap_, 1);
  for (const auto& [I, v] : terms_) {
    if (v[c] != 0) j.terms_.emplace(I, Vec{v[c]});
  }
  return j;
}

namespace {

void require_same_shape(const Jet& a, const Jet& b, const char* who) {
  if (a.nvars() != b.nvars() || a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(who) + ": shape mismatch");
  }
}

} // namespace

Jet operator+(const Jet& a, const Jet& b) {
  require_same_shape(a, b, "jet add");
  Jet r(a.nvars(), std::min(a.cap(), b.cap()), a.dim());
  for (const auto& [I, c] : a.terms()) r.add_term(I, c);
  for (const auto& [I, c] : b.terms()) r.add_term(I, c);
  return r;
}

Jet operator-(const Jet& a) {
  return scale(Rational(-1), a);
}

Jet operator-(const Jet& a, const Jet& b) {
  return a + (-b);
}

Jet scale(const Rational& c, const Jet& a) {
  Jet r(a.nvars(), a.cap(), a.dim());
  if (c == 0) return r;
  for (const auto& [I, v] : a.terms()) r.set_term(I, vec_scale(c, v));
  return r;
}

Jet multiply(const Jet& a, const Jet& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("jet multiply: variable count mismatch");
  if (a.dim() != 1 && b.dim() != 1) {
    throw std::invalid_argument("jet multiply: undefined product of two vector-valued jets");
  }
  const Jet& s = a.dim() == 1 ? a : b; // scalar factor
  const Jet& v = a.dim() == 1 ? b : a;
  Jet r(a.nvars(), std::min(a.cap(), b.cap()), v.dim());
  for (const auto& [I, sc] : s.terms()) {
    for (const auto& [J, vc] : v.terms()) {
      if (I.degree() + J.degree() > r.cap()) continue;
      r.add_term(I + J, vec_scale(sc[0], vc));
    }
  }
  return r;
}

Jet substitute(const Jet& f, const std::vector<Jet>& args) {
  if (args.size() != f.nvars()) {
    throw std::invalid_argument("substitute: argument count differs from variable count");
  }
  unsigned cap = f.cap();
  std::size_t out_nvars = 0;
  if (!args.empty()) {
    out_nvars = args[0].nvars();
    for (const auto& g : args) {
      if (!g.is_scalar()) throw std::invalid_argument("substitute: arguments must be scalar jets");
      if (g.nvars() != out_nvars) {
        throw std::invalid_argument("substitute: arguments live in different variable spaces");
      }
      if (!vec_is_zero(g.value_at_origin())) {
        throw std::invalid_argument("substitute: substitution not filtration-preserving");
      }
      cap = std::min(cap, g.cap());
    }
  }

  // Powers of each argument, grown on demand. g^0 = 1.
  std::vector<std::vector<Jet>> powers(args.size());
  const Jet one = Jet::scalar_constant(out_nvars, cap, Rational(1));
  for (std::size_t j = 0; j < args.size(); ++j) powers[j].push_back(one);
  auto power = [&](std::size_t j, unsigned e) -> const Jet& {
    auto& ps = powers[j];
    while (ps.size() <= e) ps.push_back(multiply(ps.back(), args[j].with_cap(cap)));
    return ps[e];
  };

  Jet result(out_nvars, cap, f.dim());
  for (const auto& [I, c] : f.terms()) {
    Jet prod = one;
    bool dead = false;
    for (std::size_t j = 0; j < args.size() && !dead; ++j) {
      if (I[j] == 0) continue;
      prod = multiply(prod, power(j, I[j]));
      dead = prod.is_zero();
    }
    if (dead) continue;
    // prod is scalar; scatter c * prod into the result
    for (const auto& [J, pc] : prod.terms()) {
      result.add_term(J, vec_scale(pc[0], c));
    }
  }
  return result;
}

Jet partial_derivative(const Jet& f, std::size_t i) {
  if (i >= f.nvars()) throw std::invalid_argument("partial_derivative: index out of range");
  Jet r(f.nvars(), f.cap(), f.dim());
  for (const auto& [I, c] : f.terms()) {
    if (I[i] == 0) continue;
    r.add_term(I.minus(i), vec_scale(Rational(I[i]), c));
  }
  return r;
}

Jet rename_vars(const Jet& f, const std::vector<std::size_t>& target, std::size_t new_nvars) {
  if (target.size() != f.nvars()) throw std::invalid_argument("rename_vars: mapping length mismatch");
  std::set<std::size_t> seen;
  for (std::size_t t : target) {
    if (t >= new_nvars) throw std::invalid_argument("rename_vars: target out of range");
    if (!seen.insert(t).second) throw std::invalid_argument("rename_vars: mapping not injective");
  }
  Jet r(new_nvars, f.cap(), f.dim());
  for (const auto& [I, c] : f.terms()) {
    std::vector<unsigned> e(new_nvars, 0);
    for (std::size_t v = 0; v < f.nvars(); ++v) e[target[v]] = I[v];
    r.set_term(MultiIndex(std::move(e)), c);
  }
  return r;
}

bool operator==(const Jet& a, const Jet& b) {
  if (a.nvars() != b.nvars() || a.dim() != b.dim()) return false;
  const unsigned cap = std::min(a.cap(), b.cap());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (true) {
    while (ia != a.terms().end() && ia->first.degree() > cap) ++ia;
    while (ib != b.terms().end() && ib->first.degree() > cap) ++ib;
    if (ia == a.terms().end() || ib == b.terms().end()) break;
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
  while (ia != a.terms().end() && ia->first.degree() > cap) ++ia;
  while (ib != b.terms().end() && ib->first.degree() > cap) ++ib;
  return ia == a.terms().end() && ib == b.terms().end();
}

Rational eps_norm(const Jet& f, const Multiradius& eps, const Prime& p) {
  if (eps.size() != f.nvars()) throw std::invalid_argument("eps_norm: multiradius length mismatch");
  Rational m(0);
  for (const auto& [I, c] : f.terms()) {
    Rational term = vec_max_abs(c, p) * multiradius_power(eps, I);
    if (term > m) m = term;
  }
  return m;
}

Jet from_components(const std::vector<Jet>& comps) {
  if (comps.empty()) throw std::invalid_argument("from_components: empty list");
  const std::size_t n = comps[0].nvars();
  unsigned cap = comps[0].cap();
  for (const auto& c : comps) {
    if (!c.is_scalar()) throw std::invalid_argument("from_components: components must be scalar");
    if (c.nvars() != n) throw std::invalid_argument("from_components: variable count mismatch");
    cap = std::min(cap, c.cap());
  }
  Jet r(n, cap, comps.size());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (const auto& [I, v] : comps[k].terms()) {
      Vec c(comps.size(), Rational(0));
      c[k] = v[0];
      r.add_term(I, c);
    }
  }
  return r;
}

std::string to_string(const Jet& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [I, c] : f.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out << ",";
      out << to_string(c[k]);
    }
    out << ")";
    for (std::size_t v = 0; v < I.size(); ++v) {
      if (I[v] == 0) continue;
      out << "*x" << v;
      if (I[v] > 1) out << "^" << I[v];
    }
  }
  return out.str();
}

} // namespace padicoh
