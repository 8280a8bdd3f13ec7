#include "padicoh/form.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace padicoh {

std::vector<IndexTuple> increasing_tuples(std::size_t n, unsigned q) {
  std::vector<IndexTuple> out;
  if (q > n) return out;
  IndexTuple cur(q);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t next) -> void {
    if (pos == q) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = next; k + (q - pos - 1) < n; ++k) {
      cur[pos] = k;
      self(self, pos + 1, k + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

int sort_with_sign(std::vector<std::size_t>& indices) {
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && indices[j - 1] > indices[j]) {
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i - 1] == indices[i]) return 0;
  }
  return sign;
}

AlternatingTensor::AlternatingTensor(std::size_t n, unsigned q, std::size_t dim)
    : n_(n), q_(q), dim_(dim) {
  if (dim == 0) throw std::invalid_argument("AlternatingTensor: dim must be >= 1");
}

Vec AlternatingTensor::component(const IndexTuple& K) const {
  auto it = comps_.find(K);
  if (it == comps_.end()) return Vec(dim_, Rational(0));
  return it->second;
}

namespace {

void check_tuple(const IndexTuple& K, std::size_t n, unsigned q, const char* who) {
  if (K.size() != q) throw std::invalid_argument(std::string(who) + ": tuple length mismatch");
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (K[i] >= n) throw std::invalid_argument(std::string(who) + ": index out of range");
    if (i > 0 && K[i - 1] >= K[i]) {
      throw std::invalid_argument(std::string(who) + ": tuple not strictly increasing");
    }
  }
}

} // namespace

void AlternatingTensor::add_component(const IndexTuple& K, const Vec& v) {
  check_tuple(K, n_, q_, "AlternatingTensor");
  if (v.size() != dim_) throw std::invalid_argument("AlternatingTensor: dimension mismatch");
  auto it = comps_.find(K);
  if (it == comps_.end()) {
    if (!vec_is_zero(v)) comps_.emplace(K, v);
    return;
  }
  it->second = vec_add(it->second, v);
  if (vec_is_zero(it->second)) comps_.erase(it);
}

void AlternatingTensor::set_component(const IndexTuple& K, Vec v) {
  check_tuple(K, n_, q_, "AlternatingTensor");
  if (v.size() != dim_) throw std::invalid_argument("AlternatingTensor: dimension mismatch");
  if (vec_is_zero(v)) {
    comps_.erase(K);
  } else {
    comps_[K] = std::move(v);
  }
}

Vec AlternatingTensor::evaluate(std::span<const std::size_t> indices) const {
  if (indices.size() != q_) throw std::invalid_argument("AlternatingTensor: arity mismatch");
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return Vec(dim_, Rational(0));
  Vec v = component(sorted);
  return sign == 1 ? v : vec_scale(Rational(-1), v);
}

AlternatingTensor operator+(const AlternatingTensor& a, const AlternatingTensor& b) {
  if (a.n() != b.n() || a.q() != b.q() || a.dim() != b.dim()) {
    throw std::invalid_argument("AlternatingTensor add: shape mismatch");
  }
  AlternatingTensor r = a;
  for (const auto& [K, v] : b.components()) r.add_component(K, v);
  return r;
}

AlternatingTensor operator-(const AlternatingTensor& a, const AlternatingTensor& b) {
  return a + scale(Rational(-1), b);
}

AlternatingTensor scale(const Rational& c, const AlternatingTensor& a) {
  AlternatingTensor r(a.n(), a.q(), a.dim());
  if (c == 0) return r;
  for (const auto& [K, v] : a.components()) r.set_component(K, vec_scale(c, v));
  return r;
}

BlockStructure::BlockStructure(std::size_t nvars, std::vector<std::vector<std::size_t>> blocks,
                               std::vector<std::string> names)
    : nvars_(nvars), blocks_(std::move(blocks)), names_(std::move(names)) {
  std::set<std::size_t> seen;
  for (const auto& blk : blocks_) {
    for (std::size_t v : blk) {
      if (v >= nvars_) throw std::invalid_argument("BlockStructure: variable out of range");
      if (!seen.insert(v).second) throw std::invalid_argument("BlockStructure: blocks overlap");
    }
  }
  if (seen.size() != nvars_) throw std::invalid_argument("BlockStructure: blocks must cover all variables");
  if (names_.empty()) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) names_.push_back("g" + std::to_string(i));
  }
  if (names_.size() != blocks_.size()) {
    throw std::invalid_argument("BlockStructure: name count mismatch");
  }
}

BlockStructure BlockStructure::uniform(std::size_t count, std::size_t block_size) {
  std::vector<std::vector<std::size_t>> blocks(count);
  for (std::size_t b = 0; b < count; ++b) {
    for (std::size_t j = 0; j < block_size; ++j) blocks[b].push_back(b * block_size + j);
  }
  return BlockStructure(count * block_size, std::move(blocks));
}

const std::vector<std::size_t>& BlockStructure::block(std::size_t i) const {
  if (i >= blocks_.size()) throw std::invalid_argument("BlockStructure: unknown block");
  return blocks_[i];
}

std::size_t BlockStructure::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw std::invalid_argument("BlockStructure: unknown block '" + name + "'");
}

Form::Form(std::size_t nvars, unsigned q, unsigned cap, std::size_t dim)
    : nvars_(nvars), q_(q), cap_(cap), dim_(dim) {
  if (dim == 0) throw std::invalid_argument("Form: dim must be >= 1");
}

Form Form::from_jet(const Jet& f) {
  Form w(f.nvars(), 0, f.cap(), f.dim());
  w.add_component({}, f);
  return w;
}

Form Form::basis(std::size_t nvars, unsigned cap, const IndexTuple& K) {
  Form w(nvars, static_cast<unsigned>(K.size()), cap, 1);
  w.add_component(K, Jet::scalar_constant(nvars, cap, Rational(1)));
  return w;
}

const Jet* Form::component(const IndexTuple& K) const {
  auto it = comps_.find(K);
  return it == comps_.end() ? nullptr : &it->second;
}

void Form::add_component(const IndexTuple& K, const Jet& a) {
  check_tuple(K, nvars_, q_, "Form");
  if (a.nvars() != nvars_ || a.dim() != dim_) {
    throw std::invalid_argument("Form: component jet shape mismatch");
  }
  auto it = comps_.find(K);
  if (it == comps_.end()) {
    Jet t = a.with_cap(std::min(cap_, a.cap()));
    if (!t.is_zero()) comps_.emplace(K, t.with_cap(cap_));
    return;
  }
  Jet sum = (it->second + a).with_cap(cap_);
  if (sum.is_zero()) {
    comps_.erase(it);
  } else {
    it->second = std::move(sum);
  }
}

Jet Form::as_jet() const {
  if (q_ != 0) throw std::invalid_argument("Form::as_jet: not a 0-form");
  auto it = comps_.find(IndexTuple{});
  if (it != comps_.end()) return it->second;
  return Jet(nvars_, cap_, dim_);
}

Form Form::with_cap(unsigned new_cap) const {
  Form w(nvars_, q_, new_cap, dim_);
  for (const auto& [K, a] : comps_) w.add_component(K, a.with_cap(new_cap));
  return w;
}

Form operator+(const Form& a, const Form& b) {
  if (a.nvars() != b.nvars() || a.q() != b.q() || a.dim() != b.dim()) {
    throw std::invalid_argument("form add: shape mismatch");
  }
  Form r(a.nvars(), a.q(), std::min(a.cap(), b.cap()), a.dim());
  for (const auto& [K, j] : a.components()) r.add_component(K, j);
  for (const auto& [K, j] : b.components()) r.add_component(K, j);
  return r;
}

Form operator-(const Form& a) { return scale(Rational(-1), a); }

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form scale(const Rational& c, const Form& a) {
  Form r(a.nvars(), a.q(), a.cap(), a.dim());
  if (c == 0) return r;
  for (const auto& [K, j] : a.components()) r.add_component(K, scale(c, j));
  return r;
}

bool operator==(const Form& a, const Form& b) {
  if (a.nvars() != b.nvars() || a.q() != b.q() || a.dim() != b.dim()) return false;
  const unsigned cap = std::min(a.cap(), b.cap());
  Form d = a.with_cap(cap) - b.with_cap(cap);
  return d.is_zero();
}

namespace {

// sign of inserting k in front of the increasing tuple K; 0 if k already present
int insert_sign(std::size_t k, const IndexTuple& K, IndexTuple& merged) {
  merged.clear();
  merged.reserve(K.size() + 1);
  int sign = 1;
  bool placed = false;
  for (std::size_t t : K) {
    if (!placed) {
      if (t == k) return 0;
      if (t > k) {
        merged.push_back(k);
        placed = true;
      } else {
        sign = -sign;
      }
    }
    merged.push_back(t);
  }
  if (!placed) merged.push_back(k);
  return sign;
}

Form derivative_over(const Form& w, const std::vector<std::size_t>& vars) {
  if (w.q() >= w.nvars()) {
    throw std::invalid_argument("exterior_derivative: degree overflow");
  }
  Form r(w.nvars(), w.q() + 1, w.cap(), w.dim());
  IndexTuple merged;
  for (const auto& [K, a] : w.components()) {
    for (std::size_t k : vars) {
      const int sign = insert_sign(k, K, merged);
      if (sign == 0) continue;
      Jet da = partial_derivative(a, k);
      if (da.is_zero()) continue;
      r.add_component(merged, sign == 1 ? da : -da);
    }
  }
  return r;
}

} // namespace

Form exterior_derivative(const Form& w) {
  std::vector<std::size_t> all(w.nvars());
  for (std::size_t k = 0; k < w.nvars(); ++k) all[k] = k;
  return derivative_over(w, all);
}

Form partial_exterior_derivative(const Form& w, const BlockStructure& blocks, std::size_t block) {
  if (blocks.nvars() != w.nvars()) {
    throw std::invalid_argument("partial_exterior_derivative: block structure mismatch");
  }
  return derivative_over(w, blocks.block(block));
}

Form partial_exterior_derivative(const Form& w, const BlockStructure& blocks,
                                 const std::string& name) {
  return partial_exterior_derivative(w, blocks, blocks.find(name));
}

Form wedge(const Form& a, const Form& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("wedge: variable count mismatch");
  if (a.dim() != 1 && b.dim() != 1) {
    throw std::invalid_argument("wedge: both factors vector-valued");
  }
  const unsigned q = a.q() + b.q();
  if (q > a.nvars()) {
    // every component pair shares an index; the product is the zero form
    return Form(a.nvars(), std::min<unsigned>(q, static_cast<unsigned>(a.nvars())), std::min(a.cap(), b.cap()),
                a.dim() == 1 ? b.dim() : a.dim());
  }
  Form r(a.nvars(), q, std::min(a.cap(), b.cap()), a.dim() == 1 ? b.dim() : a.dim());
  for (const auto& [K, aj] : a.components()) {
    for (const auto& [L, bj] : b.components()) {
      std::vector<std::size_t> merged;
      merged.reserve(K.size() + L.size());
      merged.insert(merged.end(), K.begin(), K.end());
      merged.insert(merged.end(), L.begin(), L.end());
      const int sign = sort_with_sign(merged);
      if (sign == 0) continue;
      Jet prod = multiply(aj, bj);
      if (prod.is_zero()) continue;
      r.add_component(merged, sign == 1 ? prod : -prod);
    }
  }
  return r;
}

Form pullback(const Form& w, const std::vector<Jet>& phi) {
  if (phi.size() != w.nvars()) {
    throw std::invalid_argument("pullback: map component count differs from variable count");
  }
  std::size_t target_nvars = phi.empty() ? 0 : phi[0].nvars();
  unsigned cap = w.cap();
  for (const auto& g : phi) {
    if (!g.is_scalar()) throw std::invalid_argument("pullback: map components must be scalar jets");
    if (g.nvars() != target_nvars) throw std::invalid_argument("pullback: map components shape mismatch");
    cap = std::min(cap, g.cap());
  }

  Form r(target_nvars, w.q(), cap, w.dim());
  if (w.q() > target_nvars) return r; // more wedge factors than variables: zero

  // d(phi_t) as 1-forms in the target space, computed once per used variable
  std::map<std::size_t, Form> dphi;
  auto dphi_of = [&](std::size_t t) -> const Form& {
    auto it = dphi.find(t);
    if (it == dphi.end()) {
      Form one(target_nvars, 1, cap, 1);
      for (std::size_t j = 0; j < target_nvars; ++j) {
        Jet dj = partial_derivative(phi[t], j);
        if (!dj.is_zero()) one.add_component({j}, dj);
      }
      it = dphi.emplace(t, std::move(one)).first;
    }
    return it->second;
  };

  for (const auto& [K, a] : w.components()) {
    Jet coeff = substitute(a, phi);
    Form term = Form::from_jet(coeff);
    for (std::size_t t : K) {
      term = wedge(term, dphi_of(t));
      if (term.is_zero()) break;
    }
    if (term.is_zero()) continue;
    r = r + term;
  }
  return r;
}

AlternatingTensor evaluate_at_origin(const Form& w) {
  AlternatingTensor t(w.nvars(), w.q(), w.dim());
  for (const auto& [K, a] : w.components()) {
    t.add_component(K, a.value_at_origin());
  }
  return t;
}

Vec apply_rows(const std::vector<Vec>& rows, const Vec& v) {
  Vec out(rows.size(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != v.size()) throw std::invalid_argument("apply_rows: dimension mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += rows[i][j] * v[j];
  }
  return out;
}

Form apply_coefficient_map(const std::vector<Vec>& rows, const Form& w) {
  if (rows.empty()) throw std::invalid_argument("apply_coefficient_map: empty matrix");
  Form r(w.nvars(), w.q(), w.cap(), rows.size());
  for (const auto& [K, a] : w.components()) {
    Jet b(w.nvars(), a.cap(), rows.size());
    for (const auto& [I, c] : a.terms()) b.add_term(I, apply_rows(rows, c));
    if (!b.is_zero()) r.add_component(K, b);
  }
  return r;
}

AlternatingTensor apply_coefficient_map(const std::vector<Vec>& rows, const AlternatingTensor& t) {
  if (rows.empty()) throw std::invalid_argument("apply_coefficient_map: empty matrix");
  AlternatingTensor r(t.n(), t.q(), rows.size());
  for (const auto& [K, v] : t.components()) r.add_component(K, apply_rows(rows, v));
  return r;
}

Rational eps_norm(const Form& w, const Multiradius& eps, const Prime& p) {
  Rational m(0);
  for (const auto& [K, a] : w.components()) {
    Rational t = eps_norm(a, eps, p);
    if (t > m) m = t;
  }
  return m;
}

std::string to_string(const Form& w) {
  if (w.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [K, a] : w.components()) {
    if (!first) out << " + ";
    first = false;
    out << "[" << to_string(a) << "]";
    for (std::size_t t : K) out << " dx" << t;
  }
  return out.str();
}

} // namespace padicoh
