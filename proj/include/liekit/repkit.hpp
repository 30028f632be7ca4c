#pragma once

// Finite-dimensional representations of matrix Lie algebras and the usual
// functors on them.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liekit/exactlin.hpp"
#include "liekit/liealg.hpp"
#include "liekit/weights.hpp"

namespace liekit {

/// One action matrix per basis element of the algebra.
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr g, std::vector<Matrix> action, Field field, std::string name = {})
      : g_(std::move(g)), action_(std::move(action)), field_(field), name_(std::move(name)) {
    if (!g_) throw std::invalid_argument("Representation: null algebra");
    if (action_.size() != g_->dim()) throw std::invalid_argument("Representation: one action matrix per basis element");
    dim_ = action_.empty() ? 0 : action_.front().rows();
    for (auto& a : action_) {
      if (!a.square() || a.rows() != dim_) throw std::invalid_argument("Representation: action matrices must be d x d");
      a.retag(field_);
    }
  }

  const AlgebraPtr& algebra() const { return g_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_.at(i); }
  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const std::string& name() const { return name_; }
  Representation& rename(std::string n) {
    name_ = std::move(n);
    return *this;
  }

  /// Action of sum_k c_k X_k (complex coefficients require a complex module).
  Matrix act(const Vector& coords) const {
    Matrix m(dim_, dim_, field_);
    for (std::size_t k = 0; k < coords.size(); ++k) m.add_scaled(coords[k], action_[k]);
    return m;
  }

 private:
  AlgebraPtr g_;
  std::vector<Matrix> action_;
  Field field_ = Field::real;
  std::string name_;
  std::size_t dim_ = 0;
};

/// First basis pair (i, j) with rho([X_i, X_j]) != [rho(X_i), rho(X_j)].
inline std::optional<std::string> bracket_defect(const Representation& r) {
  const auto& g = *r.algebra();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Matrix lhs(r.dim(), r.dim(), r.field());
      for (const auto& t : g.structure_constants(i, j)) lhs.add_scaled(t.coeff, r.action(t.index));
      if (lhs != commutator(r.action(i), r.action(j)))
        return r.name() + ": action does not respect [X" + std::to_string(i) + ", X" + std::to_string(j) + "]";
    }
  return std::nullopt;
}

inline Field basis_field(const MatrixLieAlgebra& g) {
  for (const auto& b : g.basis())
    if (b.entries_field() == Field::complex) return Field::complex;
  return g.field();
}

/// The algebra acting on its ambient space by matrix multiplication.
inline Representation defining_rep(const AlgebraPtr& g) {
  return Representation(g, g->basis(), basis_field(*g), g->name() + " on K^" + std::to_string(g->ambient()));
}

/// su(p,q) (or u(p,q)) on C^n.
inline Representation defining_rep(int p, int q, bool traceless = true) {
  return defining_rep(unitary_algebra(p, q, traceless));
}

inline Representation trivial_rep(const AlgebraPtr& g, std::size_t dim = 1, Field field = Field::real) {
  std::vector<Matrix> action(g->dim(), Matrix(dim, dim, field));
  return Representation(g, std::move(action), field, "trivial");
}

/// X -> -X^T
inline Representation dual_rep(const Representation& r) {
  std::vector<Matrix> action;
  for (const auto& a : r.action()) action.push_back(-a.transpose());
  return Representation(r.algebra(), std::move(action), r.field(), "dual(" + r.name() + ")");
}

/// Entrywise complex conjugate of a complex module.
inline Representation conjugate_rep(const Representation& r) {
  if (r.field() != Field::complex) throw std::invalid_argument("conjugate_rep: module is not complex");
  std::vector<Matrix> action;
  for (const auto& a : r.action()) action.push_back(a.conj());
  return Representation(r.algebra(), std::move(action), r.field(), "conj(" + r.name() + ")");
}

namespace detail {
/// k-subsets of {0..d-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < d; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}
}  // namespace detail

/// k-th exterior power on the basis e_I, I a k-subset in lexicographic order.
inline Representation wedge_rep(const Representation& r, std::size_t k) {
  const std::size_t d = r.dim();
  if (k < 1 || k > d) throw std::invalid_argument("wedge_rep: need 1 <= k <= dim");
  const auto sets = detail::subsets(d, k);
  auto index_of = [&](const std::vector<std::size_t>& s) -> std::size_t {
    return static_cast<std::size_t>(std::lower_bound(sets.begin(), sets.end(), s) - sets.begin());
  };
  std::vector<Matrix> action;
  for (const auto& a : r.action()) {
    Matrix w(sets.size(), sets.size(), r.field());
    for (std::size_t col = 0; col < sets.size(); ++col) {
      const auto& s = sets[col];
      for (std::size_t pos = 0; pos < k; ++pos) {
        // replace e_{s[pos]} by A e_{s[pos]} = sum_m A(m, s[pos]) e_m
        for (std::size_t m = 0; m < d; ++m) {
          const Scalar& c = a(m, s[pos]);
          if (c.is_zero()) continue;
          if (m != s[pos] && std::find(s.begin(), s.end(), m) != s.end()) continue;
          std::vector<std::size_t> t = s;
          t[pos] = m;
          // sort with sign
          int sign = 1;
          for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = x + 1; y < k; ++y)
              if (t[x] > t[y]) {
                std::swap(t[x], t[y]);
                sign = -sign;
              }
          w(index_of(t), col).add_mul(Scalar(sign), c);
        }
      }
    }
    action.push_back(std::move(w));
  }
  return Representation(r.algebra(), std::move(action), r.field(),
                        "wedge" + std::to_string(k) + "(" + r.name() + ")");
}

inline Representation wedge2_rep(const Representation& r) {
  if (r.dim() < 2) throw std::invalid_argument("wedge2_rep: module dimension must be at least 2");
  return wedge_rep(r, 2);
}

/// Leibniz action on the basis e_a (x) f_b, index a * dim(s) + b.
inline Representation tensor_rep(const Representation& r, const Representation& s) {
  if (r.algebra().get() != s.algebra().get() && r.algebra()->name() != s.algebra()->name())
    throw std::invalid_argument("tensor_rep: modules over different algebras");
  if (r.field() != s.field()) throw std::invalid_argument("tensor_rep: modules over different fields");
  const std::size_t dr = r.dim(), ds = s.dim();
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < r.action().size(); ++k) {
    const Matrix& a = r.action(k);
    const Matrix& b = s.action(k);
    Matrix t(dr * ds, dr * ds, r.field());
    for (std::size_t i = 0; i < dr; ++i)
      for (std::size_t j = 0; j < dr; ++j) {
        const Scalar& c = a(i, j);
        if (c.is_zero()) continue;
        for (std::size_t x = 0; x < ds; ++x) t(i * ds + x, j * ds + x) += c;
      }
    for (std::size_t i = 0; i < dr; ++i)
      for (std::size_t x = 0; x < ds; ++x)
        for (std::size_t y = 0; y < ds; ++y) {
          const Scalar& c = b(x, y);
          if (!c.is_zero()) t(i * ds + x, i * ds + y) += c;
        }
    action.push_back(std::move(t));
  }
  return Representation(r.algebra(), std::move(action), r.field(), r.name() + " (x) " + s.name());
}

/// Block-diagonal action on r + s.
inline Representation direct_sum_rep(const Representation& r, const Representation& s) {
  if (r.algebra().get() != s.algebra().get() && r.algebra()->name() != s.algebra()->name())
    throw std::invalid_argument("direct_sum_rep: modules over different algebras");
  if (r.field() != s.field()) throw std::invalid_argument("direct_sum_rep: modules over different fields");
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < r.action().size(); ++k) {
    Matrix t(r.dim() + s.dim(), r.dim() + s.dim(), r.field());
    t.set_block(0, 0, r.action(k));
    t.set_block(r.dim(), r.dim(), s.action(k));
    action.push_back(std::move(t));
  }
  return Representation(r.algebra(), std::move(action), r.field(), r.name() + " + " + s.name());
}

/// ad, from the structure constants.
inline Representation adjoint_rep(const AlgebraPtr& g) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g->dim(); ++i) action.push_back(g->ad(i));
  return Representation(g, std::move(action), g->field(), "ad " + g->name());
}

/// Complex module viewed as real; coordinates x_1..x_d, y_1..y_d.
inline Representation realify(const Representation& r) {
  if (r.field() != Field::complex) throw std::invalid_argument("realify: module is already real");
  std::vector<Matrix> action;
  for (const auto& a : r.action()) action.push_back(realify_matrix(a));
  return Representation(r.algebra(), std::move(action), Field::real, "(" + r.name() + ")_R");
}

/// Scalar extension: same matrices, complex field.
inline Representation complexify(const Representation& r) {
  if (r.field() != Field::real) throw std::invalid_argument("complexify: module is already complex");
  return Representation(r.algebra(), r.action(), Field::complex, "(" + r.name() + ")_C");
}

/// Pull back a module of e.target to e.source.
inline Representation restrict(const Representation& r, const Embedding& e) {
  if (r.algebra().get() != e.target.get() && r.algebra()->name() != e.target->name())
    throw std::invalid_argument("restrict: module is not over the embedding's target");
  std::vector<Matrix> action;
  for (const auto& c : e.coords) action.push_back(r.act(c));
  return Representation(e.source, std::move(action), r.field(), r.name() + " | " + e.source->name());
}

/// An invariant subspace with its basis (columns in the ambient module) and restricted action.
struct Submodule {
  Representation rep;
  std::vector<Vector> basis;
};

/// Restriction of r to the span of `spanning`; throws if the span is not invariant.
inline Submodule restrict_to_subspace(const Representation& r, const std::vector<Vector>& spanning) {
  Subspace s(r.dim());
  for (const auto& v : spanning) s.insert(v);
  if (s.dim() == 0) throw std::invalid_argument("restrict_to_subspace: zero subspace");
  std::vector<Matrix> action;
  for (const auto& a : r.action()) {
    Matrix m(s.dim(), s.dim(), r.field());
    for (std::size_t j = 0; j < s.dim(); ++j) {
      auto c = s.coordinates(a * s.basis()[j]);
      if (!c) throw std::invalid_argument("restrict_to_subspace: subspace is not invariant");
      for (std::size_t i = 0; i < s.dim(); ++i) m(i, j) = (*c)[i];
    }
    action.push_back(std::move(m));
  }
  return {Representation(r.algebra(), std::move(action), r.field(), "sub(" + r.name() + ")"), s.basis()};
}

/// Smallest invariant subspace containing every seed.
inline Submodule generated_submodule(const Representation& r, const std::vector<Vector>& seeds) {
  Subspace s(r.dim());
  std::deque<Vector> queue;
  for (const auto& v : seeds) {
    if (v.size() != r.dim()) throw std::invalid_argument("generated_submodule: wrong vector length");
    if (s.insert(v)) queue.push_back(v);
  }
  if (s.dim() == 0) throw std::invalid_argument("generated_submodule: seed vector is zero");
  while (!queue.empty()) {
    const Vector w = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : r.action()) {
      Vector aw = a * w;
      if (s.insert(aw)) queue.push_back(std::move(aw));
    }
  }
  return restrict_to_subspace(r, s.basis());
}

inline Submodule generated_submodule(const Representation& r, const Vector& v) {
  return generated_submodule(r, std::vector<Vector>{v});
}

/// Largest ambient dimension highest_weight_module will build.
inline constexpr std::size_t kMaxCartanProductDim = 4096;

/// W^lambda inside (x)_i (wedge^i V)^{(x) k_i}, V the defining module of an
/// algebra of n x n complex matrices; generated by the product of the vectors
/// e_1 ^ ... ^ e_i.
inline Submodule highest_weight_module(const Representation& defining, const DominantWeight& lambda) {
  if (defining.field() != Field::complex) throw std::invalid_argument("highest_weight_module: need a complex module");
  if (static_cast<std::size_t>(lambda.n) != defining.dim())
    throw std::invalid_argument("highest_weight_module: rank does not match the defining module");
  if (lambda.is_zero()) return restrict_to_subspace(trivial_rep(defining.algebra(), 1, Field::complex), {Vector{Scalar(1)}});
  std::optional<Representation> acc;
  std::size_t ambient = 1;
  for (std::size_t i = 0; i < lambda.coeffs.size(); ++i) {
    if (lambda.coeffs[i] == 0) continue;
    const Representation w = wedge_rep(defining, i + 1);
    for (int c = 0; c < lambda.coeffs[i]; ++c) {
      ambient *= w.dim();
      if (ambient > kMaxCartanProductDim)
        throw std::invalid_argument("highest_weight_module: ambient tensor product too large for " + lambda.str());
      acc = acc ? tensor_rep(*acc, w) : w;
    }
  }
  // e_1 ^ ... ^ e_i is basis index 0 of every wedge factor, so the seed is index 0
  auto sub = generated_submodule(*acc, unit_vector(acc->dim(), 0));
  sub.rep.rename("W^" + lambda.str());
  return sub;
}

}  // namespace liekit
