#pragma once

// Matrix Lie algebras: u(p,q), su(p,q), so(J), sl(n,C), their embeddings and
// Killing forms.
//
// Basis orders are fixed and part of the public contract; structure
// constants, golden files and reports all depend on them.
//
//   u(p,q), su(p,q):  diagonal generators first (i E_jj, resp.
//                     i(E_jj - E_{j+1,j+1})), then for every pair j < k in
//                     row-major order the two off-diagonal generators
//                     eta_j E_jk - eta_k E_kj  and  i(eta_j E_jk + eta_k E_kj),
//                     where eta = I_{p,q}.
//   so(J):            J^{-1}(E_ab - E_ba) for a < b in row-major order.
//   sl(n,C):          E_jj - E_{j+1,j+1}, then E_jk for j != k in row-major order.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liekit/exactlin.hpp"
#include "liekit/matrix.hpp"

namespace liekit {

/// Which defining relation the basis elements satisfy.
enum class FormKind { none, unitary, orthogonal };

struct Term {
  std::size_t index;
  Scalar coeff;
};
using SparseVector = std::vector<Term>;

class MatrixLieAlgebra;
using AlgebraPtr = std::shared_ptr<const MatrixLieAlgebra>;

class MatrixLieAlgebra {
 public:
  /// Builds an algebra from explicit basis matrices. Throws if the family is
  /// dependent or not closed under the commutator.
  static AlgebraPtr from_basis(std::string name, std::vector<Matrix> basis, Field field,
                               std::optional<Matrix> gram = std::nullopt, FormKind kind = FormKind::none) {
    auto g = std::shared_ptr<MatrixLieAlgebra>(new MatrixLieAlgebra());
    g->name_ = std::move(name);
    g->field_ = field;
    g->gram_ = std::move(gram);
    g->kind_ = kind;
    if (basis.empty()) throw std::invalid_argument("MatrixLieAlgebra: empty basis");
    g->ambient_ = basis.front().rows();
    for (const auto& b : basis)
      if (!b.square() || b.rows() != g->ambient_)
        throw std::invalid_argument("MatrixLieAlgebra: basis matrices must be square of equal size");
    g->basis_ = std::move(basis);
    g->build_solvers();
    g->build_structure_constants();
    return g;
  }

  const std::string& name() const { return name_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  Field field() const { return field_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  const Matrix& basis(std::size_t i) const { return basis_.at(i); }
  const std::optional<Matrix>& gram() const { return gram_; }
  FormKind form_kind() const { return kind_; }

  /// c_ij^k with [X_i, X_j] = sum_k c_ij^k X_k.
  const SparseVector& structure_constants(std::size_t i, std::size_t j) const { return constants_[i * dim() + j]; }

  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& t : structure_constants(i, j))
      if (t.index == k) return t.coeff;
    return {};
  }

  /// Bracket of two elements given in basis coordinates, via structure constants.
  Vector bracket(const Vector& x, const Vector& y) const {
    Vector z(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        const Scalar xy = x[i] * y[j];
        for (const auto& t : structure_constants(i, j)) z[t.index].add_mul(xy, t.coeff);
      }
    }
    return z;
  }

  Matrix element(const Vector& coords) const {
    Matrix m(ambient_, ambient_, basis_.front().field());
    for (std::size_t k = 0; k < dim(); ++k) m.add_scaled(coords[k], basis_[k]);
    return m;
  }

  /// Coordinates over the algebra's own field, if m lies in the algebra.
  std::optional<Vector> coordinates(const Matrix& m) const {
    if (m.rows() != ambient_ || m.cols() != ambient_) return std::nullopt;
    return own_solver_.solve(flatten(m, field_));
  }

  /// Coordinates over C (for real algebras: in the complexification).
  std::optional<Vector> complex_coordinates(const Matrix& m) const {
    if (!complex_solver_) throw std::logic_error(name_ + ": basis is dependent over C");
    if (m.rows() != ambient_ || m.cols() != ambient_) return std::nullopt;
    return complex_solver_->solve(flatten(m, Field::complex));
  }

  bool has_complex_coordinates() const { return complex_solver_.has_value(); }

  /// ad(X_i) as a dim x dim matrix: column j holds the coordinates of [X_i, X_j].
  Matrix ad(std::size_t i) const {
    Matrix a(dim(), dim(), field_);
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& t : structure_constants(i, j)) a(t.index, j) = t.coeff;
    return a;
  }

  /// Does X satisfy the defining relation with respect to the gram matrix?
  bool preserves_form(const Matrix& x) const {
    if (!gram_) return true;
    switch (kind_) {
      case FormKind::unitary:
        return (x.adjoint() * *gram_ + *gram_ * x).is_zero();
      case FormKind::orthogonal:
        return (x.transpose() * *gram_ + *gram_ * x).is_zero();
      case FormKind::none:
        break;
    }
    return true;
  }

  /// Copy with one structure constant shifted by delta; basis matrices unchanged.
  /// Exists for mutation testing of the verification layer.
  AlgebraPtr with_perturbed_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& delta) const {
    auto g = std::make_shared<MatrixLieAlgebra>(*this);
    auto& sv = g->constants_.at(i * dim() + j);
    bool found = false;
    for (auto& t : sv) {
      if (t.index == k) {
        t.coeff += delta;
        found = true;
      }
    }
    if (!found) sv.push_back({k, delta});
    return g;
  }

  MatrixLieAlgebra(const MatrixLieAlgebra&) = default;

 private:
  MatrixLieAlgebra() = default;

  static Vector flatten(const Matrix& m, Field f) {
    if (f == Field::complex) return m.data();
    const std::size_t n = m.data().size();
    Vector v(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      v[k] = Scalar(m.data()[k].re());
      v[n + k] = Scalar(m.data()[k].im());
    }
    return v;
  }

  void build_solvers() {
    std::vector<Vector> own, cplx;
    for (const auto& b : basis_) {
      own.push_back(flatten(b, field_));
      cplx.push_back(flatten(b, Field::complex));
    }
    const std::size_t n2 = ambient_ * ambient_;
    own_solver_ = CoordinateSolver(own, field_ == Field::real ? 2 * n2 : n2);
    try {
      complex_solver_ = CoordinateSolver(cplx, n2);
    } catch (const std::invalid_argument&) {
      complex_solver_.reset();
    }
  }

  void build_structure_constants() {
    const std::size_t d = dim();
    constants_.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        const auto c = coordinates(commutator(basis_[i], basis_[j]));
        if (!c)
          throw std::invalid_argument(name_ + ": basis not closed under bracket at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
        SparseVector pos, neg;
        for (std::size_t k = 0; k < d; ++k) {
          if ((*c)[k].is_zero()) continue;
          pos.push_back({k, (*c)[k]});
          neg.push_back({k, -(*c)[k]});
        }
        constants_[i * d + j] = std::move(pos);
        constants_[j * d + i] = std::move(neg);
      }
    }
  }

  std::string name_;
  std::size_t ambient_ = 0;
  Field field_ = Field::real;
  std::vector<Matrix> basis_;
  std::optional<Matrix> gram_;
  FormKind kind_ = FormKind::none;
  std::vector<SparseVector> constants_;
  CoordinateSolver own_solver_;
  std::optional<CoordinateSolver> complex_solver_;
};

// ---- consistency checks ----------------------------------------------------

/// First pair (i, j) whose structure constants disagree with the matrix
/// commutator, described as a witness string.
inline std::optional<std::string> structure_defect(const MatrixLieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Matrix expect(g.ambient(), g.ambient(), Field::complex);
      for (const auto& t : g.structure_constants(i, j)) expect.add_scaled(t.coeff, g.basis(t.index));
      if (expect != commutator(g.basis(i), g.basis(j)))
        return g.name() + ": structure constants of [X" + std::to_string(i) + ", X" + std::to_string(j) +
               "] disagree with the matrix commutator";
    }
  }
  return std::nullopt;
}

/// First basis triple violating the Jacobi identity in the structure constants.
inline std::optional<std::string> jacobi_defect(const MatrixLieAlgebra& g) {
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      for (std::size_t k = j; k < d; ++k) {
        Vector sum(d);
        auto acc = [&](std::size_t a, std::size_t b, std::size_t c) {
          // [X_a, [X_b, X_c]]
          for (const auto& t : g.structure_constants(b, c))
            for (const auto& u : g.structure_constants(a, t.index)) sum[u.index].add_mul(t.coeff, u.coeff);
        };
        acc(i, j, k);
        acc(j, k, i);
        acc(k, i, j);
        if (!is_zero(sum))
          return g.name() + ": Jacobi identity fails on (X" + std::to_string(i) + ", X" + std::to_string(j) + ", X" +
                 std::to_string(k) + ")";
      }
    }
  }
  return std::nullopt;
}

/// Killing form B_ij = tr(ad X_i ad X_j), from the structure constants.
inline Matrix killing_form(const MatrixLieAlgebra& g) {
  const std::size_t d = g.dim();
  // (ad X_i)_{kl} = c_il^k; keep the non-zero entries of each ad X_i
  struct Entry {
    std::size_t k, l;
    Scalar v;
  };
  std::vector<std::vector<Entry>> nz(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t l = 0; l < d; ++l)
      for (const auto& t : g.structure_constants(i, l)) nz[i].push_back({t.index, l, t.coeff});
  }
  Matrix b(d, d, g.field());
  for (std::size_t j = 0; j < d; ++j) {
    Matrix adj(d, d, g.field());
    for (const auto& e : nz[j]) adj(e.k, e.l) = e.v;
    for (std::size_t i = 0; i <= j; ++i) {
      Scalar s;
      for (const auto& e : nz[i]) {
        const Scalar& y = adj(e.l, e.k);
        if (!y.is_zero()) s.add_mul(e.v, y);
      }
      b(i, j) = s;
      b(j, i) = s;
    }
  }
  return b;
}

/// First basis triple where B([X,Y],Z) + B(Y,[X,Z]) != 0.
inline std::optional<std::string> killing_invariance_defect(const MatrixLieAlgebra& g, const Matrix& b) {
  const std::size_t d = g.dim();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        Scalar s;
        for (const auto& t : g.structure_constants(x, y)) s.add_mul(t.coeff, b(t.index, z));
        for (const auto& t : g.structure_constants(x, z)) s.add_mul(t.coeff, b(y, t.index));
        if (!s.is_zero())
          return g.name() + ": Killing form not ad-invariant on (X" + std::to_string(x) + ", X" + std::to_string(y) +
                 ", X" + std::to_string(z) + ")";
      }
  return std::nullopt;
}

/// Basis (in coordinates) of the centre {x : [x, X_j] = 0 for all j}.
inline std::vector<Vector> center(const MatrixLieAlgebra& g) {
  const std::size_t d = g.dim();
  Matrix m(d * d, d, g.field());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : g.structure_constants(i, j)) m(j * d + t.index, i) = t.coeff;
  return kernel(m);
}

// ---- constructors ----------------------------------------------------------

/// I_{p,q}: p entries +1 followed by q entries -1.
inline Matrix ipq(int p, int q) {
  std::vector<Scalar> d;
  for (int i = 0; i < p; ++i) d.emplace_back(1);
  for (int i = 0; i < q; ++i) d.emplace_back(-1);
  return Matrix::diagonal(d);
}

namespace detail {
inline AlgebraPtr unitary_from_signs(std::string name, const Matrix& eta, bool traceless) {
  const std::size_t n = eta.rows();
  std::vector<Matrix> basis;
  const Scalar i_unit = Scalar::i();
  if (traceless) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      Matrix h(n, n, Field::complex);
      h(j, j) = i_unit;
      h(j + 1, j + 1) = -i_unit;
      basis.push_back(std::move(h));
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix h(n, n, Field::complex);
      h(j, j) = i_unit;
      basis.push_back(std::move(h));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      Matrix a(n, n, Field::complex);
      a(j, k) = eta(j, j);
      a(k, j) = -eta(k, k);
      basis.push_back(std::move(a));
      Matrix b(n, n, Field::complex);
      b(j, k) = eta(j, j) * i_unit;
      b(k, j) = eta(k, k) * i_unit;
      basis.push_back(std::move(b));
    }
  }
  return MatrixLieAlgebra::from_basis(std::move(name), std::move(basis), Field::real, eta, FormKind::unitary);
}
}  // namespace detail

namespace detail {
/// Algebras are immutable once built, so the named constructors share them.
inline AlgebraPtr cached_algebra(const std::string& key, const std::function<AlgebraPtr()>& build) {
  static std::mutex mu;
  static std::map<std::string, AlgebraPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  AlgebraPtr g = build();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(g)).first->second;
}
}  // namespace detail

/// u(p,q) = {X : X* I_{p,q} + I_{p,q} X = 0}, or su(p,q) when traceless.
inline AlgebraPtr unitary_algebra(int p, int q, bool traceless) {
  if (p < 1 || q < 1) throw std::invalid_argument("unitary_algebra: p and q must be at least 1");
  const std::string name =
      std::string(traceless ? "su(" : "u(") + std::to_string(p) + "," + std::to_string(q) + ")";
  return detail::cached_algebra(name, [&] { return detail::unitary_from_signs(name, ipq(p, q), traceless); });
}

/// Compact u(n) / su(n); same basis conventions with I_{p,q} = Id.
inline AlgebraPtr compact_unitary_algebra(int n, bool traceless) {
  if (n < 1) throw std::invalid_argument("compact_unitary_algebra: n must be positive");
  const std::string name = std::string(traceless ? "su(" : "u(") + std::to_string(n) + ")";
  return detail::cached_algebra("compact " + name, [&] {
    return detail::unitary_from_signs(name, Matrix::identity(static_cast<std::size_t>(n)), traceless);
  });
}

/// so(J) = {X real : X^T J + J X = 0} for symmetric invertible real J.
inline AlgebraPtr orthogonal_algebra(const Matrix& j, std::string name = {}) {
  if (!j.square()) throw std::invalid_argument("orthogonal_algebra: J must be square");
  if (j.entries_field() != Field::real) throw std::invalid_argument("orthogonal_algebra: J must be real");
  if (!j.is_symmetric()) throw std::invalid_argument("orthogonal_algebra: J must be symmetric");
  const auto jinv = inverse(j);
  if (!jinv) throw std::invalid_argument("orthogonal_algebra: J must be invertible");
  const std::size_t m = j.rows();
  if (m < 2) throw std::invalid_argument("orthogonal_algebra: need at least a 2x2 form");
  if (name.empty()) name = "so(" + std::to_string(m) + ")";
  return detail::cached_algebra(name + " " + j.str(), [&] {
    std::vector<Matrix> basis;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        Matrix s(m, m);
        s(a, b) = Scalar(1);
        s(b, a) = Scalar(-1);
        basis.push_back(*jinv * s);
      }
    return MatrixLieAlgebra::from_basis(name, std::move(basis), Field::real, j, FormKind::orthogonal);
  });
}

/// diag(I_{p,q}, I_{p,q}): the real part of the pseudo-Hermitian form in x-then-y coordinates.
inline Matrix realified_gram(int p, int q) { return block_diag({ipq(p, q), ipq(p, q)}); }

/// Target of the x-then-y realification: so(2p,2q) for diag(I_{p,q}, I_{p,q}).
inline AlgebraPtr so_realified(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("so_realified: p and q must be at least 1");
  return orthogonal_algebra(realified_gram(p, q), "so(" + std::to_string(2 * p) + "," + std::to_string(2 * q) + ")");
}

/// so(2p,2q+1) for diag(I_{p,q}, I_{p,q}, -1) (variant 1) or so(2p+1,2q) for
/// diag(1, I_{p,q}, I_{p,q}) (variant 2).
inline AlgebraPtr so_extended(int p, int q, int variant) {
  if (p < 1 || q < 1) throw std::invalid_argument("so_extended: p and q must be at least 1");
  if (variant == 1)
    return orthogonal_algebra(block_diag({ipq(p, q), ipq(p, q), Matrix{{-1}}}),
                              "so(" + std::to_string(2 * p) + "," + std::to_string(2 * q + 1) + ")");
  if (variant == 2)
    return orthogonal_algebra(block_diag({Matrix{{1}}, ipq(p, q), ipq(p, q)}),
                              "so(" + std::to_string(2 * p + 1) + "," + std::to_string(2 * q) + ")");
  throw std::invalid_argument("so_extended: variant must be 1 or 2");
}

/// sl(n, C) as a complex algebra.
inline AlgebraPtr special_linear_algebra(int n) {
  if (n < 2) throw std::invalid_argument("special_linear_algebra: n must be at least 2");
  const auto un = static_cast<std::size_t>(n);
  std::vector<Matrix> basis;
  for (std::size_t j = 0; j + 1 < un; ++j) {
    Matrix h(un, un);
    h(j, j) = Scalar(1);
    h(j + 1, j + 1) = Scalar(-1);
    basis.push_back(h.retag(Field::complex));
  }
  for (std::size_t j = 0; j < un; ++j)
    for (std::size_t k = 0; k < un; ++k)
      if (j != k) basis.push_back(unit_matrix(un, j, k).retag(Field::complex));
  return MatrixLieAlgebra::from_basis("sl(" + std::to_string(n) + ",C)", std::move(basis), Field::complex);
}

// ---- embeddings ------------------------------------------------------------

/// Injective bracket-preserving linear map given by images of the source basis.
struct Embedding {
  std::string name;
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<Matrix> images;  // ambient matrices of the target
  std::vector<Vector> coords;  // target coordinates of each image

  /// Image of a source element given in source coordinates, in target coordinates.
  Vector map(const Vector& x) const {
    Vector y(target->dim());
    for (std::size_t i = 0; i < x.size(); ++i) axpy(x[i], coords[i], y);
    return y;
  }
};

/// Validates images and builds the embedding; throws with a witness on failure.
inline Embedding make_embedding(std::string name, AlgebraPtr source, AlgebraPtr target, std::vector<Matrix> images) {
  if (images.size() != source->dim()) throw std::invalid_argument(name + ": one image per source basis element needed");
  Embedding e{std::move(name), std::move(source), std::move(target), std::move(images), {}};
  for (std::size_t i = 0; i < e.images.size(); ++i) {
    if (!e.target->preserves_form(e.images[i]))
      throw std::invalid_argument(e.name + ": image of X" + std::to_string(i) + " violates the defining relation of " +
                                  e.target->name());
    auto c = e.target->coordinates(e.images[i]);
    if (!c) throw std::invalid_argument(e.name + ": image of X" + std::to_string(i) + " is not in " + e.target->name());
    e.coords.push_back(std::move(*c));
  }
  if (rank(Matrix::from_columns(e.coords, e.target->dim())) != e.source->dim())
    throw std::invalid_argument(e.name + ": map is not injective");
  for (std::size_t i = 0; i < e.source->dim(); ++i)
    for (std::size_t j = i + 1; j < e.source->dim(); ++j) {
      Matrix lhs(e.target->ambient(), e.target->ambient(), Field::complex);
      for (const auto& t : e.source->structure_constants(i, j)) lhs.add_scaled(t.coeff, e.images[t.index]);
      if (lhs != commutator(e.images[i], e.images[j]))
        throw std::invalid_argument(e.name + ": bracket not preserved on (X" + std::to_string(i) + ", X" +
                                    std::to_string(j) + ")");
    }
  return e;
}

/// A + iB -> [[A, -B], [B, A]].
inline Matrix realify_matrix(const Matrix& x) {
  const std::size_t n = x.rows();
  const Matrix a = x.real_part();
  const Matrix b = x.imag_part();
  Matrix out(2 * n, 2 * n);
  out.set_block(0, 0, a);
  out.set_block(0, n, -b);
  out.set_block(n, 0, b);
  out.set_block(n, n, a);
  return out;
}

/// u(p,q) (or su(p,q)) -> so(2p,2q), X = A + iB -> [[A, -B], [B, A]].
inline Embedding embed_phi(int p, int q, bool traceless = false) {
  auto src = unitary_algebra(p, q, traceless);
  auto tgt = so_realified(p, q);
  std::vector<Matrix> images;
  for (const auto& x : src->basis()) images.push_back(realify_matrix(x));
  return make_embedding("phi", src, tgt, std::move(images));
}

/// psi_1: X -> diag(phi(X), 0) in so(2p,2q+1); psi_2: X -> diag(0, phi(X)) in so(2p+1,2q).
inline Embedding embed_psi(int p, int q, int variant, bool traceless = false) {
  auto src = unitary_algebra(p, q, traceless);
  auto tgt = so_extended(p, q, variant);
  const std::size_t m = 2 * static_cast<std::size_t>(p + q) + 1;
  std::vector<Matrix> images;
  for (const auto& x : src->basis()) {
    Matrix img(m, m);
    img.set_block(variant == 1 ? 0 : 1, variant == 1 ? 0 : 1, realify_matrix(x));
    images.push_back(std::move(img));
  }
  return make_embedding(variant == 1 ? "psi1" : "psi2", src, tgt, std::move(images));
}

/// Identity on matrices: sub's basis already lives in g.
inline Embedding inclusion(AlgebraPtr sub, AlgebraPtr g) {
  auto images = sub->basis();
  return make_embedding(sub->name() + " -> " + g->name(), sub, g, std::move(images));
}

/// X -> X placed as a diagonal block at `offset` inside g's ambient space.
inline Embedding block_inclusion(AlgebraPtr small, AlgebraPtr big, std::size_t offset) {
  std::vector<Matrix> images;
  for (const auto& x : small->basis()) {
    Matrix img(big->ambient(), big->ambient(), x.field());
    img.set_block(offset, offset, x);
    images.push_back(std::move(img));
  }
  return make_embedding(small->name() + " -> " + big->name(), small, big, std::move(images));
}

/// second o first.
inline Embedding compose(const Embedding& first, const Embedding& second) {
  if (first.target.get() != second.source.get() && first.target->name() != second.source->name())
    throw std::invalid_argument("compose: target of the first map is not the source of the second");
  std::vector<Matrix> images;
  for (const auto& c : first.coords) {
    Matrix img(second.target->ambient(), second.target->ambient(), Field::complex);
    for (std::size_t k = 0; k < c.size(); ++k) img.add_scaled(c[k], second.images[k]);
    img.retag(img.entries_field());
    images.push_back(std::move(img));
  }
  return make_embedding(second.name + " o " + first.name, first.source, second.target, std::move(images));
}

/// Where the extra coordinate goes when u(p,q) sits inside su(p',q').
enum class ExtraSlot { first, last };

/// u(p,q) -> su(p,q+1) via X -> diag(X, -tr X)   (slot last)
/// u(p,q) -> su(p+1,q) via X -> diag(-tr X, X)   (slot first)
inline Embedding embed_unitary_in_special(int p, int q, ExtraSlot slot) {
  auto src = unitary_algebra(p, q, false);
  auto tgt = slot == ExtraSlot::last ? unitary_algebra(p, q + 1, true) : unitary_algebra(p + 1, q, true);
  const std::size_t n = static_cast<std::size_t>(p + q);
  std::vector<Matrix> images;
  for (const auto& x : src->basis()) {
    Matrix img(n + 1, n + 1, Field::complex);
    const std::size_t off = slot == ExtraSlot::last ? 0 : 1;
    img.set_block(off, off, x);
    img(slot == ExtraSlot::last ? n : 0, slot == ExtraSlot::last ? n : 0) = -x.trace();
    images.push_back(std::move(img));
  }
  return make_embedding(src->name() + " -> " + tgt->name(), src, tgt, std::move(images));
}

// ---- Cartan data of sl(n, C) -------------------------------------------------

/// H_i = E_ii - E_{i+1,i+1} and E_{i,i+1}, i = 1..n-1, as n x n matrices.
struct CartanData {
  int n = 0;
  std::vector<Matrix> h;
  std::vector<Matrix> e;
};

inline CartanData cartan_data(int n) {
  if (n < 2) throw std::invalid_argument("cartan_data: n must be at least 2");
  CartanData cd{n, {}, {}};
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + 1 < un; ++i) {
    Matrix h(un, un, Field::complex);
    h(i, i) = Scalar(1);
    h(i + 1, i + 1) = Scalar(-1);
    cd.h.push_back(std::move(h));
    cd.e.push_back(unit_matrix(un, i, i + 1).retag(Field::complex));
  }
  return cd;
}

/// Cartan matrix entry a_ij = 2 if i == j, -1 if |i - j| == 1, else 0.
inline int cartan_integer(std::size_t i, std::size_t j) {
  if (i == j) return 2;
  if (i + 1 == j || j + 1 == i) return -1;
  return 0;
}

}  // namespace liekit
