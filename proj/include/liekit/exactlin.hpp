#pragma once

// Exact linear algebra over the rationals and the Gaussian rationals.
//
// Everything here is plain Gauss-Jordan elimination on exact scalars. The
// routines are deterministic: the first usable pivot is always taken, so the
// bases they return depend only on the input.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liekit/matrix.hpp"

namespace liekit {

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

/// Reduced row echelon form of `a`.
inline Echelon rref(Matrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c).is_zero()) ++p;
    if (p == m) continue;
    if (p != r)
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(r, j));
    const Scalar inv = Scalar(1) / a(r, c);
    nz.clear();
    for (std::size_t j = c; j < n; ++j) {
      if (a(r, j).is_zero()) continue;
      if (j != c) a(r, j) *= inv;
      nz.push_back(j);
    }
    a(r, c) = Scalar(1);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = -a(i, c);
      for (std::size_t j : nz) a(i, j).add_mul(f, a(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

/// Basis of {v : a v = 0}. One vector per free column, with a 1 in that column.
inline std::vector<Vector> kernel(const Matrix& a) {
  const Echelon e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Scalar& x = e.reduced(r, f);
      if (!x.is_zero()) v[e.pivots[r]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n, a.field());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(n));
  const Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv = e.reduced.block(0, n, n, n);
  inv.retag(a.field());
  return inv;
}

/// A subspace of K^n kept as a reduced echelon basis.
///
/// Optionally remembers how each echelon vector was built from the vectors
/// passed to insert(), so that coordinates with respect to those original
/// vectors can be recovered.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient, bool track = false) : ambient_(ambient), track_(track) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the echelon basis.
  Vector reduce(Vector v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Scalar c = v[pivots_[k]];
      if (!c.is_zero()) axpy(-c, basis_[k], v);
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span. Returns false if v was already in it.
  bool insert(const Vector& v) {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::insert: wrong length");
    Vector r = v;
    Vector combo;
    if (track_) {
      combo.assign(inserted_ + 1, Scalar());
      combo[inserted_] = Scalar(1);
    }
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Scalar c = r[pivots_[k]];
      if (c.is_zero()) continue;
      axpy(-c, basis_[k], r);
      if (track_) axpy_prefix(-c, combos_[k], combo);
    }
    if (track_) ++inserted_;
    std::size_t p = 0;
    while (p < r.size() && r[p].is_zero()) ++p;
    if (p == r.size()) return false;
    const Scalar inv = Scalar(1) / r[p];
    r = scaled(r, inv);
    if (track_) combo = scaled(combo, inv);
    // keep the basis fully reduced
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Scalar c = basis_[k][p];
      if (c.is_zero()) continue;
      axpy(-c, r, basis_[k]);
      if (track_) {
        combos_[k].resize(inserted_);
        axpy_prefix(-c, combo, combos_[k]);
      }
    }
    // insert keeping pivots sorted
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    if (track_) combos_.insert(combos_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(combo));
    return true;
  }

  /// Coordinates of v with respect to the echelon basis, if v is in the span.
  std::optional<Vector> coordinates(const Vector& v) const {
    Vector c(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
    Vector r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (!c[k].is_zero()) axpy(-c[k], basis_[k], r);
    if (!is_zero(r)) return std::nullopt;
    return c;
  }

  /// Coordinates of v with respect to the inserted vectors (tracking mode).
  /// Inserted vectors that turned out dependent get coefficient zero.
  std::optional<Vector> original_coordinates(const Vector& v) const {
    if (!track_) throw std::logic_error("Subspace: coordinate tracking disabled");
    auto c = coordinates(v);
    if (!c) return std::nullopt;
    Vector out(inserted_);
    for (std::size_t k = 0; k < basis_.size(); ++k) axpy_prefix((*c)[k], combos_[k], out);
    return out;
  }

 private:
  static void axpy_prefix(const Scalar& s, const Vector& x, Vector& y) {
    if (s.is_zero()) return;
    if (y.size() < x.size()) y.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) y[i].add_mul(s, x[i]);
  }

  std::size_t ambient_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> combos_;
};

/// Solves x = sum_k c_k b_k for a fixed linearly independent family b_k.
class CoordinateSolver {
 public:
  CoordinateSolver() = default;
  CoordinateSolver(const std::vector<Vector>& family, std::size_t ambient) : space_(ambient, true) {
    for (const auto& b : family)
      if (!space_.insert(b)) throw std::invalid_argument("CoordinateSolver: family is linearly dependent");
    size_ = family.size();
  }

  std::size_t size() const { return size_; }
  std::optional<Vector> solve(const Vector& x) const { return space_.original_coordinates(x); }

 private:
  Subspace space_{0, true};
  std::size_t size_ = 0;
};

/// Drops vectors that are combinations of earlier ones.
inline std::vector<Vector> independent_subset(const std::vector<Vector>& vs, std::size_t ambient) {
  Subspace s(ambient);
  std::vector<Vector> out;
  for (const auto& v : vs)
    if (s.insert(v)) out.push_back(v);
  return out;
}

inline std::vector<Vector> span_basis(const std::vector<Vector>& vs, std::size_t ambient) {
  Subspace s(ambient);
  for (const auto& v : vs) s.insert(v);
  return s.basis();
}

// ---- symmetric forms -------------------------------------------------------

struct Signature {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
  std::string str() const {
    return "(" + std::to_string(plus) + ", " + std::to_string(minus) + ", " + std::to_string(zero) + ")";
  }
};

struct CongruenceDiagonalization {
  Matrix transform;             // P with P^T S P diagonal
  std::vector<Rational> diag;  // the diagonal of P^T S P
};

/// Symmetric Gaussian elimination: returns P with P^T S P diagonal.
inline CongruenceDiagonalization congruence_diagonalize(const Matrix& s) {
  if (!s.square()) throw std::invalid_argument("signature: matrix not square");
  if (s.entries_field() != Field::real) throw std::invalid_argument("signature: matrix is not real");
  if (!s.is_symmetric()) throw std::invalid_argument("signature: matrix is not symmetric");
  const std::size_t n = s.rows();
  Matrix a = s;
  Matrix p = Matrix::identity(n);
  // column operation j += f*k on p and the matching congruence on a
  auto add_multiple = [&](std::size_t j, std::size_t k, const Scalar& f) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!a(i, k).is_zero()) a(i, j).add_mul(f, a(i, k));
      if (!p(i, k).is_zero()) p(i, j).add_mul(f, p(i, k));
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!a(k, i).is_zero()) a(j, i).add_mul(f, a(k, i));
  };
  auto swap_index = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) {
      std::swap(a(i, j), a(i, k));
      std::swap(p(i, j), p(i, k));
    }
    for (std::size_t i = 0; i < n; ++i) std::swap(a(j, i), a(k, i));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        swap_index(j, k);
      } else {
        j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j == n) continue;  // row k is zero beyond the diagonal
        add_multiple(k, j, Scalar(1));  // a(k,k) becomes 2 a(k,j)
      }
    }
    const Scalar piv = a(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(k, j).is_zero()) continue;
      add_multiple(j, k, -(a(k, j) / piv));
    }
  }
  CongruenceDiagonalization out{p, {}};
  for (std::size_t i = 0; i < n; ++i) out.diag.push_back(a(i, i).re());
  return out;
}

/// Inertia of a real symmetric matrix (Sylvester).
inline Signature signature(const Matrix& s) {
  Signature sig;
  for (const auto& d : congruence_diagonalize(s).diag) {
    if (sgn(d) > 0) {
      ++sig.plus;
    } else if (sgn(d) < 0) {
      ++sig.minus;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

// ---- eigenspaces and polynomials ------------------------------------------

/// Eigenspace of T for each candidate eigenvalue, in candidate order.
inline std::vector<std::pair<Scalar, std::vector<Vector>>> rational_eigenspaces(const Matrix& t,
                                                                                  const std::vector<Scalar>& candidates) {
  if (!t.square()) throw std::invalid_argument("rational_eigenspaces: matrix not square");
  std::vector<std::pair<Scalar, std::vector<Vector>>> out;
  for (const auto& c : candidates) {
    Matrix shifted = t;
    for (std::size_t i = 0; i < t.rows(); ++i) shifted(i, i) -= c;
    out.emplace_back(c, kernel(shifted));
  }
  return out;
}

/// Polynomial with exact coefficients, lowest degree first.
struct Polynomial {
  std::vector<Scalar> coeffs;

  int degree() const {
    for (std::size_t k = coeffs.size(); k-- > 0;)
      if (!coeffs[k].is_zero()) return static_cast<int>(k);
    return -1;
  }

  Scalar operator()(const Scalar& x) const {
    Scalar acc;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
  }

  Matrix operator()(const Matrix& t) const {
    if (!t.square()) throw std::invalid_argument("Polynomial: matrix not square");
    Matrix acc(t.rows(), t.cols(), t.field());
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      acc = acc * t;
      for (std::size_t i = 0; i < t.rows(); ++i) acc(i, i) += coeffs[k];
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    const int d = a.degree();
    if (d != b.degree()) return false;
    for (int k = 0; k <= d; ++k)
      if (a.coeffs[static_cast<std::size_t>(k)] != b.coeffs[static_cast<std::size_t>(k)]) return false;
    return true;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.degree() < 0 || b.degree() < 0) return {};
    Polynomial c;
    c.coeffs.assign(static_cast<std::size_t>(a.degree() + b.degree() + 1), Scalar());
    for (int i = 0; i <= a.degree(); ++i)
      for (int j = 0; j <= b.degree(); ++j)
        c.coeffs[static_cast<std::size_t>(i + j)].add_mul(a.coeffs[static_cast<std::size_t>(i)],
                                                          b.coeffs[static_cast<std::size_t>(j)]);
    return c;
  }

  /// x - r
  static Polynomial linear(const Scalar& r) { return {{-r, Scalar(1)}}; }

  std::string str() const {
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Scalar& c = coeffs[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      std::string cs = c.is_real() ? c.str() : "(" + c.str() + ")";
      if (!out.empty()) out += " + ";
      if (k == 0) {
        out += cs;
      } else {
        if (!c.is_one()) out += cs + "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }
};

/// Minimal polynomial: first linear dependency among I, T, T^2, ...
inline Polynomial min_poly(const Matrix& t) {
  if (!t.square()) throw std::invalid_argument("min_poly: matrix not square");
  const std::size_t n = t.rows();
  Subspace powers(n * n, true);
  Matrix p = Matrix::identity(n, t.field());
  for (std::size_t k = 0; k <= n; ++k) {
    Vector v = vec(p);
    if (!powers.insert(v)) {
      // T^k = sum_{j<k} c_j T^j
      const Vector c = *powers.original_coordinates(v);
      Polynomial poly;
      poly.coeffs.assign(k + 1, Scalar());
      for (std::size_t j = 0; j < k; ++j) poly.coeffs[j] = -c[j];
      poly.coeffs[k] = Scalar(1);
      return poly;
    }
    p = p * t;
  }
  throw std::logic_error("min_poly: no dependency found (Cayley-Hamilton violated)");
}

/// Integer bound on |eigenvalue| for a matrix known to be diagonalizable with
/// rational eigenvalues: sum of squared eigenvalues equals tr(T^2).
inline std::optional<long> integer_eigenvalue_bound(const Matrix& t) {
  const Scalar tr2 = (t * t).trace();
  if (!tr2.is_real() || sgn(tr2.re()) < 0) return std::nullopt;
  mpz_class fl = tr2.re().get_num() / tr2.re().get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
  return root.get_si() + 1;
}

}  // namespace liekit
