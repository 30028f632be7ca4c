#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liekit/scalar.hpp"

namespace liekit {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars tagged with the field it lives over.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::real)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

  /// Integer entries, row by row. Used for small literal matrices.
  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n, Field field = Field::real) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  static Matrix diagonal(const std::vector<Scalar>& d, Field field = Field::real) {
    Matrix m(d.size(), d.size(), field);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    m.field_ = join(field, m.entries_field());
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("Matrix::from_columns: size mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    m.field_ = m.entries_field();
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: size mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    m.field_ = m.entries_field();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Field field() const { return field_; }

  /// Re-tag the matrix. Tagging as real requires every entry to be real.
  Matrix& retag(Field f) {
    if (f == Field::real && entries_field() != Field::real)
      throw std::invalid_argument("Matrix: cannot tag a matrix with non-real entries as real");
    field_ = f;
    return *this;
  }

  /// Smallest field containing all entries.
  Field entries_field() const {
    for (const auto& s : data_)
      if (!s.is_real()) return Field::complex;
    return Field::real;
  }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Scalar>& data() const { return data_; }

  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  std::size_t nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const Scalar& s) { return !s.is_zero(); }));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix conj() const {
    Matrix c(*this);
    for (auto& s : c.data_) s = s.conj();
    return c;
  }

  Matrix adjoint() const { return transpose().conj(); }

  Matrix real_part() const {
    Matrix r(rows_, cols_, Field::real);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = Scalar(data_[k].re());
    return r;
  }

  Matrix imag_part() const {
    Matrix r(rows_, cols_, Field::real);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = Scalar(data_[k].im());
    return r;
  }

  Scalar trace() const {
    if (!square()) throw std::invalid_argument("Matrix::trace: not square");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_symmetric() const { return square() && *this == transpose(); }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    field_ = join(field_, o.field_);
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    field_ = join(field_, o.field_);
    return *this;
  }
  Matrix& operator*=(const Scalar& s) {
    for (auto& x : data_)
      if (!x.is_zero()) x *= s;
    if (!s.is_real()) field_ = Field::complex;
    return *this;
  }

  /// this += s * o
  Matrix& add_scaled(const Scalar& s, const Matrix& o) {
    require_same_shape(o);
    if (s.is_zero()) return *this;
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!o.data_[k].is_zero()) data_[k].add_mul(s, o.data_[k]);
    field_ = join(field_, o.field_);
    if (!s.is_real()) field_ = Field::complex;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  Matrix operator-() const { return *this * Scalar(-1); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_, join(a.field_, b.field_));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        const Scalar* brow = &b.data_[k * b.cols_];
        Scalar* crow = &c.data_[i * c.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!brow[j].is_zero()) crow[j].add_mul(aik, brow[j]);
      }
    }
    return c;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("Matrix-vector product: shape mismatch");
    Vector out(a.rows_);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (v[k].is_zero()) continue;
      for (std::size_t i = 0; i < a.rows_; ++i) {
        const Scalar& aik = a(i, k);
        if (!aik.is_zero()) out[i].add_mul(aik, v[k]);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Copy `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block) {
    if (r + block.rows_ > rows_ || c + block.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
    for (std::size_t i = 0; i < block.rows_; ++i)
      for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
    field_ = join(field_, block.field_);
  }

  Matrix block(std::size_t r, std::size_t c, std::size_t nr, std::size_t nc) const {
    if (r + nr > rows_ || c + nc > cols_) throw std::out_of_range("Matrix::block");
    Matrix b(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r + i, c + j);
    return b;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::real;
  std::vector<Scalar> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Matrix block_diag(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

/// Elementary matrix E_ij (zero-based).
inline Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = Scalar(1);
  return m;
}

// ---- vectors --------------------------------------------------------------

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = Scalar(1);
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline bool is_real(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_real(); });
}

inline Vector conj(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
  return out;
}

inline Vector real_part(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(v[i].re());
  return out;
}

inline Vector imag_part(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(v[i].im());
  return out;
}

/// Bilinear (not sesquilinear) pairing sum a_i b_i.
inline Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_mul(a[i], b[i]);
  return s;
}

/// y += s * x
inline void axpy(const Scalar& s, const Vector& x, Vector& y) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i].add_mul(s, x[i]);
}

inline Vector scaled(const Vector& v, const Scalar& s) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] = v[i] * s;
  return out;
}

/// Flatten a matrix row by row.
inline Vector vec(const Matrix& m) { return m.data(); }

inline Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unvec: size mismatch");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  m.retag(m.entries_field());
  return m;
}

inline std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

}  // namespace liekit
