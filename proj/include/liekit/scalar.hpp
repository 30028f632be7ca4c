#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

namespace liekit {

using Rational = mpq_class;

/// Scalar field a value, matrix or module lives over.
enum class Field { real, complex };

inline const char* to_string(Field f) { return f == Field::real ? "real" : "complex"; }

inline Field join(Field a, Field b) {
  return (a == Field::complex || b == Field::complex) ? Field::complex : Field::real;
}

/// Exact Gaussian rational a + b*i.
///
/// Every entry of every matrix in the library is a Scalar. Zero is stored as
/// a null pointer, so sparse matrices cost no GMP allocations for their zero
/// entries. Real values carry a zero imaginary part; the arithmetic takes a
/// fast path for them.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) { set(Rational(v), {}); }  // NOLINT(google-explicit-constructor)
  Scalar(int v) { set(Rational(v), {}); }   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) { set(std::move(re), {}); }  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) { set(std::move(re), std::move(im)); }

  Scalar(const Scalar& o) : v_(o.v_ ? std::make_unique<Parts>(*o.v_) : nullptr) {}
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o) {
    if (this == &o) return *this;
    if (!o.v_)
      v_.reset();
    else if (v_)
      *v_ = *o.v_;
    else
      v_ = std::make_unique<Parts>(*o.v_);
    return *this;
  }
  Scalar& operator=(Scalar&&) noexcept = default;

  static Scalar i() { return {Rational(0), Rational(1)}; }
  static Scalar frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  const Rational& re() const { return v_ ? v_->re : zero(); }
  const Rational& im() const { return v_ ? v_->im : zero(); }

  bool is_zero() const { return !v_ || (sgn(v_->re) == 0 && sgn(v_->im) == 0); }
  bool is_real() const { return !v_ || sgn(v_->im) == 0; }
  bool is_one() const { return v_ && sgn(v_->im) == 0 && v_->re == 1; }

  Scalar conj() const {
    if (!v_) return {};
    return {v_->re, -v_->im};
  }
  /// |z|^2, always a non-negative rational.
  Rational norm() const {
    if (!v_) return {};
    return v_->re * v_->re + v_->im * v_->im;
  }

  Scalar operator-() const {
    if (!v_) return {};
    return {-v_->re, -v_->im};
  }

  Scalar& operator+=(const Scalar& o) {
    if (!o.v_) return *this;
    if (!v_) return *this = o;
    v_->re += o.v_->re;
    if (sgn(o.v_->im) != 0) v_->im += o.v_->im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    if (!o.v_) return *this;
    if (!v_) return *this = -o;
    v_->re -= o.v_->re;
    if (sgn(o.v_->im) != 0) v_->im -= o.v_->im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    *this = *this / o;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Rational &ar = a.v_->re, &ai = a.v_->im, &br = b.v_->re, &bi = b.v_->im;
    const bool a_real = sgn(ai) == 0;
    const bool b_real = sgn(bi) == 0;
    if (a_real && b_real) return Scalar(Rational(ar * br));
    if (a_real) return {ar * br, ar * bi};
    if (b_real) return {ar * br, ai * br};
    return {ar * br - ai * bi, ar * bi + ai * br};
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("liekit: division by zero");
    if (a.is_zero()) return {};
    const Rational &ar = a.v_->re, &ai = a.v_->im, &br = b.v_->re, &bi = b.v_->im;
    if (sgn(bi) == 0) {
      if (sgn(ai) == 0) return Scalar(Rational(ar / br));
      return {ar / br, ai / br};
    }
    const Rational n = b.norm();
    const Scalar num = a * b.conj();
    return {num.re() / n, num.im() / n};
  }

  /// this += a * b without materialising the product for real operands.
  void add_mul(const Scalar& a, const Scalar& b) {
    if (!a.v_ || !b.v_) return;
    if (sgn(a.v_->im) == 0 && sgn(b.v_->im) == 0) {
      if (sgn(a.v_->re) == 0 || sgn(b.v_->re) == 0) return;
      if (!v_) {
        v_ = std::make_unique<Parts>();
        v_->re = a.v_->re * b.v_->re;
        return;
      }
      tmp_ = a.v_->re * b.v_->re;
      v_->re += tmp_;
      return;
    }
    *this += a * b;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re() == b.re() && a.im() == b.im(); }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const {
    const Rational &re = this->re(), &im = this->im();
    if (sgn(im) == 0) return re.get_str();
    std::string out;
    if (sgn(re) != 0) out = re.get_str();
    if (sgn(im) > 0 && !out.empty()) out += "+";
    if (im == 1) {
      out += "i";
    } else if (im == -1) {
      out += "-i";
    } else {
      out += im.get_str() + "i";
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  struct Parts {
    Rational re;
    Rational im;
  };

  static const Rational& zero() {
    static const Rational z;
    return z;
  }

  void set(Rational re, Rational im) {
    if (sgn(re) == 0 && sgn(im) == 0) return;
    v_ = std::make_unique<Parts>(Parts{std::move(re), std::move(im)});
  }

  std::unique_ptr<Parts> v_;  // null means zero
  // scratch space for add_mul
  inline static thread_local Rational tmp_;
};

/// Is r the square of a rational number? On success writes the root to *root.
inline bool rational_sqrt(const Rational& r, Rational* root) {
  if (sgn(r) < 0) return false;
  mpz_class num = r.get_num();
  mpz_class den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  if (root != nullptr) {
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    *root = Rational(a, b);
    root->canonicalize();
  }
  return true;
}

/// Exact integer value of an integral rational; throws otherwise.
inline long to_integer(const Rational& r) {
  if (r.get_den() != 1) throw std::domain_error("liekit: expected an integer, got " + r.get_str());
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("liekit: integer out of range");
  return r.get_num().get_si();
}

}  // namespace liekit
