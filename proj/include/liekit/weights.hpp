#pragma once

// Weight combinatorics for the root system A_{n-1} of sl(n, C).
//
// Weights in the Cartan subalgebra are vectors of R^n with coordinate sum
// zero; dominant weights are stored by their coefficients in the basis of
// fundamental weights.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liekit/scalar.hpp"

namespace liekit {

struct WeightVector {
  int n = 0;
  std::vector<Rational> coords;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) out += (i ? ", " : "") + coords[i].get_str();
    return out + ")";
  }
};

inline Rational inner(const WeightVector& a, const WeightVector& b) {
  if (a.n != b.n) throw std::invalid_argument("inner: rank mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

inline WeightVector operator+(WeightVector a, const WeightVector& b) {
  if (a.n != b.n) throw std::invalid_argument("WeightVector: rank mismatch");
  for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
  return a;
}

inline WeightVector operator*(long k, WeightVector a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

/// lambda = k_1 w_1 + ... + k_{n-1} w_{n-1} with all k_i >= 0.
struct DominantWeight {
  int n = 0;
  std::vector<int> coeffs;

  DominantWeight() = default;
  DominantWeight(int rank_n, std::vector<int> k) : n(rank_n), coeffs(std::move(k)) {
    if (n < 2) throw std::invalid_argument("DominantWeight: n must be at least 2");
    if (coeffs.size() != static_cast<std::size_t>(n - 1))
      throw std::invalid_argument("DominantWeight: expected n-1 coefficients");
    for (int k_i : coeffs)
      if (k_i < 0) throw std::invalid_argument("DominantWeight: coefficients must be non-negative");
  }

  static DominantWeight zero(int n) { return {n, std::vector<int>(static_cast<std::size_t>(n - 1), 0)}; }

  /// w_i, 1-based.
  static DominantWeight fundamental(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("fundamental weight index out of range");
    DominantWeight w = zero(n);
    w.coeffs[static_cast<std::size_t>(i - 1)] = 1;
    return w;
  }

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int k) { return k == 0; });
  }

  int level() const {
    int s = 0;
    for (int k : coeffs) s += k;
    return s;
  }

  friend DominantWeight operator+(DominantWeight a, const DominantWeight& b) {
    if (a.n != b.n) throw std::invalid_argument("DominantWeight: rank mismatch");
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
    return a;
  }

  friend DominantWeight operator*(int k, DominantWeight a) {
    if (k < 0) throw std::invalid_argument("DominantWeight: negative multiple");
    for (auto& c : a.coeffs) c *= k;
    return a;
  }

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight& a, const DominantWeight& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.coeffs <=> b.coeffs;
  }

  /// "0", "w1", "w1+w3", "2w2".
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (coeffs[i] != 1) out += std::to_string(coeffs[i]);
      out += "w" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
  }
};

/// Highest weight of the dual module: (k_1..k_{n-1}) -> (k_{n-1}..k_1).
inline DominantWeight conjugate(const DominantWeight& l) {
  DominantWeight c = l;
  std::reverse(c.coeffs.begin(), c.coeffs.end());
  return c;
}

inline bool is_self_conjugate(const DominantWeight& l) { return l == conjugate(l); }

/// Orthogonal projection of e_1 + ... + e_i onto the trace-zero hyperplane.
inline WeightVector fundamental_weight(int n, int i) {
  if (n < 2) throw std::invalid_argument("fundamental_weight: n must be at least 2");
  if (i < 1 || i > n - 1) throw std::invalid_argument("fundamental_weight: index out of range");
  WeightVector w{n, {}};
  for (int j = 1; j <= n; ++j) {
    Rational c = (j <= i ? Rational(1) : Rational(0)) - Rational(i, n);
    c.canonicalize();
    w.coords.push_back(c);
  }
  return w;
}

/// Half the sum of the positive roots, (n-1, n-3, ..., 1-n)/2.
inline WeightVector rho(int n) {
  if (n < 2) throw std::invalid_argument("rho: n must be at least 2");
  WeightVector r{n, {}};
  for (int j = 0; j < n; ++j) {
    Rational c(n - 1 - 2 * j, 2);
    c.canonicalize();
    r.coords.push_back(c);
  }
  return r;
}

/// e_nu - e_mu, 1-based.
inline WeightVector root(int n, int nu, int mu) {
  WeightVector r{n, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
  r.coords[static_cast<std::size_t>(nu - 1)] += 1;
  r.coords[static_cast<std::size_t>(mu - 1)] -= 1;
  return r;
}

inline WeightVector to_weight_vector(const DominantWeight& l) {
  WeightVector w{l.n, std::vector<Rational>(static_cast<std::size_t>(l.n), Rational(0))};
  for (int i = 1; i <= l.n - 1; ++i) {
    const int k = l.coeffs[static_cast<std::size_t>(i - 1)];
    if (k != 0) w = w + k * fundamental_weight(l.n, i);
  }
  return w;
}

/// Weyl dimension formula: prod over nu < mu of 1 + (lambda, e_nu - e_mu)/(rho, e_nu - e_mu).
inline long weyl_dim(const DominantWeight& l) {
  const WeightVector lam = to_weight_vector(l);
  const WeightVector r = rho(l.n);
  Rational prod = 1;
  for (int nu = 1; nu <= l.n; ++nu) {
    for (int mu = nu + 1; mu <= l.n; ++mu) {
      const WeightVector a = root(l.n, nu, mu);
      prod *= 1 + inner(lam, a) / inner(r, a);
    }
  }
  return to_integer(prod);
}

struct WeightWithDim {
  DominantWeight weight;
  long dim = 0;
  friend bool operator==(const WeightWithDim&, const WeightWithDim&) = default;
};

namespace detail {
inline void enumerate_from(DominantWeight& w, std::size_t pos, long max_dim, std::vector<WeightWithDim>& out) {
  if (pos == w.coeffs.size()) {
    out.push_back({w, weyl_dim(w)});
    return;
  }
  // dimension is increasing in each coefficient, so the first overshoot ends the branch
  for (int k = 0;; ++k) {
    w.coeffs[pos] = k;
    if (weyl_dim(w) > max_dim) break;
    enumerate_from(w, pos + 1, max_dim, out);
  }
  w.coeffs[pos] = 0;
}
}  // namespace detail

/// All dominant weights with weyl_dim <= max_dim, lexicographically ordered.
inline std::vector<WeightWithDim> enumerate_dominant(int n, long max_dim) {
  if (n < 3) throw std::invalid_argument("enumerate_dominant: n must be at least 3");
  if (max_dim < 1) throw std::invalid_argument("enumerate_dominant: max_dim must be positive");
  std::vector<WeightWithDim> out;
  DominantWeight w = DominantWeight::zero(n);
  detail::enumerate_from(w, 0, max_dim, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
  return out;
}

}  // namespace liekit
