#pragma once

// Weight spaces, highest weight vectors, isotypic decompositions over C and
// over R, commutants and real type, invariant bilinear forms, bracket
// bookkeeping between components, and symmetric pairs.
//
// Weight theory is only available for algebras of n x n matrices whose
// complex span contains the diagonal Cartan subalgebra of sl(n, C): u(p,q),
// su(p,q), u(n), su(n) and sl(n, C). When the identity matrix also lies in the
// complex span (the u(p,q) case) its eigenvalue, the charge, is recorded as
// part of the weight.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liekit/exactlin.hpp"
#include "liekit/liealg.hpp"
#include "liekit/repkit.hpp"
#include "liekit/weights.hpp"

namespace liekit {

// ---- weights -----------------------------------------------------------------

struct Weight {
  std::vector<long> labels;    // eigenvalues of H_1..H_{n-1}, i.e. Dynkin labels
  std::optional<long> charge;  // eigenvalue of Id, when Id is in the algebra

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.labels != b.labels) return a.labels < b.labels;
    return a.charge < b.charge;
  }

  bool dominant() const {
    return std::all_of(labels.begin(), labels.end(), [](long k) { return k >= 0; });
  }

  int n() const { return static_cast<int>(labels.size()) + 1; }

  DominantWeight as_dominant() const {
    if (!dominant()) throw std::logic_error("Weight::as_dominant: weight is not dominant");
    std::vector<int> k(labels.begin(), labels.end());
    return {n(), k};
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i]);
    out += "]";
    if (charge) out += "q" + std::to_string(*charge);
    return out;
  }
};

/// The conjugate module's highest weight: reversed labels, opposite charge.
inline Weight conjugate(const Weight& w) {
  Weight c = w;
  std::reverse(c.labels.begin(), c.labels.end());
  if (c.charge) c.charge = -*c.charge;
  return c;
}

/// Images under a complex module of H_i, E_{i,i+1} and (when present) Id.
struct CartanImages {
  int n = 0;
  std::vector<Matrix> h;
  std::vector<Matrix> e;
  std::optional<Matrix> center;
};

inline CartanImages cartan_images(const Representation& r) {
  if (r.field() != Field::complex) throw std::invalid_argument("cartan_images: module must be complex");
  const auto& g = *r.algebra();
  if (!g.has_complex_coordinates()) throw std::invalid_argument("cartan_images: " + g.name() + " has no complex span");
  const int n = static_cast<int>(g.ambient());
  const CartanData cd = cartan_data(n);
  CartanImages out;
  out.n = n;
  auto image = [&](const Matrix& m) -> std::optional<Matrix> {
    auto c = g.complex_coordinates(m);
    if (!c) return std::nullopt;
    return r.act(*c);
  };
  for (std::size_t i = 0; i < cd.h.size(); ++i) {
    auto h = image(cd.h[i]);
    auto e = image(cd.e[i]);
    if (!h || !e) throw std::invalid_argument("cartan_images: " + g.name() + " does not contain the diagonal Cartan of sl(n)");
    out.h.push_back(std::move(*h));
    out.e.push_back(std::move(*e));
  }
  out.center = image(Matrix::identity(g.ambient(), Field::complex));
  return out;
}

struct WeightSpace {
  Weight weight;
  std::vector<Vector> basis;
};

namespace detail {
/// Matrix of T restricted to span(basis), in the echelon coordinates of `s`.
inline Matrix restricted_operator(const Matrix& t, const Subspace& s) {
  Matrix m(s.dim(), s.dim(), t.field());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    auto c = s.coordinates(t * s.basis()[j]);
    if (!c) throw std::runtime_error("weight_spaces: operator does not preserve a weight space");
    for (std::size_t i = 0; i < s.dim(); ++i) m(i, j) = (*c)[i];
  }
  return m;
}

inline Vector combine(const std::vector<Vector>& basis, const Vector& coeffs, std::size_t ambient) {
  Vector v(ambient);
  for (std::size_t k = 0; k < basis.size(); ++k) axpy(coeffs[k], basis[k], v);
  return v;
}
}  // namespace detail

/// Simultaneous integer eigenspaces of H_1..H_{n-1} (and Id), sorted by weight.
inline std::vector<WeightSpace> weight_spaces(const Representation& r, const CartanImages& ci) {
  std::vector<Matrix> ops = ci.h;
  if (ci.center) ops.push_back(*ci.center);
  struct Piece {
    std::vector<long> values;
    std::vector<Vector> basis;
  };
  std::vector<Piece> pieces;
  {
    std::vector<Vector> full;
    for (std::size_t i = 0; i < r.dim(); ++i) full.push_back(unit_vector(r.dim(), i));
    pieces.push_back({{}, std::move(full)});
  }
  for (std::size_t k = 0; k < ops.size(); ++k) {
    std::vector<Piece> next;
    for (auto& piece : pieces) {
      Subspace s(r.dim());
      for (const auto& v : piece.basis) s.insert(v);
      const Matrix m = detail::restricted_operator(ops[k], s);
      const auto bound = integer_eigenvalue_bound(m);
      if (!bound) throw std::runtime_error("weight_spaces: operator has no integral spectrum");
      std::vector<Scalar> candidates;
      for (long c = -*bound; c <= *bound; ++c) candidates.emplace_back(c);
      std::size_t found = 0;
      for (auto& [value, vecs] : rational_eigenspaces(m, candidates)) {
        if (vecs.empty()) continue;
        found += vecs.size();
        Piece p{piece.values, {}};
        p.values.push_back(to_integer(value.re()));
        for (const auto& c : vecs) p.basis.push_back(detail::combine(s.basis(), c, r.dim()));
        next.push_back(std::move(p));
      }
      if (found != s.dim())
        throw std::runtime_error("weight_spaces: non-integer eigenvalue or non-semisimple action on " + r.name());
    }
    pieces = std::move(next);
  }
  std::vector<WeightSpace> out;
  for (auto& p : pieces) {
    Weight w;
    w.labels.assign(p.values.begin(), p.values.begin() + static_cast<std::ptrdiff_t>(ci.h.size()));
    if (ci.center) w.charge = p.values.back();
    out.push_back({std::move(w), std::move(p.basis)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
  return out;
}

struct HighestWeightVectors {
  Weight weight;
  std::vector<Vector> vectors;
};

/// Joint kernel of the E_{i,i+1} on each dominant weight space. Throws if the
/// Weyl dimensions of the highest weights do not add up to the module dimension.
inline std::vector<HighestWeightVectors> highest_weight_vectors(const Representation& r, const CartanImages& ci) {
  std::vector<HighestWeightVectors> out;
  long total = 0;
  for (const auto& ws : weight_spaces(r, ci)) {
    if (!ws.weight.dominant()) continue;
    const std::size_t m = ws.basis.size();
    Matrix stacked(ci.e.size() * r.dim(), m, Field::complex);
    for (std::size_t i = 0; i < ci.e.size(); ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const Vector ev = ci.e[i] * ws.basis[j];
        for (std::size_t row = 0; row < r.dim(); ++row) stacked(i * r.dim() + row, j) = ev[row];
      }
    const auto ker = kernel(stacked);
    if (ker.empty()) continue;
    HighestWeightVectors h{ws.weight, {}};
    for (const auto& c : ker) h.vectors.push_back(detail::combine(ws.basis, c, r.dim()));
    total += weyl_dim(ws.weight.as_dominant()) * static_cast<long>(h.vectors.size());
    out.push_back(std::move(h));
  }
  if (total != static_cast<long>(r.dim()))
    throw std::runtime_error("highest_weight_vectors: Weyl dimensions of the highest weights sum to " +
                             std::to_string(total) + ", module has dimension " + std::to_string(r.dim()));
  return out;
}

inline std::vector<HighestWeightVectors> highest_weight_vectors(const Representation& r) {
  return highest_weight_vectors(r, cartan_images(r));
}

// ---- isotypic decompositions -----------------------------------------------------

enum class RealKind { real, complex, quaternionic };

inline const char* to_string(RealKind k) {
  switch (k) {
    case RealKind::real:
      return "real";
    case RealKind::complex:
      return "complex";
    case RealKind::quaternionic:
      return "quaternionic";
  }
  return "?";
}

struct IsotypicComponent {
  std::string label;
  Weight weight;                 // highest weight of the (first) complex constituent
  std::size_t dim = 0;           // dimension of one irreducible copy over the module's field
  std::size_t multiplicity = 0;  // number of irreducible copies
  std::optional<RealKind> kind;  // real decompositions only
  std::vector<Vector> basis;     // spans the whole isotypic block

  std::size_t total_dim() const { return dim * multiplicity; }
};

struct IsotypicDecomposition {
  Field field = Field::complex;
  std::size_t module_dim = 0;
  std::vector<IsotypicComponent> components;
  std::vector<Vector> residual;  // empty on success

  std::vector<std::size_t> total_dims() const {
    std::vector<std::size_t> d;
    for (const auto& c : components) d.push_back(c.total_dim());
    return d;
  }

  /// Index of the first component with this label.
  std::optional<std::size_t> find(const std::string& label) const {
    for (std::size_t i = 0; i < components.size(); ++i)
      if (components[i].label == label) return i;
    return std::nullopt;
  }
};

/// (p, q) of a unitary-type algebra, read off its gram matrix.
inline std::optional<std::pair<int, int>> unitary_signature(const MatrixLieAlgebra& g) {
  if (g.form_kind() != FormKind::unitary || !g.gram()) return std::nullopt;
  const Signature s = signature(*g.gram());
  return std::make_pair(static_cast<int>(s.plus), static_cast<int>(s.minus));
}

namespace detail {
inline std::string complex_label(const Weight& w) {
  std::string out = "W^" + w.as_dominant().str();
  if (w.charge && *w.charge != 0) out += "[" + std::string(*w.charge > 0 ? "+" : "") + std::to_string(*w.charge) + "]";
  return out;
}

/// Names for real components. `w` is the chosen representative of a conjugate
/// pair (the one with non-negative charge, or the smaller weight).
inline std::string real_label(const MatrixLieAlgebra& g, const Weight& w) {
  const int n = w.n();
  const DominantWeight d = w.as_dominant();
  const DominantWeight c = conjugate(d);
  std::string pq = "n";
  std::string cn = "C^" + std::to_string(n);
  if (auto s = unitary_signature(g)) {
    pq = std::to_string(s->first) + "," + std::to_string(s->second);
    cn = "C^{" + pq + "}";
  }
  const long charge = w.charge.value_or(0);
  if (d.is_zero() && charge == 0) return "R";
  if (n >= 3 && d == DominantWeight::fundamental(n, 1) + DominantWeight::fundamental(n, n - 1) && charge == 0)
    return g.gram() ? "su(" + pq + ")" : "sl(" + std::to_string(n) + ")";
  const auto w1 = DominantWeight::fundamental(n, 1);
  const auto w2 = DominantWeight::fundamental(n, n >= 3 ? 2 : 1);
  auto named = [&](const DominantWeight& x) -> std::string {
    if (x == w1 || (n >= 4 && x == DominantWeight::fundamental(n, n - 1))) return cn + "_R";
    if (n >= 3 && (x == w2 || (n >= 5 && x == DominantWeight::fundamental(n, n - 2)))) return "(wedge2 C^n)_R";
    return {};
  };
  if (w.charge) {
    // the representative carries positive charge, which separates C^n from
    // wedge^2 C^n even when n = 3
    if (auto s = named(d); !s.empty()) return s;
  } else {
    if (d == w1 || c == w1) return cn + "_R";
    if (auto s = named(d); !s.empty()) return s;
    if (auto s = named(c); !s.empty()) return s;
  }
  return "V^" + d.str() + (charge != 0 ? "[" + std::to_string(charge) + "]" : "");
}

inline std::vector<Vector> real_span(const std::vector<Vector>& complex_vectors, std::size_t ambient) {
  Subspace s(ambient);
  for (const auto& v : complex_vectors) {
    s.insert(real_part(v));
    s.insert(imag_part(v));
  }
  return s.basis();
}
}  // namespace detail

/// Complex module -> one component per highest weight, each the submodule
/// generated by that weight's highest weight vectors.
inline IsotypicDecomposition complex_isotypic(const Representation& r) {
  IsotypicDecomposition out;
  out.field = Field::complex;
  out.module_dim = r.dim();
  for (const auto& h : highest_weight_vectors(r)) {
    IsotypicComponent c;
    c.weight = h.weight;
    c.label = detail::complex_label(h.weight);
    c.dim = static_cast<std::size_t>(weyl_dim(h.weight.as_dominant()));
    c.multiplicity = h.vectors.size();
    c.basis = generated_submodule(r, h.vectors).basis;
    if (c.basis.size() != c.total_dim())
      throw std::runtime_error("complex_isotypic: block for " + c.label + " has unexpected dimension");
    out.components.push_back(std::move(c));
  }
  return out;
}

// ---- commutants, intertwiners, forms --------------------------------------------

/// Basis of {T : residual(T, k) = 0 for k < count}, T of shape rows x cols.
/// Constraints are imposed one generator at a time on the running solution space.
inline std::vector<Matrix> solve_equivariant(std::size_t rows, std::size_t cols, std::size_t count,
                                             const std::function<Matrix(const Matrix&, std::size_t)>& residual,
                                             Field field) {
  std::vector<Matrix> sol;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Matrix t(rows, cols, field);
      t(i, j) = Scalar(1);
      sol.push_back(std::move(t));
    }
  for (std::size_t k = 0; k < count && !sol.empty(); ++k) {
    std::vector<Vector> images;
    for (const auto& t : sol) images.push_back(vec(residual(t, k)));
    const Matrix m = Matrix::from_columns(images, images.front().size());
    const auto ker = kernel(m);
    std::vector<Matrix> next;
    for (const auto& c : ker) {
      Matrix t(rows, cols, field);
      for (std::size_t l = 0; l < sol.size(); ++l) t.add_scaled(c[l], sol[l]);
      next.push_back(std::move(t));
    }
    sol = std::move(next);
  }
  return sol;
}

/// All T : r -> s with T rho_r(X) = rho_s(X) T.
inline std::vector<Matrix> intertwiners(const Representation& r, const Representation& s) {
  if (r.algebra().get() != s.algebra().get() && r.algebra()->name() != s.algebra()->name())
    throw std::invalid_argument("intertwiners: modules over different algebras");
  const Field f = join(r.field(), s.field());
  return solve_equivariant(
      s.dim(), r.dim(), r.action().size(),
      [&](const Matrix& t, std::size_t k) { return t * r.action(k) - s.action(k) * t; }, f);
}

inline std::vector<Matrix> commutant(const Representation& r) { return intertwiners(r, r); }

/// Is there an invertible intertwiner r -> s?
inline bool isomorphic(const Representation& r, const Representation& s) {
  if (r.dim() != s.dim()) return false;
  const auto ts = intertwiners(r, s);
  if (ts.empty()) return false;
  // a generic combination of a basis is invertible iff some combination is;
  // try the basis elements and their sum
  for (const auto& t : ts)
    if (inverse(t)) return true;
  Matrix sum(s.dim(), r.dim(), ts.front().field());
  long k = 1;
  for (const auto& t : ts) sum.add_scaled(Scalar(k++), t);
  return inverse(sum).has_value();
}

struct RealTypeVerdict {
  RealKind kind = RealKind::complex;
  std::size_t complex_dim = 0;
  std::size_t real_dim = 0;        // dimension of the real irreducible module
  std::size_t commutant_dim = 0;   // of the realification
  std::optional<Signature> norm_form;     // on the trace-free part of a 4-dim commutant
  std::optional<std::string> witness;     // rational eigenvalue splitting off a real form
  std::vector<Vector> real_form;          // basis of that real form (real type with witness)
};

/// Type of an irreducible complex module over a real Lie algebra, from the
/// commutant of its realification: C (complex), M_2(R) (real) or H (quaternionic).
inline RealTypeVerdict real_type(const Representation& w) {
  if (w.field() != Field::complex) throw std::invalid_argument("real_type: module must be complex");
  const Representation r = realify(w);
  const auto comm = commutant(r);
  RealTypeVerdict v;
  v.complex_dim = w.dim();
  v.commutant_dim = comm.size();
  if (comm.size() == 2) {
    v.kind = RealKind::complex;
    v.real_dim = 2 * w.dim();
    return v;
  }
  if (comm.size() != 4)
    throw std::runtime_error("real_type: commutant of dimension " + std::to_string(comm.size()) +
                             "; module is not irreducible");
  const std::size_t d = r.dim();
  // trace-free part of the commutant
  std::vector<Matrix> s;
  {
    Subspace span(d * d);
    for (const auto& t : comm) {
      Matrix u = t;
      u.add_scaled(-(t.trace() / Scalar(static_cast<long>(d))), Matrix::identity(d));
      if (span.insert(vec(u))) s.push_back(std::move(u));
    }
  }
  if (s.size() != 3) throw std::runtime_error("real_type: commutant does not contain the scalars");
  Matrix gram(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const Matrix sym = s[a] * s[b] + s[b] * s[a];
      const Scalar c = sym.trace() / Scalar(static_cast<long>(2 * d));
      Matrix check = Matrix::identity(d);
      check *= Scalar(2) * c;
      if (sym != check) throw std::runtime_error("real_type: commutant is not a quaternion algebra");
      gram(a, b) = c;
    }
  v.norm_form = signature(gram);
  if (v.norm_form->plus == 0 && v.norm_form->zero == 0) {
    v.kind = RealKind::quaternionic;
    v.real_dim = 2 * w.dim();
    return v;
  }
  v.kind = RealKind::real;
  v.real_dim = w.dim();
  // look for an element with a rational eigenvalue; its eigenspace is a real form
  std::vector<Matrix> scan = comm;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) scan.push_back(s[a] + s[b]);
  for (std::size_t idx = 0; idx < scan.size() && !v.witness; ++idx) {
    const Polynomial mp = min_poly(scan[idx]);
    if (mp.degree() != 2) continue;
    const Rational b = mp.coeffs[1].re(), c = mp.coeffs[0].re();
    const Rational disc = b * b - 4 * c;
    Rational root;
    if (sgn(disc) <= 0 || !rational_sqrt(disc, &root)) continue;
    const Rational lambda = (-b + root) / 2;
    Matrix shifted = scan[idx];
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= Scalar(lambda);
    auto ker = kernel(shifted);
    if (ker.size() == w.dim()) {
      v.witness = "commutant element " + std::to_string(idx) + " has eigenvalue " + lambda.get_str() +
                  " with invariant eigenspace of dimension " + std::to_string(ker.size());
      v.real_form = std::move(ker);
    }
  }
  return v;
}

/// Real module -> components paired across complex conjugation.
inline IsotypicDecomposition real_isotypic(const Representation& r) {
  if (r.field() != Field::real) throw std::invalid_argument("real_isotypic: module must be real");
  const Representation rc = complexify(r);
  const auto hw = highest_weight_vectors(rc);
  const auto& g = *r.algebra();
  std::map<Weight, const HighestWeightVectors*> by_weight;
  for (const auto& h : hw) by_weight[h.weight] = &h;
  IsotypicDecomposition out;
  out.field = Field::real;
  out.module_dim = r.dim();
  std::set<Weight> done;
  for (const auto& h : hw) {
    if (done.count(h.weight)) continue;
    const Weight cw = conjugate(h.weight);
    done.insert(h.weight);
    done.insert(cw);
    IsotypicComponent c;
    const long wdim = weyl_dim(h.weight.as_dominant());
    std::vector<Vector> block = generated_submodule(rc, h.vectors).basis;
    if (cw == h.weight) {
      c.weight = h.weight;
      c.basis = detail::real_span(block, r.dim());
      if (h.vectors.size() == 1) {
        c.kind = RealKind::real;
      } else {
        const auto one = generated_submodule(rc, h.vectors.front());
        c.kind = real_type(one.rep).kind;
      }
      c.dim = static_cast<std::size_t>(c.kind == RealKind::real ? wdim : 2 * wdim);
      c.multiplicity = c.basis.size() / c.dim;
    } else {
      auto it = by_weight.find(cw);
      if (it == by_weight.end() || it->second->vectors.size() != h.vectors.size())
        throw std::runtime_error("real_isotypic: conjugate of " + h.weight.str() + " missing or of different multiplicity");
      // representative: non-negative charge, else the smaller weight
      const bool keep = h.weight.charge ? *h.weight.charge > 0 : h.weight < cw;
      c.weight = keep ? h.weight : cw;
      c.kind = RealKind::complex;
      c.dim = static_cast<std::size_t>(2 * wdim);
      c.multiplicity = h.vectors.size();
      c.basis = detail::real_span(block, r.dim());
    }
    c.label = detail::real_label(g, c.weight);
    if (c.basis.size() != c.total_dim())
      throw std::runtime_error("real_isotypic: block " + c.label + " has real dimension " +
                               std::to_string(c.basis.size()) + ", expected " + std::to_string(c.total_dim()));
    out.components.push_back(std::move(c));
  }
  std::size_t total = 0;
  for (const auto& c : out.components) total += c.basis.size();
  if (total != r.dim()) throw std::runtime_error("real_isotypic: components do not span the module");
  return out;
}

/// Defects of a decomposition: dependent or non-spanning bases, non-invariant blocks.
inline std::optional<std::string> decomposition_defect(const Representation& r, const IsotypicDecomposition& d) {
  Subspace all(r.dim());
  std::size_t count = 0;
  for (const auto& c : d.components) {
    for (const auto& v : c.basis) {
      ++count;
      if (!all.insert(v)) return "component " + c.label + ": basis vectors are dependent";
    }
    Subspace block(r.dim());
    for (const auto& v : c.basis) block.insert(v);
    for (std::size_t k = 0; k < r.action().size(); ++k)
      for (const auto& v : c.basis)
        if (!block.contains(r.action(k) * v))
          return "component " + c.label + " is not invariant under X" + std::to_string(k);
  }
  if (count != r.dim()) return "components span dimension " + std::to_string(count) + " of " + std::to_string(r.dim());
  return std::nullopt;
}

struct BilinearFormSpace {
  std::vector<Matrix> all;
  std::vector<Matrix> symmetric;      // echelon-normalized: first non-zero entry is 1
  std::vector<Matrix> antisymmetric;  // echelon-normalized
  std::vector<Signature> signatures;  // of each symmetric generator
};

/// Real bilinear forms F with F rho(X) + rho(X)^T F = 0.
inline BilinearFormSpace invariant_bilinear_forms(const Representation& r) {
  if (r.field() != Field::real) throw std::invalid_argument("invariant_bilinear_forms: module must be real");
  const std::size_t d = r.dim();
  BilinearFormSpace out;
  out.all = solve_equivariant(
      d, d, r.action().size(),
      [&](const Matrix& f, std::size_t k) { return f * r.action(k) + r.action(k).transpose() * f; }, Field::real);
  std::vector<Vector> sym, anti;
  for (const auto& f : out.all) {
    sym.push_back(vec((f + f.transpose()) * Scalar::frac(1, 2)));
    anti.push_back(vec((f - f.transpose()) * Scalar::frac(1, 2)));
  }
  for (const auto& v : span_basis(sym, d * d)) out.symmetric.push_back(unvec(v, d, d));
  for (const auto& v : span_basis(anti, d * d)) out.antisymmetric.push_back(unvec(v, d, d));
  for (const auto& s : out.symmetric) out.signatures.push_back(signature(s));
  return out;
}

/// First (form, generator) pair violating invariance.
inline std::optional<std::string> form_invariance_defect(const Representation& r, const std::vector<Matrix>& forms) {
  for (std::size_t f = 0; f < forms.size(); ++f)
    for (std::size_t k = 0; k < r.action().size(); ++k)
      if (!(forms[f] * r.action(k) + r.action(k).transpose() * forms[f]).is_zero())
        return "form " + std::to_string(f) + " is not invariant under X" + std::to_string(k);
  return std::nullopt;
}

/// Is a a rational multiple c != 0 of b? Writes c.
inline bool proportional(const Matrix& a, const Matrix& b, Scalar* c = nullptr) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::optional<Scalar> ratio;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    const Scalar& x = a.data()[k];
    const Scalar& y = b.data()[k];
    if (y.is_zero()) {
      if (!x.is_zero()) return false;
      continue;
    }
    const Scalar q = x / y;
    if (ratio && *ratio != q) return false;
    ratio = q;
  }
  if (!ratio || ratio->is_zero()) return false;
  if (c) *c = *ratio;
  return true;
}

// ---- bracket bookkeeping ---------------------------------------------------------

struct BracketImage {
  std::set<std::size_t> hits;     // components with a non-zero projection
  std::size_t image_dim = 0;      // dimension of span{[x, y]}
  std::size_t hit_dim = 0;        // total dimension of the hit components

  bool fills_hits() const { return image_dim == hit_dim; }
};

/// Projects [sum of components a, sum of components b] onto each component of
/// a decomposition of g's own coordinate space.
inline BracketImage bracket_component_map(const MatrixLieAlgebra& g, const IsotypicDecomposition& d,
                                          const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (d.module_dim != g.dim()) throw std::invalid_argument("bracket_component_map: decomposition is not of g");
  for (auto i : a)
    if (i >= d.components.size()) throw std::out_of_range("bracket_component_map: component index");
  for (auto i : b)
    if (i >= d.components.size()) throw std::out_of_range("bracket_component_map: component index");
  std::vector<Vector> cols;
  std::vector<std::size_t> owner;
  for (std::size_t c = 0; c < d.components.size(); ++c)
    for (const auto& v : d.components[c].basis) {
      cols.push_back(v);
      owner.push_back(c);
    }
  if (cols.size() != g.dim()) throw std::invalid_argument("bracket_component_map: components do not span g");
  const auto inv = inverse(Matrix::from_columns(cols, g.dim()));
  if (!inv) throw std::invalid_argument("bracket_component_map: components are dependent");
  BracketImage out;
  Subspace image(g.dim());
  for (auto ca : a)
    for (auto cb : b)
      for (const auto& x : d.components[ca].basis)
        for (const auto& y : d.components[cb].basis) {
          const Vector z = g.bracket(x, y);
          if (is_zero(z)) continue;
          image.insert(z);
          const Vector coeffs = *inv * z;
          for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (!coeffs[k].is_zero()) out.hits.insert(owner[k]);
        }
  out.image_dim = image.dim();
  for (auto c : out.hits) out.hit_dim += d.components[c].basis.size();
  return out;
}

inline BracketImage bracket_component_map(const MatrixLieAlgebra& g, const IsotypicDecomposition& d, std::size_t a,
                                          std::size_t b) {
  return bracket_component_map(g, d, std::vector<std::size_t>{a}, std::vector<std::size_t>{b});
}

// ---- wedge^2 E and so(E) ----------------------------------------------------------

struct WedgeSoReport {
  AlgebraPtr so;
  std::vector<Matrix> images;  // image of e_a ^ e_b, a < b lexicographic
  std::vector<Vector> coords;  // the same images in so(E) coordinates
  bool bijective = false;
  bool equivariant = false;
  std::optional<std::string> witness;
};

/// u ^ v -> <., u> v - <., v> u, i.e. e_a ^ e_b -> (E_ba - E_ab) G.
inline WedgeSoReport wedge_so_isomorphism(const Matrix& gram, std::string name = {}) {
  WedgeSoReport out;
  out.so = orthogonal_algebra(gram, std::move(name));
  const std::size_t m = gram.rows();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Matrix x = (unit_matrix(m, b, a) - unit_matrix(m, a, b)) * gram;
      auto c = out.so->coordinates(x);
      if (!c) {
        out.witness = "image of e" + std::to_string(a) + "^e" + std::to_string(b) + " is not in so(E)";
        return out;
      }
      out.coords.push_back(std::move(*c));
      out.images.push_back(std::move(x));
    }
  const Matrix phi = Matrix::from_columns(out.coords, out.so->dim());
  out.bijective = phi.square() && rank(phi) == phi.rows();
  if (!out.bijective) out.witness = "map wedge2 E -> so(E) is not bijective";
  // phi o wedge2(X) = ad(X) o phi for every basis element X
  const Representation w = wedge2_rep(defining_rep(out.so));
  out.equivariant = true;
  for (std::size_t k = 0; k < out.so->dim(); ++k) {
    if (phi * w.action(k) != out.so->ad(k) * phi) {
      out.equivariant = false;
      if (!out.witness) out.witness = "equivariance fails for X" + std::to_string(k);
      break;
    }
  }
  return out;
}

// ---- symmetric pairs ---------------------------------------------------------------

struct SymmetricPairReport {
  std::string g_name;
  std::string h_name;
  std::vector<Vector> m_basis;  // in g coordinates
  bool h_m_in_m = false;
  bool m_m_in_h = false;
  std::optional<std::string> witness;
  Submodule m_module;  // m as an h-module
  Signature killing_on_m;
  Signature killing_on_h;
};

/// g = e(h) + m with m the Killing-orthogonal complement of e(h).
inline SymmetricPairReport symmetric_pair_check(const Embedding& e) {
  const auto& g = *e.target;
  const Matrix b = killing_form(g);
  const Matrix hcols = Matrix::from_columns(e.coords, g.dim());
  const Matrix bh = hcols.transpose() * b;  // rows: B(h_i, .)
  const Matrix restricted = bh * hcols;
  if (auto ker = kernel(restricted); !ker.empty())
    throw std::invalid_argument("symmetric_pair_check: Killing form of " + g.name() + " is degenerate on " +
                                e.source->name() + ", witness " + to_string(ker.front()));
  SymmetricPairReport out;
  out.g_name = g.name();
  out.h_name = e.source->name();
  out.m_basis = kernel(bh);
  out.killing_on_h = signature(restricted);
  {
    const Matrix mcols = Matrix::from_columns(out.m_basis, g.dim());
    out.killing_on_m = signature(mcols.transpose() * b * mcols);
  }
  Subspace mspace(g.dim()), hspace(g.dim());
  for (const auto& v : out.m_basis) mspace.insert(v);
  for (const auto& v : e.coords) hspace.insert(v);
  out.h_m_in_m = true;
  for (std::size_t i = 0; i < e.coords.size() && out.h_m_in_m; ++i)
    for (std::size_t j = 0; j < out.m_basis.size(); ++j)
      if (!mspace.contains(g.bracket(e.coords[i], out.m_basis[j]))) {
        out.h_m_in_m = false;
        out.witness = "[h" + std::to_string(i) + ", m" + std::to_string(j) + "] is not in m";
        break;
      }
  out.m_m_in_h = true;
  for (std::size_t i = 0; i < out.m_basis.size() && out.m_m_in_h; ++i)
    for (std::size_t j = i + 1; j < out.m_basis.size(); ++j)
      if (!hspace.contains(g.bracket(out.m_basis[i], out.m_basis[j]))) {
        out.m_m_in_h = false;
        if (!out.witness) out.witness = "[m" + std::to_string(i) + ", m" + std::to_string(j) + "] is not in h";
        break;
      }
  if (out.h_m_in_m) {
    // h acting on m by the bracket, in the echelon basis of m
    out.m_basis = mspace.basis();
    std::vector<Matrix> action;
    for (const auto& h : e.coords) {
      Matrix a(out.m_basis.size(), out.m_basis.size());
      for (std::size_t j = 0; j < out.m_basis.size(); ++j) {
        const Vector c = *mspace.coordinates(g.bracket(h, out.m_basis[j]));
        for (std::size_t i = 0; i < c.size(); ++i) a(i, j) = c[i];
      }
      action.push_back(std::move(a));
    }
    out.m_module = {Representation(e.source, std::move(action), Field::real, "m"), out.m_basis};
  }
  return out;
}

// ---- lowest dimensional real modules --------------------------------------------------

struct LowDimModule {
  std::string label;
  DominantWeight weight;     // representative highest weight
  long complex_dim = 0;
  std::size_t real_dim = 0;
  RealKind kind = RealKind::complex;
};

/// Non-trivial irreducible real su(p,q)-modules of dimension <= 2n + 1, from
/// the dominant weights of complex dimension <= 2(2n + 1).
inline std::vector<LowDimModule> lowest_dim_real_modules(int p, int q) {
  const int n = p + q;
  if (p < 1 || q < 1 || n < 3) throw std::invalid_argument("lowest_dim_real_modules: need p, q >= 1 and n >= 3");
  const std::size_t bound = static_cast<std::size_t>(2 * n + 1);
  std::vector<LowDimModule> out;
  std::optional<Representation> defining;
  for (const auto& wd : enumerate_dominant(n, 2 * static_cast<long>(bound))) {
    const auto& lam = wd.weight;
    if (lam.is_zero()) continue;
    const DominantWeight conj = conjugate(lam);
    if (!is_self_conjugate(lam)) {
      if (conj < lam) continue;  // counted with its conjugate
      if (2 * static_cast<std::size_t>(wd.dim) <= bound)
        out.push_back({"", lam, wd.dim, 2 * static_cast<std::size_t>(wd.dim), RealKind::complex});
      continue;
    }
    if (static_cast<std::size_t>(wd.dim) > bound) continue;  // real dimension >= complex dimension
    if (!defining) defining = defining_rep(p, q, true);
    const auto w = highest_weight_module(*defining, lam);
    const auto verdict = real_type(w.rep);
    if (verdict.real_dim <= bound) out.push_back({"", lam, wd.dim, verdict.real_dim, verdict.kind});
  }
  const auto g = unitary_algebra(p, q, true);
  for (auto& m : out) {
    Weight w;
    for (int k : m.weight.coeffs) w.labels.push_back(k);
    m.label = detail::real_label(*g, w);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.real_dim != b.real_dim) return a.real_dim < b.real_dim;
    return a.weight < b.weight;
  });
  return out;
}

}  // namespace liekit
