#include <gtest/gtest.h>

#include "testing.hpp"

using namespace liekit;

namespace {

// Oracle: characteristic polynomial by Faddeev-LeVerrier, low degree first.
std::vector<Rational> char_poly(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += Scalar(c[n - k + 1]);
    m = next;
    c[n - k] = -((a * m).trace().re()) / Rational(static_cast<long>(k));
  }
  return c;
}

std::size_t sign_changes(const std::vector<Rational>& c) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Symmetric matrices have real roots, so Descartes' rule counts them exactly.
Signature descartes_signature(const Matrix& s) {
  auto c = char_poly(s);
  std::size_t zero = 0;
  while (zero < c.size() && sgn(c[zero]) == 0) ++zero;
  std::vector<Rational> shifted(c.begin() + static_cast<long>(zero), c.end());
  std::vector<Rational> neg = shifted;
  for (std::size_t k = 0; k < neg.size(); ++k)
    if ((k + zero) % 2) neg[k] = -neg[k];
  return {sign_changes(shifted), sign_changes(neg), zero};
}

std::vector<AlgebraPtr> algebra_zoo() {
  return {unitary_algebra(1, 2, true), unitary_algebra(2, 2, false), unitary_algebra(1, 3, true),
          so_realified(1, 2),           special_linear_algebra(3),      compact_unitary_algebra(3, true)};
}

Scalar form(const Matrix& b, const Vector& x, const Vector& y) {
  Scalar out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out.add_mul(x[i], b(i, j) * y[j]);
  }
  return out;
}

}  // namespace

TEST(Sylvester, SignatureIsCongruenceInvariant) {
  testkit::Gen gen(2024);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    Matrix s = gen.symmetric(n);
    if (t % 4 == 0) s = s * Scalar(0);  // include degenerate forms
    if (t % 4 == 1 && n > 1) {
      // force a kernel
      for (std::size_t i = 0; i < n; ++i) {
        s(i, n - 1) = s(i, 0);
        s(n - 1, i) = s(0, i);
      }
      s(n - 1, n - 1) = s(0, 0);
    }
    const Matrix p = gen.invertible(n);
    const Signature base = signature(s);
    EXPECT_EQ(signature(p.transpose() * s * p), base);
    EXPECT_EQ(base.plus + base.minus + base.zero, n);
    EXPECT_EQ(base.zero, n - rank(s));
  }
}

TEST(Sylvester, AgreesWithDescartesOracle) {
  testkit::Gen gen(99);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    const Matrix s = gen.symmetric(n);
    EXPECT_EQ(signature(s), descartes_signature(s));
  }
}

TEST(Jacobi, RandomElements) {
  testkit::Gen gen(31);
  for (const auto& g : algebra_zoo()) {
    for (int t = 0; t < 5; ++t) {
      const Vector x = gen.vector(g->dim()), y = gen.vector(g->dim()), z = gen.vector(g->dim());
      Vector sum = g->bracket(x, g->bracket(y, z));
      const Vector b = g->bracket(y, g->bracket(z, x));
      const Vector c = g->bracket(z, g->bracket(x, y));
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b[i] + c[i];
      EXPECT_TRUE(is_zero(sum)) << g->name();
      Vector anti = g->bracket(x, y);
      const Vector yx = g->bracket(y, x);
      for (std::size_t i = 0; i < anti.size(); ++i) anti[i] += yx[i];
      EXPECT_TRUE(is_zero(anti)) << g->name();
    }
  }
}

TEST(Killing, InvariantOnRandomElements) {
  testkit::Gen gen(17);
  for (const auto& g : algebra_zoo()) {
    const Matrix b = killing_form(*g);
    EXPECT_EQ(b, b.transpose()) << g->name();
    for (int t = 0; t < 5; ++t) {
      const Vector x = gen.vector(g->dim()), y = gen.vector(g->dim()), z = gen.vector(g->dim());
      EXPECT_EQ(form(b, g->bracket(x, y), z), -form(b, y, g->bracket(x, z))) << g->name();
    }
  }
}

TEST(Functors, RespectBracketsOnRandomElements) {
  testkit::Gen gen(5);
  const auto su = unitary_algebra(2, 3, true);
  const Representation v = defining_rep(su);
  const auto phi = embed_phi(2, 3, true);
  const std::vector<Representation> zoo{v,         dual_rep(v),        conjugate_rep(v),
                                        wedge2_rep(v), tensor_rep(v, v), realify(v),
                                        adjoint_rep(su), restrict(adjoint_rep(phi.target), phi),
                                        direct_sum_rep(v, dual_rep(v))};
  for (const auto& r : zoo) {
    for (int t = 0; t < 3; ++t) {
      const Vector x = gen.vector(su->dim()), y = gen.vector(su->dim());
      EXPECT_EQ(r.act(su->bracket(x, y)), commutator(r.act(x), r.act(y))) << r.name();
    }
  }
}

TEST(Intertwiners, ConjugatedModuleIsIsomorphic) {
  testkit::Gen gen(12);
  const Representation r = realify(defining_rep(1, 2));
  for (int t = 0; t < 3; ++t) {
    const Matrix p = gen.invertible(r.dim());
    const Matrix pinv = *inverse(p);
    std::vector<Matrix> action;
    for (const auto& a : r.action()) action.push_back(p * a * pinv);
    const Representation s(r.algebra(), action, Field::real, "conjugated");
    EXPECT_FALSE(bracket_defect(s));
    const auto ts = intertwiners(r, s);
    EXPECT_EQ(ts.size(), 2u);
    for (const auto& x : ts)
      for (std::size_t k = 0; k < r.action().size(); ++k) EXPECT_EQ(x * r.action(k), s.action(k) * x);
    EXPECT_TRUE(isomorphic(r, s));
  }
}

TEST(Decomposition, DimensionsAddUp) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {1, 3}}) {
    const Representation r = wedge2_rep(realify(defining_rep(p, q, false)));
    const auto d = real_isotypic(r);
    std::size_t total = 0;
    for (const auto& c : d.components) total += c.total_dim();
    EXPECT_EQ(total, r.dim());
    EXPECT_FALSE(decomposition_defect(r, d));
  }
}
