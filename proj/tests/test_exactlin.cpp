#include <gtest/gtest.h>

#include "testing.hpp"

using namespace liekit;

namespace {

Matrix diag(std::initializer_list<long> d) {
  Vector v;
  for (long x : d) v.emplace_back(x);
  return Matrix::diagonal(v);
}

bool is_kernel_of(const Matrix& a, const std::vector<Vector>& ker) {
  for (const auto& v : ker)
    if (!is_zero(a * v)) return false;
  return true;
}

}  // namespace

TEST(Scalar, GaussianArithmetic) {
  const Scalar i = Scalar::i();
  EXPECT_EQ(i * i, Scalar(-1));
  const Scalar a(Rational(1, 2), Rational(3));
  const Scalar b(Rational(-2), Rational(1, 3));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a + b - b, a);
  EXPECT_EQ(a.conj().conj(), a);
  EXPECT_EQ(a.norm(), Rational(37, 4));
  EXPECT_TRUE(Scalar().is_zero());
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_THROW(a / Scalar(), std::domain_error);
}

TEST(Scalar, AddMulMatchesProduct) {
  testkit::Gen g(7);
  for (int t = 0; t < 200; ++t) {
    const Scalar a = g.scalar(t % 2 ? Field::complex : Field::real);
    const Scalar b = g.scalar(t % 3 ? Field::complex : Field::real);
    Scalar acc = g.scalar(Field::complex);
    const Scalar want = acc + a * b;
    acc.add_mul(a, b);
    EXPECT_EQ(acc, want);
  }
}

TEST(Scalar, StringForm) {
  EXPECT_EQ(Scalar(Rational(-3, 4)).str(), "-3/4");
  EXPECT_EQ(Scalar::i().str(), "i");
  EXPECT_EQ(Scalar(Rational(1), Rational(-1)).str(), "1-i");
  EXPECT_EQ(Scalar().str(), "0");
}

TEST(Kernel, IdentityHasTrivialKernel) { EXPECT_TRUE(kernel(Matrix::identity(2)).empty()); }

TEST(Kernel, RowOneMinusOne) {
  const auto k = kernel(Matrix{{1, -1}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{Scalar(1), Scalar(1)}));
}

TEST(Kernel, AllOnesThreeByThree) {
  const Matrix a{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  const auto k = kernel(a);
  EXPECT_EQ(k.size(), 2u);
  EXPECT_TRUE(is_kernel_of(a, k));
  EXPECT_EQ(rank(a), 1u);
}

TEST(Kernel, ComplexEntries) {
  // rows (1, i) and (i, -1) are dependent over C
  Matrix a(2, 2, Field::complex);
  a(0, 0) = 1;
  a(0, 1) = Scalar::i();
  a(1, 0) = Scalar::i();
  a(1, 1) = -1;
  const auto k = kernel(a);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_kernel_of(a, k));
}

TEST(Inverse, RoundTripAndSingular) {
  const Matrix a{{2, 1}, {1, 1}};
  const auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, Matrix::identity(2));
  EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
}

TEST(Subspace, InsertReduceCoordinates) {
  Subspace s(3, true);
  EXPECT_TRUE(s.insert({Scalar(1), Scalar(1), Scalar(0)}));
  EXPECT_TRUE(s.insert({Scalar(0), Scalar(1), Scalar(1)}));
  EXPECT_FALSE(s.insert({Scalar(1), Scalar(2), Scalar(1)}));
  EXPECT_EQ(s.dim(), 2u);
  const Vector v{Scalar(2), Scalar(5), Scalar(3)};
  ASSERT_TRUE(s.contains(v));
  const auto c = s.original_coordinates(v);
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], Scalar(2));
  EXPECT_EQ((*c)[1], Scalar(3));
  EXPECT_FALSE(s.contains({Scalar(1), Scalar(0), Scalar(0)}));
}

TEST(CoordinateSolver, RejectsDependentFamily) {
  EXPECT_THROW(CoordinateSolver({{Scalar(1), Scalar(0)}, {Scalar(2), Scalar(0)}}, 2), std::invalid_argument);
  CoordinateSolver s({{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}}, 2);
  const auto c = s.solve({Scalar(3), Scalar(1)});
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], Scalar(2));
  EXPECT_EQ((*c)[1], Scalar(1));
}

TEST(Signature, Diagonal) { EXPECT_EQ(signature(diag({1, 1, -1})), (Signature{2, 1, 0})); }

TEST(Signature, ZeroMatrix) { EXPECT_EQ(signature(Matrix(4, 4)), (Signature{0, 0, 4})); }

TEST(Signature, RealifiedPseudoHermitianForm) {
  for (auto [p, q] : {std::pair{1, 2}, {2, 2}, {2, 3}, {1, 4}})
    EXPECT_EQ(signature(realified_gram(p, q)), (Signature{std::size_t(2 * p), std::size_t(2 * q), 0}));
}

TEST(Signature, NeedsPivotSwap) {
  // zero diagonal: hyperbolic plane
  EXPECT_EQ(signature(Matrix{{0, 1}, {1, 0}}), (Signature{1, 1, 0}));
  EXPECT_EQ(signature(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}), (Signature{1, 1, 1}));
}

TEST(Signature, RejectsBadInput) {
  EXPECT_THROW(signature(Matrix{{1, 2}, {3, 4}}), std::invalid_argument);
  Matrix c(1, 1, Field::complex);
  c(0, 0) = Scalar::i();
  EXPECT_THROW(signature(c), std::invalid_argument);
}

TEST(Eigenspaces, DiagonalCandidates) {
  const auto es = rational_eigenspaces(diag({1, 1, 2}), {Scalar(1), Scalar(2), Scalar(3)});
  ASSERT_EQ(es.size(), 3u);
  EXPECT_EQ(es[0].second.size(), 2u);
  EXPECT_EQ(es[1].second.size(), 1u);
  EXPECT_TRUE(es[2].second.empty());
}

TEST(Eigenspaces, NilpotentJordanBlock) {
  const auto es = rational_eigenspaces(Matrix{{0, 1}, {0, 0}}, {Scalar(0)});
  EXPECT_EQ(es[0].second.size(), 1u);
}

TEST(Eigenspaces, CartanOfSl3OnC3) {
  const auto cd = cartan_data(3);
  const auto es = rational_eigenspaces(cd.h[0], {Scalar(1), Scalar(-1), Scalar(0)});
  for (const auto& [c, basis] : es) EXPECT_EQ(basis.size(), 1u) << c.str();
}

TEST(MinPoly, Examples) {
  EXPECT_EQ(min_poly(Matrix::identity(3)), Polynomial::linear(Scalar(1)));
  EXPECT_EQ(min_poly(Matrix{{0, -1}, {1, 0}}), (Polynomial{{Scalar(1), Scalar(0), Scalar(1)}}));
  EXPECT_EQ(min_poly(diag({1, 2, 2})), Polynomial::linear(Scalar(1)) * Polynomial::linear(Scalar(2)));
  EXPECT_EQ(min_poly(Matrix{{0, 1}, {0, 0}}).degree(), 2);
}

TEST(MinPoly, Annihilates) {
  testkit::Gen g(11);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = g.matrix(4, 4, t % 2 ? Field::complex : Field::real, 0.5);
    const Polynomial m = min_poly(a);
    EXPECT_TRUE(m(a).is_zero());
    EXPECT_TRUE(m.coeffs.back().is_one());
  }
}

TEST(RankNullity, RandomMatrices) {
  testkit::Gen g(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 6));
    const std::size_t c = static_cast<std::size_t>(g.integer(1, 6));
    const Matrix a = g.matrix(r, c, t % 3 ? Field::real : Field::complex, 0.4);
    const auto k = kernel(a);
    EXPECT_EQ(rank(a) + k.size(), c);
    EXPECT_TRUE(is_kernel_of(a, k));
    EXPECT_EQ(independent_subset(k, c).size(), k.size());
  }
}
