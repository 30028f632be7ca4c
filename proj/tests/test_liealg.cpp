#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "testing.hpp"

using namespace liekit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::pair<int, int>> small_pq() { return {{1, 2}, {2, 2}, {1, 3}, {2, 3}}; }

}  // namespace

TEST(Algebras, Dimensions) {
  for (auto [p, q] : small_pq()) {
    const std::size_t n = static_cast<std::size_t>(p + q);
    EXPECT_EQ(unitary_algebra(p, q, false)->dim(), n * n);
    EXPECT_EQ(unitary_algebra(p, q, true)->dim(), n * n - 1);
    EXPECT_EQ(so_realified(p, q)->dim(), n * (2 * n - 1));
    EXPECT_EQ(so_extended(p, q, 1)->dim(), (2 * n + 1) * n);
    EXPECT_EQ(so_extended(p, q, 2)->dim(), (2 * n + 1) * n);
  }
  EXPECT_EQ(special_linear_algebra(4)->dim(), 15u);
  EXPECT_EQ(compact_unitary_algebra(3, true)->dim(), 8u);
  EXPECT_EQ(unitary_algebra(1, 2, true)->name(), "su(1,2)");
  EXPECT_EQ(so_extended(1, 2, 2)->name(), "so(3,4)");
}

TEST(Algebras, FrozenBasisOrderOfSu12) {
  const auto g = unitary_algebra(1, 2, true);
  const Scalar i = Scalar::i();
  Matrix h0(3, 3, Field::complex);
  h0(0, 0) = i;
  h0(1, 1) = -i;
  EXPECT_EQ(g->basis(0), h0);
  // eta = diag(1, -1, -1): eta_0 E_01 - eta_1 E_10 = E_01 + E_10
  Matrix x(3, 3, Field::complex);
  x(0, 1) = 1;
  x(1, 0) = 1;
  EXPECT_EQ(g->basis(2), x);
  // i(eta_0 E_01 + eta_1 E_10)
  Matrix y(3, 3, Field::complex);
  y(0, 1) = i;
  y(1, 0) = -i;
  EXPECT_EQ(g->basis(3), y);
}

TEST(Algebras, BasisSatisfiesDefiningRelation) {
  for (auto [p, q] : small_pq()) {
    for (const auto& g : {unitary_algebra(p, q, false), unitary_algebra(p, q, true)}) {
      const Matrix eta = ipq(p, q);
      for (const auto& x : g->basis()) {
        EXPECT_TRUE((x.adjoint() * eta + eta * x).is_zero());
        EXPECT_TRUE(g->preserves_form(x));
      }
    }
    for (const auto& g : {so_realified(p, q), so_extended(p, q, 1), so_extended(p, q, 2)})
      for (const auto& x : g->basis()) {
        EXPECT_TRUE((x.transpose() * *g->gram() + *g->gram() * x).is_zero());
        EXPECT_EQ(x.entries_field(), Field::real);
      }
  }
}

TEST(Algebras, StructureConstantsAndJacobi) {
  for (auto [p, q] : small_pq()) {
    for (const auto& g : {unitary_algebra(p, q, false), unitary_algebra(p, q, true), so_realified(p, q)}) {
      EXPECT_FALSE(structure_defect(*g)) << g->name();
      EXPECT_FALSE(jacobi_defect(*g)) << g->name();
    }
  }
  EXPECT_FALSE(jacobi_defect(*special_linear_algebra(3)));
}

TEST(Algebras, BracketAndAdAgreeWithMatrices) {
  testkit::Gen gen(21);
  const auto g = unitary_algebra(2, 3, true);
  for (int t = 0; t < 10; ++t) {
    const Vector x = gen.vector(g->dim()), y = gen.vector(g->dim());
    const Vector z = g->bracket(x, y);
    EXPECT_EQ(g->element(z), commutator(g->element(x), g->element(y)));
    EXPECT_EQ(*g->coordinates(g->element(x)), x);
  }
  for (std::size_t i = 0; i < g->dim(); i += 5) {
    const Matrix ad = g->ad(i);
    for (std::size_t j = 0; j < g->dim(); ++j)
      EXPECT_EQ(g->element(ad.column(j)), commutator(g->basis(i), g->basis(j)));
  }
}

TEST(Algebras, CoordinatesRejectNonMembers) {
  const auto g = unitary_algebra(1, 2, true);
  EXPECT_FALSE(g->coordinates(Matrix::identity(3, Field::complex)));
  EXPECT_FALSE(g->coordinates(Matrix::identity(2)));
}

TEST(Algebras, RejectBadParameters) {
  EXPECT_THROW(unitary_algebra(0, 3, true), std::invalid_argument);
  EXPECT_THROW(orthogonal_algebra(Matrix{{1, 2}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(orthogonal_algebra(Matrix{{1, 1}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(so_extended(1, 2, 3), std::invalid_argument);
}

TEST(Killing, SignatureOfSuPQ) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 3}}) {
    const auto g = unitary_algebra(p, q, true);
    const Signature s = signature(killing_form(*g));
    EXPECT_EQ(s, (Signature{std::size_t(2 * p * q), std::size_t(p * p + q * q - 1), 0})) << g->name();
  }
}

TEST(Killing, SignatureOfSo24) {
  // so(2,4): 8 non-compact, 1 + 6 compact directions
  EXPECT_EQ(signature(killing_form(*so_realified(1, 2))), (Signature{8, 7, 0}));
}

TEST(Killing, EqualsTwoNTraceOnSu) {
  // independent oracle: B(X, Y) = 2N tr(XY) on su(N)
  testkit::Gen gen(8);
  for (auto [p, q] : small_pq()) {
    const auto g = unitary_algebra(p, q, true);
    const Matrix b = killing_form(*g);
    const long n = p + q;
    for (int t = 0; t < 5; ++t) {
      const Vector x = gen.vector(g->dim()), y = gen.vector(g->dim());
      Scalar bxy;
      for (std::size_t i = 0; i < g->dim(); ++i)
        for (std::size_t j = 0; j < g->dim(); ++j) bxy.add_mul(x[i], b(i, j) * y[j]);
      EXPECT_EQ(bxy, Scalar(2 * n) * (g->element(x) * g->element(y)).trace());
    }
  }
}

TEST(Killing, AdInvariance) {
  for (auto [p, q] : small_pq()) {
    const auto g = unitary_algebra(p, q, true);
    EXPECT_FALSE(killing_invariance_defect(*g, killing_form(*g)));
    const auto so = so_realified(p, q);
    EXPECT_FALSE(killing_invariance_defect(*so, killing_form(*so)));
  }
}

TEST(Killing, RadicalOfUIsCentre) {
  for (auto [p, q] : small_pq()) {
    const auto u = unitary_algebra(p, q, false);
    const auto z = center(*u);
    ASSERT_EQ(z.size(), 1u);
    const Matrix iid = Scalar::i() * Matrix::identity(static_cast<std::size_t>(p + q), Field::complex);
    EXPECT_TRUE(proportional(u->element(z[0]), iid));
    EXPECT_EQ(kernel(killing_form(*u)).size(), 1u);
    EXPECT_TRUE(center(*unitary_algebra(p, q, true)).empty());
  }
}

TEST(Mutation, PerturbedConstantIsDetected) {
  const auto g = unitary_algebra(1, 2, true);
  for (std::size_t i = 0; i < g->dim(); i += 3)
    for (std::size_t j = 0; j < g->dim(); j += 2)
      for (std::size_t k = 0; k < g->dim(); k += 4) {
        const auto bad = g->with_perturbed_constant(i, j, k, Scalar(1));
        EXPECT_TRUE(structure_defect(*bad)) << i << " " << j << " " << k;
      }
  EXPECT_FALSE(structure_defect(*g));
}

TEST(Embeddings, PhiAndPsiPreserveBrackets) {
  for (auto [p, q] : small_pq()) {
    const auto phi = embed_phi(p, q);
    EXPECT_EQ(phi.name, "phi");
    EXPECT_EQ(phi.target->name(), "so(" + std::to_string(2 * p) + "," + std::to_string(2 * q) + ")");
    for (int v : {1, 2}) {
      const auto psi = embed_psi(p, q, v);
      const auto composed = compose(phi, block_inclusion(phi.target, psi.target, v == 1 ? 0 : 1));
      EXPECT_EQ(composed.images, psi.images);
    }
    testkit::Gen gen(static_cast<unsigned>(p * 10 + q));
    const auto& u = *phi.source;
    for (int t = 0; t < 3; ++t) {
      const Vector x = gen.vector(u.dim()), y = gen.vector(u.dim());
      EXPECT_EQ(phi.map(u.bracket(x, y)), phi.target->bracket(phi.map(x), phi.map(y)));
    }
  }
}

TEST(Embeddings, RealifyMatrixIsMultiplicative) {
  testkit::Gen gen(4);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = gen.matrix(3, 3, Field::complex), b = gen.matrix(3, 3, Field::complex);
    EXPECT_EQ(realify_matrix(a * b), realify_matrix(a) * realify_matrix(b));
  }
}

TEST(Embeddings, UnitaryInSpecial) {
  for (auto slot : {ExtraSlot::last, ExtraSlot::first}) {
    const auto e = embed_unitary_in_special(1, 2, slot);
    EXPECT_EQ(e.target->name(), slot == ExtraSlot::last ? "su(1,3)" : "su(2,2)");
    for (const auto& x : e.images) EXPECT_TRUE(x.trace().is_zero());
  }
}

TEST(Embeddings, RejectInvalidImages) {
  const auto su = unitary_algebra(1, 2, true);
  const auto so = so_realified(1, 2);
  std::vector<Matrix> wrong(su->dim(), Matrix(6, 6));
  EXPECT_THROW(make_embedding("zero", su, so, wrong), std::invalid_argument);
  std::vector<Matrix> too_few(2, Matrix(6, 6));
  EXPECT_THROW(make_embedding("short", su, so, too_few), std::invalid_argument);
  // images that do not preserve the form
  std::vector<Matrix> sym;
  for (const auto& x : su->basis()) sym.push_back(realify_matrix(x) + Matrix::identity(6));
  EXPECT_THROW(make_embedding("shifted", su, so, sym), std::invalid_argument);
}

TEST(Golden, Su12Algebra) {
  const std::string got = to_json(*unitary_algebra(1, 2, true)).dump(1) + "\n";
  const std::string want = read_file(std::string(LIEKIT_GOLDEN_DIR) + "/su_1_2.json");
  EXPECT_EQ(got, want);
}
