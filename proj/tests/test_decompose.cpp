#include <gtest/gtest.h>

#include <map>
#include <set>

#include "testing.hpp"

using namespace liekit;

namespace {

std::vector<std::string> labels(const IsotypicDecomposition& d) {
  std::vector<std::string> out;
  for (const auto& c : d.components) out.push_back(c.label);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::string, std::size_t> label_dims(const IsotypicDecomposition& d) {
  std::map<std::string, std::size_t> out;
  for (const auto& c : d.components) out[c.label] += c.total_dim();
  return out;
}

}  // namespace

TEST(Weights, DefiningModuleOfSu12) {
  const Representation v = defining_rep(1, 2);
  const auto ws = weight_spaces(v, cartan_images(v));
  std::set<std::vector<long>> got;
  for (const auto& w : ws) {
    EXPECT_EQ(w.basis.size(), 1u);
    EXPECT_FALSE(w.weight.charge);
    got.insert(w.weight.labels);
  }
  EXPECT_EQ(got, (std::set<std::vector<long>>{{1, 0}, {-1, 1}, {0, -1}}));
}

TEST(Weights, ChargeOverU) {
  const auto hw = highest_weight_vectors(defining_rep(1, 2, false));
  ASSERT_EQ(hw.size(), 1u);
  EXPECT_EQ(hw[0].weight.str(), "[1,0]q1");
  EXPECT_EQ(conjugate(hw[0].weight).str(), "[0,1]q-1");
  const auto dual = highest_weight_vectors(dual_rep(defining_rep(1, 2, false)));
  ASSERT_EQ(dual.size(), 1u);
  EXPECT_EQ(dual[0].weight, conjugate(hw[0].weight));
}

TEST(Weights, AdjointHighestWeight) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {1, 4}}) {
    const auto hw = highest_weight_vectors(complexify(adjoint_rep(unitary_algebra(p, q, true))));
    ASSERT_EQ(hw.size(), 1u);
    const int n = p + q;
    EXPECT_EQ(hw[0].weight.as_dominant(), DominantWeight::fundamental(n, 1) + DominantWeight::fundamental(n, n - 1));
  }
}

TEST(ComplexIsotypic, TensorProducts) {
  const Representation v = defining_rep(1, 2);
  const auto a = complex_isotypic(tensor_rep(v, dual_rep(v)));
  EXPECT_EQ(labels(a), (std::vector<std::string>{"W^0", "W^w1+w2"}));
  EXPECT_FALSE(decomposition_defect(tensor_rep(v, dual_rep(v)), a));
  const auto b = complex_isotypic(tensor_rep(v, v));
  EXPECT_EQ(label_dims(b), (std::map<std::string, std::size_t>{{"W^2w1", 6}, {"W^w2", 3}}));
}

TEST(ComplexIsotypic, Multiplicity) {
  const Representation v = defining_rep(1, 3);
  const auto d = complex_isotypic(direct_sum_rep(v, v));
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0].multiplicity, 2u);
  EXPECT_EQ(d.components[0].dim, 4u);
}

TEST(RealType, ExamplesOfEachKind) {
  const auto cpq = real_type(defining_rep(1, 2));
  EXPECT_EQ(cpq.kind, RealKind::complex);
  EXPECT_EQ(cpq.commutant_dim, 2u);
  EXPECT_EQ(cpq.real_dim, 6u);

  const auto w22 = real_type(wedge2_rep(defining_rep(2, 2)));
  EXPECT_EQ(w22.kind, RealKind::real);
  EXPECT_EQ(w22.real_dim, 6u);
  EXPECT_EQ(w22.norm_form, (Signature{2, 1, 0}));
  ASSERT_TRUE(w22.witness);
  EXPECT_EQ(w22.real_form.size(), 6u);
  // the witness eigenspace is a real submodule of the realification
  EXPECT_NO_THROW(restrict_to_subspace(realify(wedge2_rep(defining_rep(2, 2))), w22.real_form));

  const auto w13 = real_type(wedge2_rep(defining_rep(1, 3)));
  EXPECT_EQ(w13.kind, RealKind::quaternionic);
  EXPECT_EQ(w13.real_dim, 12u);
  EXPECT_EQ(w13.norm_form, (Signature{0, 3, 0}));

  const auto adj = real_type(complexify(adjoint_rep(unitary_algebra(1, 2, true))));
  EXPECT_EQ(adj.kind, RealKind::real);
  EXPECT_EQ(adj.real_dim, 8u);
}

TEST(RealType, RejectsReducibleAndReal) {
  const Representation v = defining_rep(1, 2);
  EXPECT_THROW(real_type(direct_sum_rep(v, v)), std::runtime_error);
  EXPECT_THROW(real_type(realify(v)), std::invalid_argument);
}

TEST(RealIsotypic, WedgeOfRealifiedDefining) {
  const auto u = unitary_algebra(1, 2, false);
  const Representation w = wedge2_rep(realify(defining_rep(u)));
  const auto d = real_isotypic(w);
  EXPECT_EQ(label_dims(d), (std::map<std::string, std::size_t>{{"R", 1}, {"su(1,2)", 8}, {"(wedge2 C^n)_R", 6}}));
  EXPECT_FALSE(decomposition_defect(w, d));
  for (const auto& c : d.components) {
    const RealKind want = c.label == "(wedge2 C^n)_R" ? RealKind::complex : RealKind::real;
    EXPECT_EQ(c.kind, want) << c.label;
  }
}

TEST(RealIsotypic, QuaternionicBlockOverSu13) {
  const Representation w = realify(wedge2_rep(defining_rep(1, 3)));
  const auto d = real_isotypic(w);
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0].kind, RealKind::quaternionic);
  EXPECT_EQ(d.components[0].total_dim(), 12u);
}

TEST(RealIsotypic, DefectCatchesBrokenBlock) {
  const auto u = unitary_algebra(1, 2, false);
  const Representation w = wedge2_rep(realify(defining_rep(u)));
  auto d = real_isotypic(w);
  d.components[0].basis.push_back(d.components[1].basis.front());
  EXPECT_TRUE(decomposition_defect(w, d));
}

TEST(Forms, RealifiedDefining) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
    const Representation r = realify(defining_rep(p, q, false));
    const auto f = invariant_bilinear_forms(r);
    EXPECT_EQ(f.all.size(), 2u);
    ASSERT_EQ(f.symmetric.size(), 1u);
    ASSERT_EQ(f.antisymmetric.size(), 1u);
    EXPECT_TRUE(proportional(f.symmetric[0], realified_gram(p, q)));
    EXPECT_EQ(f.signatures[0].plus + f.signatures[0].minus, static_cast<std::size_t>(2 * (p + q)));
    EXPECT_FALSE(form_invariance_defect(r, f.all));
  }
}

TEST(Forms, KillingIsTheOnlyFormOnTheAdjoint) {
  const auto g = unitary_algebra(1, 2, true);
  const auto f = invariant_bilinear_forms(adjoint_rep(g));
  ASSERT_EQ(f.symmetric.size(), 1u);
  EXPECT_TRUE(f.antisymmetric.empty());
  EXPECT_TRUE(proportional(f.symmetric[0], killing_form(*g)));
}

TEST(Forms, Proportional) {
  Scalar c;
  EXPECT_TRUE(proportional(Matrix{{2, 0}, {0, -4}}, Matrix{{1, 0}, {0, -2}}, &c));
  EXPECT_EQ(c, Scalar(2));
  EXPECT_FALSE(proportional(Matrix{{2, 0}, {0, 4}}, Matrix{{1, 0}, {0, -2}}));
  EXPECT_FALSE(proportional(Matrix(2, 2), Matrix{{1, 0}, {0, 1}}));
  EXPECT_FALSE(proportional(Matrix{{1, 1}, {0, 1}}, Matrix{{1, 0}, {0, 1}}));
}

TEST(Intertwiners, IsomorphismClasses) {
  const Representation v = defining_rep(1, 2);
  EXPECT_TRUE(isomorphic(v, v));
  EXPECT_FALSE(isomorphic(v, dual_rep(v)));
  EXPECT_TRUE(isomorphic(conjugate_rep(v), dual_rep(v)));
  EXPECT_EQ(commutant(v).size(), 1u);
  EXPECT_EQ(commutant(direct_sum_rep(v, v)).size(), 4u);
  EXPECT_EQ(intertwiners(v, wedge2_rep(v)).size(), 0u);
}

TEST(BracketMap, PhiDecomposition) {
  const auto phi = embed_phi(1, 2);
  const auto d = real_isotypic(restrict(adjoint_rep(phi.target), phi));
  const auto su = *d.find("su(1,2)"), r = *d.find("R"), w = *d.find("(wedge2 C^n)_R");
  const auto ww = bracket_component_map(*phi.target, d, w, w);
  EXPECT_EQ(ww.hits, (std::set<std::size_t>{su, r}));
  EXPECT_TRUE(ww.fills_hits());
  const auto rw = bracket_component_map(*phi.target, d, r, w);
  EXPECT_EQ(rw.hits, (std::set<std::size_t>{w}));
  EXPECT_EQ(bracket_component_map(*phi.target, d, su, r).hits, (std::set<std::size_t>{}));
}

TEST(WedgeSo, IsomorphismForSeveralForms) {
  Vector d4{Scalar(1), Scalar(1), Scalar(1), Scalar(-1)};
  for (const Matrix& gram : {realified_gram(1, 2), realified_gram(2, 2), Matrix::diagonal(d4), Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}) {
    const auto r = wedge_so_isomorphism(gram);
    EXPECT_TRUE(r.bijective);
    EXPECT_TRUE(r.equivariant);
    EXPECT_FALSE(r.witness);
    EXPECT_EQ(r.images.size(), gram.rows() * (gram.rows() - 1) / 2);
  }
}

TEST(SymmetricPair, UInSuLastSlot) {
  const auto r = symmetric_pair_check(embed_unitary_in_special(1, 2, ExtraSlot::last));
  EXPECT_EQ(r.g_name, "su(1,3)");
  EXPECT_TRUE(r.h_m_in_m);
  EXPECT_TRUE(r.m_m_in_h);
  EXPECT_EQ(r.m_basis.size(), 6u);
  EXPECT_EQ(r.killing_on_m, (Signature{2, 4, 0}));
  EXPECT_EQ(r.killing_on_h, (Signature{4, 5, 0}));
  EXPECT_EQ(labels(real_isotypic(r.m_module.rep)), (std::vector<std::string>{"C^{1,2}_R"}));
  EXPECT_FALSE(bracket_defect(r.m_module.rep));
}

TEST(SymmetricPair, PsiIsNotSymmetric) {
  const auto r = symmetric_pair_check(embed_psi(1, 2, 1));
  EXPECT_TRUE(r.h_m_in_m);
  EXPECT_FALSE(r.m_m_in_h);
  ASSERT_TRUE(r.witness);
  EXPECT_NE(r.witness->find("is not in h"), std::string::npos);
  EXPECT_EQ(r.m_basis.size(), 12u);
}

TEST(LowestDim, RealModules) {
  auto names = [](int p, int q) {
    std::vector<std::string> out;
    for (const auto& m : lowest_dim_real_modules(p, q))
      out.push_back(m.label + ":" + std::to_string(m.real_dim) + ":" + to_string(m.kind));
    return out;
  };
  EXPECT_EQ(names(1, 2), (std::vector<std::string>{"C^{1,2}_R:6:complex"}));
  EXPECT_EQ(names(2, 2), (std::vector<std::string>{"(wedge2 C^n)_R:6:real", "C^{2,2}_R:8:complex"}));
  EXPECT_EQ(names(1, 3), (std::vector<std::string>{"C^{1,3}_R:8:complex"}));
  EXPECT_EQ(names(2, 3), (std::vector<std::string>{"C^{2,3}_R:10:complex"}));
  EXPECT_THROW(lowest_dim_real_modules(0, 3), std::invalid_argument);
  EXPECT_THROW(lowest_dim_real_modules(1, 1), std::invalid_argument);
}
