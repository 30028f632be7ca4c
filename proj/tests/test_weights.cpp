#include <gtest/gtest.h>

#include <map>
#include <set>

#include "testing.hpp"

using namespace liekit;

namespace {

// Oracle 1: integer product formula prod_{i<j} (sum_{k=i}^{j-1} (k_k + 1)) / (j - i).
long product_formula(const DominantWeight& w) {
  __int128 num = 1, den = 1;
  for (int i = 0; i < w.n; ++i)
    for (int j = i + 1; j < w.n; ++j) {
      __int128 s = 0;
      for (int k = i; k < j; ++k) s += w.coeffs[static_cast<std::size_t>(k)] + 1;
      num *= s;
      den *= j - i;
    }
  EXPECT_EQ(num % den, 0);
  return static_cast<long>(num / den);
}

// Oracle 2: number of Gelfand-Tsetlin patterns with top row the partition of w.
long gt_count(const std::vector<int>& row, std::map<std::vector<int>, long>& memo) {
  if (row.size() <= 1) return 1;
  if (auto it = memo.find(row); it != memo.end()) return it->second;
  long total = 0;
  std::vector<int> next(row.size() - 1);
  // row[k] >= next[k] >= row[k+1]
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == next.size()) {
      total += gt_count(next, memo);
      return;
    }
    for (int v = row[k + 1]; v <= row[k]; ++v) {
      next[k] = v;
      fill(k + 1);
    }
  };
  fill(0);
  memo[row] = total;
  return total;
}

long gt_dim(const DominantWeight& w) {
  std::vector<int> row(static_cast<std::size_t>(w.n), 0);
  for (int i = w.n - 2; i >= 0; --i) row[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i + 1)] + w.coeffs[static_cast<std::size_t>(i)];
  std::map<std::vector<int>, long> memo;
  return gt_count(row, memo);
}

}  // namespace

TEST(DominantWeight, ConstructionAndPrinting) {
  EXPECT_EQ(DominantWeight::zero(4).str(), "0");
  EXPECT_EQ((DominantWeight::fundamental(5, 1) + DominantWeight::fundamental(5, 3)).str(), "w1+w3");
  EXPECT_EQ((2 * DominantWeight::fundamental(4, 2)).str(), "2w2");
  EXPECT_THROW(DominantWeight(3, {1}), std::invalid_argument);
  EXPECT_THROW(DominantWeight(3, {1, -1}), std::invalid_argument);
  EXPECT_THROW(DominantWeight::fundamental(4, 4), std::invalid_argument);
}

TEST(DominantWeight, Conjugation) {
  const DominantWeight w(5, {1, 0, 2, 0});
  EXPECT_EQ(conjugate(w), DominantWeight(5, {0, 2, 0, 1}));
  EXPECT_TRUE(is_self_conjugate(DominantWeight::fundamental(4, 2)));
  EXPECT_FALSE(is_self_conjugate(DominantWeight::fundamental(4, 1)));
}

TEST(WeylDim, DefiningAndAdjoint) {
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(weyl_dim(DominantWeight::fundamental(n, 1)), n);
    EXPECT_EQ(weyl_dim(DominantWeight::fundamental(n, n - 1)), n);
    EXPECT_EQ(weyl_dim(DominantWeight::fundamental(n, 1) + DominantWeight::fundamental(n, n - 1)), n * n - 1);
  }
}

TEST(WeylDim, FundamentalsAreBinomials) {
  for (int n = 3; n <= 9; ++n) {
    long c = 1;
    for (int i = 1; i < n; ++i) {
      c = c * (n - i + 1) / i;
      EXPECT_EQ(weyl_dim(DominantWeight::fundamental(n, i)), c) << "n=" << n << " i=" << i;
    }
  }
  EXPECT_EQ(weyl_dim(DominantWeight::fundamental(6, 3)), 20);
  EXPECT_EQ(weyl_dim(DominantWeight::fundamental(8, 4)), 70);
}

TEST(WeylDim, QuarticFormulaAtRankThree) {
  for (int k = 0; k <= 5; ++k) {
    const long want = static_cast<long>((k + 1) * (k + 2) * (k + 2) * (k + 3) / 12);
    EXPECT_EQ(weyl_dim(k * DominantWeight::fundamental(4, 2)), want) << "k=" << k;
  }
  // frozen values of the same formula
  EXPECT_EQ(weyl_dim(2 * DominantWeight::fundamental(4, 2)), 20);
  EXPECT_EQ(weyl_dim(5 * DominantWeight::fundamental(4, 2)), 196);
}

TEST(WeylDim, AgreesWithProductFormulaAndPatternCount) {
  testkit::Gen g(5);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(g.integer(3, 6));
    std::vector<int> k(static_cast<std::size_t>(n - 1));
    for (auto& x : k) x = static_cast<int>(g.integer(0, n <= 4 ? 4 : 2));
    const DominantWeight w(n, k);
    const long d = weyl_dim(w);
    EXPECT_EQ(d, product_formula(w)) << w.str();
    EXPECT_EQ(d, gt_dim(w)) << w.str();
    EXPECT_EQ(d, weyl_dim(conjugate(w))) << w.str();
  }
}

TEST(WeylDim, ClaimOneBounds) {
  for (int n : {3, 5, 6, 7, 8}) {
    const long adj = weyl_dim(DominantWeight::fundamental(n, 1) + DominantWeight::fundamental(n, n - 1));
    for (int i = 1; 2 * i < n; ++i)
      EXPECT_GE(weyl_dim(DominantWeight::fundamental(n, i) + DominantWeight::fundamental(n, n - i)), adj);
  }
  for (int n : {6, 8}) EXPECT_GT(weyl_dim(DominantWeight::fundamental(n, n / 2)), 2 * n + 1);
}

TEST(Weights, RhoAndPairings) {
  for (int n = 3; n <= 6; ++n) {
    WeightVector sum{n, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
    for (int i = 1; i < n; ++i) sum = sum + fundamental_weight(n, i);
    EXPECT_EQ(sum, rho(n));
    for (int i = 1; i < n; ++i)
      for (int nu = 1; nu <= n; ++nu)
        for (int mu = nu + 1; mu <= n; ++mu)
          EXPECT_EQ(inner(fundamental_weight(n, i), root(n, nu, mu)), Rational(nu <= i && i < mu ? 1 : 0));
  }
}

TEST(Enumerate, MatchesBruteForce) {
  for (int n = 3; n <= 5; ++n) {
    const long bound = 4L * n + 2;
    std::set<std::vector<int>> brute;
    std::vector<int> k(static_cast<std::size_t>(n - 1), 0);
    // every coefficient is at most bound since dim W^{k w_i} >= k + 1
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == k.size()) {
        if (product_formula(DominantWeight(n, k)) <= bound) brute.insert(k);
        return;
      }
      for (int v = 0; v <= bound; ++v) {
        k[pos] = v;
        rec(pos + 1);
      }
      k[pos] = 0;
    };
    if (n <= 4) {
      rec(0);
      std::set<std::vector<int>> got;
      for (const auto& w : enumerate_dominant(n, bound)) got.insert(w.weight.coeffs);
      EXPECT_EQ(got, brute) << "n=" << n;
    }
    const auto list = enumerate_dominant(n, bound);
    EXPECT_TRUE(std::is_sorted(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; }));
    for (const auto& w : list) {
      EXPECT_LE(w.dim, bound);
      EXPECT_EQ(w.dim, weyl_dim(w.weight));
    }
  }
}

TEST(Enumerate, SmallListAtRankTwo) {
  // dims <= 8 for sl(3): 0, w1, w2, 2w1, 2w2, w1+w2
  const auto list = enumerate_dominant(3, 8);
  std::vector<std::string> names;
  for (const auto& w : list) names.push_back(w.weight.str() + ":" + std::to_string(w.dim));
  EXPECT_EQ(names, (std::vector<std::string>{"0:1", "w2:3", "2w2:6", "w1:3", "w1+w2:8", "2w1:6"}));
  EXPECT_THROW(enumerate_dominant(2, 8), std::invalid_argument);
}
