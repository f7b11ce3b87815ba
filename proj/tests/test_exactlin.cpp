#include "support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace ade {
namespace {

RatMatrix triangle_form() { return RatMatrix::from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}); }

bool proportional(const RatVector& a, const RatVector& b) {
  // a, b nonzero; a = c b for some rational c
  std::size_t k = 0;
  while (k < b.size() && sgn(b[k]) == 0) ++k;
  if (k == b.size()) return false;
  const Rational c = a[k] / b[k];
  return a == c * b && sgn(c) != 0;
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RatMatrix::identity(2)), 2u);
  EXPECT_EQ(rank(RatMatrix(3, 3)), 0u);
  EXPECT_EQ(rank(triangle_form()), 2u);
}

TEST(Solve, Examples) {
  EXPECT_EQ(solve(RatMatrix::identity(2), {3, 5}), (RatVector{3, 5}));
  EXPECT_FALSE(solve(RatMatrix::from_rows({{1}, {1}}), {1, 2}).has_value());
  EXPECT_EQ(solve(RatMatrix::from_rows({{2, -1}, {-1, 2}}), {1, 1}), (RatVector{1, 1}));
}

TEST(Solve, RejectsWrongLength) {
  EXPECT_THROW(solve(RatMatrix::identity(2), {1}), std::invalid_argument);
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(RatMatrix::identity(3)).empty());

  const auto k = kernel_basis(triangle_form());
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(proportional(k[0], {1, 1, 1}));

  const auto c4 = kernel_basis(two_minus_adjacency(cycle_graph(4)));
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_TRUE(proportional(c4[0], {1, 1, 1, 1}));
}

TEST(Definiteness, Examples) {
  EXPECT_EQ(definiteness(RatMatrix::from_rows({{2, -1}, {-1, 2}})), Definiteness::PositiveDefinite);
  EXPECT_EQ(definiteness(triangle_form()), Definiteness::PositiveSemidefiniteSingular);
  EXPECT_EQ(definiteness(two_minus_adjacency(star_graph(5))), Definiteness::Indefinite);
}

TEST(Definiteness, EdgeCases) {
  EXPECT_THROW(definiteness(RatMatrix::from_rows({{1, 2}, {0, 1}})), std::invalid_argument);
  EXPECT_EQ(definiteness(RatMatrix(2, 2)), Definiteness::PositiveSemidefiniteSingular);
  // zero diagonal entry with a nonzero off-diagonal residual
  EXPECT_EQ(definiteness(RatMatrix::from_rows({{0, 1}, {1, 5}})), Definiteness::Indefinite);
  EXPECT_EQ(definiteness(RatMatrix::from_rows({{-1}})), Definiteness::Indefinite);
  // zero pivot appearing only after elimination: [[1,1],[1,1]] is PSD singular
  EXPECT_EQ(definiteness(RatMatrix::from_rows({{1, 1}, {1, 1}})), Definiteness::PositiveSemidefiniteSingular);
  EXPECT_EQ(definiteness(RatMatrix::from_rows({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}})), Definiteness::Indefinite);
}

// Brute force over a box: the oracle for short_vectors.
std::set<IntVector> brute_force_short(const RatMatrix& g, const Rational& target, long bound) {
  const std::size_t n = g.rows();
  std::set<IntVector> out;
  IntVector x(n, Integer(-bound));
  for (;;) {
    const RatVector xr = to_rational(x);
    if (dot(xr, g * xr) == target) out.insert(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound) x[i++] = -bound;
    if (i == n) break;
    x[i] += 1;
  }
  return out;
}

TEST(ShortVectors, Examples) {
  const auto one = short_vectors(RatMatrix::from_rows({{2}}), 2);
  EXPECT_EQ(one, (std::vector<IntVector>{{Integer(-1)}, {Integer(1)}}));

  const auto a2 = RatMatrix::from_rows({{2, -1}, {-1, 2}});
  const auto sv = short_vectors(a2, 2);
  EXPECT_EQ(sv.size(), 6u);
  EXPECT_EQ(std::set<IntVector>(sv.begin(), sv.end()), brute_force_short(a2, 2, 2));
}

TEST(ShortVectors, E8CartanHas240RootsMatchingCanonicalCoordinates) {
  const auto base = canonical_base(DynkinType::E(8));
  const RatMatrix b = RatMatrix::from_rows(base);
  const RatMatrix g = b * b.transpose();
  const auto sv = short_vectors(g, 2);
  ASSERT_EQ(sv.size(), 240u);
  // Mapped through the base coordinates they are exactly gen(E8).
  std::vector<RatVector> mapped;
  for (const auto& x : sv) mapped.push_back(b.transpose() * to_rational(x));
  EXPECT_EQ(RootSet(Space::ambient(8), mapped), gen(DynkinType::E(8)));
}

TEST(ShortVectors, RejectsNonPositiveDefinite) {
  EXPECT_THROW(short_vectors(triangle_form(), 2), std::invalid_argument);
}

TEST(ShortVectors, BruteForceAgreementOnRandomForms) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (int trial = 0; trial < 25; ++trial) {
    RatMatrix b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) b(i, j) = entry(rng) + (i == j ? 2 : 0);
    const RatMatrix g = b * b.transpose();
    if (definiteness(g) != Definiteness::PositiveDefinite) continue;
    for (long target : {2L, 3L, 5L}) {
      const auto sv = short_vectors(g, target);
      const std::set<IntVector> as_set(sv.begin(), sv.end());
      EXPECT_EQ(as_set.size(), sv.size()) << "duplicates";
      for (const auto& x : sv) {
        IntVector neg;
        for (const auto& c : x) neg.push_back(-c);
        EXPECT_TRUE(as_set.count(neg)) << "not closed under negation";
      }
      // x^T G x >= lambda_min |x|^2 bounds every coordinate.
      const double lmin = testing::smallest_eigenvalue(g);
      const long bound = static_cast<long>(std::ceil(std::sqrt(target / lmin))) + 1;
      if (bound <= 9) {
        EXPECT_EQ(as_set, brute_force_short(g, target, bound));
      }
    }
  }
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
  return m;
}

TEST(ExactLinearAlgebra, RankNullityAndKernelProperty) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const RatMatrix m = random_matrix(rng, r, c, -2, 2);
    const auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.size(), c);
    for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
    EXPECT_EQ(rank(RatMatrix::from_columns(k.empty() ? std::vector<RatVector>{RatVector(c)} : k)),
              k.empty() ? 0u : k.size());
  }
}

TEST(ExactLinearAlgebra, SolveProperty) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const RatMatrix m = random_matrix(rng, r, c, -3, 3);
    // b in the column space: must be solvable, and any solution reproduces b.
    RatVector x0(c);
    for (auto& x : x0) x = static_cast<int>(rng() % 7) - 3;
    const RatVector b = m * x0;
    const auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m * *x, b);
    // random b: solvable iff rank [M | b] == rank M.
    RatVector b2(r);
    for (auto& y : b2) y = static_cast<int>(rng() % 7) - 3;
    std::vector<RatVector> cols;
    for (std::size_t j = 0; j < c; ++j) cols.push_back(m.column(j));
    cols.push_back(b2);
    const bool consistent = rank(RatMatrix::from_columns(cols)) == rank(m);
    const auto y = solve(m, b2);
    EXPECT_EQ(y.has_value(), consistent);
    if (y) {
      EXPECT_EQ(m * *y, b2);
    }
  }
}

TEST(ExactLinearAlgebra, InverseProperty) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const RatMatrix m = random_matrix(rng, n, n, -3, 3);
    const auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), rank(m) == n);
    if (inv) {
      EXPECT_EQ(m * *inv, RatMatrix::identity(n));
    }
  }
}

TEST(Definiteness, IntegerAndRationalPathsAgree) {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const RatMatrix b = random_matrix(rng, n, n, -2, 2);
    const RatMatrix g = trial % 2 ? b * b.transpose() : b + b.transpose();
    // scaling by 1/3 keeps the trichotomy but forces rational entries
    const RatMatrix scaled = make_rational(1, 3) * g;
    EXPECT_EQ(definiteness(g), definiteness(scaled));
  }
}

TEST(Definiteness, FloatingCrossCheck) {
  std::mt19937 rng(14);
  int seen[3] = {0, 0, 0};
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    RatMatrix g(n, n);
    switch (trial % 3) {
      case 0: {  // arbitrary symmetric
        const RatMatrix b = random_matrix(rng, n, n, -3, 3);
        g = b + b.transpose();
        break;
      }
      case 1: {  // Gram of n vectors in fewer dimensions: singular
        const RatMatrix b = random_matrix(rng, n, n > 1 ? n - 1 : 1, -2, 2);
        g = b * b.transpose();
        break;
      }
      default: {  // generically positive definite
        const RatMatrix b = random_matrix(rng, n, n, -2, 2);
        g = b * b.transpose() + RatMatrix::identity(n);
        break;
      }
    }
    const Definiteness d = definiteness(g);
    ++seen[static_cast<int>(d)];
    const double lmin = testing::smallest_eigenvalue(g);
    EXPECT_TRUE(testing::float_sign_agrees(d, lmin)) << to_string(d) << " vs lambda_min " << lmin;
    if (d == Definiteness::PositiveDefinite) {
      EXPECT_EQ(rank(g), n);
    }
    if (d == Definiteness::PositiveSemidefiniteSingular) {
      const auto k = kernel_basis(g);
      EXPECT_FALSE(k.empty());
    }
  }
  for (int c : seen) EXPECT_GT(c, 0);
}

}  // namespace
}  // namespace ade
