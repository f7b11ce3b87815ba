#pragma once

// Test-only helpers: floating-point eigenvalue cross-checks, exhaustive graph
// enumeration, random scrambles. Nothing here is used by the library.

#include <ade/ade.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace ade::testing {

inline double smallest_eigenvalue(const RatMatrix& m) {
  Eigen::MatrixXd a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// The exact trichotomy agrees with the sign of a floating lambda_min.
inline bool float_sign_agrees(Definiteness d, double lambda_min, double tol = 1e-9) {
  switch (d) {
    case Definiteness::PositiveDefinite: return lambda_min > tol;
    case Definiteness::PositiveSemidefiniteSingular: return std::abs(lambda_min) <= tol;
    case Definiteness::Indefinite: return lambda_min < -tol;
  }
  return false;
}

inline std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return p;
}

/// Calls fn on every connected unsigned labelled graph on n vertices.
inline void for_each_connected_graph(std::size_t n, const std::function<void(const SignedGraph&)>& fn) {
  const auto pairs = all_pairs(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    if (n > 1 && static_cast<std::size_t>(__builtin_popcountll(mask)) < n - 1) continue;
    SignedGraph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1U) g.add_edge(pairs[k].first, pairs[k].second);
    if (g.is_connected()) fn(g);
  }
}

/// Calls fn on every signing of every connected labelled graph on n vertices.
inline void for_each_connected_signed_graph(std::size_t n, const std::function<void(const SignedGraph&)>& fn) {
  for_each_connected_graph(n, [&](const SignedGraph& g) {
    const auto& edges = g.edges();
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << edges.size()); ++signs) {
      SignedGraph s(n);
      for (std::size_t k = 0; k < edges.size(); ++k) s.add_edge(edges[k].u, edges[k].v, signs >> k & 1U ? -1 : 1);
      fn(s);
    }
  });
}

/// Random permutation of coordinates combined with random sign flips.
inline RootSet signed_permutation(const RootSet& s, std::mt19937& rng) {
  const std::size_t d = s.space().dim();
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> sign(d);
  for (auto& x : sign) x = rng() % 2 ? 1 : -1;
  std::vector<RatVector> out;
  for (const auto& v : s) {
    RatVector w(d);
    for (std::size_t i = 0; i < d; ++i) w[perm[i]] = sign[i] * v.coords()[i];
    out.push_back(std::move(w));
  }
  return RootSet(s.space(), out);
}

/// Householder reflection x -> x - 2<x,w>/<w,w> w: exact, rational,
/// Gram-preserving.
inline RatVector householder(const RatVector& x, const RatVector& w) {
  const Rational c = 2 * dot(x, w) / dot(w, w);
  return x - c * w;
}

/// A random rational orthogonal scramble of a root set: a few Householder
/// reflections in small random integer directions, then a signed permutation.
inline RootSet gram_preserving_scramble(const RootSet& s, std::mt19937& rng, int reflections = 3) {
  const std::size_t d = s.space().dim();
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<RatVector> dirs;
  while (static_cast<int>(dirs.size()) < reflections) {
    RatVector w(d);
    for (auto& x : w) x = coef(rng);
    if (!is_zero(w)) dirs.push_back(std::move(w));
  }
  std::vector<RatVector> out;
  for (const auto& v : s) {
    RatVector x = v.coords();
    for (const auto& w : dirs) x = householder(x, w);
    out.push_back(std::move(x));
  }
  return signed_permutation(RootSet(s.space(), out), rng);
}

/// Random linearly independent subset of the E8 roots, of the given size.
inline std::vector<RootVector> random_independent_roots(std::size_t size, std::mt19937& rng) {
  const RootSet e8 = gen(DynkinType::E(8));
  std::vector<RootVector> picked;
  while (picked.size() < size) {
    const RootVector& r = e8[rng() % e8.size()];
    auto trial = picked;
    trial.push_back(r);
    if (rank(gram_matrix(trial)) == trial.size()) picked = std::move(trial);
  }
  return picked;
}

inline std::vector<DynkinType> canonical_types_up_to_rank8() {
  std::vector<DynkinType> ts;
  for (std::size_t n = 1; n <= 8; ++n) ts.push_back(DynkinType::A(n));
  for (std::size_t n = 4; n <= 8; ++n) ts.push_back(DynkinType::D(n));
  for (std::size_t n = 6; n <= 8; ++n) ts.push_back(DynkinType::E(n));
  return ts;
}

}  // namespace ade::testing
