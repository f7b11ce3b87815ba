#pragma once

// Connected signed graphs with least eigenvalue >= -2: realize A + 2I as the
// Gram matrix of roots of D_m or E_8, with an independently checkable
// certificate.

#include <ade/exactlin.hpp>
#include <ade/roots.hpp>
#include <ade/spectra.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace ade {

/// Input outside an operation's mathematical domain (as opposed to a
/// malformed request).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct EmbeddingCertificate {
  DynkinType intrinsic;            // type of the root system the vertices generate
  DynkinType ambient;              // D(m) for some m >= 2, or E8
  std::vector<RatVector> vectors;  // vertex i -> root of gen(ambient)
  std::size_t root_count = 0;      // size of the generated root system
};

/// A + 2I.
inline RatMatrix shifted_adjacency(const SignedGraph& g) { return shifted_adjacency(g, 2, 1); }

/// Trichotomy of A + 2I; Indefinite means the least eigenvalue of A is below -2.
inline Definiteness check_least_eigenvalue(const SignedGraph& g) { return definiteness(shifted_adjacency(g)); }

/// The vertices become the coefficient basis of the form A + 2I; their
/// reflection closure is an irreducible root system, which is classified and
/// mapped onto canonical coordinates, then included into D_m or E_8
/// (A_k sits inside D_{k+1} on the same coordinates; E_6, E_7 inside E_8).
inline EmbeddingCertificate embed(const SignedGraph& g) {
  if (!g.is_connected()) throw DomainError("graph is not connected");
  RatMatrix form = shifted_adjacency(g);
  if (definiteness(form) == Definiteness::Indefinite) throw DomainError("least eigenvalue below -2");

  const Space space = Space::form(std::move(form));
  std::vector<RootVector> gens;
  for (std::size_t i = 0; i < g.size(); ++i) {
    RatVector e(g.size());
    e[i] = 1;
    gens.emplace_back(space, std::move(e));
  }
  const RootSet phi = closure(gens);
  const CanonicalIsometry canon = detail::isometry_unchecked(phi);

  const DynkinType ambient = canon.type.family() == Family::A   ? DynkinType::D(canon.type.rank() + 1)
                             : canon.type.family() == Family::D ? canon.type
                                                                : DynkinType::E(8);
  EmbeddingCertificate cert{canon.type, ambient, {}, phi.size()};
  for (const auto& v : gens) cert.vectors.push_back(canon.isometry(v));
  return cert;
}

/// Recomputes the Gram matrix of the certificate against A + 2I and checks
/// that each vector is a root of the ambient system.
inline bool verify_certificate(const SignedGraph& g, const EmbeddingCertificate& c) {
  const bool ambient_ok = c.ambient.family() == Family::D ||
                          (c.ambient.family() == Family::E && c.ambient.rank() == 8);
  if (!ambient_ok || c.vectors.size() != g.size()) return false;
  const std::size_t dim = c.ambient.ambient_dimension();
  for (const auto& v : c.vectors)
    if (v.size() != dim) return false;

  const RatMatrix expected = shifted_adjacency(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j)
      if (dot(c.vectors[i], c.vectors[j]) != expected(i, j)) return false;

  const RootSet roots = gen(c.ambient);
  for (const auto& v : c.vectors)
    if (!roots.contains(RootVector(roots.space(), v))) return false;
  return true;
}

}  // namespace ade
