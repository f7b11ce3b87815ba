#pragma once

// Simply laced root systems: vectors in an ambient coordinate space or in
// the coefficient space of an integral Gram form, reflection closure, base
// extraction, classification and isometries onto the canonical A/D/E
// coordinates.

#include <ade/dynkin.hpp>
#include <ade/exactlin.hpp>
#include <ade/spectra.hpp>

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ade {

/// A precondition failure naming every offending input (by index into the
/// argument list) or pair of inputs.
class PreconditionError : public std::invalid_argument {
 public:
  struct Violation {
    std::size_t first;
    std::optional<std::size_t> second;
    std::string what;
  };

  PreconditionError(const std::string& context, std::vector<Violation> violations)
      : std::invalid_argument(render(context, violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  static std::string render(const std::string& context, const std::vector<Violation>& vs) {
    std::string s = context;
    for (const auto& v : vs) {
      s += "\n  vector " + std::to_string(v.first);
      if (v.second) s += " and vector " + std::to_string(*v.second);
      s += ": " + v.what;
    }
    return s;
  }

  std::vector<Violation> violations_;
};

/// Either R^dim with the standard inner product, or Z^dim carrying an integral
/// positive semidefinite Gram form with diagonal 2. In a form space two
/// coefficient vectors u, v denote the same element iff G(u - v) = 0.
class Space {
 public:
  Space() = default;

  static Space ambient(std::size_t dim) {
    Space s;
    s.dim_ = dim;
    return s;
  }

  static Space form(RatMatrix gram) {
    if (!gram.is_symmetric()) throw std::invalid_argument("Space::form: Gram matrix is not symmetric");
    for (std::size_t i = 0; i < gram.rows(); ++i) {
      if (gram(i, i) != 2) throw std::invalid_argument("Space::form: diagonal entries must be 2");
      for (std::size_t j = 0; j < gram.cols(); ++j)
        if (!is_integer(gram(i, j))) throw std::invalid_argument("Space::form: entries must be integers");
    }
    if (definiteness(gram) == Definiteness::Indefinite)
      throw std::invalid_argument("Space::form: Gram matrix is not positive semidefinite");
    Space s;
    s.dim_ = gram.rows();
    s.gram_ = std::make_shared<const RatMatrix>(std::move(gram));
    return s;
  }

  bool is_ambient() const noexcept { return !gram_; }
  std::size_t dim() const noexcept { return dim_; }

  /// The Gram matrix of the coordinate basis (identity for ambient spaces).
  RatMatrix gram() const { return gram_ ? *gram_ : RatMatrix::identity(dim_); }

  /// G v: the vector of inner products of v with the coordinate basis.
  RatVector image(const RatVector& v) const { return gram_ ? (*gram_) * v : v; }

  friend bool operator==(const Space& a, const Space& b) {
    if (a.dim_ != b.dim_ || a.is_ambient() != b.is_ambient()) return false;
    return a.is_ambient() || a.gram_ == b.gram_ || *a.gram_ == *b.gram_;
  }

 private:
  std::size_t dim_ = 0;
  std::shared_ptr<const RatMatrix> gram_;
};

/// A vector of a Space. It caches its image G v, which serves both as the
/// equality/ordering key and as the left factor of inner products.
class RootVector {
 public:
  RootVector(Space space, RatVector coords) : space_(std::move(space)), coords_(std::move(coords)) {
    if (coords_.size() != space_.dim()) throw std::invalid_argument("RootVector: wrong number of coordinates");
    if (!space_.is_ambient()) {
      if (!all_integers(coords_)) throw std::invalid_argument("RootVector: form coefficients must be integers");
      key_ = space_.image(coords_);
    }
  }

  const Space& space() const noexcept { return space_; }
  const RatVector& coords() const noexcept { return coords_; }
  const RatVector& key() const noexcept { return space_.is_ambient() ? coords_ : key_; }
  Rational norm2() const { return dot(key(), coords_); }

  RootVector operator-() const { return RootVector(space_, -coords_, space_.is_ambient() ? RatVector{} : -key_); }

  /// this + s * other, computed linearly on both coordinates and key.
  RootVector plus_multiple(const Rational& s, const RootVector& other) const {
    RatVector c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sgn(other.coords_[i]) != 0) c[i] += s * other.coords_[i];
    RatVector k;
    if (!space_.is_ambient()) {
      k = key_;
      for (std::size_t i = 0; i < k.size(); ++i)
        if (sgn(other.key_[i]) != 0) k[i] += s * other.key_[i];
    }
    return RootVector(space_, std::move(c), std::move(k));
  }

  friend RootVector operator+(const RootVector& a, const RootVector& b) { return a.plus_multiple(1, b); }
  friend RootVector operator-(const RootVector& a, const RootVector& b) { return a.plus_multiple(-1, b); }

  friend bool operator==(const RootVector& a, const RootVector& b) {
    return a.space_ == b.space_ && a.key() == b.key();
  }
  friend bool operator<(const RootVector& a, const RootVector& b) { return a.key() < b.key(); }

 private:
  RootVector(Space space, RatVector coords, RatVector key)
      : space_(std::move(space)), coords_(std::move(coords)), key_(std::move(key)) {}

  Space space_;
  RatVector coords_;
  RatVector key_;
};

inline Rational inner_product(const RootVector& x, const RootVector& y) {
  if (!(x.space() == y.space())) throw std::invalid_argument("inner_product: vectors live in different spaces");
  return dot(x.key(), y.coords());
}

/// x - <x,y> y.
inline RootVector reflect(const RootVector& x, const RootVector& y) {
  const Rational ip = inner_product(x, y);
  if (!is_integer(ip)) throw std::invalid_argument("reflect: inner product " + to_string(ip) + " is not an integer");
  if (sgn(ip) == 0) return x;
  return x.plus_multiple(-ip, y);
}

/// Finite deduplicated set of vectors sharing one space, kept sorted by key.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(Space space) : space_(std::move(space)) {}

  RootSet(Space space, const std::vector<RatVector>& coords) : space_(std::move(space)) {
    elems_.reserve(coords.size());
    for (const auto& c : coords) elems_.emplace_back(space_, c);
    normalize();
  }

  RootSet(Space space, std::vector<RootVector> vectors) : space_(std::move(space)), elems_(std::move(vectors)) {
    for (const auto& v : elems_)
      if (!(v.space() == space_)) throw std::invalid_argument("RootSet: vectors live in different spaces");
    normalize();
  }

  const Space& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const RootVector& operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }
  const std::vector<RootVector>& elements() const noexcept { return elems_; }

  bool contains(const RootVector& v) const {
    if (!(v.space() == space_)) return false;
    const auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    return it != elems_.end() && it->key() == v.key();
  }

  friend bool operator==(const RootSet& a, const RootSet& b) {
    if (a.size() != b.size() || !(a.space_ == b.space_)) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.elems_[i].key() != b.elems_[i].key()) return false;
    return true;
  }

 private:
  void normalize() {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end(),
                             [](const RootVector& a, const RootVector& b) { return a.key() == b.key(); }),
                 elems_.end());
  }

  Space space_;
  std::vector<RootVector> elems_;
};

inline RatMatrix gram_matrix(std::span<const RootVector> vs) {
  RatMatrix g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) g(i, j) = g(j, i) = inner_product(vs[i], vs[j]);
  return g;
}

/// Norm and integrality violations: squared norms must be 2 and pairwise
/// inner products integers.
inline std::vector<PreconditionError::Violation> admissibility_violations(std::span<const RootVector> vs) {
  std::vector<PreconditionError::Violation> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Rational n = vs[i].norm2();
    if (n != 2) out.push_back({i, std::nullopt, "squared norm " + to_string(n) + ", expected 2"});
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Rational ip = inner_product(vs[i], vs[j]);
      if (!is_integer(ip)) out.push_back({i, j, "inner product " + to_string(ip) + " is not an integer"});
    }
  return out;
}

/// Nonempty, norms 2, integral, and closed under every reflection.
inline bool is_root_system(const RootSet& x) {
  if (x.empty()) return false;
  for (const auto& a : x)
    if (a.norm2() != 2 || !x.contains(-a)) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Rational ip = inner_product(x[i], x[j]);
      if (sgn(ip) == 0) continue;
      if (!is_integer(ip)) return false;
      if (!x.contains(x[i].plus_multiple(-ip, x[j])) || !x.contains(x[j].plus_multiple(-ip, x[i]))) return false;
    }
  return true;
}

/// G[S]: one vertex per vector, an edge where the inner product is nonzero,
/// signed by the sign of the inner product.
inline SignedGraph graph_of(std::span<const RootVector> vs) {
  SignedGraph g(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const int s = sgn(inner_product(vs[i], vs[j]));
      if (s != 0) g.add_edge(i, j, s);
    }
  return g;
}

inline SignedGraph graph_of(const RootSet& s) { return graph_of(std::span<const RootVector>(s.elements())); }

/// Connected components of G[S], ordered by their smallest element.
inline std::vector<RootSet> components(const RootSet& s) {
  std::vector<RootSet> out;
  for (const auto& comp : graph_of(s).components()) {
    std::vector<RootVector> vs;
    for (std::size_t i : comp) vs.push_back(s[i]);
    out.emplace_back(s.space(), std::move(vs));
  }
  return out;
}

/// Linearly independent with all distinct pairwise inner products <= 0.
inline bool is_obtuse(std::span<const RootVector> vs) {
  const RatMatrix g = gram_matrix(vs);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (sgn(g(i, j)) > 0) return false;
  return rank(g) == vs.size();
}

inline bool is_obtuse(const RootSet& s) { return is_obtuse(std::span<const RootVector>(s.elements())); }

/// Reflection closure: the smallest set containing the generators and closed
/// under x -> x - <x,y> y. For admissible generators this is the set of
/// norm-2 vectors of the lattice they generate, and it is finite.
inline RootSet closure(std::span<const RootVector> gens) {
  if (gens.empty()) throw PreconditionError("closure: empty generating set", {});
  const Space space = gens.front().space();
  for (const auto& g : gens)
    if (!(g.space() == space)) throw std::invalid_argument("closure: generators live in different spaces");
  if (auto bad = admissibility_violations(gens); !bad.empty())
    throw PreconditionError("closure: generators are not admissible", std::move(bad));

  std::vector<RootVector> roots;
  std::set<RatVector> seen;
  auto add = [&](RootVector v) {
    if (seen.insert(v.key()).second) roots.push_back(std::move(v));
  };
  for (const auto& g : gens) {
    add(g);
    add(-g);
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Rational ip = inner_product(roots[i], roots[j]);
      if (sgn(ip) == 0) continue;
      RootVector a = roots[i].plus_multiple(-ip, roots[j]);
      RootVector b = roots[j].plus_multiple(-ip, roots[i]);
      add(std::move(a));
      add(std::move(b));
    }
  return RootSet(space, std::move(roots));
}

inline RootSet closure(const RootSet& s) { return closure(std::span<const RootVector>(s.elements())); }

// Canonical systems --------------------------------------------------------

namespace detail {

inline RatVector unit_combo(std::size_t dim, std::initializer_list<std::pair<std::size_t, long>> terms) {
  RatVector v(dim);
  for (const auto& [i, c] : terms) v[i] += c;
  return v;
}

inline RatVector halves(std::initializer_list<long> signs) {
  RatVector v;
  for (long s : signs) v.push_back(make_rational(s, 2));
  return v;
}

}  // namespace detail

/// Witnesses cutting E7 out of E8 and E6 out of E7; <a, b> = 1.
inline RatVector e7_witness() { return detail::unit_combo(8, {{6, 1}, {7, 1}}); }
inline RatVector e6_witness() { return detail::halves({-1, -1, -1, -1, -1, -1, 1, 1}); }

/// The canonical root set of a type: A_n = {±(e_i - e_j)} in R^{n+1},
/// D_n = {±e_i ± e_j} in R^n, E_8 = D_8 plus the half-integer vectors with an
/// even number of minus signs, E_7 and E_6 the roots of E_8 orthogonal to the
/// witnesses above.
inline RootSet gen(const DynkinType& t) {
  const std::size_t n = t.rank();
  const std::size_t dim = t.ambient_dimension();
  std::vector<RatVector> out;
  auto pairs = [&](std::size_t m, bool mixed) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (long si : {1L, -1L})
          for (long sj : {1L, -1L}) {
            if (!mixed && si == sj) continue;
            out.push_back(detail::unit_combo(dim, {{i, si}, {j, sj}}));
          }
  };
  switch (t.family()) {
    case Family::A: pairs(n + 1, false); break;
    case Family::D: pairs(n, true); break;
    case Family::E: {
      pairs(8, true);
      for (unsigned mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        RatVector v(8);
        for (std::size_t i = 0; i < 8; ++i) v[i] = make_rational((mask >> i) & 1U ? -1 : 1, 2);
        out.push_back(std::move(v));
      }
      if (n <= 7) std::erase_if(out, [](const RatVector& v) { return sgn(dot(v, e7_witness())) != 0; });
      if (n == 6) std::erase_if(out, [](const RatVector& v) { return sgn(dot(v, e6_witness())) != 0; });
      break;
    }
  }
  return RootSet(Space::ambient(dim), out);
}

/// Canonical base of a canonical type, listed in the vertex layout produced
/// by recognize_shape (path order; or branch vertex then legs, shortest first,
/// each walked outward).
inline std::vector<RatVector> canonical_base(const DynkinType& t) {
  if (!t.is_canonical()) throw std::invalid_argument("canonical_base: non-canonical label " + t.label());
  const std::size_t n = t.rank();
  const std::size_t dim = t.ambient_dimension();
  using detail::unit_combo;
  std::vector<RatVector> base;
  switch (t.family()) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) base.push_back(unit_combo(dim, {{i, 1}, {i + 1, -1}}));
      break;
    case Family::D:
      base.push_back(unit_combo(dim, {{n - 3, 1}, {n - 2, -1}}));
      base.push_back(unit_combo(dim, {{n - 2, 1}, {n - 1, -1}}));
      base.push_back(unit_combo(dim, {{n - 2, 1}, {n - 1, 1}}));
      for (std::size_t i = n - 3; i-- > 0;) base.push_back(unit_combo(dim, {{i, 1}, {i + 1, -1}}));
      break;
    case Family::E:
      if (n == 6) {
        base = {unit_combo(8, {{2, -1}, {3, 1}}), detail::halves({1, 1, 1, -1, -1, -1, -1, 1}),
                unit_combo(8, {{1, -1}, {2, 1}}), unit_combo(8, {{0, -1}, {1, 1}}),
                unit_combo(8, {{3, -1}, {4, 1}}), unit_combo(8, {{4, -1}, {5, 1}})};
      } else {
        base = {unit_combo(8, {{1, -1}, {2, 1}}), unit_combo(8, {{0, 1}, {1, 1}}),
                unit_combo(8, {{0, -1}, {1, 1}}), detail::halves({1, -1, -1, -1, -1, -1, -1, 1}),
                unit_combo(8, {{2, -1}, {3, 1}}), unit_combo(8, {{3, -1}, {4, 1}}),
                unit_combo(8, {{4, -1}, {5, 1}})};
        if (n == 8) base.push_back(unit_combo(8, {{5, -1}, {6, 1}}));
      }
      break;
  }
  return base;
}

// Bases -------------------------------------------------------------------

namespace detail {

// Constructive base search on one irreducible root system: grow an
// indecomposable obtuse S until Z(S) contains every root.
inline std::vector<RootVector> base_of_component(const RootSet& comp) {
  std::vector<RootVector> s{comp[0]};
  for (;;) {
    const auto inv = inverse(gram_matrix(s));
    if (!inv) throw std::logic_error("find_base: working set lost linear independence");

    // r lies in span(S) iff its projection keeps norm 2; in Z(S) iff the
    // coordinates of that projection are integers.
    std::vector<bool> in_lattice(comp.size());
    bool complete = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      RatVector b(s.size());
      for (std::size_t k = 0; k < s.size(); ++k) b[k] = inner_product(s[k], comp[i]);
      const RatVector c = (*inv) * b;
      in_lattice[i] = dot(b, c) == 2 && all_integers(c);
      complete = complete && in_lattice[i];
    }
    if (complete) return s;

    std::optional<RootVector> p;
    for (std::size_t i = 0; i < comp.size() && !p; ++i) {
      if (in_lattice[i]) continue;
      for (const auto& a : s) {
        const int sign = sgn(inner_product(comp[i], a));
        if (sign < 0) {
          p = comp[i];
          break;
        }
        if (sign > 0) {
          p = -comp[i];
          break;
        }
      }
    }
    if (!p) throw std::logic_error("find_base: no root outside Z(S) meets S; input is reducible");

    // Breadth-first descent r -> r - x over x in S with <r,x> = 1. Every
    // vector reached has <r-x,x> = -1, so it stays in T; the depth is rho.
    std::vector<RootVector> level{*p};
    for (;;) {
      std::set<RootVector> next;
      for (const auto& r : level)
        for (const auto& x : s)
          if (inner_product(r, x) == 1) next.insert(r - x);
      if (next.empty()) break;
      level.assign(next.begin(), next.end());
    }
    const RootVector q = level.front();
    for (const auto& x : s) {
      const Rational ip = inner_product(q, x);
      if (ip != 0 && ip != -1) throw std::logic_error("find_base: maximal q has <q,x> = " + to_string(ip));
    }

    std::vector<RootVector> candidate = s;
    candidate.push_back(q);
    switch (definiteness(gram_matrix(candidate))) {
      case Definiteness::PositiveDefinite:
        s = std::move(candidate);
        break;
      case Definiteness::PositiveSemidefiniteSingular: {
        // Gram = 2I - A on an affine graph; the marks vector alpha satisfies
        // sum alpha_v v = 0, so a vertex u with alpha_u = 1 lies in Z of the rest.
        const SignedGraph g = graph_of(candidate).unsigned_view();
        const SmithType shape = smith_classify(g);
        if (shape.cls != SmithClass::Affine) throw std::logic_error("find_base: dependent set is not affine");
        const auto& alpha = shape.marks;
        std::optional<std::size_t> u;
        for (std::size_t i = 0; i + 1 < candidate.size() && !u; ++i)
          if (alpha[i] == 1 && g.connected_without(i)) u = i;
        if (!u) throw std::logic_error("find_base: no removable vertex with mark 1");
        candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(*u));
        s = std::move(candidate);
        break;
      }
      case Definiteness::Indefinite:
        throw std::logic_error("find_base: Gram matrix of real vectors is indefinite");
    }
  }
}

}  // namespace detail

/// One irreducible piece of a root system with its base in layout order.
struct Component {
  DynkinType type;
  RootSet roots;
  std::vector<RootVector> base;
};

namespace detail {

inline std::vector<Component> analyze_unchecked(const RootSet& phi) {
  std::vector<Component> out;
  for (auto& comp : components(phi)) {
    const auto base = base_of_component(comp);
    const SmithType shape = recognize_shape(graph_of(base));
    const auto type = shape.finite_type();
    if (!type) throw std::logic_error("classify: base graph is " + shape.label() + ", not a finite Dynkin diagram");
    std::vector<RootVector> ordered;
    for (std::size_t i : shape.layout) ordered.push_back(base[i]);
    if (definiteness(gram_matrix(ordered)) != Definiteness::PositiveDefinite)
      throw std::logic_error("classify: base Gram matrix is not positive definite");
    out.push_back({*type, std::move(comp), std::move(ordered)});
  }
  return out;
}

inline void require_root_system(const RootSet& phi, const char* who) {
  if (!is_root_system(phi)) throw std::invalid_argument(std::string(who) + ": input is not a root system");
}

}  // namespace detail

/// Per-component type, roots and ordered base.
inline std::vector<Component> analyze(const RootSet& phi) {
  detail::require_root_system(phi, "analyze");
  return detail::analyze_unchecked(phi);
}

/// A base: obtuse, one indecomposable piece per component, generating phi.
inline RootSet find_base(const RootSet& phi) {
  detail::require_root_system(phi, "find_base");
  std::vector<RootVector> all;
  for (const auto& comp : components(phi)) {
    auto b = detail::base_of_component(comp);
    all.insert(all.end(), b.begin(), b.end());
  }
  return RootSet(phi.space(), std::move(all));
}

inline ReducibleType classify(const RootSet& phi) {
  ReducibleType t;
  for (const auto& c : analyze(phi)) t.push_back(c.type);
  std::sort(t.begin(), t.end());
  return t;
}

// Isometries --------------------------------------------------------------

/// Linear map from a space's coordinates to canonical ambient coordinates.
struct Isometry {
  Space domain;
  RatMatrix matrix;  // codomain dimension x domain.dim()

  RatVector operator()(const RootVector& v) const {
    if (!(v.space() == domain)) throw std::invalid_argument("Isometry: vector from another space");
    return matrix * v.coords();
  }

  /// Q^T Q: the form this map pulls back. For an ambient domain it is the
  /// orthogonal projector onto the spanned subspace; for a form domain
  /// spanned by the roots it equals the Gram form.
  RatMatrix pullback() const { return matrix.transpose() * matrix; }
};

/// <Q u, Q v> == <u, v> for every pair of the given vectors.
inline bool preserves_inner_products(const Isometry& q, std::span<const RootVector> vs) {
  std::vector<RatVector> images;
  for (const auto& v : vs) images.push_back(q(v));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j)
      if (dot(images[i], images[j]) != inner_product(vs[i], vs[j])) return false;
  return true;
}

struct CanonicalIsometry {
  DynkinType type;
  Isometry isometry;
  std::vector<RootVector> base;  // layout order; base[i] maps to canonical_base(type)[i]
};

namespace detail {

inline CanonicalIsometry isometry_unchecked(const RootSet& omega) {
  auto comps = analyze_unchecked(omega);
  if (comps.size() != 1) throw std::invalid_argument("isometry_to_canonical: root system is reducible");
  Component& c = comps.front();
  const auto targets = canonical_base(c.type);

  const auto gx = gram_matrix(c.base);
  const auto gy = RatMatrix::from_rows(targets) * RatMatrix::from_rows(targets).transpose();
  if (!(gx == gy)) throw std::logic_error("isometry_to_canonical: base and canonical base Gram matrices differ");

  // Q = Y G_X^{-1} K, with K the rows G x_i; then Q x_i = y_i.
  std::vector<RatVector> keys;
  for (const auto& x : c.base) keys.push_back(x.key());
  const RatMatrix y = RatMatrix::from_columns(targets);
  const RatMatrix q = y * (*inverse(gx)) * RatMatrix::from_rows(keys);
  Isometry iso{omega.space(), q};

  const RootSet canon = gen(c.type);
  const Space target = canon.space();
  std::vector<RootVector> image;
  image.reserve(omega.size());
  for (const auto& r : omega) image.emplace_back(target, iso(r));
  if (!(RootSet(target, std::move(image)) == canon))
    throw std::logic_error("isometry_to_canonical: image is not the canonical root system");
  return {c.type, std::move(iso), std::move(c.base)};
}

}  // namespace detail

/// Type and explicit Gram-preserving map of an irreducible root system onto
/// its canonical coordinates, built by matching bases through their diagrams.
/// The image of every root is checked against gen(type).
inline CanonicalIsometry isometry_to_canonical(const RootSet& omega) {
  detail::require_root_system(omega, "isometry_to_canonical");
  return detail::isometry_unchecked(omega);
}

}  // namespace ade
