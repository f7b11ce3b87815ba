#pragma once

// Signed graphs, their adjacency matrices, and recognition of the connected
// graphs with largest eigenvalue at most 2 (finite Dynkin shapes, Lambda < 2,
// and affine shapes, Lambda = 2).

#include <ade/dynkin.hpp>
#include <ade/exactlin.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ade {

struct SignedEdge {
  std::size_t u;
  std::size_t v;
  int sign;  // +1 or -1
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Simple graph with edge signs; an unsigned graph has every sign +1.
class SignedGraph {
 public:
  explicit SignedGraph(std::size_t n = 0) : n_(n), adj_(n * n, 0) {}

  SignedGraph(std::size_t n, const std::vector<SignedEdge>& edges) : SignedGraph(n) {
    for (const auto& e : edges) add_edge(e.u, e.v, e.sign);
  }

  void add_edge(std::size_t u, std::size_t v, int sign = +1) {
    if (u >= n_ || v >= n_) throw std::out_of_range("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
    if (sign != 1 && sign != -1) throw std::invalid_argument("add_edge: sign must be +1 or -1");
    if (adj_[u * n_ + v] != 0) throw std::invalid_argument("add_edge: duplicate edge");
    if (u > v) std::swap(u, v);
    adj_[u * n_ + v] = adj_[v * n_ + u] = static_cast<std::int8_t>(sign);
    edges_.push_back({u, v, sign});
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }

  /// 0 when u and v are not adjacent.
  int sign(std::size_t u, std::size_t v) const { return adj_[u * n_ + v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < n_; ++w)
      if (adj_[v * n_ + w] != 0) out.push_back(w);
    return out;
  }

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < n_; ++w) d += adj_[v * n_ + w] != 0;
    return d;
  }

  bool is_unsigned() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const SignedEdge& e) { return e.sign > 0; });
  }

  SignedGraph unsigned_view() const {
    SignedGraph g(n_);
    for (const auto& e : edges_) g.add_edge(e.u, e.v, +1);
    return g;
  }

  SignedGraph negated() const {
    SignedGraph g(n_);
    for (const auto& e : edges_) g.add_edge(e.u, e.v, -e.sign);
    return g;
  }

  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components(std::optional<std::size_t> removed = std::nullopt) const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(n_, false);
    if (removed) seen[*removed] = true;
    for (std::size_t s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> comp{s};
      seen[s] = true;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t w = 0; w < n_; ++w)
          if (!seen[w] && adj_[comp[i] * n_ + w] != 0) {
            seen[w] = true;
            comp.push_back(w);
          }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool is_connected() const { return n_ > 0 && components().size() == 1; }

  /// Whether the graph stays connected after deleting vertex v.
  bool connected_without(std::size_t v) const { return n_ > 1 && components(v).size() == 1; }

 private:
  std::size_t n_;
  std::vector<std::int8_t> adj_;
  std::vector<SignedEdge> edges_;
};

/// Symmetric n x n matrix with entries in {-1, 0, 1} and zero diagonal.
inline RatMatrix adjacency(const SignedGraph& g) {
  RatMatrix a(g.size(), g.size());
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = e.sign;
  return a;
}

/// c I + s A, with s = +1 or -1.
inline RatMatrix shifted_adjacency(const SignedGraph& g, long c, int s) {
  RatMatrix a(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) a(i, i) = c;
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = s * e.sign;
  return a;
}

/// 2I - A.
inline RatMatrix two_minus_adjacency(const SignedGraph& g) { return shifted_adjacency(g, 2, -1); }

enum class SmithClass { Finite, Affine, Exceeds };

/// Position of a connected graph relative to the Smith family.
///
/// Finite shapes carry their Dynkin type and a vertex layout: a path is
/// listed end to end starting from its lower-numbered endpoint; a fork is
/// listed as the branch vertex followed by its three legs walked outward,
/// shortest leg first (ties broken by the lower first vertex). Affine shapes
/// use the tilde convention: Atilde_k is the (k+1)-cycle, Dtilde_k has k+1
/// vertices, Etilde_6/7/8 are the forks with legs (2,2,2), (1,3,3), (1,2,5).
struct SmithType {
  SmithClass cls = SmithClass::Exceeds;
  Family family = Family::A;
  std::size_t index = 0;
  std::vector<std::size_t> layout;  // finite shapes only
  IntVector marks;                  // affine shapes only, filled by smith_classify

  std::optional<DynkinType> finite_type() const {
    if (cls != SmithClass::Finite) return std::nullopt;
    switch (family) {
      case Family::A: return DynkinType::A(index);
      case Family::D: return DynkinType::D(index);
      case Family::E: return DynkinType::E(index);
    }
    return std::nullopt;
  }

  std::string label() const {
    switch (cls) {
      case SmithClass::Finite: return finite_type()->label();
      case SmithClass::Affine: return std::string(1, to_char(family)) + "tilde" + std::to_string(index);
      case SmithClass::Exceeds: return "exceeds";
    }
    return "?";
  }
};

inline std::string to_string(SmithClass c) {
  switch (c) {
    case SmithClass::Finite: return "finite";
    case SmithClass::Affine: return "affine";
    case SmithClass::Exceeds: return "exceeds";
  }
  return "?";
}

namespace detail {

inline std::vector<std::size_t> walk_leg(const SignedGraph& g, std::size_t centre, std::size_t first) {
  std::vector<std::size_t> leg{first};
  std::size_t prev = centre, cur = first;
  while (g.degree(cur) == 2) {
    const auto nb = g.neighbors(cur);
    const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
    leg.push_back(next);
    prev = cur;
    cur = next;
  }
  return leg;
}

}  // namespace detail

/// Pure shape recognition; signs are ignored. Requires a connected graph.
inline SmithType recognize_shape(const SignedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("recognize_shape: graph is not connected");
  const std::size_t n = g.size();
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  const std::size_t max_deg = *std::max_element(deg.begin(), deg.end());

  SmithType t;
  if (m == n && max_deg == 2) {
    t.cls = SmithClass::Affine;
    t.family = Family::A;
    t.index = n - 1;
    return t;
  }
  if (m != n - 1) return t;

  if (max_deg <= 2) {
    std::size_t start = 0;
    while (n > 1 && deg[start] != 1) ++start;
    t.layout.push_back(start);
    std::size_t prev = n, cur = start;
    while (t.layout.size() < n) {
      for (std::size_t w : g.neighbors(cur))
        if (w != prev) {
          prev = cur;
          cur = w;
          break;
        }
      t.layout.push_back(cur);
    }
    t.cls = SmithClass::Finite;
    t.family = Family::A;
    t.index = n;
    return t;
  }

  std::vector<std::size_t> branches;
  for (std::size_t v = 0; v < n; ++v)
    if (deg[v] >= 3) branches.push_back(v);

  if (branches.size() == 1 && deg[branches[0]] == 4) {
    if (n == 5) {
      t.cls = SmithClass::Affine;
      t.family = Family::D;
      t.index = 4;
    }
    return t;
  }

  if (branches.size() == 2 && deg[branches[0]] == 3 && deg[branches[1]] == 3) {
    for (std::size_t b : branches) {
      std::size_t leaves = 0;
      for (std::size_t w : g.neighbors(b)) leaves += deg[w] == 1;
      if (leaves != 2) return t;
    }
    t.cls = SmithClass::Affine;
    t.family = Family::D;
    t.index = n - 1;
    return t;
  }

  if (branches.size() != 1 || deg[branches[0]] != 3) return t;

  const std::size_t centre = branches[0];
  std::vector<std::vector<std::size_t>> legs;
  for (std::size_t w : g.neighbors(centre)) legs.push_back(detail::walk_leg(g, centre, w));
  std::sort(legs.begin(), legs.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  const std::size_t a = legs[0].size(), b = legs[1].size(), c = legs[2].size();

  auto finite = [&](Family f, std::size_t index) {
    t.cls = SmithClass::Finite;
    t.family = f;
    t.index = index;
    t.layout.push_back(centre);
    for (const auto& leg : legs) t.layout.insert(t.layout.end(), leg.begin(), leg.end());
  };
  auto affine = [&](std::size_t index) {
    t.cls = SmithClass::Affine;
    t.family = Family::E;
    t.index = index;
  };

  if (a == 1 && b == 1) finite(Family::D, c + 3);
  else if (a == 1 && b == 2 && c >= 2 && c <= 4) finite(Family::E, c + 4);
  else if (a == 2 && b == 2 && c == 2) affine(6);
  else if (a == 1 && b == 3 && c == 3) affine(7);
  else if (a == 1 && b == 2 && c == 5) affine(8);
  return t;
}

/// Primitive positive integer vector alpha spanning the kernel of 2I - A
/// (signs ignored), so that alpha A = 2 alpha. Throws unless the graph is an
/// affine Smith graph, i.e. 2I - A is singular positive semidefinite with a
/// one-dimensional kernel spanned by a positive vector.
inline IntVector marks(const SignedGraph& g) {
  const SignedGraph u = g.unsigned_view();
  const RatMatrix a = adjacency(u);
  const RatMatrix form = two_minus_adjacency(u);
  if (definiteness(form) != Definiteness::PositiveSemidefiniteSingular)
    throw std::invalid_argument("marks: 2I - A is not singular positive semidefinite");
  const auto ker = kernel_basis(form);
  if (ker.size() != 1) throw std::invalid_argument("marks: kernel of 2I - A is not one-dimensional");
  IntVector alpha = primitive_integer(ker[0]);
  if (alpha[0] < 0)
    for (auto& x : alpha) x = -x;
  for (const auto& x : alpha)
    if (x <= 0) throw std::invalid_argument("marks: kernel vector is not positive");
  const RatVector ar = to_rational(alpha);
  if (a * ar != Rational(2) * ar) throw std::logic_error("marks: alpha A != 2 alpha");
  return alpha;
}

/// Classifies a connected unsigned graph against the Smith family. The shape
/// decision is cross-checked against the exact definiteness of 2I - A.
inline SmithType smith_classify(const SignedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("smith_classify: graph is not connected");
  if (!g.is_unsigned()) throw std::invalid_argument("smith_classify: graph has negative edges");
  SmithType t = recognize_shape(g);
  const RatMatrix form = two_minus_adjacency(g);
  const Definiteness d = definiteness(form);
  const Definiteness expected = t.cls == SmithClass::Finite  ? Definiteness::PositiveDefinite
                                : t.cls == SmithClass::Affine ? Definiteness::PositiveSemidefiniteSingular
                                                               : Definiteness::Indefinite;
  if (d != expected)
    throw std::logic_error("smith_classify: shape " + t.label() + " disagrees with 2I - A being " + to_string(d));
  if (t.cls == SmithClass::Affine) t.marks = marks(g);
  return t;
}

// Shape builders.

inline SignedGraph path_graph(std::size_t n) {
  SignedGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline SignedGraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  SignedGraph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

inline SignedGraph complete_graph(std::size_t n, int sign = +1) {
  SignedGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j, sign);
  return g;
}

inline SignedGraph star_graph(std::size_t leaves) {
  SignedGraph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

/// Vertex 0 is the branch point; legs of the given lengths follow in order,
/// each listed outward from the branch.
inline SignedGraph fork_graph(std::size_t a, std::size_t b, std::size_t c) {
  SignedGraph g(1 + a + b + c);
  std::size_t next = 1;
  for (std::size_t len : {a, b, c}) {
    std::size_t prev = 0;
    for (std::size_t i = 0; i < len; ++i, ++next) {
      g.add_edge(prev, next);
      prev = next;
    }
  }
  return g;
}

/// Dtilde_k on k+1 vertices (k >= 4): a spine of k-3 vertices whose two ends
/// each carry two pendant vertices.
inline SignedGraph affine_d_graph(std::size_t k) {
  if (k < 4) throw std::invalid_argument("affine_d_graph: k must be at least 4");
  const std::size_t spine = k - 3;
  SignedGraph g(k + 1);
  for (std::size_t i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, spine);
  g.add_edge(0, spine + 1);
  g.add_edge(spine - 1, spine + 2);
  g.add_edge(spine - 1, spine + 3);
  return g;
}

/// Finite Dynkin diagram of a canonical type, vertices in layout order.
inline SignedGraph dynkin_graph(const DynkinType& t) {
  switch (t.family()) {
    case Family::A: return path_graph(t.rank());
    case Family::D: return fork_graph(1, 1, t.rank() - 3);
    case Family::E: return fork_graph(1, 2, t.rank() - 4);
  }
  return SignedGraph();
}

}  // namespace ade
