#pragma once

// Text formats.
//
// Vector sets: one vector per line as whitespace-separated rationals ("p" or
// "p/q"); '#' starts a comment; blank lines are ignored; all rows must have
// the same length.
//
// Signed graphs: a header "n m", then m lines "u v s" with 0 <= u < v < n and
// s one of '+' or '-'. Comments and blank lines as above.

#include <ade/rational.hpp>
#include <ade/spectra.hpp>

#include <cstddef>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ade {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct VectorSetFile {
  std::vector<RatVector> vectors;
  std::vector<std::size_t> lines;  // 1-based source line of each vector
};

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& raw) {
  const std::string line = raw.substr(0, raw.find('#'));
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
    throw ParseError(line, std::string("expected a non-negative integer ") + what + ", got '" + tok + "'");
  return std::stoul(tok);
}

}  // namespace detail

inline VectorSetFile read_vector_set(std::istream& in) {
  VectorSetFile f;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto toks = detail::tokens_of(raw);
    if (toks.empty()) continue;
    RatVector v;
    for (const auto& t : toks) {
      auto q = parse_rational(t);
      if (!q) throw ParseError(line, "not a rational number: '" + t + "'");
      v.push_back(std::move(*q));
    }
    if (!f.vectors.empty() && v.size() != f.vectors.front().size())
      throw ParseError(line, "vector has " + std::to_string(v.size()) + " entries, expected " +
                                 std::to_string(f.vectors.front().size()));
    f.vectors.push_back(std::move(v));
    f.lines.push_back(line);
  }
  return f;
}

inline void write_vector(std::ostream& out, const RatVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << to_string(v[i]);
  out << '\n';
}

inline void write_vector_set(std::ostream& out, const std::vector<RatVector>& vs) {
  for (const auto& v : vs) write_vector(out, v);
}

inline SignedGraph read_signed_graph(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  auto next = [&]() -> std::vector<std::string> {
    while (std::getline(in, raw)) {
      ++line;
      auto toks = detail::tokens_of(raw);
      if (!toks.empty()) return toks;
    }
    return {};
  };

  const auto header = next();
  if (header.empty()) throw ParseError(line + 1, "missing header \"n m\"");
  if (header.size() != 2) throw ParseError(line, "header must be \"n m\"");
  const std::size_t n = detail::parse_count(header[0], line, "vertex count");
  const std::size_t m = detail::parse_count(header[1], line, "edge count");

  SignedGraph g(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < m; ++k) {
    const auto toks = next();
    if (toks.empty()) throw ParseError(line + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    if (toks.size() != 3) throw ParseError(line, "edge line must be \"u v s\"");
    const std::size_t u = detail::parse_count(toks[0], line, "vertex");
    const std::size_t v = detail::parse_count(toks[1], line, "vertex");
    if (!(u < v && v < n)) throw ParseError(line, "edge must satisfy 0 <= u < v < n");
    if (toks[2] != "+" && toks[2] != "-") throw ParseError(line, "edge sign must be '+' or '-'");
    if (!seen.emplace(u, v).second) throw ParseError(line, "duplicate edge");
    g.add_edge(u, v, toks[2] == "+" ? 1 : -1);
  }
  if (!next().empty()) throw ParseError(line, "more edge lines than declared");
  return g;
}

inline void write_signed_graph(std::ostream& out, const SignedGraph& g) {
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
}

}  // namespace ade
