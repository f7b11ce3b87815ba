#pragma once

// Exact scalar and vector types shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ade {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical (lowest terms, positive denominator)
using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Accepts "[+-]digits" or "[+-]digits/digits" with a nonzero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den)) return std::nullopt;
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

inline RatVector operator-(const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: length mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sub: length mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVector operator*(const Rational& s, const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline bool is_zero(const RatVector& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

inline bool all_integers(const RatVector& a) {
  for (const auto& x : a)
    if (!is_integer(x)) return false;
  return true;
}

inline RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

/// Scales a nonzero rational vector to the primitive integer vector on the same ray.
inline IntVector primitive_integer(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (g == 0) throw std::invalid_argument("primitive_integer: zero vector");
  for (auto& x : out) x /= g;
  return out;
}

}  // namespace ade
