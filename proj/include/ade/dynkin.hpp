#pragma once

// Type labels for irreducible simply laced root systems.

#include <compare>
#include <cstddef>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ade {

enum class Family { A, D, E };

inline char to_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

/// An irreducible type label. Construction accepts A(n>=1), D(n>=2) and
/// E(6|7|8); classification only ever produces canonical labels, where D
/// requires n >= 4 (D2 and D3 coincide with A1+A1 and A3).
class DynkinType {
 public:
  static DynkinType A(std::size_t n) { return DynkinType(Family::A, n); }
  static DynkinType D(std::size_t n) { return DynkinType(Family::D, n); }
  static DynkinType E(std::size_t n) { return DynkinType(Family::E, n); }

  Family family() const noexcept { return family_; }
  std::size_t rank() const noexcept { return rank_; }
  bool is_canonical() const noexcept { return family_ != Family::D || rank_ >= 4; }

  /// Dimension of the coordinate space the canonical roots live in.
  std::size_t ambient_dimension() const noexcept {
    switch (family_) {
      case Family::A: return rank_ + 1;
      case Family::D: return rank_;
      case Family::E: return 8;
    }
    return 0;
  }

  std::size_t root_count() const noexcept {
    switch (family_) {
      case Family::A: return rank_ * (rank_ + 1);
      case Family::D: return 2 * rank_ * (rank_ - 1);
      case Family::E: return rank_ == 6 ? 72 : rank_ == 7 ? 126 : 240;
    }
    return 0;
  }

  std::string label() const { return std::string(1, to_char(family_)) + std::to_string(rank_); }

  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;

 private:
  DynkinType(Family f, std::size_t n) : family_(f), rank_(n) {
    const bool ok = (f == Family::A && n >= 1) || (f == Family::D && n >= 2) ||
                    (f == Family::E && n >= 6 && n <= 8);
    if (!ok) throw std::invalid_argument("invalid root system label " + label());
  }

  Family family_;
  std::size_t rank_;
};

/// Parses "A5", "D4", "E8", ... ; nullopt for anything unsupported.
inline std::optional<DynkinType> parse_type(std::string_view text) {
  static const std::regex pattern("([ADE])([1-9][0-9]{0,3})");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) return std::nullopt;
  const std::size_t n = std::stoul(m[2].str());
  try {
    switch (m[1].str()[0]) {
      case 'A': return DynkinType::A(n);
      case 'D': return DynkinType::D(n);
      default: return DynkinType::E(n);
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

/// Multiset of irreducible types, kept sorted.
using ReducibleType = std::vector<DynkinType>;

inline std::string label(const ReducibleType& t) {
  std::string s;
  for (const auto& x : t) {
    if (!s.empty()) s += '+';
    s += x.label();
  }
  return s.empty() ? "empty" : s;
}

}  // namespace ade
