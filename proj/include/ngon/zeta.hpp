#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ngon/error.hpp"
#include "ngon/rat.hpp"

namespace ngon {

/// 1-based vertex label.
using Vertex = int;

/// Smallest polygon the construction is defined for.
inline constexpr int kMinPolygon = 5;

/// Upper bound (inclusive) of the integers drawn by ZetaAssignment::seeded_random.
inline constexpr std::int64_t kRandomZetaMax = 1'000'000;

/// The evaluation point: one pairwise-distinct rational ζ_v per vertex v = 1..n.
class ZetaAssignment {
 public:
  /// ζ_v = v.
  static ZetaAssignment consecutive(int n) {
    std::vector<Rat> values;
    for (int v = 1; v <= n; ++v) values.emplace_back(v);
    return ZetaAssignment(std::move(values), "consecutive");
  }

  static ZetaAssignment from_values(std::vector<Rat> values) {
    return ZetaAssignment(std::move(values), "explicit");
  }

  /// Distinct integers in 1..kRandomZetaMax from a seeded mt19937_64; collisions are redrawn.
  static ZetaAssignment seeded_random(int n, std::uint64_t seed) {
    if (n < kMinPolygon) {
      throw InvalidInput("zeta assignment needs n >= 5, got " + std::to_string(n));
    }
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::int64_t> dist(1, kRandomZetaMax);
    std::set<std::int64_t> seen;
    std::vector<Rat> values;
    while (static_cast<int>(values.size()) < n) {
      auto x = dist(gen);
      if (seen.insert(x).second) values.emplace_back(x);
    }
    return ZetaAssignment(std::move(values), "seed=" + std::to_string(seed));
  }

  [[nodiscard]] int n() const { return static_cast<int>(values_.size()); }
  [[nodiscard]] const std::vector<Rat>& values() const { return values_; }
  /// "consecutive", "explicit" or "seed=<s>".
  [[nodiscard]] const std::string& description() const { return description_; }

  /// ζ_v for 1 <= v <= n.
  [[nodiscard]] const Rat& at(Vertex v) const {
    if (v < 1 || v > n()) {
      throw InvalidInput("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n()));
    }
    return values_[static_cast<std::size_t>(v - 1)];
  }
  const Rat& operator[](Vertex v) const { return values_[static_cast<std::size_t>(v - 1)]; }

 private:
  ZetaAssignment(std::vector<Rat> values, std::string description)
      : values_(std::move(values)), description_(std::move(description)) {
    if (n() < kMinPolygon) {
      throw InvalidInput("zeta assignment needs n >= 5 values, got " + std::to_string(n()));
    }
    std::set<Rat> distinct(values_.begin(), values_.end());
    if (distinct.size() != values_.size()) {
      throw InvalidInput("zeta values must be pairwise distinct");
    }
  }

  std::vector<Rat> values_;
  std::string description_;
};

}  // namespace ngon
