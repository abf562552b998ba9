#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ngon/error.hpp"
#include "ngon/zeta.hpp"

namespace ngon {

/// ⌊(n−1)/2⌋: number of simplices a move consumes.
constexpr int half_floor(int n) { return (n - 1) / 2; }
/// ⌈(n−1)/2⌉: number of simplices a move creates.
constexpr int half_ceil(int n) { return n / 2; }

inline void require_polygon(int n) {
  if (n < kMinPolygon) {
    throw InvalidInput("n must be >= 5 (the construction starts at the pentagon), got " +
                       std::to_string(n));
  }
}

/// An (n−3)-simplex of the n-gon, named by the two vertices i < j it omits.
struct Pair {
  Vertex i = 0;
  Vertex j = 0;
  int n = 0;

  /// Accepts the two vertices in either order.
  static Pair make(Vertex a, Vertex b, int n) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n || a == b) {
      throw InvalidInput("invalid pair (" + std::to_string(a) + "," + std::to_string(b) +
                         ") for n=" + std::to_string(n));
    }
    return Pair{a, b, n};
  }

  [[nodiscard]] bool contains(Vertex v) const { return i == v || j == v; }
  /// The vertex of the pair that is not `v`.
  [[nodiscard]] Vertex other(Vertex v) const { return i == v ? j : i; }

  friend bool operator==(const Pair&, const Pair&) = default;
};

/// Sorted vertex list {1..n} \ {i, j}.
inline std::vector<Vertex> pair_to_simplex(const Pair& p) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(p.n - 2));
  for (Vertex v = 1; v <= p.n; ++v)
    if (!p.contains(v)) out.push_back(v);
  return out;
}

/// Inverse of pair_to_simplex; `simplex` must hold n−2 distinct vertices of 1..n.
inline Pair simplex_to_pair(const std::vector<Vertex>& simplex, int n) {
  std::vector<bool> present(static_cast<std::size_t>(n + 1), false);
  for (auto v : simplex) {
    if (v < 1 || v > n || present[static_cast<std::size_t>(v)]) {
      throw InvalidInput("not a simplex of the " + std::to_string(n) + "-gon");
    }
    present[static_cast<std::size_t>(v)] = true;
  }
  if (static_cast<int>(simplex.size()) != n - 2) {
    throw InvalidInput("an (n-3)-simplex has n-2 vertices");
  }
  std::vector<Vertex> missing;
  for (Vertex v = 1; v <= n; ++v)
    if (!present[static_cast<std::size_t>(v)]) missing.push_back(v);
  return Pair::make(missing[0], missing[1], n);
}

/// Vertex string, e.g. "1234"; vertices are space-separated once n >= 10.
inline std::string vertex_string(const std::vector<Vertex>& vs, int n) {
  std::string out;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k > 0 && n >= 10) out += ' ';
    out += std::to_string(vs[k]);
  }
  return out;
}

inline std::string simplex_label(const Pair& p) { return vertex_string(pair_to_simplex(p), p.n); }
inline std::string pair_label(const Pair& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

/// Ascending lexicographic order of the simplex vertex tuples.
inline bool canonical_less(const Pair& a, const Pair& b) {
  return pair_to_simplex(a) < pair_to_simplex(b);
}

/// A set of (n−3)-simplices, held in canonical order.
class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(int n, std::vector<Pair> pairs) : n_(n), pairs_(std::move(pairs)) {
    for (const auto& p : pairs_) {
      if (p.n != n_) throw InvalidInput("pair belongs to a different n-gon");
      (void)Pair::make(p.i, p.j, n_);
    }
    std::sort(pairs_.begin(), pairs_.end(), canonical_less);
    if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end()) {
      throw InvalidInput("triangulation contains a duplicate simplex");
    }
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return pairs_.size(); }
  [[nodiscard]] const std::vector<Pair>& pairs() const { return pairs_; }

  [[nodiscard]] std::optional<std::size_t> index_of(const Pair& p) const {
    auto it = std::find(pairs_.begin(), pairs_.end(), p);
    if (it == pairs_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - pairs_.begin());
  }
  [[nodiscard]] bool contains(const Pair& p) const { return index_of(p).has_value(); }

  [[nodiscard]] std::vector<std::string> simplex_labels() const {
    std::vector<std::string> out;
    for (const auto& p : pairs_) out.push_back(simplex_label(p));
    return out;
  }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  int n_ = 0;
  std::vector<Pair> pairs_;
};

/// The move d^{(q)}_{b…,c…}: replaces the simplices {b,q} for b in b_set with {c,q} for c in c_set.
struct PachnerMove {
  int n = 0;
  Vertex q = 0;
  std::vector<Vertex> b_set;
  std::vector<Vertex> c_set;

  /// Builds the move from q and its replaced side; c_set is the complement.
  static PachnerMove make(int n, Vertex q, std::vector<Vertex> b_set) {
    require_polygon(n);
    if (q < 1 || q > n) throw InvalidInput("move vertex q outside 1..n");
    std::sort(b_set.begin(), b_set.end());
    std::vector<Vertex> c_set;
    for (Vertex v = 1; v <= n; ++v)
      if (v != q && !std::binary_search(b_set.begin(), b_set.end(), v)) c_set.push_back(v);
    PachnerMove m{n, q, std::move(b_set), std::move(c_set)};
    m.validate();
    return m;
  }

  void validate() const {
    auto fail = [&](const std::string& why) { throw InvalidInput("invalid Pachner move: " + why); };
    if (static_cast<int>(b_set.size()) != half_floor(n)) fail("|b| must be floor((n-1)/2)");
    if (static_cast<int>(c_set.size()) != half_ceil(n)) fail("|c| must be ceil((n-1)/2)");
    if (!std::is_sorted(b_set.begin(), b_set.end()) || !std::is_sorted(c_set.begin(), c_set.end()))
      fail("b and c must be sorted");
    std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
    seen[static_cast<std::size_t>(q)]++;
    for (auto v : b_set) {
      if (v < 1 || v > n) fail("vertex out of range");
      seen[static_cast<std::size_t>(v)]++;
    }
    for (auto v : c_set) {
      if (v < 1 || v > n) fail("vertex out of range");
      seen[static_cast<std::size_t>(v)]++;
    }
    for (Vertex v = 1; v <= n; ++v)
      if (seen[static_cast<std::size_t>(v)] != 1) fail("q, b and c must partition 1..n");
  }

  /// Label d^(q)_{b…,c…}.
  [[nodiscard]] std::string label() const {
    return "d^(" + std::to_string(q) + ")_{" + vertex_string(b_set, n) + "," +
           vertex_string(c_set, n) + "}";
  }

  friend bool operator==(const PachnerMove&, const PachnerMove&) = default;
};

enum class Side { lhs, rhs };

inline const char* side_name(Side s) { return s == Side::lhs ? "lhs" : "rhs"; }

/// Moves in application order: moves.front() acts first on the initial triangulation.
struct MoveSequence {
  Side side = Side::lhs;
  std::vector<PachnerMove> moves;
};

inline Triangulation initial_triangulation(int n) {
  require_polygon(n);
  const int h = half_floor(n);
  std::vector<Pair> pairs;
  for (int k = 1; k <= h; ++k)
    for (int l = 1; l <= k; ++l) pairs.push_back(Pair::make(n + 1 - 2 * k, n + 2 - 2 * l, n));
  Triangulation t(n, std::move(pairs));
  if (static_cast<int>(t.size()) != h * (h + 1) / 2) throw InternalError("initial triangulation size");
  return t;
}

inline Triangulation final_triangulation(int n) {
  require_polygon(n);
  std::vector<Pair> pairs;
  const int kmax = n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1;
  for (int k = 1; k <= kmax; ++k)
    for (int l = 1; l <= k; ++l) pairs.push_back(Pair::make(n - 2 * k, n + 1 - 2 * l, n));
  if (n % 2 == 0)
    for (int l = 1; l <= n / 2; ++l) pairs.push_back(Pair::make(1, n + 2 - 2 * l, n));
  Triangulation t(n, std::move(pairs));
  const std::size_t expected = n % 2 == 1 ? static_cast<std::size_t>((n - 1) * (n + 1) / 8)
                                          : static_cast<std::size_t>((n / 2) * (n / 2 + 1) / 2);
  if (t.size() != expected) throw InternalError("final triangulation size");
  return t;
}

/// The move at vertex q that fits `t`: b_set is every b with {b,q} in t.
inline PachnerMove derive_move(const Triangulation& t, Vertex q) {
  const int n = t.n();
  if (q < 1 || q > n) throw InvalidInput("move vertex q outside 1..n");
  std::vector<Vertex> b_set;
  for (const auto& p : t.pairs())
    if (p.contains(q)) b_set.push_back(p.other(q));
  if (static_cast<int>(b_set.size()) != half_floor(n)) {
    throw MoveNotApplicable("vertex " + std::to_string(q) + " lies in " +
                            std::to_string(b_set.size()) + " pairs of the triangulation, expected " +
                            std::to_string(half_floor(n)));
  }
  return PachnerMove::make(n, q, std::move(b_set));
}

inline Triangulation apply_move(const Triangulation& t, const PachnerMove& m) {
  if (m.n != t.n()) throw InvalidInput("move and triangulation disagree on n");
  std::vector<Pair> pairs = t.pairs();
  for (auto b : m.b_set) {
    auto p = Pair::make(b, m.q, m.n);
    auto it = std::find(pairs.begin(), pairs.end(), p);
    if (it == pairs.end()) {
      throw MoveNotApplicable(m.label() + ": simplex " + simplex_label(p) + " is not present");
    }
    pairs.erase(it);
  }
  for (auto c : m.c_set) {
    auto p = Pair::make(c, m.q, m.n);
    if (std::find(pairs.begin(), pairs.end(), p) != pairs.end()) {
      throw MoveNotApplicable(m.label() + ": simplex " + simplex_label(p) + " is already present");
    }
    pairs.push_back(p);
  }
  return Triangulation(t.n(), std::move(pairs));
}

/// The q of each move of one side, in application order.
inline std::vector<Vertex> equation_q_order(int n, Side side) {
  require_polygon(n);
  std::vector<Vertex> qs;
  if (n % 2 == 1) {
    if (side == Side::lhs)
      for (Vertex q = 2; q <= n - 1; q += 2) qs.push_back(q);
    else
      for (Vertex q = n; q >= 1; q -= 2) qs.push_back(q);
  } else {
    if (side == Side::lhs) {
      for (Vertex q = 3; q <= n - 1; q += 2) qs.push_back(q);
      qs.push_back(1);
    } else {
      for (Vertex q = n; q >= 2; q -= 2) qs.push_back(q);
    }
  }
  return qs;
}

inline MoveSequence equation_sequence(int n, Side side) {
  MoveSequence seq{side, {}};
  auto t = initial_triangulation(n);
  for (auto q : equation_q_order(n, side)) {
    seq.moves.push_back(derive_move(t, q));
    t = apply_move(t, seq.moves.back());
  }
  if (t != final_triangulation(n)) {
    throw InternalError(std::string(side_name(side)) + " sequence does not end at the final triangulation");
  }
  return seq;
}

struct EquationSequences {
  MoveSequence lhs;
  MoveSequence rhs;
};

inline EquationSequences equation_sequences(int n) {
  return {equation_sequence(n, Side::lhs), equation_sequence(n, Side::rhs)};
}

/// Triangulations visited by `seq` starting from the initial one; size is moves + 1.
inline std::vector<Triangulation> triangulation_path(int n, const MoveSequence& seq) {
  std::vector<Triangulation> path{initial_triangulation(n)};
  for (const auto& m : seq.moves) path.push_back(apply_move(path.back(), m));
  return path;
}

}  // namespace ngon
