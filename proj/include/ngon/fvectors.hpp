#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ngon/complex.hpp"
#include "ngon/error.hpp"
#include "ngon/matrix.hpp"
#include "ngon/pmatrix.hpp"
#include "ngon/zeta.hpp"

namespace ngon {

/// Calls fn(indices) for every k-subset of {0..size-1}, in lexicographic order.
inline void for_each_combination(std::size_t size, std::size_t k,
                                 const std::function<void(std::span<const std::size_t>)>& fn) {
  if (k > size) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t t = 0; t < k; ++t) idx[t] = t;
  while (true) {
    fn(idx);
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == size - k + (t - 1)) --t;
    if (t == 0) return;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

/// g(head, rest) = 1 / ∏_{r in rest} (ζ_head − ζ_r).
inline Rat g_value(Vertex head, std::span<const Vertex> rest, const ZetaAssignment& zeta) {
  std::vector<Vertex> all{head};
  all.insert(all.end(), rest.begin(), rest.end());
  for (auto v : all) (void)zeta.at(v);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidInput("g: vertex indices must be pairwise distinct");
  }
  Rat den{1};
  for (auto r : rest) den *= zeta[head] - zeta[r];
  return Rat{1} / den;
}

/// f^{(n)}(head, rest): sum of g(head, S) over the ⌊n/2⌋-subsets S of rest (|rest| = n − 3).
inline Rat f_value(int n, Vertex head, std::span<const Vertex> rest, const ZetaAssignment& zeta) {
  if (static_cast<int>(rest.size()) != n - 3) {
    throw InvalidInput("f: expected " + std::to_string(n - 3) + " trailing vertices, got " +
                       std::to_string(rest.size()));
  }
  Rat sum{};
  std::vector<Vertex> subset(static_cast<std::size_t>(n / 2));
  for_each_combination(rest.size(), subset.size(), [&](std::span<const std::size_t> idx) {
    for (std::size_t t = 0; t < idx.size(); ++t) subset[t] = rest[idx[t]];
    sum += g_value(head, subset, zeta);
  });
  return sum;
}

/// Length-n vector attached to the simplex omitting pair.i and pair.j.
struct FVector {
  int n = 0;
  Pair pair;
  std::vector<Rat> components;  // components[v - 1] belongs to vertex v

  [[nodiscard]] const Rat& at(Vertex v) const { return components.at(static_cast<std::size_t>(v - 1)); }
};

inline FVector f_vector(int n, const Pair& p, const ZetaAssignment& zeta) {
  if (zeta.n() != n || p.n != n) throw InvalidInput("f_vector: n, pair and zeta disagree");
  (void)Pair::make(p.i, p.j, n);
  FVector out{n, p, std::vector<Rat>(static_cast<std::size_t>(n))};
  const auto simplex = pair_to_simplex(p);
  std::vector<Vertex> rest;
  for (auto v : simplex) {
    rest.clear();
    for (auto w : simplex)
      if (w != v) rest.push_back(w);
    out.components[static_cast<std::size_t>(v - 1)] = f_value(n, v, rest, zeta);
  }
  return out;
}

/// Whether ∑_v w_v ζ_v^m = 0 for every m in 0..max_power, with w indexed by vertex (w[v−1]).
inline bool power_sums_vanish(std::span<const Rat> w, int max_power, const ZetaAssignment& zeta) {
  std::vector<Rat> power(w.size(), Rat{1});
  for (int m = 0; m <= max_power; ++m) {
    Rat sum{};
    for (std::size_t v = 0; v < w.size(); ++v) sum += w[v] * power[v];
    if (!sum.is_zero()) return false;
    for (std::size_t v = 0; v < w.size(); ++v) power[v] *= zeta.values()[v];
  }
  return true;
}

/// ∑_r v_r ζ_r^m = 0 exactly for m = 0..⌊n/2⌋−1.
inline bool check_orthogonality(const FVector& v, const ZetaAssignment& zeta) {
  return power_sums_vanish(v.components, v.n / 2 - 1, zeta);
}

/// Vector with g(a, others) at each vertex a of `vertices` and 0 elsewhere (length zeta.n()).
inline std::vector<Rat> g_vector(std::span<const Vertex> vertices, const ZetaAssignment& zeta) {
  std::vector<Rat> out(static_cast<std::size_t>(zeta.n()));
  std::vector<Vertex> rest;
  for (auto v : vertices) {
    rest.clear();
    for (auto w : vertices)
      if (w != v) rest.push_back(w);
    out[static_cast<std::size_t>(v - 1)] = g_value(v, rest, zeta);
  }
  return out;
}

/// Rows are the f-vectors of `pairs`, in order.
inline DenseMatrix stack_f_vectors(std::span<const Pair> pairs, const ZetaAssignment& zeta) {
  const int n = zeta.n();
  DenseMatrix m(pairs.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    auto f = f_vector(n, pairs[r], zeta);
    for (std::size_t c = 0; c < f.components.size(); ++c) m(r, c) = f.components[c];
  }
  return m;
}

/// |t| × n matrix of the f-vectors of t in canonical order.
inline DenseMatrix stack_f_matrix(const Triangulation& t, const ZetaAssignment& zeta) {
  return stack_f_vectors(t.pairs(), zeta);
}

/// P · (old f-vectors, column order) == (new f-vectors, row order).
inline bool check_move_action(const PachnerMove& m, const ZetaAssignment& zeta) {
  const auto p = build_p_matrix(m, zeta);
  const auto before = stack_f_vectors(p.map.col_pairs, zeta);
  const auto after = stack_f_vectors(p.map.row_pairs, zeta);
  return mat_eq(mat_mul(p.entries, before), after);
}

}  // namespace ngon
