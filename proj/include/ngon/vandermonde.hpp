#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "ngon/error.hpp"
#include "ngon/rat.hpp"
#include "ngon/zeta.hpp"

namespace ngon {

/// Determinant of the matrix whose columns are (1, ζ_v, ζ_v², …) for v in `indices`, in the
/// given column order: sign(sorting permutation) × ∏_{p<q}(ζ_{s_q} − ζ_{s_p}) over the sorted s.
inline Rat vandermonde(std::span<const Vertex> indices, const ZetaAssignment& zeta) {
  if (indices.empty()) throw InvalidInput("vandermonde of an empty index list");
  for (auto v : indices) {
    if (v < 1 || v > zeta.n()) {
      throw InvalidInput("vandermonde index " + std::to_string(v) + " outside 1.." +
                         std::to_string(zeta.n()));
    }
  }
  std::vector<Vertex> sorted(indices.begin(), indices.end());
  // Parity of the sorting permutation from its inversion count.
  bool odd = false;
  for (std::size_t p = 0; p < sorted.size(); ++p)
    for (std::size_t q = p + 1; q < sorted.size(); ++q)
      if (sorted[p] > sorted[q]) odd = !odd;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("vandermonde indices must be pairwise distinct");
  }
  Rat det{1};
  for (std::size_t p = 0; p < sorted.size(); ++p)
    for (std::size_t q = p + 1; q < sorted.size(); ++q) det *= zeta[sorted[q]] - zeta[sorted[p]];
  return odd ? -det : det;
}

inline Rat vandermonde(std::initializer_list<Vertex> indices, const ZetaAssignment& zeta) {
  return vandermonde(std::span<const Vertex>(indices.begin(), indices.size()), zeta);
}

}  // namespace ngon
