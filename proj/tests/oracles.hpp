#pragma once

// Brute-force reference computations. Nothing here calls the elimination or Vandermonde code
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ngon/matrix.hpp"
#include "ngon/rat.hpp"
#include "ngon/zeta.hpp"

namespace ngon::oracle {

/// Leibniz expansion over all permutations.
inline Rat leibniz_det(const DenseMatrix& m) {
  const std::size_t k = m.rows();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Rat det{};
  do {
    bool odd = false;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) odd = !odd;
    Rat term{1};
    for (std::size_t r = 0; r < k; ++r) term *= m(r, perm[r]);
    det += odd ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// The k×k matrix with rows 1, ζ, ζ², … over the given columns, expanded by Leibniz.
inline Rat vandermonde_by_expansion(const std::vector<Vertex>& cols, const ZetaAssignment& zeta) {
  const std::size_t k = cols.size();
  DenseMatrix m(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    Rat power{1};
    for (std::size_t r = 0; r < k; ++r) {
      m(r, c) = power;
      power *= zeta[cols[c]];
    }
  }
  return leibniz_det(m);
}

inline void for_each_subset(std::size_t size, std::size_t k, const auto& fn) {
  std::vector<bool> mask(size, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < size; ++t)
      if (mask[t]) idx.push_back(t);
    fn(idx);
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

/// Largest k with a nonzero k×k minor.
inline std::size_t rank_by_minors(const DenseMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    bool found = false;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      if (found) return;
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (found) return;
        DenseMatrix minor(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) minor(a, b) = m(rows[a], cols[b]);
        found = !leibniz_det(minor).is_zero();
      });
    });
    if (found) return k;
  }
  return 0;
}

inline DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rat(num(gen), den(gen));
  return m;
}

}  // namespace ngon::oracle
