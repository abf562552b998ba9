#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ngon/complex.hpp"
#include "ngon/error.hpp"
#include "ngon/matrix.hpp"
#include "ngon/vandermonde.hpp"
#include "ngon/zeta.hpp"

namespace ngon {

/// The labelling a_1, …, a_{n−1} of {1..n} \ {q} the entry formulas are written in.
///
/// Odd n: a_1 < a_3 < … < a_{n−2} is the c side, a_2 < a_4 < … < a_{n−1} the b side.
/// Even n: a_1 < a_3 < … < a_{n−3} is the b side, a_2 < … < a_{n−2} < a_{n−1} the c side.
struct InterleavedFrame {
  int n = 0;
  Vertex q = 0;
  std::vector<Vertex> a;  // a[k - 1] holds a_k

  [[nodiscard]] Vertex at(int k) const { return a.at(static_cast<std::size_t>(k - 1)); }
};

inline InterleavedFrame make_frame(const PachnerMove& m) {
  m.validate();
  InterleavedFrame f{m.n, m.q, std::vector<Vertex>(static_cast<std::size_t>(m.n - 1))};
  auto set = [&](int k, Vertex v) { f.a[static_cast<std::size_t>(k - 1)] = v; };
  if (m.n % 2 == 1) {
    for (std::size_t k = 0; k < m.c_set.size(); ++k) set(2 * static_cast<int>(k) + 1, m.c_set[k]);
    for (std::size_t k = 0; k < m.b_set.size(); ++k) set(2 * static_cast<int>(k) + 2, m.b_set[k]);
  } else {
    for (std::size_t k = 0; k < m.b_set.size(); ++k) set(2 * static_cast<int>(k) + 1, m.b_set[k]);
    for (std::size_t k = 0; k + 1 < m.c_set.size(); ++k) set(2 * static_cast<int>(k) + 2, m.c_set[k]);
    set(m.n - 1, m.c_set.back());
  }
  return f;
}

/// Which simplex each row and column of a P-matrix stands for.
///
/// Column j consumes the simplex omitting {col_vertex[j], q}; row i creates the one omitting
/// {row_vertex[i], q}.
struct ActiveIndexMap {
  std::vector<Vertex> row_vertex;
  std::vector<Vertex> col_vertex;
  std::vector<Pair> row_pairs;
  std::vector<Pair> col_pairs;
};

inline ActiveIndexMap make_active_map(const InterleavedFrame& f) {
  ActiveIndexMap map;
  const int n = f.n;
  if (n % 2 == 1) {
    const int h = (n - 1) / 2;
    for (int j = 1; j <= h; ++j) map.col_vertex.push_back(f.at(n + 1 - 2 * j));
    for (int i = 1; i <= h; ++i) map.row_vertex.push_back(f.at(n - 2 * i));
  } else {
    for (int j = 1; j <= n / 2 - 1; ++j) map.col_vertex.push_back(f.at(n - 1 - 2 * j));
    map.row_vertex.push_back(f.at(n - 1));
    for (int i = 2; i <= n / 2; ++i) map.row_vertex.push_back(f.at(n + 2 - 2 * i));
  }
  for (auto v : map.row_vertex) map.row_pairs.push_back(Pair::make(v, f.q, n));
  for (auto v : map.col_vertex) map.col_pairs.push_back(Pair::make(v, f.q, n));
  return map;
}

struct PMatrix {
  DenseMatrix entries;
  InterleavedFrame frame;
  ActiveIndexMap map;
};

namespace detail {

inline void require_same_n(const PachnerMove& m, const ZetaAssignment& zeta) {
  if (zeta.n() != m.n) {
    throw InvalidInput("zeta has " + std::to_string(zeta.n()) + " values but the move lives in the " +
                       std::to_string(m.n) + "-gon");
  }
}

}  // namespace detail

/// P-matrix of a move in Lagrange form: entry (i, j) is the j-th Lagrange basis polynomial on
/// the column nodes ζ_{col_vertex}, evaluated at ζ_{row_vertex[i]}.
inline PMatrix build_p_matrix(const PachnerMove& m, const ZetaAssignment& zeta) {
  detail::require_same_n(m, zeta);
  auto frame = make_frame(m);
  auto map = make_active_map(frame);
  const auto& nodes = map.col_vertex;
  DenseMatrix p(map.row_vertex.size(), nodes.size());
  for (std::size_t i = 0; i < map.row_vertex.size(); ++i) {
    const Rat& x = zeta[map.row_vertex[i]];
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      Rat num{1};
      Rat den{1};
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k == j) continue;
        num *= x - zeta[nodes[k]];
        den *= zeta[nodes[j]] - zeta[nodes[k]];
      }
      p(i, j) = num / den;
    }
  }
  return {std::move(p), std::move(frame), std::move(map)};
}

/// The same matrix from the signed Vandermonde-ratio entry formulas, with V taken over the
/// arguments in the order written (column-permuted determinant). Kept as an independent check.
inline DenseMatrix p_matrix_vandermonde_form(const PachnerMove& m, const ZetaAssignment& zeta) {
  detail::require_same_n(m, zeta);
  const auto f = make_frame(m);
  const int n = m.n;
  auto sign = [](int e) { return e % 2 == 0 ? Rat{1} : Rat{-1}; };

  if (n % 2 == 1) {
    const int h = (n - 1) / 2;
    std::vector<Vertex> even;
    for (int k = 2; k <= n - 1; k += 2) even.push_back(f.at(k));
    const Rat denom = vandermonde(even, zeta);
    DenseMatrix p(static_cast<std::size_t>(h), static_cast<std::size_t>(h));
    for (int i = 1; i <= h; ++i) {
      for (int j = 1; j <= h; ++j) {
        std::vector<Vertex> args{f.at(n - 2 * i)};
        for (int k = 2; k <= n - 1; k += 2)
          if (k != n + 1 - 2 * j) args.push_back(f.at(k));
        p(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
            sign(j + h) * vandermonde(args, zeta) / denom;
      }
    }
    return p;
  }

  const int cols = n / 2 - 1;
  std::vector<Vertex> odd;
  for (int k = 1; k <= n - 3; k += 2) odd.push_back(f.at(k));
  const Rat denom = vandermonde(odd, zeta);
  DenseMatrix p(static_cast<std::size_t>(n / 2), static_cast<std::size_t>(cols));
  for (int i = 1; i <= n / 2; ++i) {
    const Vertex head = i == 1 ? f.at(n - 1) : f.at(n + 2 - 2 * i);
    for (int j = 1; j <= cols; ++j) {
      std::vector<Vertex> args{head};
      for (int k = 1; k <= n - 3; k += 2)
        if (k != n - 1 - 2 * j) args.push_back(f.at(k));
      p(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          sign(j + n / 2 - 1) * vandermonde(args, zeta) / denom;
    }
  }
  return p;
}

/// P-matrix padded to |t_new| × |t_old|: rows follow t_new's order, columns t_old's, and every
/// simplex the move leaves alone gets a single 1 at its (row, column).
inline DenseMatrix extend_matrix(const PachnerMove& m, const Triangulation& t_old,
                                 const Triangulation& t_new, const ZetaAssignment& zeta) {
  if (apply_move(t_old, m) != t_new) {
    throw InvalidInput(m.label() + " does not take the given triangulation to the given result");
  }
  const auto p = build_p_matrix(m, zeta);
  DenseMatrix e(t_new.size(), t_old.size());
  std::vector<std::size_t> col_index;
  for (const auto& cp : p.map.col_pairs) {
    auto idx = t_old.index_of(cp);
    if (!idx) throw InternalError("consumed simplex missing from the old triangulation");
    col_index.push_back(*idx);
  }
  for (std::size_t r = 0; r < t_new.size(); ++r) {
    const Pair& pr = t_new.pairs()[r];
    auto active = std::find(p.map.row_pairs.begin(), p.map.row_pairs.end(), pr);
    if (active != p.map.row_pairs.end()) {
      auto i = static_cast<std::size_t>(active - p.map.row_pairs.begin());
      for (std::size_t j = 0; j < col_index.size(); ++j) e(r, col_index[j]) = p.entries(i, j);
    } else {
      auto c = t_old.index_of(pr);
      if (!c) throw InternalError("fixed simplex missing from the old triangulation");
      e(r, *c) = Rat{1};
    }
  }
  return e;
}

/// One move of a side together with its extended matrix.
struct ExtendedStep {
  PachnerMove move;
  Triangulation before;
  Triangulation after;
  PMatrix p;
  DenseMatrix matrix;
};

/// A single-entry change injected into one extended matrix, for negative controls.
struct Perturbation {
  enum class Kind { add_one, negate };
  Side side = Side::lhs;
  std::size_t step = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  Kind kind = Kind::add_one;
};

inline void apply_perturbation(DenseMatrix& m, const Perturbation& p) {
  if (p.row >= m.rows() || p.col >= m.cols()) throw InvalidInput("perturbation outside the matrix");
  if (p.kind == Perturbation::Kind::add_one)
    m(p.row, p.col) += Rat{1};
  else
    m(p.row, p.col) = -m(p.row, p.col);
}

inline std::vector<ExtendedStep> side_steps(const MoveSequence& seq, const ZetaAssignment& zeta,
                                            const std::optional<Perturbation>& perturb = std::nullopt) {
  if (seq.moves.empty()) throw InvalidInput("empty move sequence");
  const int n = seq.moves.front().n;
  std::vector<ExtendedStep> steps;
  auto t = initial_triangulation(n);
  for (const auto& m : seq.moves) {
    auto next = apply_move(t, m);
    auto p = build_p_matrix(m, zeta);
    auto e = extend_matrix(m, t, next, zeta);
    steps.push_back({m, t, next, std::move(p), std::move(e)});
    t = std::move(next);
  }
  if (perturb && perturb->side == seq.side) {
    if (perturb->step >= steps.size()) throw InvalidInput("perturbation step out of range");
    apply_perturbation(steps[perturb->step].matrix, *perturb);
  }
  return steps;
}

/// M_k · … · M_1, where M_1 belongs to the first-applied move.
inline DenseMatrix product_of_steps(const std::vector<ExtendedStep>& steps) {
  if (steps.empty()) throw InvalidInput("empty move sequence");
  DenseMatrix acc = steps.front().matrix;
  for (std::size_t k = 1; k < steps.size(); ++k) acc = mat_mul(steps[k].matrix, acc);
  return acc;
}

inline DenseMatrix product_for_side(const MoveSequence& seq, const ZetaAssignment& zeta,
                                    const std::optional<Perturbation>& perturb = std::nullopt) {
  return product_of_steps(side_steps(seq, zeta, perturb));
}

}  // namespace ngon
