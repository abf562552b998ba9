#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ngon/complex.hpp"
#include "ngon/error.hpp"
#include "ngon/fvectors.hpp"
#include "ngon/matrix.hpp"
#include "ngon/pmatrix.hpp"
#include "ngon/zeta.hpp"

namespace ngon {

inline constexpr const char* kVersion = "1.0.0";

/// First entry where the two side products differ.
struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string row_simplex;
  std::string col_simplex;
  Rat lhs;
  Rat rhs;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;  // first failure, empty when passed
};

struct VerificationReport {
  int n = 0;
  std::string zeta_description;
  std::vector<Rat> zeta;
  std::vector<PachnerMove> lhs_moves;
  std::vector<PachnerMove> rhs_moves;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool equal = false;
  std::optional<Mismatch> first_mismatch;
  std::vector<PropertyResult> properties;
  std::vector<std::pair<std::string, double>> timing_ms;

  [[nodiscard]] bool all_properties_pass() const {
    for (const auto& p : properties)
      if (!p.passed) return false;
    return true;
  }
};

struct VerifyOptions {
  std::optional<Perturbation> perturbation;
  /// Compute the two side products on separate threads.
  bool parallel_sides = false;
};

namespace detail {

class PhaseTimer {
 public:
  explicit PhaseTimer(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
  void lap(std::string name) {
    auto now = std::chrono::steady_clock::now();
    sink_.emplace_back(std::move(name), std::chrono::duration<double, std::milli>(now - start_).count());
    start_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void require_zeta_for(int n, const ZetaAssignment& zeta) {
  require_polygon(n);
  if (zeta.n() != n) {
    throw InvalidInput("zeta has " + std::to_string(zeta.n()) + " values, expected " + std::to_string(n));
  }
}

}  // namespace detail

/// Builds both sides of the n-gon equation at `zeta` and compares the products exactly.
inline VerificationReport verify_equation(int n, const ZetaAssignment& zeta, const VerifyOptions& options = {}) {
  detail::require_zeta_for(n, zeta);
  VerificationReport report;
  report.n = n;
  report.zeta_description = zeta.description();
  report.zeta = zeta.values();
  detail::PhaseTimer timer(report.timing_ms);

  EquationSequences seqs;
  try {
    seqs = equation_sequences(n);
  } catch (const MoveNotApplicable& e) {
    throw InternalError(std::string("move sequence derivation failed: ") + e.what());
  }
  report.lhs_moves = seqs.lhs.moves;
  report.rhs_moves = seqs.rhs.moves;
  timer.lap("sequences");

  DenseMatrix lhs;
  DenseMatrix rhs;
  if (options.parallel_sides) {
    auto fut = std::async(std::launch::async,
                          [&] { return product_for_side(seqs.rhs, zeta, options.perturbation); });
    lhs = product_for_side(seqs.lhs, zeta, options.perturbation);
    rhs = fut.get();
  } else {
    lhs = product_for_side(seqs.lhs, zeta, options.perturbation);
    rhs = product_for_side(seqs.rhs, zeta, options.perturbation);
  }
  timer.lap("products");

  const auto initial = initial_triangulation(n);
  const auto final = final_triangulation(n);
  if (lhs.rows() != final.size() || lhs.cols() != initial.size() || rhs.rows() != lhs.rows() ||
      rhs.cols() != lhs.cols()) {
    throw InternalError("side products do not have shape |final| x |initial|");
  }
  report.rows = lhs.rows();
  report.cols = lhs.cols();
  report.equal = mat_eq(lhs, rhs);
  if (!report.equal) {
    for (std::size_t r = 0; r < lhs.rows() && !report.first_mismatch; ++r) {
      for (std::size_t c = 0; c < lhs.cols(); ++c) {
        if (lhs(r, c) != rhs(r, c)) {
          report.first_mismatch = Mismatch{r, c, simplex_label(final.pairs()[r]),
                                           simplex_label(initial.pairs()[c]), lhs(r, c), rhs(r, c)};
          break;
        }
      }
    }
  }
  timer.lap("compare");
  return report;
}

enum class Depth { quick, full };

namespace detail {

class PropertyRecorder {
 public:
  explicit PropertyRecorder(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  void fail(std::string why) {
    result_.passed = false;
    if (result_.counterexample.empty()) result_.counterexample = std::move(why);
  }
  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

inline std::string step_name(Side side, std::size_t k, const PachnerMove& m) {
  return std::string(side_name(side)) + " step " + std::to_string(k + 1) + " " + m.label();
}

// Subsets of {0..size-1} of size k: all of them when there are at most `exhaustive_limit`,
// otherwise `samples` distinct ones drawn from a generator seeded with `seed`.
inline std::vector<std::vector<std::size_t>> choose_subsets(std::size_t size, std::size_t k,
                                                            std::size_t exhaustive_limit,
                                                            std::size_t samples, std::uint64_t seed) {
  std::vector<std::vector<std::size_t>> all;
  for_each_combination(size, k, [&](std::span<const std::size_t> idx) {
    all.emplace_back(idx.begin(), idx.end());
  });
  if (all.size() <= exhaustive_limit) return all;
  std::mt19937_64 gen(seed);
  std::shuffle(all.begin(), all.end(), gen);
  all.resize(samples);
  return all;
}

}  // namespace detail

/// Checks every property the construction relies on, at one evaluation point.
///
/// quick depth caps the sampled properties (independence, lemma g); full depth is exhaustive
/// wherever the subset count is at most 64 and samples 50 subsets otherwise. A perturbation is
/// injected into the extended matrices seen by the row-sum and move-action checks.
inline std::vector<PropertyResult> run_property_suite(int n, const ZetaAssignment& zeta, Depth depth,
                                                      const std::optional<Perturbation>& perturb = std::nullopt) {
  detail::require_zeta_for(n, zeta);
  const int h = half_floor(n);
  const std::size_t exhaustive_limit = depth == Depth::full ? 64 : 10;
  const std::size_t samples = depth == Depth::full ? 50 : 10;
  std::vector<PropertyResult> results;

  std::map<std::pair<Vertex, Vertex>, FVector> fcache;
  auto fvec = [&](const Pair& p) -> const FVector& {
    auto key = std::make_pair(p.i, p.j);
    auto it = fcache.find(key);
    if (it == fcache.end()) it = fcache.emplace(key, f_vector(n, p, zeta)).first;
    return it->second;
  };
  auto stack = [&](const std::vector<Pair>& pairs) {
    DenseMatrix m(pairs.size(), static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < pairs.size(); ++r) {
      const auto& f = fvec(pairs[r]);
      for (std::size_t c = 0; c < f.components.size(); ++c) m(r, c) = f.components[c];
    }
    return m;
  };

  // Sequences and their extended matrices.
  detail::PropertyRecorder endpoints("sequence_endpoints");
  detail::PropertyRecorder growth("pair_count_growth");
  std::vector<std::pair<Side, std::vector<ExtendedStep>>> sides;
  try {
    auto seqs = equation_sequences(n);
    for (const auto* seq : {&seqs.lhs, &seqs.rhs}) {
      auto path = triangulation_path(n, *seq);
      endpoints.check(path.back() == final_triangulation(n), [&] {
        return std::string(side_name(seq->side)) + " sequence ends away from the final triangulation";
      });
      const std::size_t expected_moves =
          n % 2 == 1 ? static_cast<std::size_t>(seq->side == Side::lhs ? (n - 1) / 2 : (n + 1) / 2)
                     : static_cast<std::size_t>(n / 2);
      endpoints.check(seq->moves.size() == expected_moves,
                      [&] { return std::string(side_name(seq->side)) + " has the wrong number of moves"; });
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const std::size_t grow = n % 2 == 0 ? 1 : 0;
        growth.check(path[k + 1].size() == path[k].size() + grow, [&] {
          return detail::step_name(seq->side, k, seq->moves[k]) + ": " + std::to_string(path[k].size()) +
                 " -> " + std::to_string(path[k + 1].size()) + " simplices";
        });
      }
      sides.emplace_back(seq->side, side_steps(*seq, zeta, perturb));
    }
  } catch (const Error& e) {
    endpoints.fail(e.what());
  }
  results.push_back(endpoints.take());
  results.push_back(growth.take());

  detail::PropertyRecorder row_sum("row_sum");
  detail::PropertyRecorder formula("formula_equivalence");
  detail::PropertyRecorder full_rank("p_full_rank");
  detail::PropertyRecorder action("move_action");
  for (const auto& [side, steps] : sides) {
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const auto& s = steps[k];
      for (std::size_t r = 0; r < s.p.entries.rows(); ++r) {
        row_sum.check(s.p.entries.row_sum(r) == Rat{1}, [&] {
          return detail::step_name(side, k, s.move) + ": P row " + std::to_string(r + 1) + " sums to " +
                 s.p.entries.row_sum(r).to_string();
        });
      }
      for (std::size_t r = 0; r < s.matrix.rows(); ++r) {
        row_sum.check(s.matrix.row_sum(r) == Rat{1}, [&] {
          return detail::step_name(side, k, s.move) + ": extended row " + std::to_string(r + 1) + " (" +
                 simplex_label(s.after.pairs()[r]) + ") sums to " + s.matrix.row_sum(r).to_string();
        });
      }
      formula.check(s.p.entries == p_matrix_vandermonde_form(s.move, zeta), [&] {
        return detail::step_name(side, k, s.move) + ": Lagrange and Vandermonde forms differ";
      });
      if (n % 2 == 1) {
        full_rank.check(!determinant(s.p.entries).is_zero(),
                        [&] { return detail::step_name(side, k, s.move) + ": P is singular"; });
      } else {
        full_rank.check(mat_rank(s.p.entries) == s.p.entries.cols(),
                        [&] { return detail::step_name(side, k, s.move) + ": P lacks full column rank"; });
      }
      const auto before = stack(s.p.map.col_pairs);
      const auto after = stack(s.p.map.row_pairs);
      action.check(mat_eq(mat_mul(s.p.entries, before), after), [&] {
        return detail::step_name(side, k, s.move) + ": P does not map old f-vectors to new ones";
      });
      action.check(mat_eq(mat_mul(s.matrix, stack(s.before.pairs())), stack(s.after.pairs())), [&] {
        return detail::step_name(side, k, s.move) + ": extended matrix does not map the triangulation's f-vectors";
      });
    }
  }
  results.push_back(row_sum.take());
  results.push_back(formula.take());
  results.push_back(full_rank.take());
  results.push_back(action.take());

  detail::PropertyRecorder ortho("orthogonality");
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      const auto& f = fvec(Pair::make(i, j, n));
      ortho.check(check_orthogonality(f, zeta), [&] {
        return "f-vector of " + simplex_label(f.pair) + " is not orthogonal to the power rows";
      });
      ortho.check(f.at(i).is_zero() && f.at(j).is_zero(), [&] {
        return "f-vector of " + simplex_label(f.pair) + " is nonzero off its simplex";
      });
    }
  }
  results.push_back(ortho.take());

  // g is evaluated on ⌊n/2⌋+1 vertices inside f; its power sums vanish up to ⌊n/2⌋−1.
  detail::PropertyRecorder lemma_g("lemma_g");
  {
    const auto subsets = detail::choose_subsets(static_cast<std::size_t>(n), static_cast<std::size_t>(n / 2 + 1),
                                                depth == Depth::full ? 1000 : 50, 50, 0x6a09e667ULL + n);
    for (const auto& idx : subsets) {
      std::vector<Vertex> vs;
      for (auto x : idx) vs.push_back(static_cast<Vertex>(x) + 1);
      lemma_g.check(power_sums_vanish(g_vector(vs, zeta), static_cast<int>(vs.size()) - 2, zeta),
                    [&] { return "g power sums do not vanish on " + vertex_string(vs, n); });
    }
  }
  results.push_back(lemma_g.take());

  detail::PropertyRecorder independence("independence");
  detail::PropertyRecorder span("span_exactly");
  for (Vertex q = 1; q <= n; ++q) {
    std::vector<Pair> around;
    for (Vertex v = 1; v <= n; ++v)
      if (v != q) around.push_back(Pair::make(v, q, n));
    const auto subsets = detail::choose_subsets(around.size(), static_cast<std::size_t>(h), exhaustive_limit,
                                                samples, 0xbb67ae85ULL * static_cast<std::uint64_t>(n) + q);
    for (const auto& idx : subsets) {
      std::vector<Pair> chosen;
      for (auto x : idx) chosen.push_back(around[x]);
      independence.check(mat_rank(stack(chosen)) == static_cast<std::size_t>(h), [&] {
        std::string s = "q=" + std::to_string(q) + ": dependent f-vectors";
        for (const auto& p : chosen) s += " " + simplex_label(p);
        return s;
      });
    }
    const auto rank = mat_rank(stack(around));
    span.check(rank == static_cast<std::size_t>(h), [&] {
      return "q=" + std::to_string(q) + ": span has dimension " + std::to_string(rank);
    });
  }
  results.push_back(independence.take());
  results.push_back(span.take());

  detail::PropertyRecorder initial_rank("initial_rank");
  {
    const auto rank = mat_rank(stack(initial_triangulation(n).pairs()));
    const auto expected = static_cast<std::size_t>(h * (h + 1) / 2);
    initial_rank.check(rank == expected, [&] {
      return "rank " + std::to_string(rank) + ", expected " + std::to_string(expected);
    });
  }
  results.push_back(initial_rank.take());
  return results;
}

}  // namespace ngon
