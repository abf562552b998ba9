#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ngon/complex.hpp"
#include "ngon/fvectors.hpp"
#include "ngon/matrix.hpp"
#include "ngon/pmatrix.hpp"
#include "ngon/verifier.hpp"

namespace ngon {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) { return r.to_string(); }

inline Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidInput("expected a \"p/q\" string");
  return Rat::parse(j.get<std::string>());
}

/// 2-D array of "p/q" strings.
inline Json to_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(x.to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline DenseMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("matrix JSON must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.front().size();
  std::vector<Rat> data;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw InvalidInput("matrix JSON rows must have equal length");
    for (const auto& x : row) data.push_back(rat_from_json(x));
  }
  return DenseMatrix(rows, cols, std::move(data));
}

inline Json to_json(const PachnerMove& m) {
  return Json{{"q", m.q}, {"b", m.b_set}, {"c", m.c_set}};
}

inline PachnerMove move_from_json(const Json& j, int n) {
  auto m = PachnerMove::make(n, j.at("q").get<int>(), j.at("b").get<std::vector<int>>());
  if (m.c_set != j.at("c").get<std::vector<int>>()) throw InvalidInput("move JSON: c is not the complement of b and q");
  return m;
}

/// Sorted list of [i, j] pairs.
inline Json to_json(const Triangulation& t) {
  Json out = Json::array();
  for (const auto& p : t.pairs()) out.push_back(Json::array({p.i, p.j}));
  return out;
}

/// f-vectors of every pair, keyed "(i,j)".
inline Json fvectors_to_json(const ZetaAssignment& zeta) {
  const int n = zeta.n();
  Json out = Json::object();
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      auto f = f_vector(n, Pair::make(i, j, n), zeta);
      Json comps = Json::array();
      for (const auto& x : f.components) comps.push_back(x.to_string());
      out[pair_label(f.pair)] = std::move(comps);
    }
  }
  return out;
}

/// Report JSON; timing is left out so equal inputs give equal bytes.
inline Json to_json(const VerificationReport& r) {
  Json moves_l = Json::array();
  for (const auto& m : r.lhs_moves) moves_l.push_back(to_json(m));
  Json moves_r = Json::array();
  for (const auto& m : r.rhs_moves) moves_r.push_back(to_json(m));
  Json zeta = Json::array();
  for (const auto& z : r.zeta) zeta.push_back(z.to_string());
  Json props = Json::object();
  for (const auto& p : r.properties) props[p.name] = p.passed;

  Json out{{"n", r.n},
           {"zeta", std::move(zeta)},
           {"assignment", r.zeta_description},
           {"lhs_moves", std::move(moves_l)},
           {"rhs_moves", std::move(moves_r)},
           {"shape", Json::array({r.rows, r.cols})},
           {"equal", r.equal},
           {"properties", std::move(props)},
           {"version", kVersion}};
  if (r.first_mismatch) {
    const auto& mm = *r.first_mismatch;
    out["first_mismatch"] = Json{{"row", mm.row},
                                 {"col", mm.col},
                                 {"row_simplex", mm.row_simplex},
                                 {"col_simplex", mm.col_simplex},
                                 {"lhs", mm.lhs.to_string()},
                                 {"rhs", mm.rhs.to_string()}};
  }
  return out;
}

inline Json to_json(const ExtendedStep& s) {
  return Json{{"move", to_json(s.move)},
              {"label", s.move.label()},
              {"rows", s.after.simplex_labels()},
              {"cols", s.before.simplex_labels()},
              {"matrix", to_json(s.matrix)}};
}

// LaTeX

inline std::string to_latex(const Rat& r) {
  if (r.denominator() == 1) return r.to_string();
  std::string sign = r.sign() < 0 ? "-" : "";
  BigInt num = r.numerator();
  if (num < 0) num = -num;
  return sign + "\\frac{" + num.str() + "}{" + r.denominator().str() + "}";
}

inline std::string to_latex(const DenseMatrix& m) {
  std::ostringstream os;
  os << "\\left(\\begin{array}{" << std::string(m.cols(), 'c') << "}";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "" : "\\\\") << "\n";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c == 0 ? "" : "&") << to_latex(m(r, c));
  }
  os << "\n\\end{array}\\right)";
  return os.str();
}

/// Factors in multiplication order: the last-applied move is leftmost.
inline std::string side_to_latex(const std::vector<ExtendedStep>& steps) {
  std::string out;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out += to_latex(it->matrix) + "\n";
  return out;
}

// Plain text

inline std::string to_text(const DenseMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& x : m.data()) {
    cells.push_back(x.to_string());
    width = std::max(width, cells.back().size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& s = cells[r * m.cols() + c];
      os << (c == 0 ? "" : " ") << std::string(width - s.size(), ' ') << s;
    }
    os << "]\n";
  }
  return os.str();
}

inline std::string to_text(const Triangulation& t) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) out += (k == 0 ? "" : ", ") + simplex_label(t.pairs()[k]);
  return out;
}

}  // namespace ngon
