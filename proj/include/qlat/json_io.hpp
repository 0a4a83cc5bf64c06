#pragma once

#include <json.hpp>

#include "qlat/linalg.hpp"

namespace qlat {

// Wire format shared by every emitter:
//   LaurentPoly  {"min_deg": k, "coeffs": [c0, c1, ...]}
//   QTElement    {"even": <LaurentPoly>, "odd": <LaurentPoly>}
//   QFraction    {"num": <LaurentPoly>, "den": <LaurentPoly>}
//   Matrix       {"rows": r, "cols": c, "row_labels": [...], "col_labels": [...],
//                 "entries": [[...], ...]}   (row-major)
// Coefficients are JSON integers; values outside the signed 64-bit range are
// written as decimal strings, and both forms are accepted on input.

nlohmann::json to_json(const Integer& c);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const QTElement& x);
nlohmann::json to_json(const QFraction& x);

template <class T>
nlohmann::json to_json(const Matrix<T>& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"row_labels", m.row_labels()},
          {"col_labels", m.col_labels()},
          {"entries", std::move(entries)}};
}

Integer integer_from_json(const nlohmann::json& j);
LaurentPoly laurent_from_json(const nlohmann::json& j);
QTElement qt_from_json(const nlohmann::json& j);
LaurentMatrix laurent_matrix_from_json(const nlohmann::json& j);

}  // namespace qlat
