#include "qlat/json_io.hpp"

#include <limits>

#include "qlat/errors.hpp"

namespace qlat {

nlohmann::json to_json(const Integer& c) {
  if (mpz_fits_slong_p(c.get_mpz_t())) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"min_deg", p.min_deg()}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json to_json(const QTElement& x) { return {{"even", to_json(x.even)}, {"odd", to_json(x.odd)}}; }

nlohmann::json to_json(const QFraction& x) { return {{"num", to_json(x.num())}, {"den", to_json(x.den())}}; }

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer c;
    if (c.set_str(j.get<std::string>(), 10) != 0) throw Error("invalid integer string in JSON");
    return c;
  }
  throw Error("expected an integer coefficient in JSON");
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(integer_from_json(c));
  return LaurentPoly(j.at("min_deg").get<int>(), std::move(coeffs));
}

QTElement qt_from_json(const nlohmann::json& j) {
  return {laurent_from_json(j.at("even")), laurent_from_json(j.at("odd"))};
}

LaurentMatrix laurent_matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  LaurentMatrix m(rows, cols);
  const auto& entries = j.at("entries");
  if (entries.size() != rows) throw DimensionError("JSON matrix: row count mismatch");
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw DimensionError("JSON matrix: column count mismatch");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = laurent_from_json(entries[i][k]);
  }
  if (j.contains("row_labels")) m.set_row_labels(j["row_labels"].get<std::vector<std::string>>());
  if (j.contains("col_labels")) m.set_col_labels(j["col_labels"].get<std::vector<std::string>>());
  return m;
}

}  // namespace qlat
