#include "liecurv/document.hpp"

#include <set>
#include <string>
#include <utility>

#include <json.hpp>

#include "liecurv/errors.hpp"

namespace liecurv {

namespace {

using nlohmann::json;

std::size_t parse_index(const json& value, std::size_t n, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + ": index must be an integer");
  const auto idx = value.get<std::int64_t>();
  if (idx < 1 || static_cast<std::size_t>(idx) > n) {
    throw ParseError(where + ": index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(idx - 1);
}

std::size_t parse_index_key(const std::string& key, std::size_t n, const std::string& where) {
  if (key.empty() || key.size() > 9 || key.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(where + ": coefficient key '" + key + "' is not an index");
  }
  return parse_index(json(std::stoll(key)), n, where);
}

Rational parse_rational(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": rational must be a string such as \"1/2\"");
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Matrix parse_matrix(const json& value, std::size_t n, const std::string& where) {
  if (!value.is_array() || value.size() != n) throw ParseError(where + ": expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = value[r];
    if (!row.is_array() || row.size() != n) {
      throw ParseError(where + ": row " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = parse_rational(row[c], where + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]");
    }
  }
  return m;
}

json emit_matrix(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

LieDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");

  static const std::set<std::string> known = {"dimension", "brackets", "metric", "complex_structures"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.contains(key)) throw ParseError("unknown key '" + key + "'");
  }

  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer() || doc["dimension"].get<std::int64_t>() < 1) {
    throw ParseError("\"dimension\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["dimension"].get<std::int64_t>());
  if (n > 64) throw ParseError("\"dimension\" is unreasonably large");

  LieAlgebra alg(n);
  if (doc.contains("brackets")) {
    const json& brackets = doc["brackets"];
    if (!brackets.is_array()) throw ParseError("\"brackets\" must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t b = 0; b < brackets.size(); ++b) {
      const json& entry = brackets[b];
      const std::string where = "brackets[" + std::to_string(b) + "]";
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") || !entry.contains("coeffs")) {
        throw ParseError(where + ": expected {\"i\", \"j\", \"coeffs\"}");
      }
      for (const auto& [key, _] : entry.items()) {
        if (key != "i" && key != "j" && key != "coeffs") throw ParseError(where + ": unknown key '" + key + "'");
      }
      const std::size_t i = parse_index(entry["i"], n, where + ".i");
      const std::size_t j = parse_index(entry["j"], n, where + ".j");
      if (i >= j) throw ParseError(where + ": only entries with i < j may be given");
      if (!seen.insert({i, j}).second) throw ParseError(where + ": repeated bracket pair");
      if (!entry["coeffs"].is_object()) throw ParseError(where + ".coeffs must be an object");
      Vector value(n);
      for (const auto& [key, coeff] : entry["coeffs"].items()) {
        const std::size_t k = parse_index_key(key, n, where + ".coeffs");
        value[k] = parse_rational(coeff, where + ".coeffs." + key);
      }
      alg.set_bracket(i, j, value);
    }
  }

  Matrix metric = doc.contains("metric") ? parse_matrix(doc["metric"], n, "metric") : Matrix::identity(n);

  std::vector<Matrix> structures;
  if (doc.contains("complex_structures")) {
    const json& js = doc["complex_structures"];
    if (!js.is_array() || js.size() != 3) {
      throw ParseError("\"complex_structures\" must be an array of three matrices (J1, J2, J3)");
    }
    for (std::size_t s = 0; s < js.size(); ++s) {
      structures.push_back(parse_matrix(js[s], n, "complex_structures[" + std::to_string(s) + "]"));
    }
  }
  return {std::move(alg), std::move(metric), std::move(structures)};
}

MetricLieAlgebra load_metric_lie_algebra(std::string_view text) {
  LieDocument doc = parse_document(text);
  const ValidationReport report = validate_lie_algebra(doc.algebra);
  if (!report.ok()) throw ValidationError(report.describe());
  if (auto problem = inner_product_problem(doc.metric); !problem.empty()) throw ValidationError(problem);
  return {std::move(doc.algebra), InnerProduct(std::move(doc.metric))};
}

std::string emit_document(const MetricLieAlgebra& m, std::span<const Matrix> complex_structures) {
  const std::size_t n = m.dim();
  json doc;
  doc["dimension"] = n;
  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      json coeffs = json::object();
      for (std::size_t k = 0; k < n; ++k) {
        if (!m.algebra.c(i, j, k).is_zero()) coeffs[std::to_string(k + 1)] = m.algebra.c(i, j, k).to_string();
      }
      if (!coeffs.empty()) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", std::move(coeffs)}});
    }
  }
  doc["brackets"] = std::move(brackets);
  doc["metric"] = emit_matrix(m.metric.matrix());
  if (!complex_structures.empty()) {
    json js = json::array();
    for (const auto& j : complex_structures) js.push_back(emit_matrix(j));
    doc["complex_structures"] = std::move(js);
  }
  return doc.dump(2) + "\n";
}

}  // namespace liecurv
