#include "liecurv/report.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "liecurv/document.hpp"
#include "liecurv/errors.hpp"

namespace liecurv {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string e_label(std::size_t i) { return "e" + std::to_string(i + 1); }

std::string basis_label(std::size_t i) { return std::string(kBasisLabels.at(i)); }

std::string format_combination(const Vector& v, std::string (*label)(std::size_t)) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const bool negative = v[i].sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = v[i].abs();
    if (mag != Rational(1)) out += mag.to_string() + " ";
    out += label(i);
  }
  return out.empty() ? "0" : out;
}

bool labelled(const Report& report) { return report.data.dim() == kBasisLabels.size(); }

std::string matrix_rows(const Matrix& m, const std::string& indent) {
  std::size_t width = 0;
  for (const auto& x : m.entries()) width = std::max(width, x.to_string().size());
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = m(r, c).to_string();
      os << (c ? "  " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << "]\n";
  }
  return os.str();
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json vector_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

ordered_json sparse_json(const Vector& v) {
  ordered_json out = ordered_json::object();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out[std::to_string(k + 1)] = v[k].to_string();
  }
  return out;
}

ordered_json sign_json(const SignClass& sign) {
  ordered_json out = ordered_json::object();
  out["tag"] = std::string(to_string(sign.tag));
  ordered_json witnesses = ordered_json::array();
  if (sign.witnesses) {
    for (const PlaneWitness* w : {&sign.witnesses->first, &sign.witnesses->second}) {
      witnesses.push_back({{"u", vector_json(w->u)}, {"v", vector_json(w->v)}, {"k", w->k.to_string()}});
    }
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

std::string witness_lines(const SignClass& sign) {
  if (!sign.witnesses) return {};
  std::ostringstream os;
  for (const PlaneWitness* w : {&sign.witnesses->first, &sign.witnesses->second}) {
    os << "  K(" << format_vector(w->u) << ", " << format_vector(w->v) << ") = " << w->k << "\n";
  }
  return os.str();
}

std::string bracket_summary(const LieAlgebra& alg) {
  std::string out;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      const Vector b = alg.bracket_basis(i, j);
      if (is_zero(b)) continue;
      if (!out.empty()) out += ", ";
      out += "[" + basis_label(i) + "," + basis_label(j) + "]=" + format_vector(b);
    }
  return out.empty() ? "all brackets zero" : out;
}

}  // namespace

Source load_source(const std::string& name_or_path) {
  if (is_case_name(name_or_path)) {
    CatalogEntry entry = catalog(name_or_path);
    return {name_or_path, std::move(entry.data), std::nullopt};
  }
  std::ifstream in(name_or_path);
  if (!in) throw ParseError("cannot read '" + name_or_path + "' (not a catalog id or readable file)");
  std::stringstream buffer;
  buffer << in.rdbuf();
  LieDocument doc = parse_document(buffer.str());
  const ValidationReport report = validate_lie_algebra(doc.algebra);
  if (!report.ok()) throw ValidationError(report.describe());
  if (auto problem = inner_product_problem(doc.metric); !problem.empty()) throw ValidationError(problem);
  Source source{name_or_path, {std::move(doc.algebra), InnerProduct(std::move(doc.metric))}, std::nullopt};
  if (!doc.complex_structures.empty()) {
    source.structures = HypercomplexTriple{AlmostComplexStructure(doc.complex_structures[0]),
                                           AlmostComplexStructure(doc.complex_structures[1]),
                                           AlmostComplexStructure(doc.complex_structures[2])};
  }
  return source;
}

Report build_report(const Source& source) {
  CurvatureData data = compute_curvature(source.data);
  SignClass sign = classify(data.tensor, source.data.metric);
  std::optional<HypercomplexReport> hyper;
  if (source.structures) hyper = full_report(source.data, *source.structures);
  return {source.name, source.data, std::move(data), std::move(sign), std::move(hyper)};
}

std::string format_vector(const Vector& v) { return format_combination(v, e_label); }

std::string format_vector_labelled(const Vector& v) {
  if (v.size() > kBasisLabels.size()) throw ShapeError("format_vector_labelled: at most 4 components");
  return format_combination(v, basis_label);
}

std::string render_text(const Report& report) {
  const std::size_t n = report.data.dim();
  const bool show_labels = labelled(report);
  const LieAlgebra& alg = report.data.algebra;
  const CurvatureData& cd = report.curvature;
  std::ostringstream os;

  os << "source: " << report.source << "\n";
  os << "dimension: " << n << "\n";
  if (show_labels) os << "basis: e1=X, e2=Y, e3=Z, e4=W\n";
  if (report.data.metric.is_identity()) {
    os << "metric: identity (orthonormal basis)\n";
  } else {
    os << "metric:\n" << matrix_rows(report.data.metric.matrix(), "  ");
  }

  os << "\nbrackets:\n";
  bool any_bracket = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector b = alg.bracket_basis(i, j);
      if (is_zero(b)) continue;
      any_bracket = true;
      os << "  [e" << i + 1 << ",e" << j + 1 << "] = " << format_vector(b);
      if (show_labels) {
        os << "    ([" << basis_label(i) << "," << basis_label(j) << "] = " << format_vector_labelled(b) << ")";
      }
      os << "\n";
    }
  if (!any_bracket) os << "  abelian: all brackets vanish\n";

  os << "\nLevi-Civita connection:\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = cd.connection.covariant_basis(i, j);
      os << "  \u2207_{e" << i + 1 << "} e" << j + 1 << " = " << format_vector(v);
      if (show_labels) {
        os << "    (\u2207_" << basis_label(i) << " " << basis_label(j) << " = " << format_vector_labelled(v) << ")";
      }
      os << "\n";
    }

  os << "\ncurvature R(e_i,e_j)e_k, i<j, nonzero terms:\n";
  if (cd.tensor.is_zero()) {
    os << "  flat: all curvature components vanish\n";
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Vector v = cd.tensor.apply_basis(i, j, k);
          if (is_zero(v)) continue;
          os << "  R(e" << i + 1 << ",e" << j + 1 << ")e" << k + 1 << " = " << format_vector(v);
          if (show_labels) {
            os << "    (R(" << basis_label(i) << "," << basis_label(j) << ")" << basis_label(k) << " = "
               << format_vector_labelled(v) << ")";
          }
          os << "\n";
        }
  }

  os << "\nsectional curvature K(e_i,e_j), i<j:\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      os << "  K(e" << i + 1 << ",e" << j + 1 << ") = " << cd.sectional(i, j);
      if (show_labels) os << "    (K(" << basis_label(i) << "," << basis_label(j) << ") = " << cd.sectional(i, j) << ")";
      os << "\n";
    }

  os << "\ncurvature operator on e_i^e_j, basis order (";
  for (std::size_t a = 0; a < cd.op.basis.size(); ++a) {
    os << (a ? "," : "") << cd.op.basis[a].first + 1 << cd.op.basis[a].second + 1;
  }
  os << "):\n" << matrix_rows(cd.op.m, "  ");

  os << "\nRicci tensor:\n" << matrix_rows(cd.ricci, "  ");
  os << "\nS = " << cd.scalar << "\n";
  os << "sign class: " << to_string(report.sign.tag) << "\n";
  os << witness_lines(report.sign);

  if (report.hypercomplex) {
    os << "\nhypercomplex structure:\n";
    for (const auto& axiom : report.hypercomplex->axioms) {
      os << "  " << (axiom.passed ? "PASS " : "FAIL ") << axiom.axiom;
      if (!axiom.passed) os << ": " << axiom.counterexample;
      os << "\n";
    }
  }
  return os.str();
}

std::string render_json(const Report& report) {
  const std::size_t n = report.data.dim();
  const CurvatureData& cd = report.curvature;
  ordered_json out = ordered_json::object();
  out["source"] = report.source;
  out["dimension"] = n;
  out["metric"] = matrix_json(report.data.metric.matrix());

  ordered_json brackets = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector b = report.data.algebra.bracket_basis(i, j);
      if (!is_zero(b)) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", sparse_json(b)}});
    }
  out["brackets"] = std::move(brackets);

  ordered_json connection = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      connection.push_back({{"i", i + 1}, {"j", j + 1}, {"value", sparse_json(cd.connection.covariant_basis(i, j))}});
    }
  out["connection"] = std::move(connection);

  ordered_json curvature = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          const Rational value = lowered(cd.tensor, report.data.metric, i, j, k, l);
          if (value.is_zero()) continue;
          curvature.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"l", l + 1}, {"value", value.to_string()}});
        }
  out["curvature"] = std::move(curvature);

  out["sectional"] = matrix_json(cd.sectional);
  ordered_json basis = ordered_json::array();
  for (const auto& [i, j] : cd.op.basis) basis.push_back({i + 1, j + 1});
  out["curvature_operator"] = {{"basis", std::move(basis)}, {"matrix", matrix_json(cd.op.m)}};
  out["ricci"] = matrix_json(cd.ricci);
  out["scalar"] = cd.scalar.to_string();
  out["sign_class"] = sign_json(report.sign);
  if (report.hypercomplex) {
    ordered_json axioms = ordered_json::array();
    for (const auto& a : report.hypercomplex->axioms) {
      axioms.push_back({{"axiom", a.axiom}, {"passed", a.passed}, {"counterexample", a.counterexample}});
    }
    out["hypercomplex"] = {{"all_passed", report.hypercomplex->all_passed()}, {"axioms", std::move(axioms)}};
  }
  return out.dump(2) + "\n";
}

std::string render_classification_text(const std::string& source, const SignClass& sign) {
  (void)source;
  return std::string(to_string(sign.tag)) + "\n" + witness_lines(sign);
}

std::string render_classification_json(const std::string& source, const SignClass& sign) {
  ordered_json out = ordered_json::object();
  out["source"] = source;
  ordered_json s = sign_json(sign);
  out["class"] = s["tag"];
  out["witnesses"] = s["witnesses"];
  return out.dump(2) + "\n";
}

std::string render_catalog_text() {
  std::ostringstream os;
  for (CaseId id : kAllCases) {
    const CatalogEntry entry = catalog(id);
    std::string name(case_name(id));
    name.resize(9, ' ');
    os << name << bracket_summary(entry.data.algebra) << "\n";
  }
  return os.str();
}

std::string render_catalog_json() {
  ordered_json out = ordered_json::array();
  for (CaseId id : kAllCases) {
    const CatalogEntry entry = catalog(id);
    const LieAlgebra& alg = entry.data.algebra;
    ordered_json brackets = ordered_json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = i + 1; j < alg.dim(); ++j) {
        const Vector b = alg.bracket_basis(i, j);
        if (!is_zero(b)) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", sparse_json(b)}});
      }
    out.push_back({{"id", std::string(case_name(id))},
                   {"dimension", alg.dim()},
                   {"description", entry.description},
                   {"brackets", std::move(brackets)}});
  }
  return out.dump(2) + "\n";
}

}  // namespace liecurv
