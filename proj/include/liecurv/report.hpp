#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecurv/catalog.hpp"
#include "liecurv/curvature.hpp"
#include "liecurv/hypercomplex.hpp"
#include "liecurv/sign_classifier.hpp"

namespace liecurv {

/// A catalog id or a loaded document, ready for reporting.
struct Source {
  std::string name;
  MetricLieAlgebra data;
  std::optional<HypercomplexTriple> structures;
};

/// Resolves a catalog id, otherwise reads the file at that path.
/// Throws ParseError (unreadable file, malformed document) or
/// ValidationError (Jacobi, metric).
Source load_source(const std::string& name_or_path);

struct Report {
  std::string source;
  MetricLieAlgebra data;
  CurvatureData curvature;
  SignClass sign;
  std::optional<HypercomplexReport> hypercomplex;
};

Report build_report(const Source& source);

/// Linear combination in the e_i basis, e.g. "e2 - 1/2 e3"; "0" for zero.
std::string format_vector(const Vector& v);
/// Same, with X, Y, Z, W in place of e1..e4.
std::string format_vector_labelled(const Vector& v);

std::string render_text(const Report& report);
std::string render_json(const Report& report);

std::string render_classification_text(const std::string& source, const SignClass& sign);
std::string render_classification_json(const std::string& source, const SignClass& sign);

std::string render_catalog_text();
std::string render_catalog_json();

}  // namespace liecurv
