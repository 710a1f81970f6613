// liecurv: curvature tables, sign classes and hypercomplex checks for metric
// Lie algebras. Exit codes: 0 success, 1 validation failure, 2 parse/IO error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "liecurv/document.hpp"
#include "liecurv/errors.hpp"
#include "liecurv/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kParseFailure = 2;

int run_check(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kParseFailure;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  liecurv::LieDocument doc = liecurv::parse_document(buffer.str());

  bool ok = true;
  const auto lie = liecurv::validate_lie_algebra(doc.algebra);
  if (lie.ok()) {
    std::cout << "PASS Lie algebra (antisymmetry, Jacobi)\n";
  } else {
    ok = false;
    std::cout << "FAIL Lie algebra: " << lie.violations.front().describe() << "\n";
  }
  const std::string metric_problem = liecurv::inner_product_problem(doc.metric);
  if (metric_problem.empty()) {
    std::cout << "PASS metric (symmetric positive definite)\n";
  } else {
    ok = false;
    std::cout << "FAIL metric: " << metric_problem << "\n";
  }
  if (!doc.complex_structures.empty()) {
    if (!ok) {
      std::cout << "SKIP hypercomplex structure (algebra or metric invalid)\n";
    } else {
      const liecurv::MetricLieAlgebra m(doc.algebra, liecurv::InnerProduct(doc.metric));
      const liecurv::HypercomplexTriple t{liecurv::AlmostComplexStructure(doc.complex_structures[0]),
                                          liecurv::AlmostComplexStructure(doc.complex_structures[1]),
                                          liecurv::AlmostComplexStructure(doc.complex_structures[2])};
      for (const auto& axiom : liecurv::full_report(m, t).axioms) {
        std::cout << (axiom.passed ? "PASS " : "FAIL ") << axiom.axiom;
        if (!axiom.passed) {
          ok = false;
          std::cout << ": " << axiom.counterexample;
        }
        std::cout << "\n";
      }
    }
  }
  std::cout << (ok ? "OK" : "INVALID") << "\n";
  return ok ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature of metric Lie algebras"};
  app.require_subcommand(1);

  bool list_json = false;
  auto* list = app.add_subcommand("list", "List the built-in catalog of 4-dimensional algebras");
  list->add_flag("--json", list_json, "Emit JSON");

  std::string report_source;
  bool report_json = false;
  auto* report = app.add_subcommand("report", "Connection, curvature, Ricci and scalar curvature tables");
  report->add_option("source", report_source, "Catalog id (abelian, case1..case4) or JSON document path")->required();
  report->add_flag("--json", report_json, "Emit JSON");

  std::string classify_source;
  bool classify_json = false;
  auto* classify = app.add_subcommand("classify", "Sign class of the sectional curvature");
  classify->add_option("source", classify_source, "Catalog id or JSON document path")->required();
  classify->add_flag("--json", classify_json, "Emit JSON");

  std::string check_path;
  auto* check = app.add_subcommand("check", "Validate a JSON document, including complex structures");
  check->add_option("path", check_path, "JSON document path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseFailure;
  }

  try {
    if (*list) {
      std::cout << (list_json ? liecurv::render_catalog_json() : liecurv::render_catalog_text());
    } else if (*report) {
      const liecurv::Report r = liecurv::build_report(liecurv::load_source(report_source));
      std::cout << (report_json ? liecurv::render_json(r) : liecurv::render_text(r));
    } else if (*classify) {
      const liecurv::Source source = liecurv::load_source(classify_source);
      const liecurv::SignClass sign = liecurv::classify(source.data);
      std::cout << (classify_json ? liecurv::render_classification_json(source.name, sign)
                                  : liecurv::render_classification_text(source.name, sign));
    } else if (*check) {
      return run_check(check_path);
    }
  } catch (const liecurv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const liecurv::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
