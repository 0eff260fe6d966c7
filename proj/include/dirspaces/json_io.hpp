#pragma once

// JSON wire formats shared by the CLI and every module.
//
//   series  {"N": int, "exact": bool, "terms": [[n, re, im], ...]}   terms sorted by n
//   measure {"type": "alpha", "alpha": a}
//           {"type": "density", "samples": [[sigma, h], ...],
//            "quadrature": {"nodes": 64, "tol": 1e-8, "scheme": "composite"},
//            "normalize": false}
//   symbol  {"c0": int, "phi": <series>}
//
// When reading a series, "N" defaults to the largest index and "exact" to true.

#include <json.hpp>
#include <string>

#include "dirspaces/compose.hpp"
#include "dirspaces/measure.hpp"
#include "dirspaces/norms.hpp"
#include "dirspaces/series.hpp"
#include "dirspaces/symbol.hpp"
#include "dirspaces/theorem_lab.hpp"

namespace dirspaces::io {

using Json = nlohmann::ordered_json;

Json to_json(const DirichletSeries& f);
DirichletSeries series_from_json(const Json& j);

/// Tabulated densities are piecewise linear between samples, constant below
/// the first sample and zero past the last one.
Measure measure_from_json(const Json& j);

Json to_json(const Symbol& phi);
Symbol symbol_from_json(const Json& j);

Json to_json(const Certificate& cert);
Json to_json(const FunctionalNormEstimate& est);
Json to_json(const HpNorm& norm, const std::string& space);
Json to_json(const DefectReport& defect);
Json to_json(const RegionResult& region);
Json to_json(const Lemma2Profile& profile);
Json to_json(const NormProfile& profile);
Json to_json(const ClassificationReport& report);

/// Dense row-major matrix of [re, im] pairs.
Json to_json(const OperatorMatrix& m);
/// |entries|, one row per line, with a header row of column indices.
std::string to_csv_abs(const OperatorMatrix& m);

/// A complex number as [re, im].
Json complex_json(Complex z);

}  // namespace dirspaces::io
