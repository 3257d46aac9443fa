#pragma once

#include <string>

#include <json.hpp>

#include "contagion/bounds.hpp"
#include "contagion/cascade.hpp"
#include "contagion/exact.hpp"
#include "contagion/graph.hpp"
#include "contagion/report.hpp"

namespace contagion::cli {

using nlohmann::json;

/// {"numerator": "..", "denominator": "..", "decimal": x, "floor": n}.
/// Numerator and denominator are decimal strings since they can outgrow
/// 64 bits.
json rational_json(const Rational& r);

/// {"n", "m", "min_degree", "max_degree"}.
json graph_summary_json(const Graph& g);

json certificate_json(const Certificate& cert);

/// Fields shared by every contagious-set report: algorithm, w, set, size,
/// verified, certificate.
json contagious_set_json(const ContagiousSetReport& report);

json exact_json(const ExactResult& result, const Rational& w);

json cascade_json(const CascadeResult& result);

}  // namespace contagion::cli
