#pragma once

#include <string>

#include "quiverkit/classify.hpp"

namespace quiverkit {

/// Stable JSON for a report: top-level keys alphabetical (property flags,
/// then "witnesses"), witness groups as id arrays.  Byte-identical across
/// runs for equal reports.
std::string report_json(const ClassificationReport& r);

/// Inverse of report_json; malformed input is a ParseError.
ClassificationReport report_from_json(const std::string& text);

/// Human-readable rendering: one "property: value" line per flag in the
/// same alphabetical order, then one witness line per property.
std::string report_text(const ClassificationReport& r);

std::string decomposition_text(const Graph& g, const Decomposition& d);
std::string noether_text(const NoetherInvariant& inv, Side side);

} // namespace quiverkit
