#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "veronese/rational_series.hpp"
#include "veronese/root_analysis.hpp"
#include "veronese/simplicial.hpp"

namespace veronese::io {

using nlohmann::json;

// Rationals travel as strings "p/q" (or "p") so exactness survives the wire;
// floating-point diagnostics carry 15 significant digits.

json series_to_json(const RationalSeries& f);
RationalSeries series_from_json(const json& j);

/// The text literal `h = [c0, c1, ...]; d = <int>`.
std::string series_to_text(const RationalSeries& f);
RationalSeries series_from_text(const std::string& text);

/// Accepts inline JSON, the text literal, or a path to a file holding either.
RationalSeries load_series(const std::string& source);

json complex_to_json(const SimplicialComplex& c);
json subdivision_to_json(const Subdivision& s);
SimplicialComplex complex_from_json(const json& j);
/// Inline JSON or a path to a JSON file.
SimplicialComplex load_complex(const std::string& source);

json profile_to_json(const RootProfile& p);
json sweep_report_to_json(const SweepReport& report);

/// Order lists: "a..b", "a..b:step", plain numbers, comma-separated mixes.
std::vector<int> parse_orders(const std::string& text);

std::string format_double(double x);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace veronese::io
