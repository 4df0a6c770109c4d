#pragma once

#include <string>
#include <string_view>

#include "microres/intervention.hpp"
#include "microres/scenario_io.hpp"
#include "microres/sim_engine.hpp"

namespace microres {

[[nodiscard]] std::string run_report_json(const RunReport& r);
[[nodiscard]] RunReport parse_run_report(std::string_view bytes);
[[nodiscard]] std::string comparison_json(const ComparisonReport& c);

/// Human-readable summary at 4 significant figures, including the rating
/// class of the cube root of each dimension's mean risk.
[[nodiscard]] std::string render_run_text(const RunReport& r);
[[nodiscard]] std::string render_comparison_text(const ComparisonReport& c);

/// "bin_lo,bin_hi,count" header then one row per bin.
[[nodiscard]] std::string histogram_csv(const Histogram& h);

/// Applies the optional keys iterations, seed, aggregation, distribution and
/// bins from a JSON object onto `base`. Unknown keys are rejected unless
/// they appear in `extra_keys`. Throws DocumentError.
[[nodiscard]] SimConfig apply_config_overrides(std::string_view json_object, SimConfig base,
                                               std::initializer_list<std::string_view> extra_keys = {});

/// Shortest round-trip decimal text for a double.
[[nodiscard]] std::string format_shortest(double x);
/// 4 significant figures.
[[nodiscard]] std::string format_sig4(double x);

}  // namespace microres
