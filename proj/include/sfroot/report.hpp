#ifndef SFROOT_REPORT_HPP
#define SFROOT_REPORT_HPP

// JSON serialization of configs and search reports.  Key order is the
// library's sorted-object order, so equal inputs serialize to equal
// bytes; big integers are carried as decimal strings.

#include <string>

#include "json.hpp"
#include "prover.hpp"

namespace sfroot {

inline nlohmann::json config_json(const BoundConfig& cfg)
{
	return nlohmann::json{
		{"alpha", cfg.alpha},
		{"alpha_num", cfg.alpha_num},
		{"alpha_den", cfg.alpha_den},
		{"A", cfg.A},
		{"sf_lower_const", cfg.sf_lower_const},
		{"pv_variant", cfg.pv_variant == PvVariant::general ? "general" : "primitive_even_odd"},
		{"covered_below", cfg.covered_below.get_str()},
		{"range_limit", cfg.range_limit},
		{"rf_start_inc", cfg.rf_start_inc},
		{"rf_inc_div", cfg.rf_inc_div},
		{"rf_prec_div", cfg.rf_prec_div},
		{"rf_final_prec", cfg.rf_final_prec},
		{"upper_cap", cfg.upper_cap.get_str()},
	};
}

inline std::string report_json(const SearchReport& report, const BoundConfig& cfg, bool omit_timing)
{
	nlohmann::json runs = nlohmann::json::array();
	for (const RunStats& r : report.runs)
		runs.push_back(nlohmann::json{
			{"n", r.n},
			{"nodes_created", r.nodes_created},
			{"nodes_explored", r.nodes_explored},
			{"pr_checks", r.pr_checks},
			{"counterexamples", r.counterexamples},
			{"wall_seconds", omit_timing ? 0.0 : r.wall_seconds},
		});
	const nlohmann::json doc{
		{"alpha", report.alpha},
		{"config", config_json(cfg)},
		{"runs", runs},
	};
	return doc.dump(2) + "\n";
}

} // namespace sfroot

#endif
