// Command-line front end: table generation, the divisor-tree search,
// small-prime verification and bound inspection.
//
// Exit codes: 0 verified, 1 counterexample found, 2 operational error.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sfroot/prover.hpp"
#include "sfroot/report.hpp"

namespace {

constexpr const char* kArtifactVersion = "1.0.0";

using sfroot::BigNat;
using sfroot::BoundConfig;
using sfroot::u64;

// Exact BigNat from decimal / scientific notation (e.g. "2.5e15"); the
// mantissa must stay integral after the exponent shift.
BigNat parse_bignat_sci(const std::string& text)
{
	std::string digits;
	long exp10 = 0;
	long frac_digits = 0;
	bool in_frac = false;
	std::size_t i = 0;
	if (i < text.size() && text[i] == '+') ++i;
	for (; i < text.size(); ++i)
	{
		const char c = text[i];
		if (c >= '0' && c <= '9')
		{
			digits += c;
			if (in_frac) ++frac_digits;
		}
		else if (c == '.' && !in_frac)
		{
			in_frac = true;
		}
		else if (c == 'e' || c == 'E')
		{
			exp10 = std::stol(text.substr(i + 1));
			break;
		}
		else
		{
			throw std::invalid_argument("not a decimal number: " + text);
		}
	}
	if (digits.empty()) throw std::invalid_argument("not a decimal number: " + text);
	const long shift = exp10 - frac_digits;
	if (shift < 0) throw std::invalid_argument("not an exact integer: " + text);
	BigNat value(digits);
	for (long k = 0; k < shift; ++k) value *= 10;
	return value;
}

void apply_env_overrides(BoundConfig& cfg)
{
	auto env = [](const char* name) { return std::getenv(name); };
	if (const char* v = env("SFROOT_A")) cfg.A = std::stod(v);
	if (const char* v = env("SFROOT_SF_LOWER_CONST")) cfg.sf_lower_const = std::stod(v);
	if (const char* v = env("SFROOT_PV_VARIANT"))
		cfg.pv_variant = std::string(v) == "primitive_even_odd"
		               ? sfroot::PvVariant::primitive_even_odd
		               : sfroot::PvVariant::general;
	if (const char* v = env("SFROOT_COVERED_BELOW")) cfg.covered_below = parse_bignat_sci(v);
	if (const char* v = env("SFROOT_RANGE_LIMIT")) cfg.range_limit = std::stoull(v);
	if (const char* v = env("SFROOT_RF_START_INC")) cfg.rf_start_inc = std::stod(v);
	if (const char* v = env("SFROOT_RF_INC_DIV")) cfg.rf_inc_div = std::stod(v);
	if (const char* v = env("SFROOT_RF_PREC_DIV")) cfg.rf_prec_div = std::stod(v);
	if (const char* v = env("SFROOT_RF_FINAL_PREC")) cfg.rf_final_prec = std::stod(v);
	if (const char* v = env("SFROOT_UPPER_CAP")) cfg.upper_cap = parse_bignat_sci(v);
}

void print_manifest(const std::string& command, const BoundConfig& cfg, bool omit_timing)
{
	nlohmann::json manifest{
		{"artifact_version", kArtifactVersion},
		{"command", command},
		{"config", sfroot::config_json(cfg)},
	};
	if (!omit_timing)
	{
		char stamp[64];
		const std::time_t now = std::time(nullptr);
		std::tm tm_utc{};
		gmtime_r(&now, &tm_utc);
		std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
		manifest["started_at"] = stamp;
	}
	std::cout << "manifest " << manifest.dump() << "\n";
}

int cmd_tables(const std::string& stage, const std::string& alpha_str, const std::string& format,
               u64 n_max)
{
	BoundConfig cfg = sfroot::make_config(alpha_str);
	sfroot::require_alpha_range(cfg);
	apply_env_overrides(cfg);
	print_manifest("tables " + stage, cfg, false);
	const bool csv = format == "csv";

	if (stage == "unsieved")
	{
		const auto interval = sfroot::unsieved_interval(cfg, n_max);
		if (csv) std::printf("n,threshold\n");
		if (!interval)
		{
			if (!csv) std::printf("none\n");
			return 0;
		}
		const auto [a, b] = *interval;
		if (!csv) std::printf("a=%llu b=%llu\n", (unsigned long long)a, (unsigned long long)b);
		if (b - a + 1 > 100)
		{
			if (!csv)
				std::printf("(per-n thresholds suppressed: %llu rows)\n",
				            (unsigned long long)(b - a + 1));
			return 0;
		}
		for (u64 n = a; n <= b; ++n)
		{
			const double t = sfroot::g_threshold(n, cfg);
			if (csv) std::printf("%llu,%.6e\n", (unsigned long long)n, t);
			else std::printf("n=%llu threshold=%.6e\n", (unsigned long long)n, t);
		}
		return 0;
	}

	const auto cases = sfroot::sieved_scan(cfg, n_max);
	std::vector<sfroot::SievedCase> residual;
	for (const auto& sc : cases)
		if (!sc.dispatched) residual.push_back(sc);
	if (!csv)
	{
		if (residual.empty())
		{
			std::printf("none\n");
			return 0;
		}
		std::string set = "{";
		for (std::size_t i = 0; i < residual.size(); ++i)
			set += (i ? "," : "") + std::to_string(residual[i].n);
		set += "}";
		std::printf("%s\n", set.c_str());
	}
	else
	{
		std::printf("n,s,delta,threshold\n");
	}
	for (const auto& sc : residual)
	{
		sfroot::SieveParams sp;
		sp.n = sc.n;
		sp.s = sc.s;
		sp.core_omega = sc.n - sc.s;
		sp.delta = sc.delta;
		sp.big_delta = double(sc.s - 1) / sc.delta + 2.0;
		const double t = sfroot::gs_threshold(sp.core_omega, sp, cfg);
		if (csv)
			std::printf("%llu,%llu,%.6f,%.6e\n", (unsigned long long)sc.n,
			            (unsigned long long)sc.s, sc.delta, t);
		else
			std::printf("n=%llu s=%llu delta=%.6f threshold=%.6e\n", (unsigned long long)sc.n,
			            (unsigned long long)sc.s, sc.delta, t);
	}
	return 0;
}

int cmd_tree(const std::string& alpha_str, const std::vector<u64>& ns, u64 threads,
             const std::string& report_path, const std::string& checkpoint_path, bool resume,
             bool omit_timing, const std::string& covered_below, const std::string& upper_cap,
             u64 range_limit)
{
	BoundConfig cfg = sfroot::make_config(alpha_str);
	sfroot::require_alpha_range(cfg);
	apply_env_overrides(cfg);
	if (!covered_below.empty()) cfg.covered_below = parse_bignat_sci(covered_below);
	if (!upper_cap.empty()) cfg.upper_cap = parse_bignat_sci(upper_cap);
	if (range_limit != 0) cfg.range_limit = range_limit;
	print_manifest("tree", cfg, omit_timing);

	const sfroot::SearchReport report =
	    sfroot::run_tree(ns, cfg, threads == 0 ? 1 : threads, checkpoint_path, resume);
	const std::string body = sfroot::report_json(report, cfg, omit_timing);
	if (report_path.empty())
	{
		std::cout << body;
	}
	else
	{
		std::ofstream out(report_path, std::ios::binary);
		if (!out) throw std::runtime_error("cannot write report: " + report_path);
		out << body;
	}
	u64 cex = 0;
	for (const auto& r : report.runs) cex += r.counterexamples.size();
	if (cex != 0)
	{
		std::fprintf(stderr, "counterexamples found: %llu\n", (unsigned long long)cex);
		return 1;
	}
	return 0;
}

int cmd_verify_small(u64 limit, const std::string& alpha_str, bool verbose)
{
	BoundConfig cfg = sfroot::make_config(alpha_str);
	if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
		throw CLI::ValidationError("--alpha", "alpha must lie in (0, 1)");
	apply_env_overrides(cfg);
	print_manifest("verify-small", cfg, false);
	const auto result = sfroot::verify_small(limit, cfg, verbose);
	if (verbose)
		for (const auto& [p, g] : result.certified)
			std::printf("p=%llu root=%llu\n", (unsigned long long)p, (unsigned long long)g);
	for (u64 p : result.failures)
		std::printf("p=%llu FAIL: no square-free primitive root below p^alpha\n",
		            (unsigned long long)p);
	std::printf("%s\n", result.ok ? "ok" : "failed");
	return result.ok ? 0 : 1;
}

int cmd_bounds(const std::string& alpha_str, const std::string& p_str, u64 omega_pm1, u64 n, u64 s,
               const std::string& term)
{
	BoundConfig cfg = sfroot::make_config(alpha_str);
	apply_env_overrides(cfg);
	const BigNat p = parse_bignat_sci(p_str);
	if (p <= 100) throw CLI::ValidationError("--p", "p must exceed 100");
	print_manifest("bounds", cfg, false);
	const double lp = sfroot::log_bignat(p);
	gmp_printf("alpha=%s p=%Zd\n", alpha_str.c_str(), p.get_mpz_t());
	if (term == "sf-lower")
	{
		std::printf("sf_lower_term=%.6g\n", cfg.sf_lower_const * std::exp(-0.25 * lp));
		return 0;
	}
	std::printf("c=%.6f\n", sfroot::pv_constant_logp(lp, cfg));
	std::printf("E=%.6g\n", sfroot::error_term_E_logp(lp, cfg));
	if (s != 0)
	{
		if (n == 0 || s > n) throw CLI::ValidationError("--s", "requires --n with s <= n");
		const auto L = sfroot::first_primes(n);
		sfroot::SieveParams sp = sfroot::SieveParams::make(
		    n, s, std::vector<u64>(L.end() - long(s), L.end()));
		if (!(sp.delta > 0)) throw CLI::ValidationError("--s", "delta <= 0 for these primes");
		std::printf("s=%llu delta=%.6f Delta=%.6f\n", (unsigned long long)s, sp.delta, sp.big_delta);
		std::printf("G_s=%.6g\n", sfroot::G_s_logval(lp, sp.core_omega, sp, cfg).to_double());
	}
	else if (omega_pm1 != 0)
	{
		std::printf("omega=%llu\n", (unsigned long long)omega_pm1);
		std::printf("G=%.6g\n", sfroot::G_logval(lp, omega_pm1, cfg).to_double());
	}
	return 0;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"square-free primitive root verification toolkit"};
	app.require_subcommand(1);

	std::string alpha, stage, format = "text", p_str, term;
	std::string report_path, checkpoint_path, covered_below, upper_cap;
	std::vector<u64> ns;
	u64 limit = 2791, threads = 1, n_max = 12000, omega_pm1 = 0, sieve_n = 0, sieve_s = 0;
	u64 range_limit = 0;
	bool resume = false, omit_timing = false, verbose = false;

	auto* tables = app.add_subcommand("tables", "residual tables for the unsieved/sieved stages");
	tables->add_option("stage", stage, "unsieved or sieved")
	    ->required()
	    ->check(CLI::IsMember({"unsieved", "sieved"}));
	tables->add_option("--alpha", alpha, "exponent alpha as a decimal")->required();
	tables->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
	tables->add_option("--n-max", n_max, "largest omega(p-1) scanned");

	auto* tree = app.add_subcommand("tree", "prime divisor tree search");
	tree->add_option("--alpha", alpha, "exponent alpha as a decimal")->required();
	tree->add_option("--n", ns, "omega(p-1) cases to run")->required()->delimiter(',');
	tree->add_option("--threads", threads, "worker threads");
	tree->add_option("--report", report_path, "write the JSON report here");
	tree->add_option("--checkpoint", checkpoint_path, "checkpoint file for --resume");
	tree->add_flag("--resume", resume, "reuse completed nodes from the checkpoint");
	tree->add_flag("--omit-timing", omit_timing, "zero timing fields for byte-stable reports");
	tree->add_option("--covered-below", covered_below, "override the assumed-covered bound");
	tree->add_option("--upper-cap", upper_cap, "cap node upper bounds (testing hook)");
	tree->add_option("--range-limit", range_limit, "override the enumeration limit");

	auto* verify = app.add_subcommand("verify-small", "certify all primes up to a limit");
	verify->add_option("--limit", limit, "largest prime checked")->required();
	verify->add_option("--alpha", alpha, "exponent alpha as a decimal")->required();
	verify->add_flag("--verbose", verbose, "print each certified root");

	auto* bounds = app.add_subcommand("bounds", "inspect c, E, G and G_s at a point");
	bounds->add_option("--alpha", alpha, "exponent alpha as a decimal")->required();
	bounds->add_option("--p", p_str, "evaluation point, decimal or scientific")->required();
	bounds->add_option("--omega", omega_pm1, "omega(p-1) for the unsieved G");
	bounds->add_option("--n", sieve_n, "omega(p-1) for the sieved G_s");
	bounds->add_option("--s", sieve_s, "sieving prime count for G_s");
	bounds->add_option("--term", term, "single term to print (sf-lower)")
	    ->check(CLI::IsMember({"sf-lower"}));

	try
	{
		app.parse(argc, argv);
		if (*tables) return cmd_tables(stage, alpha, format, n_max);
		if (*tree)
			return cmd_tree(alpha, ns, threads, report_path, checkpoint_path, resume, omit_timing,
			                covered_below, upper_cap, range_limit);
		if (*verify) return cmd_verify_small(limit, alpha, verbose);
		if (*bounds) return cmd_bounds(alpha, p_str, omega_pm1, sieve_n, sieve_s, term);
	}
	catch (const CLI::ParseError& e)
	{
		const int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}
	catch (const std::exception& e)
	{
		std::fprintf(stderr, "error: %s\n", e.what());
		return 2;
	}
	return 2;
}
