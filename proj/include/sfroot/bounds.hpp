#ifndef SFROOT_BOUNDS_HPP
#define SFROOT_BOUNDS_HPP

// Explicit analytic quantities: the Polya-Vinogradov constant c, the
// character-sum bound B, the error term E, the unsieved criterion G and
// the sieved criterion G_s.  Everything is evaluated in log space so the
// criteria stay computable at primorial-sized lower bounds (log p ~ 1e5).

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ntcore.hpp"

namespace sfroot {

struct degenerate_interval : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

enum class PvVariant { general, primitive_even_odd };

struct BoundConfig
{
	double alpha = 0.9;
	// exact decimal rational for alpha; conservative root certification
	// compares g^alpha_den against p^alpha_num
	u64 alpha_num = 9;
	u64 alpha_den = 10;

	double A = 0.679091;	// Cipu constant
	double sf_lower_const = 0.104;
	PvVariant pv_variant = PvVariant::general;
	BigNat covered_below = BigNat("2500000000000000");
	u64 range_limit = 1000000;

	double rf_start_inc = 1e21;
	double rf_inc_div = 10.0;
	double rf_prec_div = 100.0;
	double rf_final_prec = 1e9;

	BigNat upper_cap = 0;	// 0 = no cap; test harness hook

	void set_alpha(double a, u64 num, u64 den)
	{
		alpha = a;
		alpha_num = num;
		alpha_den = den;
	}
};

// Parse alpha from its decimal string, keeping the exact rational.
inline BoundConfig make_config(const std::string& alpha_str)
{
	BoundConfig cfg;
	const auto dot = alpha_str.find('.');
	u64 num = 0, den = 1;
	for (char c : alpha_str)
	{
		if (c == '.') continue;
		if (c < '0' || c > '9') throw std::invalid_argument("alpha: not a decimal number");
		num = num * 10 + u64(c - '0');
	}
	if (dot != std::string::npos)
		for (std::size_t i = dot + 1; i < alpha_str.size(); ++i) den *= 10;
	cfg.set_alpha(std::stod(alpha_str), num, den);
	return cfg;
}

// The analytic criteria are only meaningful for alpha in (log2/log3, 1);
// verify-small / sfpr work for any alpha in (0, 1).
inline void require_alpha_range(const BoundConfig& cfg)
{
	if (!(cfg.alpha > std::log(2.0) / std::log(3.0) && cfg.alpha < 1.0))
		throw std::invalid_argument("alpha must lie in (log2/log3, 1)");
}

// Signed magnitude in log space.
struct LogVal
{
	int sign = 0;	// -1, 0, +1
	double lg = -std::numeric_limits<double>::infinity();	// ln |value|

	static LogVal zero() { return {}; }
	static LogVal from_log(double l, int s = 1) { return {s, l}; }
	static LogVal from_double(double v)
	{
		if (v == 0.0) return {};
		return {v > 0 ? 1 : -1, std::log(std::abs(v))};
	}

	double to_double() const
	{
		if (sign == 0) return 0.0;
		if (lg > 709.0) return sign * std::numeric_limits<double>::infinity();
		return sign * std::exp(lg);
	}

	LogVal operator*(const LogVal& o) const
	{
		if (sign == 0 || o.sign == 0) return {};
		return {sign * o.sign, lg + o.lg};
	}
	LogVal operator/(const LogVal& o) const
	{
		if (o.sign == 0) throw std::domain_error("LogVal: division by zero");
		if (sign == 0) return {};
		return {sign * o.sign, lg - o.lg};
	}
	LogVal operator-() const { return {-sign, lg}; }

	LogVal operator+(const LogVal& o) const
	{
		if (sign == 0) return o;
		if (o.sign == 0) return *this;
		const double hi = std::max(lg, o.lg), lo = std::min(lg, o.lg);
		if (sign == o.sign) return {sign, hi + std::log1p(std::exp(lo - hi))};
		if (lg == o.lg) return {};
		const double l = hi + std::log1p(-std::exp(lo - hi));
		return {lg > o.lg ? sign : o.sign, l};
	}
	LogVal operator-(const LogVal& o) const { return *this + (-o); }
};

// log of a BigNat to double precision: (bits-64)*log2 + log(top 64 bits)
inline double log_bignat(const BigNat& n)
{
	if (n <= 0) throw std::domain_error("log_bignat: n must be positive");
	const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
	if (bits <= 64) return std::log(n.get_d());
	BigNat top = n >> (bits - 64);
	return double(bits - 64) * std::numbers::ln2 + std::log(top.get_d());
}

// Polya-Vinogradov constant at q = p, as a function of log p.
inline double pv_constant_logp(double log_p, const BoundConfig& cfg = {})
{
	if (cfg.pv_variant == PvVariant::primitive_even_odd)
	{
		if (log_p < std::log(1200.0)) throw std::invalid_argument("pv_constant: variant needs p >= 1200");
		return 2.0 / (std::numbers::pi * std::numbers::pi) + 1.0 / log_p;
	}
	if (log_p <= std::log(100.0)) throw std::invalid_argument("pv_constant: needs p > 100");
	const double pisqrt2 = std::numbers::pi * std::numbers::sqrt2;
	return 1.0 / pisqrt2 + 6.0 / (pisqrt2 * log_p) + 1.0 / log_p;
}

inline double pv_constant(double p, const BoundConfig& cfg = {})
{
	return pv_constant_logp(std::log(p), cfg);
}

struct CharSumBoundParts
{
	double D = 0.0;
	double d0 = 0.0;	// floor(D); exact while it fits a double
	double Dhat = 0.0;
	double B = 0.0;
};

namespace detail {

struct LogBoundParts
{
	double lD;	// ln D
	double ld0;	// ln floor(D)
	LogVal B;
};

// B = (6/pi^2) d0 c sqrt(p) log p + (6/pi^2) x/d0 - (6/pi^2) sqrt(x)
//     + A sqrt(d0) c sqrt(p) log p - (1/3) A x^{1/4} + (7/3) A x d0^{-3/2}
// with the integer split point d0 = [ (x / (c sqrt(p) log p))^{1/2} ].
inline LogBoundParts char_sum_bound_log(double log_x, double log_p, const BoundConfig& cfg)
{
	const double c = pv_constant_logp(log_p, cfg);
	const double lq = std::log(c) + 0.5 * log_p + std::log(log_p);	// ln(c sqrt(p) log p)
	const double lD = 0.5 * (log_x - lq);
	if (!(lD > 0.0)) throw degenerate_interval("char_sum_bound: D <= 1");
	double ld0 = lD;
	if (lD < 36.0)	// floor matters only while D is exactly representable
	{
		const double d0 = std::floor(std::exp(lD));
		if (d0 < 1.0) throw degenerate_interval("char_sum_bound: d0 < 1");
		ld0 = std::log(d0);
	}
	const double six_pi2 = std::log(6.0 / (std::numbers::pi * std::numbers::pi));
	const double lA = std::log(cfg.A);
	LogVal B = LogVal::from_log(six_pi2 + ld0 + lq)
	         + LogVal::from_log(six_pi2 + log_x - ld0)
	         + LogVal::from_log(six_pi2 + 0.5 * log_x, -1)
	         + LogVal::from_log(lA + 0.5 * ld0 + lq)
	         + LogVal::from_log(lA - std::log(3.0) + 0.25 * log_x, -1)
	         + LogVal::from_log(std::log(7.0 / 3.0) + lA + log_x - 1.5 * ld0);
	return {lD, ld0, B};
}

// E = B(p^alpha, p) / p^{alpha/2 + 1/4}  (derivation route)
inline LogVal error_term_log(double log_p, const BoundConfig& cfg)
{
	const auto parts = char_sum_bound_log(cfg.alpha * log_p, log_p, cfg);
	return parts.B * LogVal::from_log(-(cfg.alpha / 2.0 + 0.25) * log_p);
}

// x^{1/2} p^{-1/4} - (pi^2/6)(sf_lower/p^{1/4} + coeff * E) at x = p^alpha,
// where coeff is (2^omega - 1) unsieved or (2^omega(k) Delta + 1) sieved.
inline LogVal criterion_log(double log_p, const LogVal& coeff, const BoundConfig& cfg)
{
	const LogVal main = LogVal::from_log((cfg.alpha / 2.0 - 0.25) * log_p);
	const LogVal sf = LogVal::from_double(cfg.sf_lower_const) * LogVal::from_log(-0.25 * log_p);
	const LogVal err = LogVal::from_double(std::numbers::pi * std::numbers::pi / 6.0)
	                 * (sf + coeff * error_term_log(log_p, cfg));
	return main - err;
}

inline LogVal pow2_logval(u64 k) { return LogVal::from_log(double(k) * std::numbers::ln2); }

} // namespace detail

inline CharSumBoundParts char_sum_bound(double x, double log_p, const BoundConfig& cfg = {})
{
	if (x < 1.0) throw std::invalid_argument("char_sum_bound: x >= 1 required");
	const auto parts = detail::char_sum_bound_log(std::log(x), log_p, cfg);
	CharSumBoundParts out;
	out.D = std::exp(parts.lD);
	out.d0 = std::exp(parts.ld0);
	out.Dhat = out.D / (out.D - 1.0);
	out.B = parts.B.to_double();
	return out;
}

inline CharSumBoundParts char_sum_bound(double x, const BigNat& p, const BoundConfig& cfg = {})
{
	return char_sum_bound(x, log_bignat(p), cfg);
}

inline double error_term_E(const BigNat& p, const BoundConfig& cfg)
{
	return detail::error_term_log(log_bignat(p), cfg).to_double();
}

inline double error_term_E_logp(double log_p, const BoundConfig& cfg)
{
	return detail::error_term_log(log_p, cfg).to_double();
}

// Unsieved criterion: positive value certifies a square-free primitive
// root below p^alpha when omega(p-1) = omega_pm1.
inline LogVal G_logval(double log_p, u64 omega_pm1, const BoundConfig& cfg)
{
	const LogVal coeff = detail::pow2_logval(omega_pm1) - LogVal::from_double(1.0);
	return detail::criterion_log(log_p, coeff, cfg);
}

inline double G(const BigNat& p, u64 omega_pm1, const BoundConfig& cfg)
{
	return G_logval(log_bignat(p), omega_pm1, cfg).to_double();
}

// delta = 1 - sum 1/p_i over the sieving primes; may be <= 0, caller rejects.
inline double delta(const std::vector<u64>& sieving_primes)
{
	double s = 0.0;
	for (u64 q : sieving_primes) s += 1.0 / double(q);
	return 1.0 - s;
}

struct SieveParams
{
	u64 n = 0;	// omega(p-1)
	u64 s = 0;	// number of sieving primes
	u64 core_omega = 0;	// omega(k) = n - s
	std::vector<u64> sieving_primes;
	double delta = 0.0;
	double big_delta = 0.0;	// (s-1)/delta + 2

	static SieveParams make(u64 n, u64 s, std::vector<u64> primes)
	{
		SieveParams sp;
		sp.n = n;
		sp.s = s;
		sp.core_omega = n - s;
		sp.delta = sfroot::delta(primes);
		sp.sieving_primes = std::move(primes);
		if (sp.delta > 0.0) sp.big_delta = double(s - 1) / sp.delta + 2.0;
		return sp;
	}
};

// Sieved criterion G_s; delta must be positive.
inline LogVal G_s_logval(double log_p, u64 core_omega, const SieveParams& params, const BoundConfig& cfg)
{
	if (!(params.delta > 0.0)) throw std::invalid_argument("G_s: requires delta > 0");
	const LogVal coeff = detail::pow2_logval(core_omega) * LogVal::from_double(params.big_delta)
	                   + LogVal::from_double(1.0);
	return detail::criterion_log(log_p, coeff, cfg);
}

inline double G_s(const BigNat& p, u64 core_omega, const SieveParams& params, const BoundConfig& cfg)
{
	return G_s_logval(log_bignat(p), core_omega, params, cfg).to_double();
}

inline BigNat primorial(u64 n, const std::set<u64>& excluded = {})
{
	BigNat prod = 1;
	for (u64 q : first_primes(n, excluded)) prod *= q;
	return prod;
}

// max(covered_below, 1 + product of the first n primes not in Y)
inline BigNat node_lower_bound(u64 n, const std::set<u64>& Y, const BoundConfig& cfg)
{
	BigNat lb = primorial(n, Y) + 1;
	return lb > cfg.covered_below ? lb : cfg.covered_below;
}

} // namespace sfroot

#endif
