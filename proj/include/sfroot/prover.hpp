#ifndef SFROOT_PROVER_HPP
#define SFROOT_PROVER_HPP

// The proof engine: optimal sieving-prime selection, the overestimating
// zig-zag root finder, the prime divisor tree with interval sieving and
// square-free primitive-root certification, and the unsieved / sieved
// table generators.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "ntcore.hpp"

namespace sfroot {

struct divergence_error : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct contract_violation : std::logic_error
{
	using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Optimal sieving-prime count
// ---------------------------------------------------------------------------

// The s in [1, n] minimizing the sieved error coefficient (2^{omega(k)}
// Delta + 1) * E with the sieving primes taken as the largest s of L.
// E does not depend on s, so only the coefficient is compared; ties break
// toward smaller s, and s with delta <= 0 are skipped.
inline u64 optimal_s(u64 n, const std::vector<u64>& L, const BoundConfig&)
{
	if (L.size() != n || n == 0) throw std::invalid_argument("optimal_s: |L| must equal n >= 1");
	std::vector<double> suffix(n + 1, 0.0);	// suffix[s] = sum of 1/q over largest s primes
	for (u64 s = 1; s <= n; ++s) suffix[s] = suffix[s - 1] + 1.0 / double(L[n - s]);
	double best = std::numeric_limits<double>::infinity();
	u64 best_s = 0;
	for (u64 s = 1; s <= n; ++s)
	{
		const double d = 1.0 - suffix[s];
		if (!(d > 0.0)) continue;
		const double big_delta = double(s - 1) / d + 2.0;
		const LogVal coeff = detail::pow2_logval(n - s) * LogVal::from_double(big_delta)
		                   + LogVal::from_double(1.0);
		if (coeff.lg < best)
		{
			best = coeff.lg;
			best_s = s;
		}
	}
	if (best_s == 0) throw std::runtime_error("optimal_s: delta <= 0 for every s");
	return best_s;
}

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

// Zig-zag search for the last sign change of F: walk in steps of inc
// until the sign flips, then reverse with |inc| / inc_div, until the
// final pass (|inc| <= inc_end) ends moving upward with F > 0.  The
// returned value overestimates the crossing by at most inc_end.
template <typename F>
double zigzag_root(F&& f, double num, double inc, double inc_div, double inc_end,
                   u64 max_evals = 1000000)
{
	if (inc == 0.0 || inc_div <= 1.0 || inc_end <= 0.0)
		throw std::invalid_argument("zigzag_root: bad increment parameters");
	u64 evals = 0;
	auto eval = [&](double x)
	{
		if (++evals > max_evals) throw divergence_error("zigzag_root: evaluation cap exceeded");
		return f(x);
	};
	while (true)
	{
		if (inc < 0.0)
		{
			while (eval(num) >= 0.0)
			{
				num += inc;
				if (num < 1.0)
				{
					num = 1.0;
					break;	// clamp; precision increases and direction reverses below
				}
			}
		}
		else
		{
			while (eval(num) <= 0.0) num += inc;
		}
		if (std::abs(inc) <= inc_end)
		{
			if (inc > 0.0) break;	// final pass ended above the root
			inc = -inc;
			continue;	// one more upward pass at the same precision
		}
		inc = -inc / inc_div;
	}
	return num;
}

namespace detail {

// G_s as a sign function of real p; below the valid domain (split point
// D <= 1) the bound certifies nothing, which counts as negative.
inline double gs_sign(double p, u64 core_omega, const SieveParams& params, const BoundConfig& cfg)
{
	if (!(p > 1.0)) return -1.0;
	try
	{
		return double(G_s_logval(std::log(p), core_omega, params, cfg).sign);
	}
	catch (const degenerate_interval&)
	{
		return -1.0;
	}
}

} // namespace detail

inline constexpr const char* kUnbounded = "inf";

// Upper bound U with G_s(p) > 0 for all p >= U.  Skips root finding when
// the interval is already empty; refines precision while the root stays
// within one increment of the lower bound; never exceeds parent_ub.
inline BigNat find_sign_change(u64 n, u64 s, double delta_val, u64 core_omega,
                               const BigNat& lb, const std::optional<BigNat>& parent_ub,
                               const BoundConfig& cfg)
{
	if (!(delta_val > 0.0)) throw std::invalid_argument("find_sign_change: delta must be positive");
	SieveParams sp;
	sp.n = n;
	sp.s = s;
	sp.core_omega = core_omega;
	sp.delta = delta_val;
	sp.big_delta = double(s - 1) / delta_val + 2.0;
	auto F = [&](double p) { return detail::gs_sign(p, core_omega, sp, cfg); };

	const double lbd = lb.get_d();
	if (F(lbd - 1.0) >= 0.0) return lb - 1;

	double curr_start = cfg.rf_start_inc;
	double curr_prec = cfg.rf_start_inc / (cfg.rf_prec_div * cfg.rf_prec_div);
	double num = zigzag_root(F, lbd, curr_start, cfg.rf_inc_div, curr_prec);
	curr_start = curr_prec;
	curr_prec /= cfg.rf_prec_div;
	while (curr_start >= cfg.rf_final_prec)
	{
		num = zigzag_root(F, num, curr_start, cfg.rf_inc_div, curr_prec);
		curr_start = curr_prec;
		curr_prec /= cfg.rf_prec_div;
	}
	BigNat upper(num);
	upper += 1;	// double truncation must not drop below the crossing
	if (parent_ub && upper > *parent_ub)
	{
		BigNat overshoot = upper - *parent_ub;
		if (overshoot.get_d() > curr_start)
			throw contract_violation("find_sign_change: exceeds parent bound beyond precision");
		return *parent_ub;
	}
	return upper;
}

namespace detail {

// Positivity threshold in p of a log-domain sign function, by bisection
// on log p.  Returns +inf when the criterion never turns positive below
// exp(log_hi_cap).  Display / analysis helper, not part of the tree.
template <typename SignFn>
double log_bisect_threshold(SignFn&& sign_at_logp, double log_hi_cap = 690.0)
{
	double lo = std::log(101.0);
	if (sign_at_logp(lo) > 0) return std::exp(lo);
	double hi = lo + 1.0;
	while (sign_at_logp(hi) <= 0)
	{
		hi = lo + 2.0 * (hi - lo);
		if (hi > log_hi_cap) return std::numeric_limits<double>::infinity();
	}
	for (int i = 0; i < 200; ++i)
	{
		const double mid = 0.5 * (lo + hi);
		(sign_at_logp(mid) > 0 ? hi : lo) = mid;
	}
	return std::exp(hi);
}

} // namespace detail

// Least p beyond which G_s stays positive (ignores node lower bounds).
inline double gs_threshold(u64 core_omega, const SieveParams& params, const BoundConfig& cfg)
{
	return detail::log_bisect_threshold([&](double lp)
	{
		try { return G_s_logval(lp, core_omega, params, cfg).sign; }
		catch (const degenerate_interval&) { return -1; }
	});
}

// Least p beyond which the unsieved G stays positive.
inline double g_threshold(u64 omega_pm1, const BoundConfig& cfg)
{
	return detail::log_bisect_threshold([&](double lp)
	{
		try { return G_logval(lp, omega_pm1, cfg).sign; }
		catch (const degenerate_interval&) { return -1; }
	});
}

// ---------------------------------------------------------------------------
// Interval sieve
// ---------------------------------------------------------------------------

// Streams every k in [a, b] not divisible by any prime in Y, ascending.
template <typename Fn>
void sieve_interval(const BigNat& a, const BigNat& b, const std::set<u64>& Y, Fn&& emit)
{
	if (a > b) throw std::invalid_argument("sieve_interval: requires a <= b");
	for (BigNat k = a; k <= b; ++k)
	{
		bool divisible = false;
		for (u64 y : Y)
			if (mpz_divisible_ui_p(k.get_mpz_t(), static_cast<unsigned long>(y)))
			{
				divisible = true;
				break;
			}
		if (!divisible) emit(k);
	}
}

inline std::vector<BigNat> sieve_interval(const BigNat& a, const BigNat& b, const std::set<u64>& Y)
{
	std::vector<BigNat> out;
	sieve_interval(a, b, Y, [&](const BigNat& k) { out.push_back(k); });
	return out;
}

// ---------------------------------------------------------------------------
// Square-free primitive root certification
// ---------------------------------------------------------------------------

// g < p^{alpha}, decided against the exact rational alpha_num/alpha_den.
// A double comparison with a +-1 guard band settles the bulk; borderline
// cases fall back to the exact integer comparison g^den < p^num.
inline bool below_alpha(u64 g, u64 p, const BoundConfig& cfg)
{
	if (g == 0) throw std::invalid_argument("below_alpha: g must be positive");
	const double t = std::exp(cfg.alpha * std::log(double(p)));
	if (double(g) < t - 1.0) return true;
	if (double(g) > t + 1.0) return false;
	BigNat lhs, rhs;
	mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(g), static_cast<unsigned long>(cfg.alpha_den));
	mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(cfg.alpha_num));
	return lhs < rhs;
}

// A square-free primitive root of p below p^alpha, or nothing.  Starts at
// the least primitive root g0, then tries g0^k mod p for ascending k
// coprime to p-1, which enumerates every primitive root.
inline std::optional<u64> sfpr(u64 p, const FactorMap& fac_pm1, const BoundConfig& cfg)
{
	const u64 g0 = least_primitive_root(p, fac_pm1);
	if (is_squarefree(g0) && below_alpha(g0, p, cfg)) return g0;
	for (u64 k = 2; k < p; ++k)
	{
		if (gcd_u64(k, p - 1) != 1) continue;
		const u64 g = powmod(g0, k, p);
		if (!below_alpha(g, p, cfg)) continue;
		if (is_squarefree(g)) return g;
	}
	return std::nullopt;
}

inline std::optional<u64> sfpr(u64 p, const BoundConfig& cfg)
{
	return sfpr(p, factorize(p == 2 ? 1 : p - 1), cfg);
}

// ---------------------------------------------------------------------------
// The prime divisor tree
// ---------------------------------------------------------------------------

struct TreeNode
{
	u64 id = 0;
	u64 n = 0;
	std::vector<u64> X;	// primes dividing p-1, ascending; always contains 2
	std::vector<u64> Y;	// primes not dividing p-1, ascending
	std::optional<BigNat> parent_ub;	// nullopt = unbounded (root)
};

enum class OutcomeKind { empty_interval, branched, explored };

struct NodeOutcome
{
	OutcomeKind kind = OutcomeKind::empty_interval;
	BigNat lower = 0;
	BigNat upper = 0;
	u64 branch_q = 0;	// the prime split on, when branched
	std::vector<std::pair<u64, u64>> checked_primes;	// (p, certified root)
	std::vector<u64> counterexamples;
};

inline TreeNode root_node(u64 n)
{
	return TreeNode{0, n, {2}, {}, std::nullopt};
}

// One step of Algorithm square_free_tree: bound the node's interval of
// possible exceptions and either discard it, split it on the smallest
// unconstrained prime, or enumerate and certify it.
inline NodeOutcome explore_or_branch(const TreeNode& node, const BoundConfig& cfg)
{
	if (node.X.empty() || node.X.front() != 2)
		throw contract_violation("explore_or_branch: node must constrain 2 | p-1");
	const std::set<u64> Yset(node.Y.begin(), node.Y.end());
	for (u64 x : node.X)
		if (Yset.count(x)) throw contract_violation("explore_or_branch: X and Y intersect");

	NodeOutcome out;
	const std::vector<u64> L = first_primes(node.n, Yset);
	out.lower = node_lower_bound(node.n, Yset, cfg);
	const u64 s = optimal_s(node.n, L, cfg);
	const std::vector<u64> sieving(L.end() - long(s), L.end());
	const double d = delta(sieving);
	// with an upper_cap in effect the parent bound may be the cap rather
	// than a true sign-change threshold, so enforce it by truncation
	// instead of the root-finder's overshoot contract
	const bool capped = cfg.upper_cap > 0;
	out.upper = find_sign_change(node.n, s, d, node.n - s, out.lower,
	                             capped ? std::optional<BigNat>{} : node.parent_ub, cfg);
	if (capped)
	{
		if (out.upper > cfg.upper_cap) out.upper = cfg.upper_cap;
		if (node.parent_ub && out.upper > *node.parent_ub) out.upper = *node.parent_ub;
	}

	BigNat prodX = 1;
	for (u64 x : node.X) prodX *= x;
	BigNat enum_count = (out.upper - out.lower) / prodX;

	if (enum_count <= 0)
	{
		out.kind = OutcomeKind::empty_interval;
		return out;
	}
	const u64 x_cap = (8 * node.n + 9) / 10;	// ceil(0.8 n)
	if (enum_count > cfg.range_limit && node.X.size() < x_cap && node.Y.size() < 2 * node.X.size())
	{
		out.kind = OutcomeKind::branched;
		for (u64 q : first_primes(node.X.size() + node.Y.size() + 1))
		{
			if (std::find(node.X.begin(), node.X.end(), q) != node.X.end()) continue;
			if (Yset.count(q)) continue;
			out.branch_q = q;
			break;
		}
		return out;
	}

	out.kind = OutcomeKind::explored;
	BigNat k_lo = (out.lower - 1 + prodX - 1) / prodX;	// ceil
	BigNat k_hi = (out.upper - 1) / prodX;	// floor
	if (k_lo < 1) k_lo = 1;
	if (!(out.upper.fits_ulong_p() || mpz_sizeinbase(out.upper.get_mpz_t(), 2) <= 63))
		throw std::runtime_error("explore_or_branch: interval endpoint beyond 64-bit enumeration");
	sieve_interval(k_lo, k_hi, Yset, [&](const BigNat& kb)
	{
		BigNat pb = kb * prodX + 1;
		const u64 p = mpz_get_ui(pb.get_mpz_t());
		if (!is_prime_u64(p)) return;
		// omega(p-1): strip the X primes, factor the remaining cofactor
		u64 m = p - 1;
		FactorMap fac;
		for (u64 x : node.X)
		{
			unsigned e = 0;
			while (m % x == 0) { m /= x; ++e; }
			fac.factors.emplace_back(x, e);
		}
		const FactorMap rest = factorize(m);
		const std::size_t w = fac.factors.size() + rest.omega();
		if (w != node.n) return;
		for (const auto& [q, e] : rest.factors) fac.factors.emplace_back(q, e);
		std::sort(fac.factors.begin(), fac.factors.end());
		for (u64 y : node.Y)
			if ((p - 1) % y == 0)
				throw contract_violation("explore_or_branch: kept p violates a Y constraint");
		const auto g = sfpr(p, fac, cfg);
		if (g) out.checked_primes.emplace_back(p, *g);
		else out.counterexamples.push_back(p);
	});
	return out;
}

// ---------------------------------------------------------------------------
// Search driver
// ---------------------------------------------------------------------------

struct RunStats
{
	u64 n = 0;
	u64 nodes_created = 0;
	u64 nodes_explored = 0;
	u64 pr_checks = 0;
	std::vector<std::string> counterexamples;
	double wall_seconds = 0.0;
};

struct SearchReport
{
	double alpha = 0.0;
	std::vector<RunStats> runs;
};

namespace detail {

struct CheckpointEntry
{
	int kind = 0;	// matches OutcomeKind
	std::string upper;
	u64 branch_q = 0;
	u64 pr_checks = 0;
	std::vector<u64> counterexamples;
};

// key: "n:id"
using Checkpoint = std::map<std::string, CheckpointEntry>;

inline Checkpoint load_checkpoint(const std::string& path)
{
	Checkpoint cp;
	std::ifstream in(path);
	std::string line;
	while (std::getline(in, line))
	{
		std::istringstream ss(line);
		u64 n = 0, id = 0;
		CheckpointEntry e;
		std::size_t n_cex = 0;
		if (!(ss >> n >> id >> e.kind >> e.upper >> e.branch_q >> e.pr_checks >> n_cex)) continue;
		for (std::size_t i = 0; i < n_cex; ++i)
		{
			u64 c = 0;
			ss >> c;
			e.counterexamples.push_back(c);
		}
		cp[std::to_string(n) + ":" + std::to_string(id)] = e;
	}
	return cp;
}

inline void append_checkpoint(std::ofstream& out, u64 n, u64 id, const NodeOutcome& oc)
{
	out << n << ' ' << id << ' ' << int(oc.kind) << ' ' << oc.upper.get_str() << ' '
	    << oc.branch_q << ' ' << oc.checked_primes.size() << ' ' << oc.counterexamples.size();
	for (u64 c : oc.counterexamples) out << ' ' << c;
	out << '\n';
	out.flush();
}

} // namespace detail

// Breadth-first queue over the divisor tree for one n.  Each generation
// is processed in parallel; children ids are assigned in parent-id order
// afterwards, so the report is identical for any worker count.
inline RunStats run_tree_single(u64 n, const BoundConfig& cfg, u64 workers,
                                const std::string& checkpoint_path = "", bool resume = false)
{
	const auto t0 = std::chrono::steady_clock::now();
	RunStats stats;
	stats.n = n;

	detail::Checkpoint cp;
	if (resume && !checkpoint_path.empty()) cp = detail::load_checkpoint(checkpoint_path);
	std::ofstream cp_out;
	if (!checkpoint_path.empty())
		cp_out.open(checkpoint_path, resume ? std::ios::app : std::ios::trunc);

	std::vector<TreeNode> generation{root_node(n)};
	u64 next_id = 1;
	stats.nodes_created = 1;

	while (!generation.empty())
	{
		std::vector<NodeOutcome> outcomes(generation.size());
		std::vector<bool> from_checkpoint(generation.size(), false);
		std::atomic<std::size_t> cursor{0};
		std::exception_ptr failure;
		std::mutex failure_mtx;
		auto work = [&]()
		{
			while (true)
			{
				const std::size_t i = cursor.fetch_add(1);
				if (i >= generation.size()) return;
				try
				{
					const auto key = std::to_string(n) + ":" + std::to_string(generation[i].id);
					const auto hit = cp.find(key);
					if (hit != cp.end())
					{
						NodeOutcome oc;
						oc.kind = OutcomeKind(hit->second.kind);
						oc.upper = BigNat(hit->second.upper);
						oc.branch_q = hit->second.branch_q;
						oc.checked_primes.resize(hit->second.pr_checks);
						oc.counterexamples = hit->second.counterexamples;
						outcomes[i] = std::move(oc);
						from_checkpoint[i] = true;
					}
					else
					{
						outcomes[i] = explore_or_branch(generation[i], cfg);
					}
				}
				catch (...)
				{
					std::lock_guard<std::mutex> lock(failure_mtx);
					if (!failure) failure = std::current_exception();
					return;
				}
			}
		};
		if (workers <= 1)
		{
			work();
		}
		else
		{
			std::vector<std::thread> pool;
			for (u64 w = 0; w < workers; ++w) pool.emplace_back(work);
			for (auto& t : pool) t.join();
		}
		if (failure) std::rethrow_exception(failure);

		// merge in id order
		std::vector<TreeNode> next_gen;
		for (std::size_t i = 0; i < generation.size(); ++i)
		{
			const TreeNode& node = generation[i];
			const NodeOutcome& oc = outcomes[i];
			if (cp_out.is_open() && !from_checkpoint[i])
				detail::append_checkpoint(cp_out, n, node.id, oc);
			if (oc.kind == OutcomeKind::explored)
			{
				++stats.nodes_explored;
				stats.pr_checks += oc.checked_primes.size();
				for (u64 c : oc.counterexamples)
					stats.counterexamples.push_back(std::to_string(c));
			}
			else if (oc.kind == OutcomeKind::branched)
			{
				TreeNode left{next_id++, n, node.X, node.Y, oc.upper};
				left.X.push_back(oc.branch_q);
				std::sort(left.X.begin(), left.X.end());
				TreeNode right{next_id++, n, node.X, node.Y, oc.upper};
				right.Y.push_back(oc.branch_q);
				std::sort(right.Y.begin(), right.Y.end());
				stats.nodes_created += 2;
				next_gen.push_back(std::move(left));
				next_gen.push_back(std::move(right));
			}
		}
		generation = std::move(next_gen);
	}
	stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	return stats;
}

inline SearchReport run_tree(const std::vector<u64>& ns, const BoundConfig& cfg, u64 workers,
                             const std::string& checkpoint_path = "", bool resume = false)
{
	SearchReport report;
	report.alpha = cfg.alpha;
	for (u64 n : ns)
		report.runs.push_back(run_tree_single(n, cfg, workers, checkpoint_path, resume));
	return report;
}

// ---------------------------------------------------------------------------
// Table generators
// ---------------------------------------------------------------------------

// Undispatched range of the unsieved stage: n is dispatched when
// G(p) > 0 already at the node lower bound.
inline std::optional<std::pair<u64, u64>> unsieved_interval(const BoundConfig& cfg, u64 n_max = 12000)
{
	const double log_cov = log_bignat(cfg.covered_below);
	double log_primorial = 0.0;
	u64 lo = 0, hi = 0;
	u64 p = 1;
	for (u64 n = 1; n <= n_max; ++n)
	{
		do p += (p == 1) ? 1 : (p == 2 ? 1 : 2); while (!is_prime_u64(p));
		log_primorial += std::log(double(p));
		const double llb = std::max(log_cov, log_primorial);
		bool dispatched = false;
		try
		{
			dispatched = G_logval(llb, n, cfg).sign > 0;
		}
		catch (const degenerate_interval&)
		{
		}
		if (!dispatched)
		{
			if (lo == 0) lo = n;
			hi = n;
		}
	}
	if (lo == 0) return std::nullopt;
	return std::make_pair(lo, hi);
}

struct SievedCase
{
	u64 n = 0;
	u64 s = 0;
	double delta = 0.0;
	bool dispatched = false;
};

// Worst-case sieved dispatch per n over the unsieved residual interval.
inline std::vector<SievedCase> sieved_scan(const BoundConfig& cfg, u64 n_max = 12000)
{
	std::vector<SievedCase> out;
	const auto interval = unsieved_interval(cfg, n_max);
	if (!interval) return out;
	const auto [a, b] = *interval;
	const std::vector<u64> primes = first_primes(b);
	std::vector<double> inv_prefix(b + 1, 0.0);
	for (u64 i = 0; i < b; ++i) inv_prefix[i + 1] = inv_prefix[i] + 1.0 / double(primes[i]);
	const double log_cov = log_bignat(cfg.covered_below);
	double log_primorial = 0.0;
	for (u64 i = 0; i < a - 1; ++i) log_primorial += std::log(double(primes[i]));
	for (u64 n = a; n <= b; ++n)
	{
		log_primorial += std::log(double(primes[n - 1]));
		SievedCase sc;
		sc.n = n;
		// optimal s: coefficient-only scan with prefix sums of 1/q
		double best = std::numeric_limits<double>::infinity();
		for (u64 s = 1; s <= n; ++s)
		{
			const double d = 1.0 - (inv_prefix[n] - inv_prefix[n - s]);
			if (!(d > 0.0)) continue;
			const double big_delta = double(s - 1) / d + 2.0;
			const LogVal coeff = detail::pow2_logval(n - s) * LogVal::from_double(big_delta)
			                   + LogVal::from_double(1.0);
			if (coeff.lg < best)
			{
				best = coeff.lg;
				sc.s = s;
				sc.delta = d;
			}
		}
		if (sc.s == 0)
		{
			out.push_back(sc);	// never dispatched without a usable delta
			continue;
		}
		SieveParams sp;
		sp.n = n;
		sp.s = sc.s;
		sp.core_omega = n - sc.s;
		sp.delta = sc.delta;
		sp.big_delta = double(sc.s - 1) / sc.delta + 2.0;
		const double llb = std::max(log_cov, log_primorial);
		try
		{
			sc.dispatched = G_s_logval(llb, sp.core_omega, sp, cfg).sign > 0;
		}
		catch (const degenerate_interval&)
		{
		}
		out.push_back(sc);
	}
	return out;
}

inline std::set<u64> sieved_cases(const BoundConfig& cfg, u64 n_max = 12000)
{
	std::set<u64> out;
	for (const auto& sc : sieved_scan(cfg, n_max))
		if (!sc.dispatched) out.insert(sc.n);
	return out;
}

// ---------------------------------------------------------------------------
// Small-prime verification
// ---------------------------------------------------------------------------

struct SmallVerification
{
	bool ok = true;
	std::vector<std::pair<u64, u64>> certified;	// (p, root)
	std::vector<u64> failures;
};

// Every prime p <= limit must have a square-free primitive root < p^alpha.
inline SmallVerification verify_small(u64 limit, const BoundConfig& cfg, bool record = false)
{
	SmallVerification result;
	for (u64 p = 2; p <= limit; p = (p == 2) ? 3 : p + 2)
	{
		if (!is_prime_u64(p)) continue;
		const auto g = sfpr(p, cfg);
		if (g)
		{
			if (record) result.certified.emplace_back(p, *g);
		}
		else
		{
			result.ok = false;
			result.failures.push_back(p);
		}
	}
	return result;
}

} // namespace sfroot

#endif
