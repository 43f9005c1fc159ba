#ifndef SFROOT_NTCORE_HPP
#define SFROOT_NTCORE_HPP

// Exact integer arithmetic and multiplicative-function kernels.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sfroot {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Arbitrary-precision natural number.
using BigNat = mpz_class;

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m)
{
	if (m == 1) return 0;
	u64 r = 1;
	base %= m;
	while (exp != 0)
	{
		if (exp & 1) r = mulmod(r, base, m);
		base = mulmod(base, base, m);
		exp >>= 1;
	}
	return r;
}

inline u64 gcd_u64(u64 a, u64 b)
{
	while (b != 0) { const u64 t = a % b; a = b; b = t; }
	return a;
}

namespace detail {

inline bool mr_witness(u64 n, u64 d, int r, u64 a)
{
	a %= n;
	if (a == 0) return false;
	u64 x = powmod(a, d, n);
	if (x == 1 || x == n - 1) return false;
	for (int i = 1; i < r; ++i)
	{
		x = mulmod(x, x, n);
		if (x == n - 1) return false;
	}
	return true;	// a witnesses compositeness
}

} // namespace detail

// Deterministic Miller-Rabin for the full 64-bit range.
// Witness schedule {2, 325, 9375, 28178, 450775, 9780504, 1795265022}
// (Jim Sinclair's base set, verified for all n < 3.317e24).
inline bool is_prime_u64(u64 n)
{
	if (n < 2) return false;
	for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
	{
		if (n == p) return true;
		if (n % p == 0) return false;
	}
	u64 d = n - 1;
	int r = 0;
	while ((d & 1) == 0) { d >>= 1; ++r; }
	for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull})
		if (detail::mr_witness(n, d, r, a)) return false;
	return true;
}

// Deterministic for n < 2^64; above that a strong pseudoprime test
// (mpz_probab_prime_p, 40 rounds) used only in bound bookkeeping.
inline bool is_prime(const BigNat& n)
{
	if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
	return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Canonical factorization: (prime, exponent) pairs, ascending by prime.
struct FactorMap
{
	std::vector<std::pair<u64, unsigned>> factors;

	std::size_t omega() const { return factors.size(); }

	u64 radical() const
	{
		u64 r = 1;
		for (const auto& [p, e] : factors) r *= p;
		return r;
	}

	u64 value() const
	{
		u64 n = 1;
		for (const auto& [p, e] : factors)
			for (unsigned i = 0; i < e; ++i) n *= p;
		return n;
	}

	bool squarefree() const
	{
		for (const auto& [p, e] : factors)
			if (e > 1) return false;
		return true;
	}

	std::vector<u64> divisors() const
	{
		std::vector<u64> divs{1};
		for (const auto& [p, e] : factors)
		{
			const std::size_t sz = divs.size();
			u64 pe = 1;
			for (unsigned i = 0; i < e; ++i)
			{
				pe *= p;
				for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
			}
		}
		std::sort(divs.begin(), divs.end());
		return divs;
	}
};

namespace detail {

inline u64 pollard_brent(u64 n)
{
	// n composite, odd, no factor below the trial bound
	for (u64 c = 1;; ++c)
	{
		u64 x = 2, y = 2, d = 1;
		u64 q = 1;
		int power = 1, lam = 0;
		auto f = [n, c](u64 v) { return (mulmod(v, v, n) + c) % n; };
		while (d == 1)
		{
			if (power == lam) { x = y; power *= 2; lam = 0; }
			y = f(y);
			++lam;
			q = mulmod(q, x > y ? x - y : y - x, n);
			if (lam % 64 == 0 || power == lam)
			{
				d = gcd_u64(q, n);
				q = 1;
			}
		}
		if (d != n) return d;
		// cycle collapsed; retry with the next constant
	}
}

inline void factor_rec(u64 n, std::vector<u64>& primes)
{
	if (n == 1) return;
	if (is_prime_u64(n)) { primes.push_back(n); return; }
	const u64 d = pollard_brent(n);
	factor_rec(d, primes);
	factor_rec(n / d, primes);
}

} // namespace detail

// Trial division up to 997, then Brent-cycle rho with primality
// certification of every emitted factor.  64-bit inputs only.
inline FactorMap factorize(u64 n)
{
	if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
	FactorMap fm;
	for (u64 p = 2; p <= 997 && p * p <= n; p = (p == 2) ? 3 : p + 2)
	{
		if (n % p != 0) continue;
		unsigned e = 0;
		while (n % p == 0) { n /= p; ++e; }
		fm.factors.emplace_back(p, e);
	}
	if (n > 1)
	{
		if (is_prime_u64(n)) fm.factors.emplace_back(n, 1);
		else
		{
			std::vector<u64> rest;
			detail::factor_rec(n, rest);
			std::sort(rest.begin(), rest.end());
			for (std::size_t i = 0; i < rest.size();)
			{
				std::size_t j = i;
				while (j < rest.size() && rest[j] == rest[i]) ++j;
				fm.factors.emplace_back(rest[i], unsigned(j - i));
				i = j;
			}
		}
	}
	return fm;
}

inline int mobius(u64 n)
{
	if (n == 1) return 1;
	const FactorMap fm = factorize(n);
	if (!fm.squarefree()) return 0;
	return (fm.omega() % 2 == 0) ? 1 : -1;
}

inline u64 euler_phi_from_factors(const FactorMap& fm)
{
	u64 phi = 1;
	for (const auto& [p, e] : fm.factors)
	{
		phi *= p - 1;
		for (unsigned i = 1; i < e; ++i) phi *= p;
	}
	return phi;
}

inline u64 euler_phi(u64 n) { return euler_phi_from_factors(factorize(n)); }

inline std::size_t omega(u64 n) { return factorize(n).omega(); }

inline u64 radical(u64 n) { return factorize(n).radical(); }

inline bool is_squarefree(u64 n)
{
	if (n % 4 == 0 || n % 9 == 0 || n % 25 == 0) return false;
	return factorize(n).squarefree();
}

// Exact count of square-free n <= x.  Segmented square sieve, 2^20 blocks.
inline u64 squarefree_count(u64 x)
{
	if (x == 0) return 0;
	u64 sq = u64(std::sqrt(double(x)));
	while (sq * sq > x) --sq;
	while ((sq + 1) * (sq + 1) <= x) ++sq;

	constexpr u64 kBlock = u64(1) << 20;
	std::vector<bool> marked;
	u64 count = 0;
	for (u64 lo = 1; lo <= x; lo += kBlock)
	{
		const u64 hi = std::min(lo + kBlock - 1, x);
		marked.assign(hi - lo + 1, false);
		for (u64 d = 2; d <= sq; ++d)
		{
			const u64 dd = d * d;
			u64 first = ((lo + dd - 1) / dd) * dd;
			for (u64 m = first; m <= hi; m += dd) marked[m - lo] = true;
		}
		for (u64 i = 0; i <= hi - lo; ++i)
			if (!marked[i]) ++count;
	}
	return count;
}

// The `count` smallest primes not in `excluded`, ascending.
inline std::vector<u64> first_primes(std::size_t count, const std::set<u64>& excluded = {})
{
	std::vector<u64> out;
	out.reserve(count);
	for (u64 p = 2; out.size() < count; p = (p == 2) ? 3 : p + 2)
		if (is_prime_u64(p) && excluded.count(p) == 0) out.push_back(p);
	return out;
}

// ord_p(g) = p-1, by the exponent test over the prime divisors of p-1.
inline bool is_primitive_root(u64 g, u64 p, const FactorMap& fac_p_minus_1)
{
	if (p == 2) return g % 2 == 1;
	g %= p;
	if (g == 0) return false;
	for (const auto& [q, e] : fac_p_minus_1.factors)
		if (powmod(g, (p - 1) / q, p) == 1) return false;
	return true;
}

inline u64 least_primitive_root(u64 p, const FactorMap& fac_p_minus_1)
{
	for (u64 g = 1; g < p || p <= 2; ++g)
		if (is_primitive_root(g, p, fac_p_minus_1)) return g;
	throw std::logic_error("least_primitive_root: none found (p not prime?)");
}

inline u64 least_primitive_root(u64 p) { return least_primitive_root(p, factorize(p - 1)); }

} // namespace sfroot

#endif
