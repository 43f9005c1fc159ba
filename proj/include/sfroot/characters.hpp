#ifndef SFROOT_CHARACTERS_HPP
#define SFROOT_CHARACTERS_HPP

// Exact Dirichlet character tables modulo small primes.  Characters are
// stored by discrete-log exponent; values only become floating complex
// numbers in the final accumulation of an indicator or a partial sum.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ntcore.hpp"

namespace sfroot {

using cplx = std::complex<double>;

inline constexpr double kIndicatorTol = 1e-6;

class CharacterTable
{
public:
	// Complete discrete-log map for the least primitive root of p.
	// Memory is quadratic in nothing but time is O(p); the cap guards
	// the dense tables this module hands out.
	explicit CharacterTable(u64 p) : p_(p)
	{
		if (!is_prime_u64(p)) throw std::invalid_argument("CharacterTable: p must be prime");
		if (p > 100000) throw std::invalid_argument("CharacterTable: p above policy cap 1e5");
		fac_pm1_ = factorize(p - 1 == 0 ? 1 : p - 1);
		g_ = least_primitive_root(p, fac_pm1_);
		ind_.assign(p, 0);
		u64 v = 1;
		for (u64 k = 1; k <= p - 1; ++k)
		{
			v = mulmod(v, g_, p);
			ind_[v] = k;	// ind[1] = p-1
		}
		roots_.resize(p - 1);
		for (u64 k = 0; k < p - 1; ++k)
		{
			const double t = 2.0 * std::numbers::pi * double(k) / double(p - 1);
			roots_[k] = cplx(std::cos(t), std::sin(t));
		}
	}

	u64 p() const { return p_; }
	u64 g() const { return g_; }
	const FactorMap& fac_p_minus_1() const { return fac_pm1_; }

	u64 ind(u64 n) const
	{
		n %= p_;
		if (n == 0) throw std::invalid_argument("ind: p | n");
		return ind_[n];
	}

	// exp(2*pi*i * k / (p-1))
	cplx root(u64 k) const { return roots_[k % (p_ - 1)]; }

private:
	u64 p_;
	u64 g_;
	FactorMap fac_pm1_;
	std::vector<u64> ind_;
	std::vector<cplx> roots_;
};

// chi_j(n) = exp(2*pi*i * j * ind(n) / (p-1)), zero when p | n.
class Character
{
public:
	Character(const CharacterTable& table, u64 j) : table_(&table), j_(j % (table.p() - 1 == 0 ? 1 : table.p() - 1)) {}

	u64 j() const { return j_; }
	bool principal() const { return j_ == 0; }

	u64 order() const
	{
		const u64 m = table_->p() - 1;
		return m / gcd_u64(j_, m);
	}

	cplx operator()(u64 n) const
	{
		const u64 p = table_->p();
		n %= p;
		if (n == 0) return cplx(0.0, 0.0);
		return table_->root(u128(j_) * table_->ind(n) % (p - 1));
	}

	// root-of-unity index, valid when p does not divide n
	u64 root_index(u64 n) const
	{
		return u64(u128(j_) * table_->ind(n) % (table_->p() - 1));
	}

	const CharacterTable& table() const { return *table_; }

private:
	const CharacterTable* table_;
	u64 j_;
};

inline CharacterTable build_table(u64 p) { return CharacterTable(p); }

// The phi(d) characters of exact order d (d | p-1).
inline std::vector<Character> characters_of_order(const CharacterTable& table, u64 d)
{
	const u64 m = table.p() == 2 ? 1 : table.p() - 1;
	if (d == 0 || m % d != 0) throw std::invalid_argument("characters_of_order: d must divide p-1");
	std::vector<Character> out;
	const u64 step = m / d;
	for (u64 k = 0; k < d; ++k)
		if (gcd_u64(k, d) == 1 || d == 1)
			out.emplace_back(table, k * step);
	return out;
}

namespace detail {

inline int round_indicator(cplx z, const char* what)
{
	if (std::abs(z.imag()) >= kIndicatorTol)
		throw std::runtime_error(std::string(what) + ": imaginary residual exceeds tolerance");
	const double re = z.real();
	const int nearest = re > 0.5 ? 1 : 0;
	if (std::abs(re - double(nearest)) >= kIndicatorTol)
		throw std::runtime_error(std::string(what) + ": residual to {0,1} exceeds tolerance");
	return nearest;
}

} // namespace detail

// (phi(p-1)/(p-1)) sum_{d | p-1} mu(d)/phi(d) sum_{chi in Gamma_d} chi(n)
inline int pr_indicator(const CharacterTable& table, u64 n)
{
	const u64 p = table.p();
	if (n < 1 || n > p - 1) throw std::invalid_argument("pr_indicator: n out of range");
	if (p == 2) return 1;	// the unit 1 generates the trivial group
	const u64 m = p - 1;
	cplx acc(0.0, 0.0);
	for (u64 d : factorize(m).divisors())
	{
		const int mu = mobius(d);
		if (mu == 0) continue;
		cplx s(0.0, 0.0);
		for (const Character& chi : characters_of_order(table, d)) s += chi(n);
		acc += (double(mu) / double(euler_phi(d))) * s;
	}
	acc *= double(euler_phi(m)) / double(m);
	return detail::round_indicator(acc, "pr_indicator");
}

// (phi(e)/e) sum_{d | e} mu(d)/phi(d) sum_{chi in Gamma_d} chi(n)
inline int efree_indicator(const CharacterTable& table, u64 e, u64 n)
{
	const u64 p = table.p();
	const u64 m = p == 2 ? 1 : p - 1;
	if (e == 0 || m % e != 0) throw std::invalid_argument("efree_indicator: e must divide p-1");
	if (n < 1 || n > p - 1) throw std::invalid_argument("efree_indicator: n out of range");
	cplx acc(0.0, 0.0);
	for (u64 d : factorize(e).divisors())
	{
		const int mu = mobius(d);
		if (mu == 0) continue;
		cplx s(0.0, 0.0);
		for (const Character& chi : characters_of_order(table, d)) s += chi(n);
		acc += (double(mu) / double(euler_phi(d))) * s;
	}
	acc *= double(euler_phi(e)) / double(e);
	return detail::round_indicator(acc, "efree_indicator");
}

// Brute force: n is e-free iff y^d = n (mod p) is insoluble for every
// divisor d > 1 of e.
inline bool is_efree_direct(u64 p, u64 e, u64 n)
{
	n %= p;
	if (n == 0) throw std::invalid_argument("is_efree_direct: p | n");
	for (u64 d : factorize(e).divisors())
	{
		if (d == 1) continue;
		for (u64 y = 1; y < p; ++y)
			if (powmod(y, d, p) == n) return false;
	}
	return true;
}

// N_e^square(p, x): square-free and e-free n < x, counted both by brute
// force and by the character formula; the two must agree exactly.
inline u64 count_squarefree_efree(u64 p, u64 e, u64 x)
{
	if (x > p) throw std::invalid_argument("count_squarefree_efree: requires x <= p");
	const u64 m = p == 2 ? 1 : p - 1;
	if (e == 0 || m % e != 0) throw std::invalid_argument("count_squarefree_efree: e must divide p-1");

	u64 brute = 0;
	for (u64 n = 1; n < x; ++n)
		if (n % p != 0 && is_squarefree(n) && is_efree_direct(p, e, n)) ++brute;

	CharacterTable table(p);
	cplx acc(0.0, 0.0);
	for (u64 d : factorize(e).divisors())
	{
		const int mu = mobius(d);
		if (mu == 0) continue;
		cplx s(0.0, 0.0);
		for (const Character& chi : characters_of_order(table, d))
			for (u64 n = 1; n < x; ++n)
				if (is_squarefree(n)) s += chi(n);
		acc += (double(mu) / double(euler_phi(d))) * s;
	}
	acc *= double(euler_phi(e)) / double(e);
	const double formula = acc.real();
	if (std::abs(acc.imag()) > 1e-6 || std::abs(formula - double(brute)) > 1e-6)
		throw std::runtime_error("count_squarefree_efree: formula/brute-force mismatch");
	return brute;
}

// N^square(p, x): square-free primitive roots modulo p below x.
inline u64 count_squarefree_pr(u64 p, u64 x)
{
	if (x > p) throw std::invalid_argument("count_squarefree_pr: requires x <= p");
	const FactorMap fac = factorize(p == 2 ? 1 : p - 1);
	u64 brute = 0;
	for (u64 n = 1; n < x; ++n)
		if (is_squarefree(n) && is_primitive_root(n, p, fac)) ++brute;
	if (p > 2)
	{
		const u64 formula = count_squarefree_efree(p, p - 1, x);
		if (formula != brute)
			throw std::runtime_error("count_squarefree_pr: (p-1)-free count disagrees with direct count");
	}
	return brute;
}

// max over 1 <= N <= N_max of |sum_{n <= N} chi(n)|
inline double char_partial_sum_max(const Character& chi, u64 n_max)
{
	cplx s(0.0, 0.0);
	double best = 0.0;
	for (u64 n = 1; n <= n_max; ++n)
	{
		s += chi(n);
		best = std::max(best, std::abs(s));
	}
	return best;
}

} // namespace sfroot

#endif
