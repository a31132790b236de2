#include "wrep/numeric.hpp"

#include <numeric>

namespace wrep {

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t lcm_u64(uint64_t a, uint64_t b)
{
	if (a == 0 || b == 0)
		return 0;
	return a / std::gcd(a, b) * b;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m)
{
	return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m)
{
	uint64_t r = 1 % m;
	b %= m;
	while (e)
	{
		if (e & 1)
			r = mulmod_u64(r, b, m);
		b = mulmod_u64(b, b, m);
		e >>= 1;
	}
	return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t m)
{
	if (m == 1)
		return 0;
	__int128 t = 0, nt = 1, r = m, nr = a % m;
	while (nr != 0)
	{
		__int128 q = r / nr;
		__int128 tmp = t - q * nt;
		t = nt;
		nt = tmp;
		tmp = r - q * nr;
		r = nr;
		nr = tmp;
	}
	if (t < 0)
		t += m;
	return (uint64_t)t;
}

bool is_prime_u64(uint64_t n)
{
	if (n < 2)
		return false;
	for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
	{
		if (n % d == 0)
			return n == d;
	}
	uint64_t d = n - 1;
	int s = 0;
	while ((d & 1) == 0)
	{
		d >>= 1;
		++s;
	}
	for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
	{
		uint64_t x = powmod_u64(a, d, n);
		if (x == 1 || x == n - 1)
			continue;
		bool composite = true;
		for (int i = 1; i < s; ++i)
		{
			x = mulmod_u64(x, x, n);
			if (x == n - 1)
			{
				composite = false;
				break;
			}
		}
		if (composite)
			return false;
	}
	return true;
}

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n)
{
	std::vector<std::pair<uint64_t, int>> fs;
	for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2))
	{
		if (n % d)
			continue;
		int e = 0;
		while (n % d == 0)
		{
			n /= d;
			++e;
		}
		fs.emplace_back(d, e);
	}
	if (n > 1)
		fs.emplace_back(n, 1);
	return fs;
}

uint64_t euler_phi(uint64_t n)
{
	uint64_t r = n;
	for (auto [q, e] : factorize(n))
		r = r / q * (q - 1);
	return r;
}

uint64_t checked_pow(uint64_t p, unsigned e)
{
	unsigned __int128 r = 1;
	for (unsigned i = 0; i < e; ++i)
	{
		r *= p;
		if (r >> 64)
			return 0;
	}
	return (uint64_t)r;
}

Int ipow(const Int &b, unsigned e)
{
	Int r = 1;
	for (unsigned i = 0; i < e; ++i)
		r *= b;
	return r;
}

bool is_integer(const Rat &r) { return boost::multiprecision::denominator(r) == 1; }

std::string to_string(const Int &x) { return x.str(); }

std::string to_string(const Rat &x)
{
	if (is_integer(x))
		return boost::multiprecision::numerator(x).str();
	return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

} // namespace wrep
