#include "linalg.hpp"
#include "wrep/error.hpp"
#include "wrep/fields.hpp"
#include "wrep/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace wrep {

namespace detail {

std::optional<std::vector<uint32_t>> fp_solve(uint32_t p, const std::vector<std::vector<uint32_t>> &cols,
                                              const std::vector<uint32_t> &rhs)
{
	const size_t rows = rhs.size(), n = cols.size();
	// augmented row-major matrix
	std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(n + 1));
	for (size_t i = 0; i < rows; ++i)
	{
		for (size_t j = 0; j < n; ++j)
			a[i][j] = cols[j][i] % p;
		a[i][n] = rhs[i] % p;
	}
	std::vector<int> pivcol;
	size_t r = 0;
	for (size_t c = 0; c < n && r < rows; ++c)
	{
		size_t piv = r;
		while (piv < rows && a[piv][c] == 0)
			++piv;
		if (piv == rows)
			continue;
		std::swap(a[piv], a[r]);
		uint64_t iv = invmod_u64(a[r][c], p);
		for (size_t k = c; k <= n; ++k)
			a[r][k] = a[r][k] * iv % p;
		for (size_t i = 0; i < rows; ++i)
		{
			if (i == r || a[i][c] == 0)
				continue;
			uint64_t f = a[i][c];
			for (size_t k = c; k <= n; ++k)
				a[i][k] = (a[i][k] + (p - f) * a[r][k]) % p;
		}
		pivcol.push_back((int)c);
		++r;
	}
	for (size_t i = r; i < rows; ++i)
		if (a[i][n] != 0)
			return std::nullopt;
	std::vector<uint32_t> x(n, 0);
	for (size_t i = 0; i < r; ++i)
		x[pivcol[i]] = (uint32_t)a[i][n];
	return x;
}

} // namespace detail

namespace {

void split_linear(const Field &F, const Poly &g, std::vector<Elem> &out)
{
	int d = poly::degree(g);
	if (d <= 0)
		return;
	if (d == 1)
	{
		Poly m = poly::monic(F, g);
		out.push_back(F.neg(m[0]));
		return;
	}
	const uint64_t Q = F.size();
	for (uint64_t k = 1;; ++k)
	{
		Elem delta = (Elem)(k % Q);
		Poly h;
		if (F.p() == 2)
		{
			// absolute trace of delta*x modulo g
			Poly t = poly::mod(F, {0, delta}, g);
			Poly acc = t;
			for (int i = 1; i < F.degree(); ++i)
			{
				t = poly::mod(F, poly::mul(F, t, t), g);
				acc = poly::add(F, acc, t);
			}
			h = acc;
		}
		else
		{
			h = poly::powmod(F, {delta, 1}, (Q - 1) / 2, g);
			h = poly::sub(F, h, {1});
		}
		Poly c = poly::gcd(F, g, h);
		int dc = poly::degree(c);
		if (dc > 0 && dc < d)
		{
			split_linear(F, c, out);
			split_linear(F, poly::div(F, g, c), out);
			return;
		}
		if (k > 4 * Q + 64)
			throw Error(ErrorKind::NoEmbedding, "root splitting did not terminate");
	}
}

struct EmbedKey
{
	uint32_t p;
	std::vector<uint32_t> src, dst;
	bool operator<(const EmbedKey &o) const { return std::tie(p, src, dst) < std::tie(o.p, o.src, o.dst); }
};

} // namespace

std::vector<Elem> roots_in_field(const Field &F, const std::vector<Elem> &f)
{
	Poly g = f;
	poly::trim(g);
	std::vector<Elem> out;
	if (poly::degree(g) < 1)
		return out;
	const uint64_t Q = F.size();
	if (Q <= 4096)
	{
		for (uint64_t x = 0; x < Q; ++x)
			if (poly::eval(F, g, (Elem)x) == 0)
				out.push_back((Elem)x);
		return out;
	}
	// distinct roots: gcd with x^Q - x
	Poly xq = poly::powmod(F, {0, 1}, Q, g);
	Poly lin = poly::gcd(F, g, poly::sub(F, xq, {0, 1}));
	split_linear(F, lin, out);
	std::sort(out.begin(), out.end());
	return out;
}

Elem embedding_image(const Field &src, const Field &dst)
{
	if (src.p() != dst.p() || dst.degree() % src.degree() != 0)
		throw Error(ErrorKind::NoEmbedding, "cannot embed " + src.describe() + " into " + dst.describe());
	if (src.degree() == 1)
		return 0; // prime field maps identically, no generator needed
	if (same_field(src, dst))
		return src.p();
	static std::mutex mu;
	static std::map<EmbedKey, Elem> cache;
	EmbedKey key{src.p(), src.modulus(), dst.modulus()};
	{
		std::lock_guard<std::mutex> lock(mu);
		auto it = cache.find(key);
		if (it != cache.end())
			return it->second;
	}
	Poly m(src.modulus().begin(), src.modulus().end());
	Elem best;
	if (dst.size() <= (uint64_t(1) << 16))
	{
		std::vector<Elem> r = roots_in_field(dst, m);
		if (r.empty())
			throw Error(ErrorKind::NoEmbedding, "no root of the source modulus");
		best = r.front();
	}
	else
	{
		// one root by splitting, then the smallest of its conjugates
		std::vector<Elem> r;
		split_linear(dst, m, r);
		if (r.empty())
			throw Error(ErrorKind::NoEmbedding, "no root of the source modulus");
		best = r.front();
		Elem c = best;
		for (int i = 0; i < src.degree(); ++i)
		{
			c = dst.frob(c, 1);
			best = std::min(best, c);
		}
	}
	std::lock_guard<std::mutex> lock(mu);
	cache.emplace(key, best);
	return best;
}

Elem embed(Elem e, const Field &src, const Field &dst)
{
	if (src.degree() == 1)
	{
		if (src.p() != dst.p())
			throw Error(ErrorKind::NoEmbedding, "characteristic mismatch");
		return e;
	}
	if (same_field(src, dst))
		return e;
	Elem r = embedding_image(src, dst);
	std::vector<uint32_t> c = src.coeffs(e);
	Elem acc = 0;
	for (int i = src.degree() - 1; i >= 0; --i)
		acc = dst.add(dst.mul(acc, r), dst.from_int(c[i]));
	return acc;
}

std::optional<Elem> descend(Elem e, const Field &big, const Field &small)
{
	if (same_field(big, small))
		return e;
	if (small.degree() == 1)
	{
		if (e < small.p())
			return e;
		return std::nullopt;
	}
	Elem r = embedding_image(small, big);
	std::vector<std::vector<uint32_t>> cols;
	Elem rp = 1;
	for (int i = 0; i < small.degree(); ++i)
	{
		cols.push_back(big.coeffs(rp));
		rp = big.mul(rp, r);
	}
	auto x = detail::fp_solve(big.p(), cols, big.coeffs(e));
	if (!x)
		return std::nullopt;
	return small.from_coeffs(*x);
}

} // namespace wrep
