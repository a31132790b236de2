#include "wrep/curve.hpp"
#include "wrep/error.hpp"
#include "wrep/kernel.hpp"

#include <algorithm>
#include <thread>

namespace wrep {

namespace {

// sum over x in F* of #{y : y^n = f(x)}, zero values excluded; returns the number of nonzero roots seen
uint64_t affine_sum_tables(const Field &E, const Poly &f, uint32_t n, int jobs, uint64_t &nonzero_roots)
{
	const uint32_t N = (uint32_t)E.order();
	const uint32_t *log = E.log_table();
	const uint32_t gp = (uint32_t)gcd_u64(n, N);
	std::vector<uint32_t> res(N + 1, 0);
	for (uint32_t l = 0; l < N; l += gp)
		res[l] = gp;
	std::vector<uint32_t> coef(f.size());
	for (size_t i = 0; i < f.size(); ++i)
		coef[i] = f[i] == 0 ? N : log[f[i]];

	KernelInput in;
	in.zech = E.zech_table();
	in.res = res.data();
	in.coef = coef.data();
	in.degree = poly::degree(f);
	in.N = N;

	jobs = std::max(1, std::min(jobs, 64));
	if (N < 4096)
		jobs = 1;
	std::vector<KernelOutput> parts(jobs);
	auto work = [&](int j) {
		KernelInput c = in;
		c.k_begin = (uint64_t)N * j / jobs;
		c.k_end = (uint64_t)N * (j + 1) / jobs;
		parts[j] = run_kernel(c);
	};
	if (jobs == 1)
		work(0);
	else
	{
		std::vector<std::thread> th;
		for (int j = 0; j < jobs; ++j)
			th.emplace_back(work, j);
		for (auto &t : th)
			t.join();
	}
	uint64_t sum = 0;
	nonzero_roots = 0;
	for (auto &p : parts)
	{
		sum += p.sum;
		nonzero_roots += p.zeros.size();
	}
	return sum;
}

uint64_t affine_sum_generic(const Field &E, const Poly &f, uint32_t n, int jobs, uint64_t &nonzero_roots)
{
	const uint64_t N = E.order();
	const uint64_t gp = gcd_u64(n, N);
	jobs = std::max(1, std::min(jobs, 64));
	std::vector<uint64_t> sums(jobs, 0), zeros(jobs, 0);
	auto work = [&](int j) {
		uint64_t lo = 1 + N * j / jobs, hi = 1 + N * (j + 1) / jobs;
		for (uint64_t x = lo; x < hi; ++x)
		{
			Elem v = poly::eval(E, f, (Elem)x);
			if (v == 0)
				++zeros[j];
			else if (E.pow(v, N / gp) == 1)
				sums[j] += gp;
		}
	};
	if (jobs == 1)
		work(0);
	else
	{
		std::vector<std::thread> th;
		for (int j = 0; j < jobs; ++j)
			th.emplace_back(work, j);
		for (auto &t : th)
			t.join();
	}
	uint64_t s = 0;
	nonzero_roots = 0;
	for (int j = 0; j < jobs; ++j)
	{
		s += sums[j];
		nonzero_roots += zeros[j];
	}
	return s;
}

uint64_t infinity_points(const Component &c, const Field &E)
{
	const int D = poly::degree(c.f);
	Elem lc = embed(poly::lead(c.f), *c.field, E);
	return E.count_power_roots(lc, gcd_u64(c.n, (uint64_t)D));
}

} // namespace

uint64_t count_component(const Component &c, int m, int jobs, int max_bits)
{
	require_valid(c);
	FieldPtr Ep = extension_field(c.field, m, max_bits);
	const Field &E = *Ep;
	Poly f = poly::embed(c.f, *c.field, E);

	uint64_t total = 0, kernel_roots = 0;
	if (E.has_tables())
		total += affine_sum_tables(E, f, c.n, jobs, kernel_roots);
	else
		total += affine_sum_generic(E, f, c.n, jobs, kernel_roots);
	// x = 0 when unramified
	Elem f0 = poly::coeff(f, 0);
	if (f0 != 0)
		total += E.count_power_roots(f0, c.n);

	RamificationData rd = ramification_data(c, m);
	uint64_t finite_nonzero = 0;
	for (auto &d : rd.data)
	{
		if (d.at_infinity)
			continue;
		if (d.x0 != 0)
			++finite_nonzero;
		total += E.count_power_roots(d.c, d.d);
	}
	if (finite_nonzero != kernel_roots)
		throw Error(ErrorKind::InvalidModel, "root bookkeeping mismatch in point count");
	total += infinity_points(c, E);
	return total;
}

uint64_t count_component_bruteforce(const Component &c, int m, int max_bits)
{
	require_valid(c);
	if (!poly::is_squarefree(*c.field, c.f))
		throw Error(ErrorKind::NotSquarefree, "brute-force counting needs squarefree f");
	FieldPtr Ep = extension_field(c.field, m, max_bits);
	const Field &E = *Ep;
	if (E.size() > (uint64_t(1) << 24))
		throw Error(ErrorKind::FieldBoundExceeded, "brute-force counting is limited to 2^24 elements");
	Poly f = poly::embed(c.f, *c.field, E);
	// value table of y -> y^n using the table-free multiplication
	std::vector<uint32_t> cnt(E.size(), 0);
	for (uint64_t y = 0; y < E.size(); ++y)
	{
		Elem v = 1, b = (Elem)y;
		for (uint32_t e = c.n; e; e >>= 1)
		{
			if (e & 1)
				v = E.mul_reference(v, b);
			b = E.mul_reference(b, b);
		}
		++cnt[v];
	}
	uint64_t total = 0;
	for (uint64_t x = 0; x < E.size(); ++x)
	{
		Elem v = 0;
		for (int i = (int)f.size() - 1; i >= 0; --i)
			v = E.add(E.mul_reference(v, (Elem)x), f[i]);
		total += cnt[v];
	}
	return total + infinity_points(c, E);
}

uint64_t count_points(const CurveModel &M, int m, int jobs, int max_bits)
{
	uint64_t total = 0;
	for (auto &c : M.components)
		if (m % c.orbit == 0)
			total += (uint64_t)c.orbit * count_component(c, m / c.orbit, jobs, max_bits);
	return total;
}

uint64_t count_points_bruteforce(const CurveModel &M, int m, int max_bits)
{
	uint64_t total = 0;
	for (auto &c : M.components)
		if (m % c.orbit == 0)
			total += (uint64_t)c.orbit * count_component_bruteforce(c, m / c.orbit, max_bits);
	return total;
}

} // namespace wrep
