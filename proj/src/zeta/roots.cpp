#include "wrep/error.hpp"
#include "wrep/zeta.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace wrep {

namespace {

using RPoly = std::vector<Rat>;
using cld = std::complex<long double>;

void rtrim(RPoly &f)
{
	while (!f.empty() && f.back() == 0)
		f.pop_back();
}

RPoly rsub(const RPoly &f, const RPoly &g)
{
	RPoly r(std::max(f.size(), g.size()), 0);
	for (size_t i = 0; i < f.size(); ++i)
		r[i] += f[i];
	for (size_t i = 0; i < g.size(); ++i)
		r[i] -= g[i];
	rtrim(r);
	return r;
}

void rdivmod(const RPoly &f, const RPoly &g, RPoly &q, RPoly &r)
{
	r = f;
	rtrim(r);
	q.assign(r.size() >= g.size() ? r.size() - g.size() + 1 : 0, 0);
	while (!r.empty() && r.size() >= g.size())
	{
		Rat c = r.back() / g.back();
		size_t sh = r.size() - g.size();
		q[sh] = c;
		for (size_t i = 0; i < g.size(); ++i)
			r[sh + i] -= c * g[i];
		rtrim(r);
	}
}

RPoly rmonic(const RPoly &f)
{
	RPoly r = f;
	for (auto &c : r)
		c /= f.back();
	return r;
}

RPoly rgcd(RPoly a, RPoly b)
{
	rtrim(a);
	rtrim(b);
	while (!b.empty())
	{
		RPoly q, r;
		rdivmod(a, b, q, r);
		a = std::move(b);
		b = std::move(r);
	}
	return rmonic(a);
}

RPoly rderiv(const RPoly &f)
{
	RPoly r;
	for (size_t i = 1; i < f.size(); ++i)
		r.push_back(f[i] * Rat((long long)i));
	rtrim(r);
	return r;
}

RPoly rdiv(const RPoly &f, const RPoly &g)
{
	RPoly q, r;
	rdivmod(f, g, q, r);
	return q;
}

// Yun: f = prod f_i^i
std::vector<std::pair<RPoly, int>> yun(const RPoly &f0)
{
	std::vector<std::pair<RPoly, int>> out;
	RPoly f = rmonic(f0);
	RPoly d = rderiv(f);
	RPoly a = rgcd(f, d);
	RPoly b = rdiv(f, a), c = rdiv(d, a);
	int i = 1;
	while (b.size() > 1)
	{
		RPoly dd = rsub(c, rderiv(b));
		RPoly g = rgcd(b, dd);
		if (g.size() > 1)
			out.emplace_back(g, i);
		b = rdiv(b, g);
		c = rdiv(dd, g);
		++i;
	}
	return out;
}

long double to_ld(const Rat &r) { return r.convert_to<long double>(); }

cld horner(const std::vector<long double> &c, cld z, cld *deriv)
{
	cld p = 0, dp = 0;
	for (int i = (int)c.size() - 1; i >= 0; --i)
	{
		dp = dp * z + p;
		p = p * z + c[i];
	}
	if (deriv)
		*deriv = dp;
	return p;
}

} // namespace

std::vector<WeilRoot> weil_roots(const LocalPolynomial &P)
{
	std::vector<WeilRoot> out;
	const int D = (int)P.a.size() - 1;
	if (D <= 0)
		return out;
	// reciprocal polynomial, roots alpha_i
	RPoly R(D + 1);
	for (int k = 0; k <= D; ++k)
		R[D - k] = Rat(P.a[k]);
	rtrim(R);
	const long double sq = std::sqrt(to_ld(Rat(P.q)));
	for (auto &[h, mult] : yun(R))
	{
		const int dh = (int)h.size() - 1;
		// balance: roots of h(sq * y) lie near the unit circle
		std::vector<long double> c(dh + 1);
		long double s = 1;
		for (int i = 0; i <= dh; ++i)
		{
			c[i] = to_ld(h[i]) * s;
			s *= sq;
		}
		long double lead = c[dh];
		for (auto &v : c)
			v /= lead;
		Eigen::VectorXd cd(dh + 1);
		for (int i = 0; i <= dh; ++i)
			cd[i] = (double)c[i];
		std::vector<cld> roots;
		if (dh == 1)
			roots.push_back(cld(-c[0], 0));
		else
		{
			Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
			solver.compute(cd);
			for (int i = 0; i < solver.roots().size(); ++i)
				roots.push_back(cld(solver.roots()[i].real(), solver.roots()[i].imag()));
		}
		for (cld z : roots)
		{
			for (int it = 0; it < 60; ++it)
			{
				cld dp;
				cld p = horner(c, z, &dp);
				if (std::abs(dp) == 0)
					break;
				cld step = p / dp;
				z -= step;
				if (std::abs(step) < 1e-19L)
					break;
			}
			out.push_back({z * sq, mult});
		}
	}
	return out;
}

WeilReport verify_weil(const LocalPolynomial &P, double tol)
{
	WeilReport rep;
	auto bad = [&](const std::string &s) {
		rep.ok = false;
		rep.problems.push_back(s);
	};
	const int g = P.g;
	if ((int)P.a.size() != 2 * g + 1)
	{
		bad("degree " + std::to_string((int)P.a.size() - 1) + " differs from 2g = " + std::to_string(2 * g));
		return rep;
	}
	if (P.a[0] != 1)
		bad("constant coefficient is not 1");
	for (int i = 0; i <= g; ++i)
		if (P.a[2 * g - i] != ipow(P.q, (unsigned)(g - i)) * P.a[i])
			bad("functional equation fails at T^" + std::to_string(2 * g - i));
	if (g == 0 || !rep.ok)
		return rep;
	const long double sq = std::sqrt(to_ld(Rat(P.q)));
	int count = 0;
	for (auto &r : weil_roots(P))
	{
		long double dev = std::fabs(std::abs(r.alpha) - sq);
		rep.max_deviation = std::max(rep.max_deviation, (double)dev);
		count += r.mult;
		if (dev > tol)
		{
			std::ostringstream os;
			os.precision(12);
			os << "root " << r.alpha.real() << (r.alpha.imag() < 0 ? "" : "+") << r.alpha.imag()
			   << "i has |alpha| - sqrt(q) = " << dev;
			bad(os.str());
		}
	}
	if (count != 2 * g)
		bad("found " + std::to_string(count) + " roots, expected " + std::to_string(2 * g));
	return rep;
}

void require_weil(const LocalPolynomial &P, double tol)
{
	WeilReport r = verify_weil(P, tol);
	if (!r.ok)
	{
		std::string msg = to_string(P) + ":";
		for (auto &s : r.problems)
			msg += " " + s + ";";
		throw Error(ErrorKind::WeilViolation, msg);
	}
}

namespace {

std::vector<uint64_t> candidate_orders(int g)
{
	std::vector<uint64_t> out;
	for (uint64_t N = 1; N <= (uint64_t)(4 * g * g); ++N)
		if (euler_phi(N) <= (uint64_t)(2 * g))
			out.push_back(N);
	return out;
}

// exact integer sqrt of q^N if it exists
bool exact_half_power(const Int &q, uint64_t N, Int &out)
{
	Int v = ipow(q, (unsigned)N);
	Int s = boost::multiprecision::sqrt(v);
	if (s * s != v)
		return false;
	out = s;
	return true;
}

bool class_test(const std::vector<Int> &factor, uint64_t N, const Int &c)
{
	const int size = (int)factor.size() - 1;
	std::vector<Int> s = power_sum_transform(factor, (int)N);
	Int cm = 1;
	for (int m = 1; m <= size; ++m)
	{
		cm *= c;
		if (s[m - 1] != size * cm)
			return false;
	}
	return true;
}

} // namespace

std::vector<EigenvalueClass> eigenvalue_classes(const LocalPolynomial &P, double tol)
{
	std::vector<EigenvalueClass> out;
	if (P.g == 0)
		return out;
	std::vector<cld> alpha;
	for (auto &r : weil_roots(P))
		for (int k = 0; k < r.mult; ++k)
			alpha.push_back(r.alpha);
	const int n = (int)alpha.size();
	const auto cands = candidate_orders(P.g);
	auto ratio_order = [&](int i, int j) -> uint64_t {
		cld rho = alpha[i] / alpha[j];
		rho /= std::abs(rho);
		for (uint64_t N : cands)
			if (std::abs(std::pow(rho, (long double)N) - cld(1)) < tol * (long double)N)
				return N;
		return 0;
	};
	std::vector<int> parent(n);
	std::iota(parent.begin(), parent.end(), 0);
	std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			if (root(i) != root(j) && ratio_order(i, j))
				parent[root(j)] = root(i);

	std::vector<int> seen(n, -1);
	for (int i = 0; i < n; ++i)
	{
		int r = root(i);
		if (seen[r] < 0)
		{
			seen[r] = (int)out.size();
			out.push_back({});
		}
		out[seen[r]].members.push_back(i);
	}
	const uint64_t Nmax = (uint64_t)(4 * P.g * P.g);
	for (auto &cls : out)
	{
		cls.size = (int)cls.members.size();
		uint64_t N = 1;
		for (int i : cls.members)
		{
			uint64_t o = ratio_order(i, cls.members[0]);
			if (o == 0)
				throw Error(ErrorKind::UnclassifiableRoot, "class ratios are not roots of unity");
			N = lcm_u64(N, o);
		}
		if (out.size() == 1)
			cls.factor = P.a;
		else
		{
			// numeric class factor, rounded, then exact division of P
			std::vector<cld> f{cld(1)};
			for (int i : cls.members)
			{
				std::vector<cld> g(f.size() + 1, cld(0));
				for (size_t k = 0; k < f.size(); ++k)
				{
					g[k] += f[k];
					g[k + 1] -= f[k] * alpha[i];
				}
				f = g;
			}
			cls.factor.clear();
			for (auto &v : f)
			{
				if (std::fabs(v.imag()) > 1e-6L || std::fabs(v.real()) > 9e15L ||
				    std::fabs(v.real() - std::round(v.real())) > 1e-6L)
					throw Error(ErrorKind::UnclassifiableRoot,
					            "class factor has non-integral coefficients (irrational class constant)");
				cls.factor.push_back(Int((long long)std::llround(v.real())));
			}
			RPoly q, rem, num(P.a.begin(), P.a.end()), den(cls.factor.begin(), cls.factor.end());
			rdivmod(num, den, q, rem);
			if (!rem.empty())
				throw Error(ErrorKind::UnclassifiableRoot, "class factor does not divide P");
		}
		bool found = false;
		for (uint64_t M = N; M <= Nmax && !found; M += N)
		{
			Int mag;
			if (!exact_half_power(P.q, M, mag))
				continue;
			cld v = std::pow(alpha[cls.members[0]], (long double)M);
			Int c = v.real() < 0 ? Int(-mag) : mag;
			if (std::fabs(v.imag()) > 1e-6L * std::abs(v))
				continue;
			if (class_test(cls.factor, M, c))
			{
				cls.N = M;
				cls.c = c;
				found = true;
			}
		}
		if (!found)
			throw Error(ErrorKind::UnclassifiableRoot, "no root-of-unity order within 4g^2 passes the exact test");
	}
	return out;
}

uint64_t artin_order(const LocalPolynomial &P, double tol)
{
	auto cls = eigenvalue_classes(P, tol);
	if (cls.size() != 1)
		throw Error(ErrorKind::MultiClass, std::to_string(cls.size()) +
		                                       " eigenvalue classes; reduce to one class per unramified character first");
	return cls[0].N;
}

} // namespace wrep
