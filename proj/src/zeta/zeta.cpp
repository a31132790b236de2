#include "wrep/error.hpp"
#include "wrep/zeta.hpp"

#include <sstream>

namespace wrep {

bool operator==(const LocalPolynomial &x, const LocalPolynomial &y)
{
	return x.a == y.a && x.q == y.q && x.g == y.g && x.d == y.d;
}

std::string to_string(const LocalPolynomial &P)
{
	std::ostringstream os;
	for (size_t i = 0; i < P.a.size(); ++i)
		os << (i ? " " : "") << P.a[i];
	return os.str();
}

LocalPolynomial traces_to_polynomial(const std::vector<Int> &t, const Int &q, int g, int d)
{
	if ((int)t.size() < g)
		throw Error(ErrorKind::InvalidModel, "need traces t_1..t_g");
	LocalPolynomial P;
	P.q = q;
	P.g = g;
	P.d = d;
	P.a.assign(2 * g + 1, 0);
	// k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
	std::vector<Rat> e(g + 1);
	e[0] = 1;
	for (int k = 1; k <= g; ++k)
	{
		Rat s = 0;
		for (int i = 1; i <= k; ++i)
		{
			Rat term = e[k - i] * Rat(t[i - 1]);
			s += (i % 2 == 1) ? term : -term;
		}
		e[k] = s / k;
		if (!is_integer(e[k]))
			throw Error(ErrorKind::NonIntegralCoefficient,
			            "coefficient of T^" + std::to_string(k) + " is " + to_string(e[k]));
	}
	for (int k = 0; k <= g; ++k)
	{
		Int ek = numerator(e[k]);
		P.a[k] = (k % 2 == 0) ? ek : Int(-ek);
	}
	for (int i = 0; i < g; ++i)
		P.a[2 * g - i] = ipow(q, (unsigned)(g - i)) * P.a[i];
	require_weil(P);
	return P;
}

std::vector<Int> power_sum_transform(const std::vector<Int> &a, int N)
{
	const int D = (int)a.size() - 1;
	if (D <= 0)
		return {};
	std::vector<Int> e(D + 1);
	for (int k = 0; k <= D; ++k)
		e[k] = (k % 2 == 0) ? a[k] : Int(-a[k]);
	const int K = D * N;
	std::vector<Int> p(K + 1, 0);
	for (int k = 1; k <= K; ++k)
	{
		Int s = 0;
		for (int i = 1; i <= std::min(k - 1, D); ++i)
			s += (i % 2 == 1) ? Int(e[i] * p[k - i]) : Int(-e[i] * p[k - i]);
		if (k <= D)
			s += (k % 2 == 1) ? Int(k * e[k]) : Int(-k * e[k]);
		p[k] = s;
	}
	std::vector<Int> out(D);
	for (int m = 1; m <= D; ++m)
		out[m - 1] = p[m * N];
	return out;
}

std::vector<Int> ipoly_mul(const std::vector<Int> &f, const std::vector<Int> &g)
{
	if (f.empty() || g.empty())
		return {};
	std::vector<Int> r(f.size() + g.size() - 1, 0);
	for (size_t i = 0; i < f.size(); ++i)
		for (size_t j = 0; j < g.size(); ++j)
			r[i + j] += f[i] * g[j];
	return r;
}

std::vector<Int> ipoly_subst_power(const std::vector<Int> &f, int r)
{
	if (f.empty())
		return {};
	std::vector<Int> out((f.size() - 1) * r + 1, 0);
	for (size_t i = 0; i < f.size(); ++i)
		out[i * r] = f[i];
	return out;
}

LocalPolynomial component_polynomial(const Component &c, int jobs, int max_bits)
{
	const int g = genus(c);
	const Int q = Int(c.field->size());
	std::vector<Int> t;
	for (int m = 1; m <= g; ++m)
	{
		Int N = Int(count_component(c, m, jobs, max_bits));
		t.push_back(ipow(q, m) + 1 - N);
	}
	return traces_to_polynomial(t, q, g, 1);
}

LocalPolynomial model_polynomial(const CurveModel &M, int jobs, int max_bits)
{
	LocalPolynomial P;
	P.q = Int(M.field->size());
	P.a = {1};
	P.g = 0;
	P.d = geometric_component_count(M);
	for (auto &c : M.components)
	{
		LocalPolynomial Pc = component_polynomial(c, jobs, max_bits);
		P.a = ipoly_mul(P.a, ipoly_subst_power(Pc.a, c.orbit));
		P.g += c.orbit * Pc.g;
	}
	require_weil(P);
	return P;
}

LocalPolynomial model_polynomial_from_traces(const CurveModel &M, int jobs, int max_bits)
{
	const int g = total_genus(M);
	const Int q = Int(M.field->size());
	std::vector<Int> t;
	for (int m = 1; m <= g; ++m)
	{
		Int N = Int(count_points(M, m, jobs, max_bits));
		t.push_back(Int(fixed_component_count(M, m)) * (ipow(q, m) + 1) - N);
	}
	return traces_to_polynomial(t, q, g, geometric_component_count(M));
}

} // namespace wrep
