#include "test_support.hpp"

#include "wrep/error.hpp"
#include "wrep/zeta.hpp"

#include <gtest/gtest.h>

#include <complex>

using namespace wrep;

namespace {

std::vector<Int> ints(std::initializer_list<long long> v)
{
	std::vector<Int> r;
	for (auto x : v)
		r.push_back(x);
	return r;
}

LocalPolynomial poly_of(std::vector<Int> a, long long q)
{
	LocalPolynomial P;
	P.a = std::move(a);
	P.q = q;
	P.g = (int)(P.a.size() - 1) / 2;
	return P;
}

Component make_component(const FieldPtr &F, uint32_t n, Poly f)
{
	Component c;
	c.n = n;
	c.f = std::move(f);
	c.field = F;
	return c;
}

// oracle Frobenius traces t_1..t_m of a smooth y^n = f over F_Q (f squarefree)
std::vector<Int> oracle_traces(const Component &c, int m)
{
	std::vector<Int> t;
	for (int k = 1; k <= m; ++k)
	{
		FieldPtr E = canonical_field(c.field->p(), c.field->degree() * k);
		Poly fe = poly::embed(c.f, *c.field, *E);
		std::vector<uint64_t> f(fe.begin(), fe.end());
		Int pts = oracle::smooth_count(oracle::naive(*E), f, c.n);
		t.push_back(Int(E->size()) + 1 - pts);
	}
	return t;
}

// Newton: k a_k = -(t_k + sum_{i<k} a_i t_{k-i}), then the functional equation
std::vector<Int> oracle_polynomial(const std::vector<Int> &t, const Int &q, int g)
{
	std::vector<Int> a{1};
	for (int k = 1; k <= g; ++k)
	{
		Int s = t[k - 1];
		for (int i = 1; i < k; ++i)
			s += a[i] * t[k - 1 - i];
		EXPECT_EQ(s % k, 0);
		a.push_back(-s / k);
	}
	for (int i = g - 1; i >= 0; --i)
	{
		Int qq = 1;
		for (int k = 0; k < g - i; ++k)
			qq *= q;
		a.push_back(qq * a[i]);
	}
	return a;
}

// smallest N with all alpha^N equal to one real number
std::pair<int, long double> numeric_class(const std::vector<std::complex<long double>> &alpha)
{
	for (int N = 1; N <= 64; ++N)
	{
		auto v = std::pow(alpha[0], (long double)N);
		bool ok = std::fabs(v.imag()) < 1e-6L * std::abs(v);
		for (auto &a : alpha)
			ok = ok && std::abs(std::pow(a, (long double)N) - v) < 1e-6L * std::abs(v);
		if (ok)
			return {N, v.real()};
	}
	return {0, 0};
}

Poly random_squarefree(std::mt19937_64 &rng, const Field &F, int deg)
{
	for (;;)
	{
		Poly f(deg + 1);
		for (auto &c : f)
			c = (Elem)(rng() % F.size());
		if (f[deg] == 0)
			continue;
		if (poly::is_squarefree(F, f))
			return f;
	}
}

} // namespace

TEST(Zeta, TracesToPolynomialGolden)
{
	// y^3 = x^4 + x + 1 over F_2
	auto P = traces_to_polynomial(ints({0, -8, 0}), 2, 3, 1);
	EXPECT_EQ(P.a, ints({1, 0, 4, 0, 8, 0, 8}));
	EXPECT_EQ(to_string(P), "1 0 4 0 8 0 8");
	try
	{
		traces_to_polynomial(ints({1, 0}), 3, 2, 1);
		FAIL();
	}
	catch (const Error &e)
	{
		EXPECT_EQ(e.kind(), ErrorKind::NonIntegralCoefficient);
	}
	EXPECT_THROW(traces_to_polynomial(ints({1}), 3, 2, 1), Error);
	// traces violating the Weil bound
	EXPECT_THROW(traces_to_polynomial(ints({-5}), 2, 1, 1), Error);
}

TEST(Zeta, PicardCurvesMatchOracle)
{
	FieldPtr F2 = canonical_field(2, 1);
	auto a = make_component(F2, 3, {0, 1, 0, 0, 1});
	auto b = make_component(F2, 3, {1, 1, 0, 0, 1});
	EXPECT_EQ(component_polynomial(a).a, ints({1, 0, 0, 0, 0, 0, 8}));
	EXPECT_EQ(oracle_polynomial(oracle_traces(a, 3), 2, 3), ints({1, 0, 0, 0, 0, 0, 8}));
	EXPECT_EQ(component_polynomial(b).a, oracle_polynomial(oracle_traces(b, 3), 2, 3));
}

TEST(Zeta, RandomCurvesMatchOracle)
{
	std::mt19937_64 rng(99);
	struct Case
	{
		uint32_t p;
		int s;
		uint32_t n;
		int deg;
	};
	const Case cases[] = {{3, 1, 2, 5}, {5, 1, 2, 5}, {7, 1, 2, 6}, {5, 1, 3, 4}, {7, 1, 3, 3}, {2, 1, 3, 4},
	                      {3, 2, 2, 3}, {2, 2, 3, 4}, {7, 1, 4, 3}, {13, 1, 2, 3}};
	int checked = 0;
	for (auto &cs : cases)
		for (int it = 0; it < 4; ++it)
		{
			FieldPtr F = canonical_field(cs.p, cs.s);
			auto c = make_component(F, cs.n, random_squarefree(rng, *F, cs.deg));
			if (!validate_component(c).ok())
				continue;
			const int g = genus(c);
			if (g == 0 || F->size() > 49 && g > 2)
				continue;
			auto P = component_polynomial(c);
			EXPECT_EQ(P.a, oracle_polynomial(oracle_traces(c, g), Int(F->size()), g));
			// invariants: Weil bound, functional equation, P(1) = #Jac > 0
			EXPECT_TRUE(verify_weil(P).ok);
			Int P1 = 0;
			for (auto &x : P.a)
				P1 += x;
			EXPECT_GT(P1, 0);
			++checked;
		}
	EXPECT_GE(checked, 30);
}

TEST(Zeta, PowerSumsAreBaseChangeTraces)
{
	FieldPtr F5 = canonical_field(5, 1);
	auto E = make_component(F5, 2, {1, 1, 0, 1}); // y^2 = x^3 + x + 1
	auto P = component_polynomial(E);
	for (int N : {2, 3})
	{
		auto s = power_sum_transform(P.a, N);
		auto t = oracle_traces(E, N);
		EXPECT_EQ(s[0], t[N - 1]) << N;
	}
	auto s1 = power_sum_transform(P.a, 1);
	EXPECT_EQ(s1[0], oracle_traces(E, 1)[0]);
}

TEST(Zeta, WeilChecks)
{
	EXPECT_TRUE(verify_weil(poly_of(ints({1, 0, 0, 0, 0, 0, 8}), 2)).ok);
	auto bad = verify_weil(poly_of(ints({1, 3, 2}), 2)); // roots of size 1 and 2
	EXPECT_FALSE(bad.ok);
	EXPECT_GT(bad.max_deviation, 0.5);
	EXPECT_FALSE(verify_weil(poly_of(ints({1, 0, 3}), 2)).ok); // functional equation
	EXPECT_FALSE(verify_weil(poly_of(ints({2, 0, 4}), 2)).ok);
	try
	{
		require_weil(poly_of(ints({1, 3, 2}), 2));
		FAIL();
	}
	catch (const Error &e)
	{
		EXPECT_EQ(e.kind(), ErrorKind::WeilViolation);
	}
}

TEST(Zeta, EigenvalueClassesAgainstExplicitRoots)
{
	using C = std::complex<long double>;
	const long double pi = std::acos(-1.0L);

	// 1 + 8 T^6: alpha_k = 8^(1/6) exp(i pi (2k+1) / 6)
	{
		std::vector<C> alpha;
		for (int k = 0; k < 6; ++k)
			alpha.push_back(std::polar(std::pow(8.0L, 1.0L / 6), pi * (2 * k + 1) / 6));
		auto [N, c] = numeric_class(alpha);
		auto cls = eigenvalue_classes(poly_of(ints({1, 0, 0, 0, 0, 0, 8}), 2));
		ASSERT_EQ(cls.size(), 1u);
		EXPECT_EQ(cls[0].N, (uint64_t)N);
		EXPECT_EQ(cls[0].c, Int((long long)std::llround(c)));
		EXPECT_EQ(cls[0].N, 6u);
		EXPECT_EQ(cls[0].c, -8);
	}
	// 1 - 2T + 2T^2: alpha = 1 +- i
	{
		auto [N, c] = numeric_class({C(1, 1), C(1, -1)});
		EXPECT_EQ(artin_order(poly_of(ints({1, -2, 2}), 2)), (uint64_t)N);
		EXPECT_EQ(N, 4);
		EXPECT_EQ(eigenvalue_classes(poly_of(ints({1, -2, 2}), 2))[0].c, Int((long long)std::llround(c)));
	}
	// (1 + 2T^2)^3: alpha = +-i sqrt 2, alpha^2 = -2
	{
		auto a = ipoly_mul(ipoly_mul(ints({1, 0, 2}), ints({1, 0, 2})), ints({1, 0, 2}));
		auto [N, c] = numeric_class({C(0, std::sqrt(2.0L)), C(0, -std::sqrt(2.0L))});
		auto cls = eigenvalue_classes(poly_of(a, 2));
		ASSERT_EQ(cls.size(), 1u);
		EXPECT_EQ(cls[0].size, 6);
		EXPECT_EQ(cls[0].N, (uint64_t)N);
		EXPECT_EQ(cls[0].N, 2u);
		EXPECT_EQ(cls[0].c, -2);
		EXPECT_EQ(std::llround(c), -2);
	}
	// (1 + 8T)^2 (1 - 8T)^4 over q = 64: alpha = -8 twice, 8 four times
	{
		std::vector<Int> a{1};
		for (int i = 0; i < 2; ++i)
			a = ipoly_mul(a, ints({1, 8}));
		for (int i = 0; i < 4; ++i)
			a = ipoly_mul(a, ints({1, -8}));
		EXPECT_EQ(a, ints({1, -16, -64, 2048, -4096, -65536, 262144}));
		auto [N, c] = numeric_class({C(-8, 0), C(-8, 0), C(8, 0), C(8, 0), C(8, 0), C(8, 0)});
		auto cls = eigenvalue_classes(poly_of(a, 64));
		ASSERT_EQ(cls.size(), 1u);
		EXPECT_EQ(cls[0].N, (uint64_t)N);
		EXPECT_EQ(cls[0].N, 2u);
		EXPECT_EQ(cls[0].c, 64);
		EXPECT_EQ(std::llround(c), 64);
	}
	// 1 - 512 T^3 + 262144 T^6 over q = 64: alpha = -8 times primitive 9th roots of unity
	{
		std::vector<C> alpha;
		for (int k : {1, 2, 4, 5, 7, 8})
			alpha.push_back(-8.0L * std::polar(1.0L, 2 * pi * k / 9));
		auto [N, c] = numeric_class(alpha);
		auto cls = eigenvalue_classes(poly_of(ints({1, 0, 0, -512, 0, 0, 262144}), 64));
		ASSERT_EQ(cls.size(), 1u);
		EXPECT_EQ(cls[0].N, (uint64_t)N);
		EXPECT_EQ(cls[0].c, Int((long long)std::llround(c)));
	}
}

TEST(Zeta, OrdinaryCurvesHaveNoFiniteClass)
{
	// y^2 = x^3 + x + 1 over F_5 has a_1 = -3; its Frobenius has infinite order up to scaling
	FieldPtr F5 = canonical_field(5, 1);
	auto P = component_polynomial(make_component(F5, 2, {1, 1, 0, 1}));
	try
	{
		artin_order(P);
		FAIL();
	}
	catch (const Error &e)
	{
		EXPECT_TRUE(e.kind() == ErrorKind::UnclassifiableRoot || e.kind() == ErrorKind::MultiClass) << e.what();
	}
}

TEST(Zeta, ModelPolynomialAgreesWithWholeModelTraces)
{
	auto P = load_problem(fixture("three_components.json"));
	auto a = model_polynomial(P.model);
	auto b = model_polynomial_from_traces(P.model);
	EXPECT_EQ(a.a, b.a);
	EXPECT_EQ(a.g, 3);
	EXPECT_EQ(a.d, 3);
}

TEST(Zeta, OrbitSubstitution)
{
	EXPECT_EQ(ipoly_subst_power(ints({1, -2, 2}), 2), ints({1, 0, -2, 0, 2}));
	EXPECT_EQ(ipoly_mul(ints({1, 1}), ints({1, -1})), ints({1, 0, -1}));
	// a conic orbit of length 2 contributes P(T^2) with P = 1
	FieldPtr F2 = canonical_field(2, 1), F4 = canonical_field(2, 2);
	CurveModel M;
	M.field = F2;
	M.components.push_back(make_component(F2, 3, {1, 1, 0, 0, 1}));
	Component orb = make_component(F4, 3, {0, 1, 0, 0, 1});
	orb.orbit = 2;
	M.components.push_back(orb);
	auto P = model_polynomial(M);
	auto Q = model_polynomial_from_traces(M);
	EXPECT_EQ(P.a, Q.a);
	EXPECT_EQ(P.g, 9);
}
