#include "test_support.hpp"

#include "wrep/error.hpp"
#include "wrep/twist.hpp"
#include "wrep/zeta.hpp"

#include <gtest/gtest.h>

using namespace wrep;

namespace {

struct Fixture
{
	ProblemFile P;
	std::vector<NamedAut> gens;
	std::unique_ptr<AutGroup> G;

	Fixture(const std::string &name, int64_t period) : P(load_problem(fixture(name))), gens(named_elements(P))
	{
		G = std::make_unique<AutGroup>(P.model, P.generators, period);
	}
	const Field &F() const { return *P.model.field; }
	SemilinearAut word(const std::string &w) const
	{
		return eval_word(F(), gens, w, (int)P.model.components.size());
	}
	TwistResult twist(const std::string &w, int bits = 32) const { return twist_model(P.model, G.get(), word(w), bits); }
};

std::vector<Int> ints(std::initializer_list<long long> v)
{
	std::vector<Int> r;
	for (auto x : v)
		r.push_back(x);
	return r;
}

// Newton: k a_k = -(t_k + sum_{i<k} a_i t_{k-i})
std::vector<Int> newton(const std::vector<Int> &t)
{
	std::vector<Int> a{1};
	for (size_t k = 1; k <= t.size(); ++k)
	{
		Int s = t[k - 1];
		for (size_t i = 1; i < k; ++i)
			s += a[i] * t[k - 1 - i];
		a.push_back(-s / (int)k);
	}
	return a;
}

// oracle traces of a single smooth component y^n = f over its field, degrees 1..m
std::vector<Int> oracle_traces(const Component &c, int m)
{
	std::vector<Int> t;
	const Field &K = *c.field;
	for (int k = 1; k <= m; ++k)
	{
		FieldPtr E = canonical_field(K.p(), K.degree() * k);
		auto N = oracle::naive(*E);
		Poly fe = poly::embed(c.f, K, *E);
		std::vector<uint64_t> f(fe.begin(), fe.end());
		Int pts = oracle::smooth_count(N, f, c.n);
		t.push_back(Int(E->size()) + 1 - pts);
	}
	return t;
}

} // namespace

TEST(Twist, IdentityDataGivesTheBaseModel)
{
	Fixture S("picard_c3.json", 6);
	auto T = S.twist("phi0");
	ASSERT_EQ(T.model.components.size(), 1u);
	EXPECT_EQ(T.model.field->size(), 2u);
	EXPECT_TRUE(models_equivalent(*T.model.field, T.model.components[0].f, {0, 1, 0, 0, 1}, 3));
}

TEST(Twist, PicardTwistByTau2)
{
	Fixture S("picard_c3.json", 6);
	auto T = S.twist("phi0 tau2");
	const Component &c = T.model.components[0];
	EXPECT_EQ(T.orbits[0].shape.kind, ShapeKind::Wild);
	EXPECT_TRUE(models_equivalent(*c.field, c.f, {1, 1, 0, 0, 1}, 3));
	auto P = model_polynomial(T.model);
	EXPECT_EQ(P.a, ints({1, 0, 4, 0, 8, 0, 8}));
	EXPECT_EQ(newton(oracle_traces(c, 3)), ints({1, 0, 4, 0}));
}

TEST(Twist, PicardTwistByTau1OverF64)
{
	Fixture S("picard_c3.json", 6);
	auto T = S.twist("phi0^6 tau1");
	const Component &c = T.model.components[0];
	EXPECT_EQ(c.field->size(), 64u);
	auto P = model_polynomial(T.model);
	EXPECT_EQ(P.a, ints({1, -16, -64, 2048, -4096, -65536, 262144}));
	EXPECT_EQ(newton(oracle_traces(c, 2)), ints({1, -16, -64}));
}

// the twisted model's F_64-points are the points fixed by T_phi; this pins the sign of a_1
TEST(Twist, WildTwistAgreesWithFixedPoints)
{
	Fixture S("picard_c3.json", 6);
	SemilinearAut phi = S.word("phi0^6 tau1");
	auto T = twist_model(S.P.model, S.G.get(), phi);
	const Component &c = T.model.components[0];
	int e = oracle::data_order(S.F(), phi);
	ASSERT_EQ(e, 12);
	uint64_t fixed = oracle::fixed_affine_points(S.P.model, *canonical_field(2, e), phi);
	auto NF = oracle::naive(*c.field);
	EXPECT_EQ(fixed, oracle::affine_count(NF, std::vector<uint64_t>(c.f.begin(), c.f.end()), c.n));
	// one place at infinity: t_1 = 65 - (fixed + 1) = 16, so a_1 = -16
	EXPECT_EQ(fixed + 1, 49u);
}

TEST(Twist, DegreeNineTwist)
{
	Fixture S("picard_c9.json", 6);
	auto T = S.twist("phi0^6 psi");
	const Component &c = T.model.components[0];
	auto P = model_polynomial(T.model);
	EXPECT_EQ(P.a, ints({1, 0, 0, -512, 0, 0, 262144}));
	// P(T / -8) = 1 + T^3 + T^6
	for (int i = 0; i <= 6; ++i)
	{
		Int s = P.a[i];
		for (int k = 0; k < i; ++k)
		{
			ASSERT_EQ(s % 8, 0);
			s /= -8;
		}
		EXPECT_EQ(s, (i % 3 == 0) ? 1 : 0) << i;
	}
	EXPECT_EQ(newton(oracle_traces(c, 2)), ints({1, 0, 0}));
}

// affine F_q-points of the twist match the affine points fixed by T_phi
TEST(Twist, FixedPointsMatchTwistedCounts)
{
	Fixture S("picard_c3.json", 6);
	const Field &F = S.F();
	int checked = 0;
	for (size_t i = 0; i < S.G->size(); ++i)
	{
		if (S.G->element(i).frob != 0)
			continue;
		const std::string w = S.G->word(i);
		for (const char *pre : {"phi0", "phi0^2"})
		{
			std::string full = std::string(pre) + (w.empty() ? "" : " " + w);
			SemilinearAut phi = S.word(full);
			int N = oracle::data_order(F, phi);
			ASSERT_GT(N, 0) << full;
			if (N > 12)
				continue;
			auto T = twist_model(S.P.model, S.G.get(), phi);
			const Component &c = T.model.components[0];
			auto NF = oracle::naive(*c.field);
			std::vector<uint64_t> f(c.f.begin(), c.f.end());
			FieldPtr E = canonical_field(2, N);
			EXPECT_EQ(oracle::fixed_affine_points(S.P.model, *E, phi), oracle::affine_count(NF, f, c.n)) << full;
			++checked;
		}
	}
	EXPECT_GE(checked, 12);
}

TEST(Twist, MultiComponentOrbit)
{
	Fixture S("three_components.json", 2);
	const Field &F = S.F();
	auto T = S.twist("phi0 tau1");
	// tau1 swaps the two conics, which then form one orbit of length 2
	ASSERT_EQ(T.model.components.size(), 2u);
	EXPECT_EQ(T.model.components[1].orbit, 2);
	auto P = model_polynomial(T.model);
	auto P2 = model_polynomial_from_traces(T.model);
	EXPECT_EQ(P.a, P2.a);
	SemilinearAut phi = S.word("phi0 tau1");
	int N = oracle::data_order(F, phi);
	ASSERT_GT(N, 0);
	ASSERT_LE(N, 12);
	// fixed affine points equal the twisted model's affine points over F_2
	uint64_t twisted = 0;
	for (auto &c : T.model.components)
	{
		if (c.orbit != 1)
			continue;
		auto NF = oracle::naive(*c.field);
		twisted += oracle::affine_count(NF, std::vector<uint64_t>(c.f.begin(), c.f.end()), c.n);
	}
	EXPECT_EQ(oracle::fixed_affine_points(S.P.model, *canonical_field(2, N), phi), twisted);
}

TEST(Twist, ConjugateElementsGiveTheSamePolynomial)
{
	Fixture S("picard_c3.json", 6);
	const Field &F = S.F();
	std::mt19937_64 rng(7);
	int checked = 0;
	for (int it = 0; it < 40 && checked < 12; ++it)
	{
		size_t gi = rng() % S.G->size(), ci = rng() % S.G->size();
		const SemilinearAut &c = S.G->element(ci);
		if (S.G->element(gi).frob != 0 || c.frob != 0)
			continue;
		SemilinearAut phi = S.word("phi0 " + S.G->word(gi));
		SemilinearAut conj = compose(F, c, compose(F, phi, inverse(F, c)));
		auto a = model_polynomial(twist_model(S.P.model, S.G.get(), phi).model);
		auto b = model_polynomial(twist_model(S.P.model, S.G.get(), conj).model);
		EXPECT_EQ(a.a, b.a) << S.G->word(gi) << " / " << S.G->word(ci);
		++checked;
	}
	EXPECT_GE(checked, 6);
}

TEST(Twist, Errors)
{
	FieldPtr F4 = canonical_field(2, 2);
	Shape bad{ShapeKind::Tame, 2, 1};
	try
	{
		twist_component(*F4, {0, 1, 0, 0, 1}, 3, bad, 4);
		FAIL();
	}
	catch (const Error &e)
	{
		EXPECT_EQ(e.kind(), ErrorKind::ShapeIncompatible);
	}

	Fixture S("picard_c3.json", 6);
	try
	{
		S.twist("phi0 tau2", 3);
		FAIL();
	}
	catch (const Error &e)
	{
		EXPECT_EQ(e.kind(), ErrorKind::FieldBoundExceeded);
	}

	SemilinearAut inv = identity_aut(1);
	inv.frob = 1;
	inv.maps[0].A = Mobius{0, 1, 1, 0};
	try
	{
		canonical_shape(nullptr, *F4, inv, 0);
		FAIL();
	}
	catch (const Error &e)
	{
		EXPECT_EQ(e.kind(), ErrorKind::NoCanonicalShape);
	}

	SemilinearAut lin = identity_aut(1);
	EXPECT_THROW(twist_model(S.P.model, S.G.get(), lin), Error);
}
