#include "wrep/curve.hpp"
#include "wrep/error.hpp"

#include <numeric>

namespace wrep {

const char *violation_name(ViolationKind k)
{
	switch (k)
	{
	case ViolationKind::ExponentDivisibleByP: return "ExponentDivisibleByP";
	case ViolationKind::NotAbsolutelyIrreducible: return "NotAbsolutelyIrreducible";
	case ViolationKind::ConstantF: return "ConstantF";
	case ViolationKind::NthPowerFactor: return "NthPowerFactor";
	case ViolationKind::InvalidExponent: return "InvalidExponent";
	}
	return "Violation";
}

ComponentReport validate_component(const Component &c)
{
	ComponentReport rep;
	auto add = [&](ViolationKind k, const std::string &msg) { rep.violations.push_back({k, msg}); };
	if (!c.field)
	{
		add(ViolationKind::ConstantF, "component has no field");
		return rep;
	}
	const Field &F = *c.field;
	for (Elem e : c.f)
		if (!F.contains(e))
			throw Error(ErrorKind::InvalidModel, "coefficient outside " + F.describe());
	if (c.n < 2)
		add(ViolationKind::InvalidExponent, "exponent n must be at least 2");
	else if (c.n % F.p() == 0)
		add(ViolationKind::ExponentDivisibleByP, "n = " + std::to_string(c.n) + " is divisible by p = " + std::to_string(F.p()));
	if (poly::degree(c.f) < 1)
	{
		add(ViolationKind::ConstantF, "f is constant");
		return rep;
	}
	if (c.n >= 2)
	{
		uint64_t g = c.n;
		bool nth = false;
		for (auto &[h, m] : poly::squarefree_factorization(F, c.f))
		{
			g = gcd_u64(g, (uint64_t)m);
			if ((uint64_t)m >= c.n)
				nth = true;
		}
		if (g != 1)
			add(ViolationKind::NotAbsolutelyIrreducible,
			    "gcd of n and the root multiplicities is " + std::to_string(g));
		if (nth)
			add(ViolationKind::NthPowerFactor, "f has a root of multiplicity at least n");
	}
	if (rep.ok())
	{
		int g = genus(c);
		if (g < 2)
			rep.warnings.push_back("component " + c.label + " has genus " + std::to_string(g));
	}
	return rep;
}

void require_valid(const Component &c)
{
	auto rep = validate_component(c);
	if (!rep.ok())
		throw Error(ErrorKind::InvalidModel,
		            std::string(violation_name(rep.violations[0].kind)) + ": " + rep.violations[0].message);
}

int genus(const Component &c)
{
	const Field &F = *c.field;
	const int64_t n = c.n;
	const int D = poly::degree(c.f);
	// Riemann-Hurwitz for the degree-n cover of the line
	int64_t s = -2 * n;
	for (auto &[h, m] : poly::squarefree_factorization(F, c.f))
		s += (int64_t)poly::degree(h) * (n - (int64_t)gcd_u64(n, m));
	s += n - (int64_t)gcd_u64(n, D);
	return (int)((s + 2) / 2);
}

int total_genus(const CurveModel &M)
{
	int g = 0;
	for (auto &c : M.components)
		g += c.orbit * genus(c);
	return g;
}

FieldPtr extension_field(const FieldPtr &F, int m, int max_bits)
{
	if (m < 1)
		throw Error(ErrorKind::InvalidModel, "extension degree must be positive");
	check_field_bound(F->p(), F->degree() * m, max_bits);
	if (m == 1)
		return F;
	return canonical_field(F->p(), F->degree() * m);
}

RamificationData ramification_data(const Component &c, int m)
{
	RamificationData out;
	const Field &F = *c.field;
	out.field = extension_field(c.field, m);
	const Field &E = *out.field;
	Poly fe = poly::embed(c.f, F, E);
	for (auto &[h, a] : poly::squarefree_factorization(F, c.f))
	{
		for (Elem x0 : roots_in_field(E, poly::embed(h, F, E)))
		{
			// strip (x - x0)^a and evaluate the cofactor
			Poly g = fe;
			for (int i = 0; i < a; ++i)
				g = poly::div(E, g, {E.neg(x0), 1});
			RamificationDatum d;
			d.x0 = x0;
			d.a = a;
			d.d = (uint32_t)gcd_u64(c.n, (uint64_t)a);
			d.c = poly::eval(E, g, x0);
			out.data.push_back(d);
		}
	}
	std::sort(out.data.begin(), out.data.end(), [](auto &u, auto &v) { return u.x0 < v.x0; });
	const int D = poly::degree(c.f);
	if (D % (int)c.n != 0)
	{
		RamificationDatum d;
		d.at_infinity = true;
		d.a = (int)(c.n * ((D + c.n - 1) / c.n)) - D;
		d.d = (uint32_t)gcd_u64(c.n, (uint64_t)D);
		d.c = embed(poly::lead(c.f), F, E);
		out.data.push_back(d);
	}
	return out;
}

int geometric_component_count(const CurveModel &M)
{
	int d = 0;
	for (auto &c : M.components)
		d += c.orbit;
	return d;
}

int fixed_component_count(const CurveModel &M, int m)
{
	int d = 0;
	for (auto &c : M.components)
		if (m % c.orbit == 0)
			d += c.orbit;
	return d;
}

} // namespace wrep
