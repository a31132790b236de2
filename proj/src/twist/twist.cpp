#include "wrep/error.hpp"
#include "wrep/twist.hpp"

namespace wrep {

const char *shape_name(ShapeKind k) { return k == ShapeKind::Tame ? "tame" : "wild"; }

std::optional<Shape> shape_of(const Field &F, const SemilinearAut &psi, int comp)
{
	if (psi.perm[comp] != comp)
		return std::nullopt;
	SemilinearAut g = normalize(F, psi);
	const CompMap &m = g.maps[comp];
	if (poly::degree(m.u_num) != 0 || poly::degree(m.u_den) != 0 || m.A.c != 0)
		return std::nullopt;
	// c = 0 so d = 1 after normalization
	Shape s;
	s.zeta = m.lambda;
	if (m.A.b == 0)
	{
		s.kind = ShapeKind::Tame;
		s.xi = m.A.a;
		return s;
	}
	if (m.A.a == 1)
	{
		s.kind = ShapeKind::Wild;
		s.xi = m.A.b;
		return s;
	}
	return std::nullopt;
}

CanonicalShape canonical_shape(const AutGroup *G, const Field &F, const SemilinearAut &psi, int comp)
{
	CanonicalShape out;
	if (auto s = shape_of(F, psi, comp))
	{
		out.conjugated = psi;
		out.comp = comp;
		out.shape = *s;
		return out;
	}
	if (G)
		for (size_t i = 1; i < G->size(); ++i)
		{
			const SemilinearAut &c = G->element(i);
			SemilinearAut conj = compose(F, c, compose(F, psi, inverse(F, c)));
			int k = c.perm[comp];
			if (auto s = shape_of(F, conj, k))
			{
				out.conjugator = (int)i;
				out.conjugator_word = G->word(i);
				out.conjugated = conj;
				out.comp = k;
				out.shape = *s;
				return out;
			}
		}
	throw Error(ErrorKind::NoCanonicalShape,
	            "no conjugate acts as x -> xi x or x -> x + xi with constant y-scale on component " +
	                std::to_string(comp));
}

namespace {

FieldPtr data_subfield(const Field &F, const Poly &f, const Shape &shape)
{
	const int S = F.degree();
	for (int d = 1; d < S; ++d)
	{
		if (S % d != 0)
			continue;
		auto fixed = [&](Elem a) { return F.frob(a, d) == a; };
		bool ok = fixed(shape.xi) && fixed(shape.zeta);
		for (size_t i = 0; ok && i < f.size(); ++i)
			ok = fixed(f[i]);
		if (ok)
			return canonical_field(F.p(), d);
	}
	return canonical_field(F.p(), S);
}

} // namespace

ComponentTwist twist_component(const Field &F, const Poly &f, uint32_t n, const Shape &shape, uint64_t q_rel,
                               int max_bits)
{
	const uint32_t p = F.p();
	const int E = log_p(p, q_rel);
	if (E < 1)
		throw Error(ErrorKind::InvalidModel, "q_rel must be a positive power of p");
	check_field_bound(p, E, max_bits);
	// shape compatibility: f^(E)(A x) = zeta^n f(x)
	Poly fe = poly::frob(F, f, E);
	Poly lhs = shape.kind == ShapeKind::Tame ? poly::scale_var(F, fe, shape.xi) : poly::shift(F, fe, shape.xi);
	Poly rhs = poly::scale(F, f, F.pow(shape.zeta, (uint64_t)n));
	if (shape.zeta == 0 || (shape.kind == ShapeKind::Tame && shape.xi == 0) || !poly::equal(lhs, rhs))
		throw Error(ErrorKind::ShapeIncompatible, std::string(shape_name(shape.kind)) +
		                                              " shape does not preserve the defining equation");

	// work over the smallest subfield holding the data; keeps the solve field small
	FieldPtr Dp = data_subfield(F, f, shape);
	if (Dp->degree() < F.degree())
	{
		Shape s2 = shape;
		s2.xi = *descend(shape.xi, F, *Dp);
		s2.zeta = *descend(shape.zeta, F, *Dp);
		Poly f2(f.size());
		for (size_t i = 0; i < f.size(); ++i)
			f2[i] = *descend(f[i], F, *Dp);
		return twist_component(*Dp, f2, n, s2, q_rel, max_bits);
	}

	const int base = (int)lcm_u64((uint64_t)F.degree(), (uint64_t)E);
	// B^((Q-1)/g) = zeta^(-n/g) with g = gcd(n, Q-1) yields a model isomorphic to the one from beta^n
	const uint64_t Q1 = q_rel - 1;
	const uint64_t g = gcd_u64(n, Q1);
	const Elem zrhs = F.inv(F.pow(shape.zeta, (uint64_t)(n / g)));
	int LB = power_root_degree(F, zrhs, Q1 / g, base, max_bits);
	int La = 0;
	if (shape.kind == ShapeKind::Tame)
		La = power_root_degree(F, F.inv(shape.xi), Q1, base, max_bits);
	else
		La = artin_schreier_degree(F, shape.xi, E, base, max_bits);
	if (LB == 0 || La == 0)
		throw Error(ErrorKind::FieldBoundExceeded, "twist equations need a field beyond the bit bound");
	const int L = (int)lcm_u64((uint64_t)La, (uint64_t)LB);
	check_field_bound(p, L, max_bits);

	ComponentTwist out;
	out.solve_field = canonical_field(p, L);
	const Field &K = *out.solve_field;
	auto B = power_root_in(K, embed(zrhs, F, K), Q1 / g);
	std::optional<Elem> alpha;
	if (shape.kind == ShapeKind::Tame)
		alpha = power_root_in(K, embed(F.inv(shape.xi), F, K), Q1);
	else
		alpha = artin_schreier_in(K, embed(shape.xi, F, K), E);
	if (!B || !alpha)
		throw Error(ErrorKind::EquationMismatch, "twist equations unsolved in the predicted field");
	out.B = *B;
	out.alpha = *alpha;

	Poly fk = poly::embed(f, F, K);
	Poly f1 = shape.kind == ShapeKind::Tame ? poly::scale_var(K, fk, K.inv(out.alpha))
	                                        : poly::shift(K, fk, K.neg(out.alpha));
	f1 = poly::scale(K, f1, out.B);

	out.field = canonical_field(p, E);
	out.f1.resize(f1.size());
	for (size_t i = 0; i < f1.size(); ++i)
	{
		auto c = descend(f1[i], K, *out.field);
		if (!c)
			throw Error(ErrorKind::EquationMismatch, "twisted coefficient is not fixed by the relative Frobenius");
		out.f1[i] = *c;
	}
	return out;
}

TwistResult twist_model(const CurveModel &M, const AutGroup *G, const SemilinearAut &phi, int max_bits)
{
	const Field &F = *M.field;
	if (phi.frob <= 0)
		throw Error(ErrorKind::InvalidModel, "twisting needs a Frobenius element (positive frob exponent)");
	const int e = (int)phi.frob;
	check_field_bound(F.p(), e, max_bits);
	TwistResult out;
	out.frob = phi.frob;
	out.model.field = canonical_field(F.p(), e);
	const size_t nc = M.components.size();
	std::vector<int> done(nc, 0);
	for (size_t i = 0; i < nc; ++i)
	{
		if (done[i])
			continue;
		OrbitTwist ot;
		for (int k = (int)i; !done[k]; k = phi.perm[k])
		{
			done[k] = 1;
			ot.members.push_back(k);
		}
		ot.rep = (int)i;
		ot.r = (int)ot.members.size();
		check_field_bound(F.p(), e * ot.r, max_bits);
		SemilinearAut psi = power(F, phi, ot.r);
		CanonicalShape cs = canonical_shape(G, F, psi, ot.rep);
		ot.comp_used = cs.comp;
		ot.conjugator_word = cs.conjugator_word;
		ot.shape = cs.shape;
		const Component &src = M.components[cs.comp];
		uint64_t q_rel = checked_pow(F.p(), (unsigned)(e * ot.r));
		ot.data = twist_component(F, src.f, src.n, cs.shape, q_rel, max_bits);
		Component c;
		c.label = M.components[ot.rep].label;
		c.n = src.n;
		c.f = ot.data.f1;
		c.field = ot.data.field;
		c.orbit = ot.r;
		out.model.components.push_back(std::move(c));
		out.orbits.push_back(std::move(ot));
	}
	return out;
}

bool models_equivalent(const Field &F, const Poly &f1, const Poly &f2, uint32_t n)
{
	int d = poly::degree(f1);
	if (d < 0 || d != poly::degree(f2))
		return false;
	Elem u = F.div(poly::lead(f2), poly::lead(f1));
	if (!poly::equal(poly::scale(F, f1, u), f2))
		return false;
	return F.count_power_roots(u, n) > 0;
}

} // namespace wrep
