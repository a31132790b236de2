#include "linalg.hpp"
#include "wrep/error.hpp"
#include "wrep/fields.hpp"

namespace wrep {

int power_root_degree(const Field &src, Elem c, uint64_t e, int base, int max_bits)
{
	int L0 = (int)lcm_u64((uint64_t)base, (uint64_t)src.degree());
	if (c == 0 || e == 0)
		return within_field_bound(src.p(), L0, max_bits) ? L0 : 0;
	const uint64_t ord = src.element_order(c);
	for (int L = L0; within_field_bound(src.p(), L, max_bits); L += L0)
	{
		uint64_t N = checked_pow(src.p(), L) - 1;
		uint64_t g = gcd_u64(e, N);
		if ((N / g) % ord == 0)
			return L;
	}
	return 0;
}

std::optional<Elem> power_root_in(const Field &F, Elem c, uint64_t e)
{
	if (c == 0)
		return Elem(0);
	const uint64_t N = F.order();
	if (e == 0)
		return c == 1 ? std::optional<Elem>(1) : std::nullopt;
	uint64_t g = gcd_u64(e, N);
	uint64_t l = F.dlog(c);
	if (l % g != 0)
		return std::nullopt;
	uint64_t Ng = N / g;
	uint64_t x = Ng == 1 ? 0 : mulmod_u64(l / g % Ng, invmod_u64((e / g) % Ng, Ng), Ng);
	Elem w = F.exp(x);
	if (F.pow(w, e) != c)
		throw Error(ErrorKind::EquationMismatch, "power root verification failed");
	return w;
}

Elem relative_trace(const Field &F, Elem a, int E)
{
	if (E <= 0 || F.degree() % E != 0)
		throw Error(ErrorKind::NoEmbedding, "relative trace needs E | degree");
	Elem acc = 0, t = a;
	for (int i = 0; i < F.degree() / E; ++i)
	{
		acc = F.add(acc, t);
		t = F.frob(t, E);
	}
	return acc;
}

int artin_schreier_degree(const Field &src, Elem xi, int E, int base, int max_bits)
{
	uint64_t L0 = lcm_u64(lcm_u64((uint64_t)base, (uint64_t)src.degree()), (uint64_t)E);
	if (!within_field_bound(src.p(), (int)L0, max_bits))
		return 0;
	FieldPtr F = canonical_field(src.p(), (int)L0);
	Elem x = embed(xi, src, *F);
	if (relative_trace(*F, x, E) == 0)
		return (int)L0;
	// the trace from the degree-p extension kills everything
	int L1 = (int)(L0 * src.p());
	return within_field_bound(src.p(), L1, max_bits) ? L1 : 0;
}

std::optional<Elem> artin_schreier_in(const Field &F, Elem xi, int E)
{
	if (E <= 0 || F.degree() % E != 0)
		throw Error(ErrorKind::NoEmbedding, "Artin-Schreier equation needs E | degree");
	// columns: images of the F_p-basis under z -> z^(p^E) - z
	std::vector<std::vector<uint32_t>> cols;
	Elem b = 1;
	for (int i = 0; i < F.degree(); ++i)
	{
		cols.push_back(F.coeffs(F.sub(F.frob(b, E), b)));
		b = (Elem)(b * F.p());
	}
	auto x = detail::fp_solve(F.p(), cols, F.coeffs(F.neg(xi)));
	if (!x)
		return std::nullopt;
	Elem z = F.from_coeffs(*x);
	if (F.add(F.sub(F.frob(z, E), z), xi) != 0)
		throw Error(ErrorKind::EquationMismatch, "Artin-Schreier verification failed");
	return z;
}

FieldValue solve_tame(const FieldPtr &ambient, Elem xi, uint64_t q_rel, int max_bits)
{
	if (xi == 0)
		throw Error(ErrorKind::ZeroElement, "tame twist parameter must be nonzero");
	if (log_p(ambient->p(), q_rel) < 1)
		throw Error(ErrorKind::InvalidModel, "q_rel must be a positive power of p");
	Elem c = ambient->inv(xi);
	int L = power_root_degree(*ambient, c, q_rel - 1, ambient->degree(), max_bits);
	if (L == 0)
		throw Error(ErrorKind::FieldBoundExceeded, "tame equation needs a field beyond the bit bound");
	FieldPtr F = L == ambient->degree() ? ambient : canonical_field(ambient->p(), L);
	Elem ce = embed(c, *ambient, *F);
	auto a = power_root_in(*F, ce, q_rel - 1);
	if (!a)
		throw Error(ErrorKind::EquationMismatch, "tame root not found in the predicted field");
	return {F, *a};
}

FieldValue solve_wild(const FieldPtr &ambient, Elem xi, uint64_t q_rel, int max_bits)
{
	int E = log_p(ambient->p(), q_rel);
	if (E < 1)
		throw Error(ErrorKind::InvalidModel, "q_rel must be a positive power of p");
	int L = artin_schreier_degree(*ambient, xi, E, ambient->degree(), max_bits);
	if (L == 0)
		throw Error(ErrorKind::FieldBoundExceeded, "wild equation needs a field beyond the bit bound");
	FieldPtr F = L == ambient->degree() ? ambient : canonical_field(ambient->p(), L);
	Elem xe = embed(xi, *ambient, *F);
	auto a = artin_schreier_in(*F, xe, E);
	if (!a)
		throw Error(ErrorKind::EquationMismatch, "wild root not found in the predicted field");
	return {F, *a};
}

} // namespace wrep
