#pragma once

#include "wrep/fields.hpp"

#include <utility>
#include <vector>

namespace wrep {

// dense polynomial over a Field, low-to-high, no trailing zeros
using Poly = std::vector<Elem>;

struct Mobius
{
	// x -> (a x + b) / (c x + d)
	Elem a = 1, b = 0, c = 0, d = 1;
};

namespace poly {

void trim(Poly &f);
int degree(const Poly &f); // -1 for the zero polynomial
bool is_zero(const Poly &f);
bool equal(const Poly &f, const Poly &g);
Elem lead(const Poly &f);
Elem coeff(const Poly &f, int i);

Poly constant(Elem c);
Poly add(const Field &F, const Poly &f, const Poly &g);
Poly sub(const Field &F, const Poly &f, const Poly &g);
Poly mul(const Field &F, const Poly &f, const Poly &g);
Poly scale(const Field &F, const Poly &f, Elem c);
Poly pow(const Field &F, const Poly &f, unsigned e);
void divmod(const Field &F, const Poly &f, const Poly &g, Poly &q, Poly &r);
Poly div(const Field &F, const Poly &f, const Poly &g);
Poly mod(const Field &F, const Poly &f, const Poly &g);
Poly monic(const Field &F, const Poly &f);
Poly gcd(const Field &F, Poly f, Poly g);
Poly derivative(const Field &F, const Poly &f);
Elem eval(const Field &F, const Poly &f, Elem x);
Poly powmod(const Field &F, const Poly &base, uint64_t e, const Poly &m);

// coefficientwise a -> a^(p^j)
Poly frob(const Field &F, const Poly &f, int64_t j);
// f(x + c)
Poly shift(const Field &F, const Poly &f, Elem c);
// f(s x)
Poly scale_var(const Field &F, const Poly &f, Elem s);
// (c x + d)^D f((a x + b)/(c x + d)) for D >= deg f
Poly homogenize(const Field &F, const Poly &f, const Mobius &A, int D);

// map every coefficient through embed()
Poly embed(const Poly &f, const Field &src, const Field &dst);

// f = lc * prod g_i^{m_i}, g_i monic squarefree pairwise coprime
std::vector<std::pair<Poly, int>> squarefree_factorization(const Field &F, const Poly &f);

bool is_squarefree(const Field &F, const Poly &f);

} // namespace poly

// Mobius helpers
Mobius mobius_compose(const Field &F, const Mobius &outer, const Mobius &inner); // outer(inner(x))
Mobius mobius_inverse(const Field &F, const Mobius &A);
Mobius mobius_frob(const Field &F, const Mobius &A, int64_t j);
Elem mobius_det(const Field &F, const Mobius &A);
// scale so that c = 1, or d = 1 when c = 0
Mobius mobius_normalize(const Field &F, const Mobius &A);

} // namespace wrep
