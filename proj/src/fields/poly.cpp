#include "wrep/error.hpp"
#include "wrep/poly.hpp"

namespace wrep {
namespace poly {

void trim(Poly &f)
{
	while (!f.empty() && f.back() == 0)
		f.pop_back();
}

int degree(const Poly &f)
{
	int d = (int)f.size() - 1;
	while (d >= 0 && f[d] == 0)
		--d;
	return d;
}

bool is_zero(const Poly &f) { return degree(f) < 0; }

bool equal(const Poly &f, const Poly &g)
{
	int d = degree(f);
	if (d != degree(g))
		return false;
	for (int i = 0; i <= d; ++i)
		if (f[i] != g[i])
			return false;
	return true;
}

Elem lead(const Poly &f)
{
	int d = degree(f);
	return d < 0 ? 0 : f[d];
}

Elem coeff(const Poly &f, int i) { return i >= 0 && i < (int)f.size() ? f[i] : 0; }

Poly constant(Elem c)
{
	Poly r;
	if (c)
		r.push_back(c);
	return r;
}

Poly add(const Field &F, const Poly &f, const Poly &g)
{
	Poly r(std::max(f.size(), g.size()), 0);
	for (size_t i = 0; i < r.size(); ++i)
		r[i] = F.add(coeff(f, (int)i), coeff(g, (int)i));
	trim(r);
	return r;
}

Poly sub(const Field &F, const Poly &f, const Poly &g)
{
	Poly r(std::max(f.size(), g.size()), 0);
	for (size_t i = 0; i < r.size(); ++i)
		r[i] = F.sub(coeff(f, (int)i), coeff(g, (int)i));
	trim(r);
	return r;
}

Poly mul(const Field &F, const Poly &f, const Poly &g)
{
	int df = degree(f), dg = degree(g);
	if (df < 0 || dg < 0)
		return {};
	Poly r(df + dg + 1, 0);
	for (int i = 0; i <= df; ++i)
	{
		if (!f[i])
			continue;
		for (int j = 0; j <= dg; ++j)
			if (g[j])
				r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
	}
	trim(r);
	return r;
}

Poly scale(const Field &F, const Poly &f, Elem c)
{
	Poly r(f.size());
	for (size_t i = 0; i < f.size(); ++i)
		r[i] = F.mul(f[i], c);
	trim(r);
	return r;
}

Poly pow(const Field &F, const Poly &f, unsigned e)
{
	Poly r = {1}, b = f;
	while (e)
	{
		if (e & 1)
			r = mul(F, r, b);
		e >>= 1;
		if (e)
			b = mul(F, b, b);
	}
	return r;
}

void divmod(const Field &F, const Poly &f, const Poly &g, Poly &q, Poly &r)
{
	int dg = degree(g);
	if (dg < 0)
		throw Error(ErrorKind::ZeroElement, "polynomial division by zero");
	r = f;
	trim(r);
	int dr = degree(r);
	q.assign(dr >= dg ? dr - dg + 1 : 0, 0);
	Elem il = F.inv(g[dg]);
	while (dr >= dg)
	{
		Elem c = F.mul(r[dr], il);
		q[dr - dg] = c;
		for (int i = 0; i <= dg; ++i)
			r[dr - dg + i] = F.sub(r[dr - dg + i], F.mul(c, g[i]));
		trim(r);
		dr = degree(r);
	}
	trim(q);
}

Poly div(const Field &F, const Poly &f, const Poly &g)
{
	Poly q, r;
	divmod(F, f, g, q, r);
	return q;
}

Poly mod(const Field &F, const Poly &f, const Poly &g)
{
	Poly q, r;
	divmod(F, f, g, q, r);
	return r;
}

Poly monic(const Field &F, const Poly &f)
{
	Elem l = lead(f);
	if (l == 0)
		return {};
	return scale(F, f, F.inv(l));
}

Poly gcd(const Field &F, Poly f, Poly g)
{
	trim(f);
	trim(g);
	while (!is_zero(g))
	{
		Poly r = mod(F, f, g);
		f = std::move(g);
		g = std::move(r);
	}
	return monic(F, f);
}

Poly derivative(const Field &F, const Poly &f)
{
	if (f.size() <= 1)
		return {};
	Poly r(f.size() - 1);
	for (size_t i = 1; i < f.size(); ++i)
		r[i - 1] = F.mul(F.from_int((int64_t)(i % F.p())), f[i]);
	trim(r);
	return r;
}

Elem eval(const Field &F, const Poly &f, Elem x)
{
	Elem r = 0;
	for (int i = (int)f.size() - 1; i >= 0; --i)
		r = F.add(F.mul(r, x), f[i]);
	return r;
}

Poly powmod(const Field &F, const Poly &base, uint64_t e, const Poly &m)
{
	Poly r = mod(F, {1}, m), b = mod(F, base, m);
	while (e)
	{
		if (e & 1)
			r = mod(F, mul(F, r, b), m);
		e >>= 1;
		if (e)
			b = mod(F, mul(F, b, b), m);
	}
	return r;
}

Poly frob(const Field &F, const Poly &f, int64_t j)
{
	Poly r(f.size());
	for (size_t i = 0; i < f.size(); ++i)
		r[i] = F.frob(f[i], j);
	trim(r);
	return r;
}

Poly shift(const Field &F, const Poly &f, Elem c)
{
	// Horner in the ring: r = r*(x + c) + f_i
	Poly r;
	Poly lin = {c, 1};
	for (int i = degree(f); i >= 0; --i)
		r = add(F, mul(F, r, lin), constant(f[i]));
	return r;
}

Poly scale_var(const Field &F, const Poly &f, Elem s)
{
	Poly r(f.size());
	Elem sp = 1;
	for (size_t i = 0; i < f.size(); ++i)
	{
		r[i] = F.mul(f[i], sp);
		sp = F.mul(sp, s);
	}
	trim(r);
	return r;
}

Poly homogenize(const Field &F, const Poly &f, const Mobius &A, int D)
{
	Poly num = {A.b, A.a}, den = {A.d, A.c};
	trim(num);
	trim(den);
	int df = degree(f);
	Poly r;
	// sum f_i num^i den^(D-i)
	std::vector<Poly> np(df + 1), dp(D + 1);
	if (df >= 0)
		np[0] = {1};
	for (int i = 1; i <= df; ++i)
		np[i] = mul(F, np[i - 1], num);
	dp[0] = {1};
	for (int i = 1; i <= D; ++i)
		dp[i] = mul(F, dp[i - 1], den);
	for (int i = 0; i <= df; ++i)
		if (f[i])
			r = add(F, r, scale(F, mul(F, np[i], dp[D - i]), f[i]));
	return r;
}

Poly embed(const Poly &f, const Field &src, const Field &dst)
{
	Poly r(f.size());
	for (size_t i = 0; i < f.size(); ++i)
		r[i] = wrep::embed(f[i], src, dst);
	return r;
}

namespace {

// g(x)^(1/p) for g with vanishing derivative
Poly pth_root(const Field &F, const Poly &g)
{
	const uint32_t p = F.p();
	Poly r;
	int d = degree(g);
	for (int i = 0; i <= d; i += (int)p)
		r.push_back(F.frob(g[i], -1));
	trim(r);
	return r;
}

void sff_rec(const Field &F, const Poly &f, int mult, std::vector<std::pair<Poly, int>> &out)
{
	Poly c = gcd(F, f, derivative(F, f));
	Poly w = div(F, monic(F, f), c);
	int i = 1;
	while (degree(w) > 0)
	{
		Poly y = gcd(F, w, c);
		Poly z = div(F, w, y);
		if (degree(z) > 0)
			out.emplace_back(monic(F, z), i * mult);
		++i;
		w = y;
		c = div(F, c, y);
	}
	if (degree(c) > 0)
		sff_rec(F, pth_root(F, monic(F, c)), mult * (int)F.p(), out);
}

} // namespace

std::vector<std::pair<Poly, int>> squarefree_factorization(const Field &F, const Poly &f)
{
	std::vector<std::pair<Poly, int>> out;
	if (degree(f) <= 0)
		return out;
	sff_rec(F, monic(F, f), 1, out);
	// merge equal multiplicities, order by multiplicity
	std::sort(out.begin(), out.end(), [](auto &a, auto &b) { return a.second < b.second; });
	std::vector<std::pair<Poly, int>> merged;
	for (auto &[g, m] : out)
	{
		if (!merged.empty() && merged.back().second == m)
			merged.back().first = mul(F, merged.back().first, g);
		else
			merged.emplace_back(g, m);
	}
	return merged;
}

bool is_squarefree(const Field &F, const Poly &f)
{
	if (degree(f) <= 0)
		return true;
	return degree(gcd(F, f, derivative(F, f))) == 0;
}

} // namespace poly

Mobius mobius_compose(const Field &F, const Mobius &o, const Mobius &i)
{
	Mobius r;
	r.a = F.add(F.mul(o.a, i.a), F.mul(o.b, i.c));
	r.b = F.add(F.mul(o.a, i.b), F.mul(o.b, i.d));
	r.c = F.add(F.mul(o.c, i.a), F.mul(o.d, i.c));
	r.d = F.add(F.mul(o.c, i.b), F.mul(o.d, i.d));
	return r;
}

Mobius mobius_inverse(const Field &F, const Mobius &A)
{
	// adjugate; scalar factors are irrelevant projectively
	return Mobius{A.d, F.neg(A.b), F.neg(A.c), A.a};
}

Mobius mobius_frob(const Field &F, const Mobius &A, int64_t j)
{
	return Mobius{F.frob(A.a, j), F.frob(A.b, j), F.frob(A.c, j), F.frob(A.d, j)};
}

Elem mobius_det(const Field &F, const Mobius &A) { return F.sub(F.mul(A.a, A.d), F.mul(A.b, A.c)); }

Mobius mobius_normalize(const Field &F, const Mobius &A)
{
	Elem s = A.c ? F.inv(A.c) : F.inv(A.d);
	return Mobius{F.mul(A.a, s), F.mul(A.b, s), F.mul(A.c, s), F.mul(A.d, s)};
}

} // namespace wrep
