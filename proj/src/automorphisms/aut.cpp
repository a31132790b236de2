#include "wrep/automorphisms.hpp"
#include "wrep/error.hpp"

#include <sstream>

namespace wrep {

namespace {

// u(A(x)) for u = num/den, as a reduced fraction
std::pair<Poly, Poly> rat_compose(const Field &F, const Poly &num, const Poly &den, const Mobius &A)
{
	int dn = poly::degree(num), dd = poly::degree(den);
	Poly n2 = poly::homogenize(F, num, A, dn);
	Poly d2 = poly::homogenize(F, den, A, dd);
	Poly lin = {A.d, A.c};
	poly::trim(lin);
	if (dd > dn)
		n2 = poly::mul(F, n2, poly::pow(F, lin, dd - dn));
	else if (dn > dd)
		d2 = poly::mul(F, d2, poly::pow(F, lin, dn - dd));
	return {n2, d2};
}

// reduce num/den, make both monic, return the scalar that was split off
Elem rat_reduce(const Field &F, Poly &num, Poly &den)
{
	Poly g = poly::gcd(F, num, den);
	if (poly::degree(g) > 0)
	{
		num = poly::div(F, num, g);
		den = poly::div(F, den, g);
	}
	Elem s = F.div(poly::lead(num), poly::lead(den));
	num = poly::monic(F, num);
	den = poly::monic(F, den);
	return s;
}

CompMap normalize_map(const Field &F, const CompMap &m)
{
	CompMap r;
	r.A = mobius_normalize(F, m.A);
	r.u_num = m.u_num;
	r.u_den = m.u_den;
	poly::trim(r.u_num);
	poly::trim(r.u_den);
	Elem s = rat_reduce(F, r.u_num, r.u_den);
	r.lambda = F.mul(m.lambda, s);
	return r;
}

int64_t mod_pos(int64_t a, int64_t m) { return ((a % m) + m) % m; }

} // namespace

SemilinearAut identity_aut(int ncomp)
{
	SemilinearAut g;
	g.perm.resize(ncomp);
	for (int i = 0; i < ncomp; ++i)
		g.perm[i] = i;
	g.maps.assign(ncomp, CompMap{});
	return g;
}

SemilinearAut compose(const Field &F, const SemilinearAut &g, const SemilinearAut &h)
{
	const size_t n = h.perm.size();
	if (g.perm.size() != n)
		throw Error(ErrorKind::InvalidGenerator, "component count mismatch in composition");
	SemilinearAut r;
	r.frob = g.frob + h.frob;
	r.perm.resize(n);
	r.maps.resize(n);
	const int64_t j = g.frob;
	for (size_t i = 0; i < n; ++i)
	{
		const int k = h.perm[i];
		const CompMap &mh = h.maps[i], &mg = g.maps[k];
		r.perm[i] = g.perm[k];
		CompMap &m = r.maps[i];
		m.A = mobius_compose(F, mobius_frob(F, mh.A, j), mg.A);
		m.lambda = F.mul(F.frob(mh.lambda, j), mg.lambda);
		auto [un, ud] = rat_compose(F, poly::frob(F, mh.u_num, j), poly::frob(F, mh.u_den, j), mg.A);
		m.u_num = poly::mul(F, un, mg.u_num);
		m.u_den = poly::mul(F, ud, mg.u_den);
		m = normalize_map(F, m);
	}
	return r;
}

SemilinearAut inverse(const Field &F, const SemilinearAut &g)
{
	const size_t n = g.perm.size();
	SemilinearAut r;
	r.frob = -g.frob;
	r.perm.resize(n);
	r.maps.resize(n);
	const int64_t j = g.frob;
	std::vector<int> sigma(n);
	for (size_t i = 0; i < n; ++i)
		sigma[g.perm[i]] = (int)i;
	for (size_t k = 0; k < n; ++k)
	{
		const CompMap &mg = g.maps[sigma[k]];
		r.perm[k] = sigma[k];
		Mobius Ainv = mobius_inverse(F, mg.A);
		CompMap m;
		m.A = mobius_frob(F, Ainv, -j);
		// 1 / (lambda u)(A^{-1} z), then untwisted by Frob^{-j}
		auto [un, ud] = rat_compose(F, mg.u_num, mg.u_den, Ainv);
		m.u_num = poly::frob(F, ud, -j);
		m.u_den = poly::frob(F, un, -j);
		m.lambda = F.frob(F.inv(mg.lambda), -j);
		r.maps[k] = normalize_map(F, m);
	}
	return r;
}

SemilinearAut power(const Field &F, const SemilinearAut &g, int64_t k)
{
	SemilinearAut base = k < 0 ? inverse(F, g) : g;
	uint64_t e = k < 0 ? (uint64_t)(-k) : (uint64_t)k;
	SemilinearAut r = identity_aut((int)g.perm.size());
	while (e)
	{
		if (e & 1)
			r = compose(F, r, base);
		e >>= 1;
		if (e)
			base = compose(F, base, base);
	}
	return r;
}

SemilinearAut normalize(const Field &F, const SemilinearAut &g, int64_t period)
{
	SemilinearAut r;
	r.frob = period > 0 ? mod_pos(g.frob, period) : g.frob;
	r.perm = g.perm;
	r.maps.reserve(g.maps.size());
	for (auto &m : g.maps)
		r.maps.push_back(normalize_map(F, m));
	return r;
}

bool same_aut(const Field &F, const SemilinearAut &g, const SemilinearAut &h, int64_t period)
{
	SemilinearAut a = normalize(F, g, period), b = normalize(F, h, period);
	if (a.frob != b.frob || a.perm != b.perm)
		return false;
	for (size_t i = 0; i < a.maps.size(); ++i)
	{
		const CompMap &x = a.maps[i], &y = b.maps[i];
		if (x.A.a != y.A.a || x.A.b != y.A.b || x.A.c != y.A.c || x.A.d != y.A.d || x.lambda != y.lambda ||
		    !poly::equal(x.u_num, y.u_num) || !poly::equal(x.u_den, y.u_den))
			return false;
	}
	return true;
}

bool is_identity(const Field &F, const SemilinearAut &g, int64_t period)
{
	return same_aut(F, g, identity_aut((int)g.perm.size()), period);
}

void validate_automorphism(const CurveModel &M, const SemilinearAut &g)
{
	const Field &F = *M.field;
	const size_t n = M.components.size();
	if (g.perm.size() != n || g.maps.size() != n)
		throw Error(ErrorKind::InvalidGenerator, "automorphism must describe every component");
	std::vector<int> seen(n, 0);
	for (int k : g.perm)
	{
		if (k < 0 || (size_t)k >= n || seen[k]++)
			throw Error(ErrorKind::InvalidGenerator, "perm is not a permutation");
	}
	for (size_t i = 0; i < n; ++i)
	{
		const CompMap &m = g.maps[i];
		const Component &src = M.components[i], &dst = M.components[g.perm[i]];
		for (Elem e : {m.A.a, m.A.b, m.A.c, m.A.d, m.lambda})
			if (!F.contains(e))
				throw Error(ErrorKind::InvalidGenerator, "coefficient outside " + F.describe());
		if (mobius_det(F, m.A) == 0)
			throw Error(ErrorKind::SingularMobius, "component " + std::to_string(i) + ": Mobius matrix is singular");
		if (m.lambda == 0 || poly::is_zero(m.u_num) || poly::is_zero(m.u_den))
			throw Error(ErrorKind::InvalidGenerator, "component " + std::to_string(i) + ": y-scale must be nonzero");
		if (src.n != dst.n)
			throw Error(ErrorKind::EquationMismatch, "component " + std::to_string(i) + ": exponents differ along perm");
		const int D = poly::degree(src.f);
		// f_i^(j)(A x) (cx+d)^D den^n  ==  lambda^n num^n f_perm(i) (cx+d)^D
		Poly lhs = poly::homogenize(F, poly::frob(F, src.f, g.frob), m.A, D);
		lhs = poly::mul(F, lhs, poly::pow(F, m.u_den, src.n));
		Poly lin = {m.A.d, m.A.c};
		poly::trim(lin);
		Poly rhs = poly::scale(F, poly::pow(F, m.u_num, src.n), F.pow(m.lambda, (uint64_t)src.n));
		rhs = poly::mul(F, rhs, poly::mul(F, dst.f, poly::pow(F, lin, D)));
		if (!poly::equal(lhs, rhs))
			throw Error(ErrorKind::EquationMismatch,
			            "component " + std::to_string(i) + ": defining equations are not compatible");
	}
}

std::optional<AffinePoint> apply_to_point(const Field &F, const Field &E, const SemilinearAut &g, const AffinePoint &P)
{
	const CompMap &m = g.maps[P.comp];
	auto em = [&](Elem e) { return embed(e, F, E); };
	Elem xp = E.frob(P.x, g.frob), yp = E.frob(P.y, g.frob);
	// x' = A^{-1}(xp)
	Elem a = em(m.A.a), b = em(m.A.b), c = em(m.A.c), d = em(m.A.d);
	Elem den = E.sub(a, E.mul(c, xp));
	if (den == 0)
		return std::nullopt;
	Elem x1 = E.div(E.sub(E.mul(d, xp), b), den);
	Elem un = poly::eval(E, poly::embed(m.u_num, F, E), x1);
	Elem ud = poly::eval(E, poly::embed(m.u_den, F, E), x1);
	if (un == 0 || ud == 0)
		return std::nullopt;
	Elem s = E.mul(em(m.lambda), E.div(un, ud));
	return AffinePoint{g.perm[P.comp], x1, E.div(yp, s)};
}

std::vector<std::pair<std::string, int64_t>> parse_word(const std::string &word)
{
	std::vector<std::pair<std::string, int64_t>> out;
	std::istringstream is(word);
	std::string tok;
	while (is >> tok)
	{
		auto pos = tok.find('^');
		std::string name = tok.substr(0, pos);
		int64_t k = 1;
		if (pos != std::string::npos)
		{
			std::string ex = tok.substr(pos + 1);
			try
			{
				size_t used = 0;
				k = std::stoll(ex, &used);
				if (used != ex.size())
					throw std::invalid_argument(ex);
			}
			catch (const std::exception &)
			{
				throw Error(ErrorKind::Parse, "bad exponent in word token '" + tok + "'");
			}
		}
		if (name.empty())
			throw Error(ErrorKind::Parse, "empty generator name in word '" + word + "'");
		out.emplace_back(name, k);
	}
	return out;
}

SemilinearAut eval_word(const Field &F, const std::vector<NamedAut> &gens, const std::string &word, int ncomp)
{
	SemilinearAut r = identity_aut(ncomp);
	for (auto &[name, k] : parse_word(word))
	{
		if (name == "1" || name == "id")
			continue;
		const NamedAut *g = nullptr;
		for (auto &x : gens)
			if (x.name == name)
				g = &x;
		if (!g)
			throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'");
		r = compose(F, r, power(F, g->aut, k));
	}
	return r;
}

} // namespace wrep
