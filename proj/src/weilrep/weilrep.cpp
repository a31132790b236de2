#include "wrep/error.hpp"
#include "wrep/weilrep.hpp"

#include <atomic>
#include <cmath>
#include <deque>
#include <exception>
#include <set>
#include <thread>

namespace wrep {

TraceTable trace_table(const CurveModel &M, const AutGroup &G, const SemilinearAut &phi0, const LocalPolynomial &P0,
                       const TraceOptions &opt)
{
	const Field &F = *M.field;
	auto cls = eigenvalue_classes(P0);
	if (cls.size() != 1)
		throw Error(ErrorKind::MultiClass, std::to_string(cls.size()) +
		                                       " eigenvalue classes; split into one unramified character per class first");
	TraceTable T;
	T.f = cls[0].N;
	T.c = cls[0].c;
	T.ring = GammaRing((int)T.f, T.c);
	T.two_g = 2 * P0.g;
	T.group_order = G.size();
	const int s0 = opt.s0;
	if (phi0.frob != s0)
		throw Error(ErrorKind::InvalidGenerator, "phi0 must have frob equal to the base degree");
	if (G.period() % ((int64_t)T.f * s0) != 0)
		throw Error(ErrorKind::InvalidModel, "Frobenius period " + std::to_string(G.period()) +
		                                         " is not a multiple of f * s0 = " + std::to_string(T.f * s0));
	const uint32_t p = F.p();
	const Int q = ipow(Int(p), (unsigned)s0);

	// trace of rho_0 on group element w, counted on the twist by phi0^j' g
	auto count = [&](const SemilinearAut &w, TraceEntry &e) {
		if (w.frob % s0 != 0)
			throw Error(ErrorKind::InvalidGenerator, "element has frob not divisible by s0");
		e.j = w.frob / s0;
		e.jprime = (int)(((e.j % (int64_t)T.f) + (int64_t)T.f) % (int64_t)T.f);
		if (e.jprime == 0)
			e.jprime = (int)T.f;
		// g = phi0^-j w has frob 0
		SemilinearAut g = compose(F, power(F, phi0, -e.j), w);
		SemilinearAut phi = compose(F, power(F, phi0, e.jprime), g);
		TwistResult tw = twist_model(M, &G, phi, opt.max_field_bits);
		e.points = count_points(tw.model, 1, 1, opt.max_field_bits);
		e.d = fixed_component_count(tw.model, 1);
		Int qj = ipow(q, (unsigned)e.jprime);
		e.t = Int(e.d) * (qj + 1) - Int(e.points);
		return T.ring.mul(T.ring.from_rat(Rat(e.t) / Rat(T.c)), T.ring.gamma_power((int64_t)T.f - e.jprime));
	};

	auto &classes = G.classes();
	T.entries.resize(classes.size());
	std::vector<std::exception_ptr> errors(classes.size());
	auto work = [&](size_t i) {
		try
		{
			auto &c = classes[i];
			TraceEntry &e = T.entries[i];
			e.class_index = (int)i;
			e.element = c.rep;
			e.word = G.word(c.rep);
			e.class_size = c.members.size();
			const SemilinearAut &w = G.element(c.rep);
			try
			{
				e.trace = count(w, e);
			}
			catch (const Error &err)
			{
				if (err.kind() != ErrorKind::FieldBoundExceeded)
					throw;
				// rho_0 has finite image, so tr(w) is the conjugate of tr(w^-1); the
				// inverse may have a smaller j' and hence smaller fields
				e.trace = T.ring.conjugate(count(G.element(G.inverse_index(c.rep)), e), q);
				e.via_inverse = true;
			}
			const std::string word = e.via_inverse ? "(" + (e.word.empty() ? std::string("1") : e.word) + ")^-1"
			                                       : (e.word.empty() ? std::string("1") : e.word);
			e.counted = "phi0^" + std::to_string(e.jprime) + " * (phi0^-" + std::to_string(e.j) + " " + word + ")";
			if (!T.ring.is_algebraic_integer(e.trace))
				throw Error(ErrorKind::NonIntegralCoefficient,
				            "trace of '" + e.word + "' is not an algebraic integer: " + T.ring.to_string(e.trace));
			e.value = T.ring.evaluate(e.trace, 0);
		}
		catch (...)
		{
			errors[i] = std::current_exception();
		}
	};
	G.classes(); // built before the workers start
	const int jobs = std::max(1, std::min<int>(opt.jobs, (int)classes.size()));
	if (jobs == 1)
		for (size_t i = 0; i < classes.size(); ++i)
			work(i);
	else
	{
		std::atomic<size_t> next{0};
		std::vector<std::thread> pool;
		for (int t = 0; t < jobs; ++t)
			pool.emplace_back([&] {
				for (size_t i; (i = next.fetch_add(1)) < classes.size();)
					work(i);
			});
		for (auto &th : pool)
			th.join();
	}
	// first failing class in class order, independent of scheduling
	for (auto &ep : errors)
		if (ep)
			std::rethrow_exception(ep);
	return T;
}

const GammaRing::Elem &element_trace(const TraceTable &T, const AutGroup &G, int element)
{
	return T.entries.at(G.class_of(element)).trace;
}

cplx CharacterTable::value(size_t chr, size_t cls) const
{
	const long double pi = std::acos(-1.0L);
	const auto &v = characters[chr].values[cls];
	cplx s = 0;
	for (size_t k = 0; k < v.size(); ++k)
		if (v[k] != 0)
			s += v[k].convert_to<long double>() * std::polar(1.0L, 2 * pi * (long double)k / (long double)exponent);
	return s;
}

void validate_character_table(const CharacterTable &CT)
{
	auto bad = [](const std::string &s) { throw Error(ErrorKind::InvalidCharacterTable, s); };
	if (CT.order == 0 || CT.exponent == 0 || CT.classes.empty() || CT.characters.empty())
		bad("empty table");
	uint64_t sz = 0;
	for (auto &c : CT.classes)
		sz += c.size;
	if (sz != CT.order)
		bad("class sizes sum to " + std::to_string(sz) + ", not the group order");
	if (CT.characters.size() != CT.classes.size())
		bad("number of characters differs from the number of classes");
	uint64_t d2 = 0;
	for (auto &ch : CT.characters)
	{
		if (ch.values.size() != CT.classes.size())
			bad("character " + ch.name + " has the wrong number of values");
		for (auto &v : ch.values)
			if (v.size() > CT.exponent)
				bad("character " + ch.name + " has a value longer than the exponent");
		d2 += (uint64_t)ch.dim * ch.dim;
	}
	if (d2 != CT.order)
		bad("sum of squared dimensions is " + std::to_string(d2));
	for (size_t k = 0; k < CT.classes.size(); ++k)
		if (std::abs(CT.value(0, k) - cplx(1)) > 1e-9L)
			bad("first character is not trivial");
	// row orthogonality
	for (size_t a = 0; a < CT.characters.size(); ++a)
	{
		if (std::abs(CT.value(a, 0) - cplx(CT.characters[a].dim)) > 1e-9L && CT.classes[0].size == 1)
			bad("character " + CT.characters[a].name + " does not have its dimension at the identity");
		for (size_t b = a; b < CT.characters.size(); ++b)
		{
			cplx s = 0;
			for (size_t k = 0; k < CT.classes.size(); ++k)
				s += (long double)CT.classes[k].size * CT.value(a, k) * std::conj(CT.value(b, k));
			s /= (long double)CT.order;
			if (std::abs(s - cplx(a == b ? 1 : 0)) > 1e-9L)
				bad("characters " + CT.characters[a].name + " and " + CT.characters[b].name + " are not orthonormal");
		}
	}
}

std::vector<int> align_classes(const AutGroup &G, const CharacterTable &CT)
{
	const auto &gc = G.classes();
	if (CT.order != G.size() || CT.classes.size() != gc.size())
		throw Error(ErrorKind::ClassMismatch, "table has order " + std::to_string(CT.order) + " and " +
		                                          std::to_string(CT.classes.size()) + " classes, group has " +
		                                          std::to_string(G.size()) + " and " + std::to_string(gc.size()));
	std::vector<int> map(CT.classes.size());
	std::vector<int> used(gc.size(), 0);
	for (size_t i = 0; i < CT.classes.size(); ++i)
	{
		int e;
		try
		{
			e = G.index_of_word(CT.classes[i].rep);
		}
		catch (const Error &err)
		{
			throw Error(ErrorKind::ClassMismatch, "class rep '" + CT.classes[i].rep + "': " + err.what());
		}
		int k = G.class_of(e);
		if (used[k]++ || gc[k].members.size() != CT.classes[i].size)
			throw Error(ErrorKind::ClassMismatch, "class rep '" + CT.classes[i].rep + "' does not match a group class");
		map[i] = k;
	}
	return map;
}

std::optional<Matching> decompose_values(const CharacterTable &CT, const std::vector<cplx> &values, double tol)
{
	Matching m;
	const size_t nc = CT.classes.size();
	for (size_t a = 0; a < CT.characters.size(); ++a)
	{
		cplx s = 0;
		for (size_t k = 0; k < nc; ++k)
			s += (long double)CT.classes[k].size * values[k] * std::conj(CT.value(a, k));
		s /= (long double)CT.order;
		long double r = std::round(s.real());
		double res = (double)std::abs(s - cplx(r));
		m.residual = std::max(m.residual, res);
		if (res >= tol || r < 0)
			return std::nullopt;
		m.multiplicities.push_back((long long)r);
	}
	// reconstruct the traces from the multiplicities
	for (size_t k = 0; k < nc; ++k)
	{
		cplx s = 0;
		for (size_t a = 0; a < CT.characters.size(); ++a)
			s += (long double)m.multiplicities[a] * CT.value(a, k);
		if (std::abs(s - values[k]) > 1e-9L)
			return std::nullopt;
	}
	return m;
}

Decomposition decompose(const TraceTable &T, const CharacterTable &CT, const AutGroup &G, double tol)
{
	validate_character_table(CT);
	std::vector<int> map = align_classes(G, CT);
	Decomposition D;
	for (int k = 0; k < (int)T.f; ++k)
	{
		std::vector<cplx> vals(map.size());
		for (size_t i = 0; i < map.size(); ++i)
			vals[i] = T.ring.evaluate(T.entries[map[i]].trace, k);
		auto m = decompose_values(CT, vals, tol);
		if (!m)
			continue;
		bool merged = false;
		for (auto &x : D.matchings)
			if (x.multiplicities == m->multiplicities)
			{
				x.gammas.push_back(k);
				x.residual = std::max(x.residual, m->residual);
				merged = true;
			}
		if (!merged)
		{
			m->gammas = {k};
			D.matchings.push_back(*m);
		}
	}
	if (D.matchings.empty())
		throw Error(ErrorKind::NonIntegralMultiplicity, "no embedding of gamma gives integral multiplicities");
	D.ambiguous = D.matchings.size() > 1;
	return D;
}

std::vector<int> subgroup_elements(const AutGroup &G, const std::vector<std::string> &words)
{
	std::vector<int> gens;
	for (auto &w : words)
		gens.push_back(G.index_of_word(w));
	std::set<int> seen{0};
	std::deque<int> q{0};
	while (!q.empty())
	{
		int x = q.front();
		q.pop_front();
		for (int g : gens)
		{
			int y = G.compose_index(x, g);
			if (seen.insert(y).second)
				q.push_back(y);
		}
	}
	return std::vector<int>(seen.begin(), seen.end());
}

Int fixed_space_dim(const TraceTable &T, const AutGroup &G, const std::vector<std::string> &words)
{
	std::vector<int> H = subgroup_elements(G, words);
	Rat s = 0;
	for (int h : H)
	{
		if (G.element(h).frob != 0)
			throw Error(ErrorKind::InvalidGenerator, "subgroup element '" + G.word(h) + "' is not in inertia");
		auto r = T.ring.rational(element_trace(T, G, h));
		if (!r)
			throw Error(ErrorKind::NonIntegralDimension, "inertia trace is not rational");
		s += *r;
	}
	s /= Rat((long long)H.size());
	if (!is_integer(s) || s < 0)
		throw Error(ErrorKind::NonIntegralDimension, "dimension of the fixed space is " + to_string(s));
	return numerator(s);
}

} // namespace wrep
