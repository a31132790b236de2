#include "wrep/problem.hpp"

#include "wrep/error.hpp"

#include <filesystem>
#include <fstream>
#include <set>

namespace wrep {

namespace {

[[noreturn]] void bad(const std::string &where, const std::string &msg)
{
	throw Error(ErrorKind::Parse, where + ": " + msg);
}

const ojson &need(const ojson &j, const char *key, const std::string &where)
{
	if (!j.is_object() || !j.contains(key))
		bad(where, std::string("missing '") + key + "'");
	return j.at(key);
}

int64_t get_int(const ojson &j, const std::string &where)
{
	if (j.is_number_integer())
		return j.get<int64_t>();
	if (j.is_string())
	{
		try
		{
			size_t pos = 0;
			int64_t v = std::stoll(j.get<std::string>(), &pos);
			if (pos == j.get<std::string>().size())
				return v;
		}
		catch (const std::exception &)
		{
		}
	}
	bad(where, "expected an integer");
}

Elem parse_elem(const Field &F, const ojson &j, const std::string &where)
{
	if (!j.is_array())
		bad(where, "field element must be a coefficient list");
	if ((int)j.size() != F.degree())
		bad(where, "element has " + std::to_string(j.size()) + " coefficients, field degree is " +
		               std::to_string(F.degree()));
	std::vector<uint32_t> c;
	for (size_t i = 0; i < j.size(); ++i)
	{
		int64_t v = get_int(j[i], where);
		if (v < 0 || v >= (int64_t)F.p())
			bad(where, "coefficient " + std::to_string(v) + " outside [0, p)");
		c.push_back((uint32_t)v);
	}
	return F.from_coeffs(c);
}

Poly parse_poly(const Field &F, const ojson &j, const std::string &where)
{
	if (!j.is_array())
		bad(where, "polynomial must be a list of elements");
	Poly f;
	for (size_t i = 0; i < j.size(); ++i)
		f.push_back(parse_elem(F, j[i], where + "[" + std::to_string(i) + "]"));
	poly::trim(f);
	return f;
}

FieldPtr parse_field(const ojson &j, uint32_t p, const std::string &where)
{
	int s = (int)get_int(need(j, "degree", where), where + ".degree");
	if (s < 1 || s > 31)
		bad(where, "degree out of range");
	if (!j.contains("modulus"))
		return canonical_field(p, s);
	std::vector<uint32_t> mod;
	for (auto &x : j.at("modulus"))
	{
		int64_t v = get_int(x, where + ".modulus");
		if (v < 0 || v >= (int64_t)p)
			bad(where, "modulus coefficient outside [0, p)");
		mod.push_back((uint32_t)v);
	}
	if ((int)mod.size() == s)
		mod.push_back(1);
	if ((int)mod.size() != s + 1 || mod.back() != 1)
		bad(where, "modulus must be monic of degree " + std::to_string(s));
	FieldPtr canon = canonical_field(p, s);
	if (mod == canon->modulus())
		return canon;
	return make_field(p, s, mod);
}

NamedAut parse_aut(const Field &F, const ojson &j, int ncomp, const std::string &where)
{
	NamedAut g;
	g.name = need(j, "name", where).get<std::string>();
	if (g.name.empty() || g.name.find_first_of(" ^") != std::string::npos || g.name == "1" || g.name == "id")
		bad(where, "invalid generator name '" + g.name + "'");
	std::string w = where + "(" + g.name + ")";
	g.aut = identity_aut(ncomp);
	g.aut.frob = j.contains("frob") ? get_int(j["frob"], w + ".frob") : 0;
	if (j.contains("perm"))
	{
		auto &pj = j["perm"];
		if (!pj.is_array() || (int)pj.size() != ncomp)
			bad(w, "perm must list one target per component");
		std::set<int> seen;
		for (int i = 0; i < ncomp; ++i)
		{
			int64_t v = get_int(pj[i], w + ".perm");
			if (v < 0 || v >= ncomp || !seen.insert((int)v).second)
				bad(w, "perm is not a permutation");
			g.aut.perm[i] = (int)v;
		}
	}
	auto &mj = need(j, "maps", w);
	if (!mj.is_array() || (int)mj.size() != ncomp)
		bad(w, "maps must have one entry per component");
	for (int i = 0; i < ncomp; ++i)
	{
		std::string wi = w + ".maps[" + std::to_string(i) + "]";
		auto &m = mj[i];
		CompMap cm;
		if (m.contains("mobius"))
		{
			auto &a = m["mobius"];
			if (!a.is_array() || a.size() != 4)
				bad(wi, "mobius must be [a, b, c, d]");
			cm.A = Mobius{parse_elem(F, a[0], wi), parse_elem(F, a[1], wi), parse_elem(F, a[2], wi),
			              parse_elem(F, a[3], wi)};
		}
		if (m.contains("y_scale"))
			cm.lambda = parse_elem(F, m["y_scale"], wi + ".y_scale");
		if (m.contains("y_unit_num"))
			cm.u_num = parse_poly(F, m["y_unit_num"], wi + ".y_unit_num");
		if (m.contains("y_unit_den"))
			cm.u_den = parse_poly(F, m["y_unit_den"], wi + ".y_unit_den");
		g.aut.maps[i] = cm;
	}
	return g;
}

ojson aut_to_json(const Field &F, const NamedAut &g)
{
	ojson j;
	j["name"] = g.name;
	j["frob"] = g.aut.frob;
	bool ident = true;
	for (size_t i = 0; i < g.aut.perm.size(); ++i)
		ident = ident && g.aut.perm[i] == (int)i;
	if (!ident)
		j["perm"] = g.aut.perm;
	j["maps"] = ojson::array();
	for (auto &m : g.aut.maps)
	{
		ojson mj;
		mj["mobius"] = ojson::array({elem_to_json(F, m.A.a), elem_to_json(F, m.A.b), elem_to_json(F, m.A.c),
		                             elem_to_json(F, m.A.d)});
		mj["y_scale"] = elem_to_json(F, m.lambda);
		if (!poly::equal(m.u_num, {1}))
			mj["y_unit_num"] = poly_to_json(F, m.u_num);
		if (!poly::equal(m.u_den, {1}))
			mj["y_unit_den"] = poly_to_json(F, m.u_den);
		j["maps"].push_back(mj);
	}
	return j;
}

ojson field_to_json(const Field &F)
{
	ojson j;
	j["degree"] = F.degree();
	j["modulus"] = F.modulus();
	return j;
}

bool same_named(const Field &F, const NamedAut &a, const NamedAut &b)
{
	if (a.name != b.name || a.aut.frob != b.aut.frob || a.aut.perm != b.aut.perm)
		return false;
	for (size_t i = 0; i < a.aut.maps.size(); ++i)
	{
		auto &x = a.aut.maps[i], &y = b.aut.maps[i];
		if (x.A.a != y.A.a || x.A.b != y.A.b || x.A.c != y.A.c || x.A.d != y.A.d || x.lambda != y.lambda ||
		    !poly::equal(x.u_num, y.u_num) || !poly::equal(x.u_den, y.u_den))
			return false;
	}
	(void)F;
	return true;
}

} // namespace

ojson elem_to_json(const Field &F, Elem e) { return F.coeffs(e); }

ojson poly_to_json(const Field &F, const Poly &f)
{
	ojson a = ojson::array();
	for (Elem c : f)
		a.push_back(elem_to_json(F, c));
	return a;
}

ojson int_to_json(const Int &x)
{
	static const Int lim = Int(1) << 53;
	if (x < lim && x > -lim)
		return x.convert_to<int64_t>();
	return to_string(x);
}

ojson ints_to_json(const std::vector<Int> &v)
{
	ojson a = ojson::array();
	for (auto &x : v)
		a.push_back(int_to_json(x));
	return a;
}

ProblemFile parse_problem(const ojson &j, const std::string &base_dir)
{
	ProblemFile P;
	P.base_dir = base_dir;
	try
	{
		if (!j.is_object())
			bad("problem", "top level must be an object");
		P.name = j.contains("name") ? j["name"].get<std::string>() : "";
		auto &fj = need(j, "field", "problem");
		int64_t p = get_int(need(fj, "p", "field"), "field.p");
		if (p < 2 || p > 65521 || !is_prime_u64((uint64_t)p))
			bad("field.p", "p must be a prime below 2^16");
		P.model.field = parse_field(fj, (uint32_t)p, "field");
		const Field &F = *P.model.field;
		P.base_degree = j.contains("base_degree") ? (int)get_int(j["base_degree"], "base_degree") : 1;
		if (P.base_degree < 1 || F.degree() % P.base_degree != 0)
			bad("base_degree", "base degree " + std::to_string(P.base_degree) +
			                       " does not divide the field degree " + std::to_string(F.degree()));

		auto &cj = need(j, "components", "problem");
		if (!cj.is_array() || cj.empty())
			bad("components", "need a non-empty list");
		for (size_t i = 0; i < cj.size(); ++i)
		{
			std::string w = "components[" + std::to_string(i) + "]";
			Component c;
			c.label = cj[i].contains("label") ? cj[i]["label"].get<std::string>() : "Y" + std::to_string(i + 1);
			int64_t n = get_int(need(cj[i], "n", w), w + ".n");
			if (n < 1 || n > (1 << 20))
				bad(w, "n out of range");
			c.n = (uint32_t)n;
			c.orbit = cj[i].contains("orbit") ? (int)get_int(cj[i]["orbit"], w + ".orbit") : 1;
			if (c.orbit < 1)
				bad(w, "orbit must be positive");
			c.field = cj[i].contains("field") ? parse_field(cj[i]["field"], (uint32_t)p, w + ".field") : P.model.field;
			if (c.field->degree() != F.degree() * c.orbit)
				bad(w, "component field degree " + std::to_string(c.field->degree()) + " differs from " +
				           std::to_string(F.degree() * c.orbit));
			c.f = parse_poly(*c.field, need(cj[i], "f", w), w + ".f");
			P.model.components.push_back(std::move(c));
		}
		const int ncomp = (int)P.model.components.size();

		std::set<std::string> names;
		if (j.contains("generators"))
			for (size_t i = 0; i < j["generators"].size(); ++i)
			{
				auto g = parse_aut(F, j["generators"][i], ncomp, "generators[" + std::to_string(i) + "]");
				if (!names.insert(g.name).second)
					bad("generators", "duplicate name '" + g.name + "'");
				P.generators.push_back(std::move(g));
			}
		if (j.contains("frobenius"))
		{
			auto g = parse_aut(F, j["frobenius"], ncomp, "frobenius");
			if (!names.insert(g.name).second)
				bad("frobenius", "duplicate name '" + g.name + "'");
			if (g.aut.frob != P.base_degree)
				bad("frobenius", "frob must equal base_degree " + std::to_string(P.base_degree));
			P.frobenius = std::move(g);
		}
		if (j.contains("frobenius_period"))
		{
			P.frobenius_period = get_int(j["frobenius_period"], "frobenius_period");
			if (*P.frobenius_period < 1)
				bad("frobenius_period", "must be positive");
		}
		if (j.contains("character_table"))
			P.character_table = j["character_table"].get<std::string>();
		if (j.contains("subgroups"))
			for (auto &s : j["subgroups"])
			{
				SubgroupSpec sg;
				sg.name = need(s, "name", "subgroups").get<std::string>();
				sg.generators = need(s, "generators", "subgroups").get<std::vector<std::string>>();
				P.subgroups.push_back(std::move(sg));
			}
		if (j.contains("options"))
		{
			auto &o = j["options"];
			if (o.contains("max_field_bits"))
				P.options.max_field_bits = (int)get_int(o["max_field_bits"], "options.max_field_bits");
			if (o.contains("tolerance"))
				P.options.tolerance = o["tolerance"].get<double>();
			if (o.contains("jobs"))
				P.options.jobs = (int)get_int(o["jobs"], "options.jobs");
		}
	}
	catch (const nlohmann::json::exception &e)
	{
		throw Error(ErrorKind::Parse, e.what());
	}
	return P;
}

ProblemFile load_problem(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw Error(ErrorKind::Parse, "cannot open " + path);
	ojson j;
	try
	{
		j = ojson::parse(in);
	}
	catch (const nlohmann::json::exception &e)
	{
		throw Error(ErrorKind::Parse, path + ": " + e.what());
	}
	return parse_problem(j, std::filesystem::path(path).parent_path().string());
}

ojson problem_to_json(const ProblemFile &P)
{
	const Field &F = *P.model.field;
	ojson j;
	j["name"] = P.name;
	ojson fj;
	fj["p"] = F.p();
	fj["degree"] = F.degree();
	fj["modulus"] = F.modulus();
	j["field"] = fj;
	j["base_degree"] = P.base_degree;
	j["components"] = ojson::array();
	for (auto &c : P.model.components)
	{
		ojson cj;
		cj["label"] = c.label;
		cj["n"] = c.n;
		if (c.orbit != 1)
		{
			cj["orbit"] = c.orbit;
			cj["field"] = field_to_json(*c.field);
		}
		cj["f"] = poly_to_json(*c.field, c.f);
		j["components"].push_back(cj);
	}
	if (!P.generators.empty())
	{
		j["generators"] = ojson::array();
		for (auto &g : P.generators)
			j["generators"].push_back(aut_to_json(F, g));
	}
	if (P.frobenius)
		j["frobenius"] = aut_to_json(F, *P.frobenius);
	if (P.frobenius_period)
		j["frobenius_period"] = *P.frobenius_period;
	if (P.character_table)
		j["character_table"] = *P.character_table;
	if (!P.subgroups.empty())
	{
		j["subgroups"] = ojson::array();
		for (auto &s : P.subgroups)
			j["subgroups"].push_back({{"name", s.name}, {"generators", s.generators}});
	}
	ojson o = ojson::object();
	if (P.options.max_field_bits)
		o["max_field_bits"] = *P.options.max_field_bits;
	if (P.options.tolerance)
		o["tolerance"] = *P.options.tolerance;
	if (P.options.jobs)
		o["jobs"] = *P.options.jobs;
	if (!o.empty())
		j["options"] = o;
	return j;
}

bool same_problem(const ProblemFile &a, const ProblemFile &b)
{
	if (a.name != b.name || a.base_degree != b.base_degree || !same_field(*a.model.field, *b.model.field))
		return false;
	if (a.model.components.size() != b.model.components.size())
		return false;
	for (size_t i = 0; i < a.model.components.size(); ++i)
	{
		auto &x = a.model.components[i], &y = b.model.components[i];
		if (x.label != y.label || x.n != y.n || x.orbit != y.orbit || !same_field(*x.field, *y.field) ||
		    !poly::equal(x.f, y.f))
			return false;
	}
	const Field &F = *a.model.field;
	if (a.generators.size() != b.generators.size() || a.frobenius.has_value() != b.frobenius.has_value())
		return false;
	for (size_t i = 0; i < a.generators.size(); ++i)
		if (!same_named(F, a.generators[i], b.generators[i]))
			return false;
	if (a.frobenius && !same_named(F, *a.frobenius, *b.frobenius))
		return false;
	if (a.frobenius_period != b.frobenius_period || a.character_table != b.character_table)
		return false;
	if (a.subgroups.size() != b.subgroups.size())
		return false;
	for (size_t i = 0; i < a.subgroups.size(); ++i)
		if (a.subgroups[i].name != b.subgroups[i].name || a.subgroups[i].generators != b.subgroups[i].generators)
			return false;
	return a.options.max_field_bits == b.options.max_field_bits && a.options.tolerance == b.options.tolerance &&
	       a.options.jobs == b.options.jobs;
}

std::vector<NamedAut> named_elements(const ProblemFile &P)
{
	auto v = P.generators;
	if (P.frobenius)
		v.push_back(*P.frobenius);
	return v;
}

} // namespace wrep
