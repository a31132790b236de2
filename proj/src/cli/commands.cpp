#include "wrep/chartable.hpp"
#include "wrep/cli.hpp"
#include "wrep/error.hpp"
#include "wrep/kernel.hpp"
#include "wrep/problem.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <ostream>

namespace wrep {

namespace {

struct Settings
{
	std::string file;
	std::string element;
	int64_t power = 1;
	int ext = 0; // 0: command default
	int max_bits = 32;
	double tol = 1e-9;
	int jobs = 1;
	std::string table;
};

ojson dec(long double x)
{
	double v = std::round((double)x * 1e12) / 1e12;
	if (v == 0)
		v = 0;
	return v;
}

ojson cplx_json(const cplx &z) { return ojson{{"re", dec(z.real())}, {"im", dec(z.imag())}}; }

ojson rat_json(const Rat &r)
{
	if (is_integer(r))
		return int_to_json(numerator(r));
	return to_string(r);
}

ojson poly_json(const LocalPolynomial &P)
{
	ojson j;
	j["q"] = int_to_json(P.q);
	j["genus"] = P.g;
	j["coefficients"] = ints_to_json(P.a);
	j["text"] = to_string(P);
	return j;
}

ojson classes_json(const std::vector<EigenvalueClass> &cls)
{
	ojson a = ojson::array();
	for (auto &c : cls)
		a.push_back({{"size", c.size}, {"N", c.N}, {"c", int_to_json(c.c)}, {"factor", ints_to_json(c.factor)}});
	return a;
}

class Session
{
  public:
	Session(const Settings &s, ProblemFile P) : S(s), P(std::move(P)) {}

	Settings S;
	ProblemFile P;

	const Field &field() const { return *P.model.field; }
	int ncomp() const { return (int)P.model.components.size(); }

	void validate_model() const
	{
		for (auto &c : P.model.components)
			require_valid(c);
		for (auto &g : named())
			validate_automorphism(P.model, g.aut);
	}

	// generators plus phi0 (the identity semilinear map of degree base_degree when absent)
	std::vector<NamedAut> named() const
	{
		auto v = P.generators;
		v.push_back(phi0_named());
		return v;
	}

	NamedAut phi0_named() const
	{
		if (P.frobenius)
			return *P.frobenius;
		NamedAut n{"phi0", identity_aut(ncomp())};
		n.aut.frob = P.base_degree;
		return n;
	}

	bool has_group() const { return !P.generators.empty(); }

	int64_t min_period() const { return (int64_t)lcm_u64(field().degree(), P.base_degree); }

	// group over the given Frobenius period (p-power units); cached per period
	const AutGroup *group(int64_t period)
	{
		if (!has_group())
			return nullptr;
		auto &slot = groups_[period];
		if (!slot)
			slot = std::make_unique<AutGroup>(P.model, named(), period);
		return slot.get();
	}

	const AutGroup *default_group()
	{
		return group(P.frobenius_period ? *P.frobenius_period * P.base_degree : min_period());
	}

	SemilinearAut frobenius_element(int64_t k, const std::string &word, int ext) const
	{
		const Field &F = field();
		SemilinearAut g = eval_word(F, named(), word, ncomp());
		SemilinearAut phi = compose(F, power(F, phi0_named().aut, k), g);
		if (ext > 1)
			phi = power(F, phi, ext);
		if (phi.frob <= 0)
			throw Error(ErrorKind::InvalidModel, "the element phi0^" + std::to_string(k) + " " + word +
			                                         " is not a Frobenius element (frob " +
			                                         std::to_string(phi.frob) + ")");
		return phi;
	}

	TwistResult twist(const SemilinearAut &phi) { return twist_model(P.model, default_group(), phi, S.max_bits); }

	std::string describe(int64_t k, const std::string &word) const
	{
		std::string s = k == 0 ? "" : k == 1 ? "phi0" : "phi0^" + std::to_string(k);
		if (!word.empty())
			s += (s.empty() ? "" : " ") + word;
		return s.empty() ? "1" : s;
	}

  private:
	std::map<int64_t, std::unique_ptr<AutGroup>> groups_;
};

ojson field_json(const Field &F) { return {{"p", F.p()}, {"degree", F.degree()}, {"modulus", F.modulus()}}; }

ojson twist_json(const TwistResult &T)
{
	ojson a = ojson::array();
	for (auto &o : T.orbits)
	{
		ojson j;
		j["members"] = o.members;
		j["orbit"] = o.r;
		j["component_used"] = o.comp_used;
		j["conjugator"] = o.conjugator_word.empty() ? "1" : o.conjugator_word;
		j["shape"] = shape_name(o.shape.kind);
		const Field &K = *o.data.solve_field;
		j["solve_field"] = field_json(K);
		j["alpha"] = elem_to_json(K, o.data.alpha);
		j["B"] = elem_to_json(K, o.data.B);
		a.push_back(j);
	}
	return a;
}

// ---- commands -----------------------------------------------------------

int cmd_validate(Session &s, std::ostream &out)
{
	ojson j;
	j["name"] = s.P.name;
	j["field"] = field_json(s.field());
	bool ok = true;
	j["components"] = ojson::array();
	for (auto &c : s.P.model.components)
	{
		auto rep = validate_component(c);
		ojson cj{{"label", c.label}, {"n", c.n}, {"ok", rep.ok()}};
		ojson v = ojson::array();
		for (auto &x : rep.violations)
			v.push_back({{"kind", violation_name(x.kind)}, {"message", x.message}});
		cj["violations"] = v;
		cj["warnings"] = rep.warnings;
		if (rep.ok())
			cj["genus"] = genus(c);
		ok = ok && rep.ok();
		j["components"].push_back(cj);
	}
	j["automorphisms"] = ojson::array();
	if (ok)
		for (auto &g : s.named())
		{
			ojson gj{{"name", g.name}};
			try
			{
				validate_automorphism(s.P.model, g.aut);
				gj["ok"] = true;
			}
			catch (const Error &e)
			{
				ok = false;
				gj["ok"] = false;
				gj["error"] = error_name(e.kind());
				gj["message"] = e.what();
			}
			j["automorphisms"].push_back(gj);
		}
	if (ok)
	{
		j["genus"] = total_genus(s.P.model);
		if (const AutGroup *G = s.default_group())
			j["group"] = {{"order", G->size()}, {"period", G->period()}, {"classes", G->classes().size()},
			              {"closed", G->closed()}};
	}
	j["ok"] = ok;
	out << j.dump(2) << "\n";
	return ok ? 0 : 2;
}

int cmd_count(Session &s, std::ostream &out)
{
	s.validate_model();
	SemilinearAut phi = s.frobenius_element(s.S.power, s.S.element, 1);
	TwistResult T = s.twist(phi);
	const CurveModel &M = T.model;
	int ext = s.S.ext > 0 ? s.S.ext : std::max(1, total_genus(M));
	ojson j;
	j["element"] = s.describe(s.S.power, s.S.element);
	j["field"] = field_json(*M.field);
	j["components"] = ojson::array();
	for (auto &c : M.components)
	{
		ojson cj{{"label", c.label}, {"n", c.n}, {"orbit", c.orbit}, {"f", poly_to_json(*c.field, c.f)}};
		ojson counts = ojson::array();
		for (int m = 1; m <= ext; ++m)
			counts.push_back(m % c.orbit == 0 ? count_component(c, m / c.orbit, s.S.jobs, s.S.max_bits) : 0);
		cj["counts"] = counts;
		j["components"].push_back(cj);
	}
	ojson total = ojson::array();
	for (int m = 1; m <= ext; ++m)
		total.push_back(count_points(M, m, s.S.jobs, s.S.max_bits));
	j["counts"] = total;
	out << j.dump(2) << "\n";
	return 0;
}

int cmd_zeta(Session &s, std::ostream &out)
{
	s.validate_model();
	int ext = s.S.ext > 0 ? s.S.ext : 1;
	SemilinearAut phi = s.frobenius_element(s.S.power, s.S.element, ext);
	TwistResult T = s.twist(phi);
	LocalPolynomial P = model_polynomial(T.model, s.S.jobs, s.S.max_bits);
	WeilReport W = verify_weil(P, s.S.tol);
	ojson j;
	j["element"] = s.describe(s.S.power, s.S.element);
	j["ext"] = ext;
	j["polynomial"] = poly_json(P);
	j["weil"] = {{"ok", W.ok}, {"max_deviation", dec(W.max_deviation)}, {"problems", W.problems}};
	if (!W.ok)
	{
		out << j.dump(2) << "\n";
		return 4;
	}
	// the polynomial stands on its own; a Frobenius of infinite order is reported, not fatal
	try
	{
		auto cls = eigenvalue_classes(P, s.S.tol);
		j["eigenvalue_classes"] = classes_json(cls);
		if (cls.size() == 1)
			j["artin_order"] = cls[0].N;
	}
	catch (const Error &e)
	{
		if (e.kind() != ErrorKind::UnclassifiableRoot)
			throw;
		j["eigenvalue_classes"] = nullptr;
		j["note"] = e.what();
	}
	out << j.dump(2) << "\n";
	return 0;
}

int cmd_twist(Session &s, std::ostream &out)
{
	s.validate_model();
	int ext = s.S.ext > 0 ? s.S.ext : 1;
	SemilinearAut phi = s.frobenius_element(s.S.power, s.S.element, ext);
	TwistResult T = s.twist(phi);
	ProblemFile Q;
	Q.name = (s.P.name.empty() ? std::string("model") : s.P.name) + " twisted by " +
	         s.describe(s.S.power, s.S.element) + (ext > 1 ? " ^" + std::to_string(ext) : "");
	Q.model = T.model;
	Q.base_degree = T.model.field->degree();
	ojson j = problem_to_json(Q);
	j["twist"] = twist_json(T);
	out << j.dump(2) << "\n";
	return 0;
}

struct Pipeline
{
	LocalPolynomial P0;
	std::vector<EigenvalueClass> classes;
	uint64_t f = 0;
	const AutGroup *G = nullptr;
	std::optional<TraceTable> table;
};

// polynomial of phi0, its classes, and (when possible) the trace table
Pipeline run_pipeline(Session &s, bool want_table)
{
	s.validate_model();
	Pipeline R;
	SemilinearAut phi0 = s.phi0_named().aut;
	TwistResult T0 = twist_model(s.P.model, s.group(s.min_period()), phi0, s.S.max_bits);
	R.P0 = model_polynomial(T0.model, s.S.jobs, s.S.max_bits);
	require_weil(R.P0, s.S.tol);
	R.classes = eigenvalue_classes(R.P0, s.S.tol);
	if (R.classes.size() != 1)
		return R;
	R.f = R.classes[0].N;
	if (!s.has_group() || !want_table)
		return R;
	const int S = s.field().degree(), s0 = s.P.base_degree;
	int64_t F = s.P.frobenius_period ? *s.P.frobenius_period
	                                 : (int64_t)lcm_u64(R.f, (uint64_t)(S / (int)gcd_u64(S, s0)));
	R.G = s.group(F * s0);
	TraceOptions opt;
	opt.jobs = s.S.jobs;
	opt.max_field_bits = s.S.max_bits;
	opt.s0 = s0;
	R.table = trace_table(s.P.model, *R.G, phi0, R.P0, opt);
	return R;
}

ojson table_json(const TraceTable &T)
{
	ojson j;
	j["f"] = T.f;
	j["c"] = int_to_json(T.c);
	j["relation"] = "g^" + std::to_string(T.f) + " = " + to_string(T.c);
	j["gamma"] = cplx_json(T.ring.embedding_gamma(0));
	j["two_g"] = T.two_g;
	j["group_order"] = T.group_order;
	j["classes"] = ojson::array();
	for (auto &e : T.entries)
	{
		ojson c;
		c["class"] = e.class_index;
		c["rep"] = e.word.empty() ? "1" : e.word;
		c["size"] = e.class_size;
		c["j"] = e.j;
		c["jprime"] = e.jprime;
		c["counted"] = e.counted;
		c["points"] = e.points;
		c["components_fixed"] = e.d;
		c["t"] = int_to_json(e.t);
		ojson coeffs = ojson::array();
		for (auto &x : e.trace)
			coeffs.push_back(rat_json(x));
		c["trace"] = {{"text", T.ring.to_string(e.trace)}, {"coefficients", coeffs}};
		if (auto r = T.ring.rational(e.trace))
			c["trace"]["rational"] = rat_json(*r);
		c["value"] = cplx_json(e.value);
		j["classes"].push_back(c);
	}
	return j;
}

std::string table_path(const Session &s)
{
	std::string p = !s.S.table.empty() ? s.S.table : s.P.character_table.value_or("");
	if (p.empty())
		return p;
	// paths inside the problem file are relative to it
	if (s.S.table.empty() && std::filesystem::path(p).is_relative() && !s.P.base_dir.empty())
		return (std::filesystem::path(s.P.base_dir) / p).string();
	return p;
}

ojson decomposition_json(const Decomposition &D, const CharacterTable &CT)
{
	ojson j;
	j["ambiguous"] = D.ambiguous;
	j["matchings"] = ojson::array();
	for (auto &m : D.matchings)
	{
		ojson mj;
		mj["gamma_choices"] = m.gammas;
		mj["residual"] = dec(m.residual);
		ojson mult = ojson::array(), present = ojson::array(), absent = ojson::array();
		std::set<int> dims;
		for (size_t a = 0; a < CT.characters.size(); ++a)
			if (m.multiplicities[a] > 0)
				dims.insert(CT.characters[a].dim);
		long long total = 0;
		for (size_t a = 0; a < CT.characters.size(); ++a)
		{
			auto &ch = CT.characters[a];
			mult.push_back({{"name", ch.name}, {"dim", ch.dim}, {"multiplicity", m.multiplicities[a]}});
			total += m.multiplicities[a] * ch.dim;
			if (m.multiplicities[a] > 0)
				present.push_back(ch.name);
			else if (dims.count(ch.dim))
				absent.push_back(ch.name);
		}
		mj["multiplicities"] = mult;
		mj["constituents"] = present;
		mj["absent_same_dimension"] = absent;
		mj["dimension"] = total;
		j["matchings"].push_back(mj);
	}
	return j;
}

int cmd_trace_table(Session &s, std::ostream &out)
{
	if (!s.has_group())
		throw Error(ErrorKind::InvalidModel, "trace-table needs generators");
	Pipeline R = run_pipeline(s, true);
	if (!R.table)
		throw Error(ErrorKind::MultiClass, std::to_string(R.classes.size()) + " eigenvalue classes");
	ojson j;
	j["frobenius_polynomial"] = poly_json(R.P0);
	j["trace_table"] = table_json(*R.table);
	out << j.dump(2) << "\n";
	return 0;
}

int cmd_decompose(Session &s, std::ostream &out)
{
	std::string path = table_path(s);
	if (path.empty())
		throw Error(ErrorKind::Parse, "decompose needs --character-table or a character_table entry");
	CharacterTable CT = load_character_table(path);
	if (!s.has_group())
		throw Error(ErrorKind::InvalidModel, "decompose needs generators");
	Pipeline R = run_pipeline(s, true);
	if (!R.table)
		throw Error(ErrorKind::MultiClass, std::to_string(R.classes.size()) + " eigenvalue classes");
	Decomposition D = decompose(*R.table, CT, *R.G);
	out << ojson{{"decomposition", decomposition_json(D, CT)}}.dump(2) << "\n";
	return 0;
}

int cmd_report(Session &s, std::ostream &out)
{
	Pipeline R = run_pipeline(s, true);
	ojson j;
	j["name"] = s.P.name;
	j["field"] = field_json(s.field());
	j["base_degree"] = s.P.base_degree;
	j["genus"] = total_genus(s.P.model);
	j["frobenius_polynomial"] = poly_json(R.P0);
	j["eigenvalue_classes"] = classes_json(R.classes);
	if (R.classes.size() != 1)
	{
		j["note"] = "several eigenvalue classes; the trace table needs one unramified character per class";
		out << j.dump(2) << "\n";
		return 0;
	}
	j["artin_order"] = R.f;
	if (!R.table)
	{
		j["note"] = "no automorphism generators; report stops after the eigenvalue classes";
		out << j.dump(2) << "\n";
		return 0;
	}
	const AutGroup &G = *R.G;
	j["group"] = {{"order", G.size()}, {"period", G.period()}, {"classes", G.classes().size()}};
	j["trace_table"] = table_json(*R.table);
	std::string path = table_path(s);
	if (!path.empty())
	{
		CharacterTable CT = load_character_table(path);
		j["decomposition"] = decomposition_json(decompose(*R.table, CT, G), CT);
	}
	if (!s.P.subgroups.empty())
	{
		j["fixed_space"] = ojson::array();
		for (auto &sg : s.P.subgroups)
			j["fixed_space"].push_back({{"name", sg.name},
			                            {"generators", sg.generators},
			                            {"order", subgroup_elements(G, sg.generators).size()},
			                            {"dim", int_to_json(fixed_space_dim(*R.table, G, sg.generators))}});
	}
	out << j.dump(2) << "\n";
	return 0;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Weil representations from stable reduction data of superelliptic curves"};
	app.require_subcommand(1);
	app.fallthrough();
	Settings st;
	std::string kernel = "auto";
	app.add_option("--element", st.element, "group element word, e.g. \"tau2\" or \"sigma^2 tau1\"");
	app.add_option("--frobenius-power", st.power, "power k of phi0 in phi = phi0^k * element")->capture_default_str();
	app.add_option("--ext", st.ext, "extension degree");
	app.add_option("--max-field-bits", st.max_bits, "largest field size in bits")
	    ->capture_default_str()
	    ->check(CLI::Range(2, 32));
	app.add_option("--tolerance", st.tol, "numerical tolerance for root checks")->capture_default_str();
	app.add_option("--jobs", st.jobs, "worker threads for point counting")
	    ->capture_default_str()
	    ->check(CLI::Range(1, 64));
	app.add_option("--character-table", st.table, "character table JSON");
	app.add_option("--kernel", kernel, "point-count kernel: auto, scalar, avx2")
	    ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

	using Cmd = int (*)(Session &, std::ostream &);
	std::vector<std::pair<CLI::App *, Cmd>> cmds;
	auto add = [&](const char *name, const char *help, Cmd fn) {
		CLI::App *sub = app.add_subcommand(name, help);
		sub->add_option("file", st.file, "problem file (JSON)")->required();
		cmds.emplace_back(sub, fn);
	};
	add("validate", "check the model and the automorphism data", cmd_validate);
	add("count", "count points of the twist by phi0^k * element", cmd_count);
	add("zeta", "local polynomial of the twist by phi0^k * element", cmd_zeta);
	add("twist", "emit the twisted model as a problem file", cmd_twist);
	add("trace-table", "traces of rho_0 on the conjugacy classes", cmd_trace_table);
	add("decompose", "decompose rho_0 against a character table", cmd_decompose);
	add("report", "full pipeline", cmd_report);

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp &e)
	{
		out << app.help();
		return 0;
	}
	catch (const CLI::ParseError &e)
	{
		err << "error: " << e.what() << "\n";
		return 2;
	}

	try
	{
		if (kernel == "scalar")
			set_kernel(KernelKind::Scalar);
		else if (kernel == "avx2")
		{
			if (!avx2_available())
				throw Error(ErrorKind::Parse, "AVX2 kernel not available on this machine");
			set_kernel(KernelKind::Avx2);
		}
		ProblemFile P = load_problem(st.file);
		// file options apply unless overridden on the command line
		if (P.options.max_field_bits && app.get_option("--max-field-bits")->count() == 0)
			st.max_bits = *P.options.max_field_bits;
		if (P.options.tolerance && app.get_option("--tolerance")->count() == 0)
			st.tol = *P.options.tolerance;
		if (P.options.jobs && app.get_option("--jobs")->count() == 0)
			st.jobs = *P.options.jobs;
		Session s(st, std::move(P));
		for (auto &[sub, fn] : cmds)
			if (sub->parsed())
				return fn(s, out);
	}
	catch (const Error &e)
	{
		err << "error: " << e.what() << "\n";
		return exit_code(e.kind());
	}
	catch (const std::exception &e)
	{
		err << "error: " << e.what() << "\n";
		return 4;
	}
	return 2;
}

} // namespace wrep
