#pragma once

#include "wrep/automorphisms.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace wrep {

using ojson = nlohmann::ordered_json;

struct SubgroupSpec
{
	std::string name;
	std::vector<std::string> generators; // words
};

struct ProblemOptions
{
	std::optional<int> max_field_bits;
	std::optional<double> tolerance;
	std::optional<int> jobs;
};

// Input document. Field elements are coefficient lists [c_0, ..., c_{s-1}]
// in the basis 1, t, ..., t^{s-1}; polynomials are lists of elements, low-to-high.
struct ProblemFile
{
	std::string name;
	CurveModel model; // model.field is the ambient field F_{p^S}
	int base_degree = 1; // q = p^base_degree
	std::vector<NamedAut> generators;
	std::optional<NamedAut> frobenius; // phi0, frob = base_degree
	std::optional<int64_t> frobenius_period; // in powers of phi0
	std::optional<std::string> character_table;
	std::vector<SubgroupSpec> subgroups;
	ProblemOptions options;
	std::string base_dir; // directory of the file, for relative paths; not emitted
};

ProblemFile parse_problem(const ojson &j, const std::string &base_dir = "");
ProblemFile load_problem(const std::string &path);
ojson problem_to_json(const ProblemFile &P);

bool same_problem(const ProblemFile &a, const ProblemFile &b);

// helpers shared with the report writer
ojson elem_to_json(const Field &F, Elem e);
ojson poly_to_json(const Field &F, const Poly &f);
ojson int_to_json(const Int &x); // number when |x| < 2^53, else decimal string
ojson ints_to_json(const std::vector<Int> &v);

// all generators (and phi0, if present) under their names
std::vector<NamedAut> named_elements(const ProblemFile &P);

} // namespace wrep
