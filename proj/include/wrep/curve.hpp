#pragma once

#include "wrep/fields.hpp"
#include "wrep/poly.hpp"

#include <string>
#include <vector>

namespace wrep {

// y^n = f(x) over `field`. A component with orbit = r stands for an orbit of r
// Frobenius-conjugate components; it is then defined over the degree-r
// extension of the model's base field.
struct Component
{
	std::string label;
	uint32_t n = 2;
	Poly f;
	FieldPtr field;
	int orbit = 1;
};

struct CurveModel
{
	FieldPtr field; // base field F_Q
	std::vector<Component> components;
};

enum class ViolationKind {
	ExponentDivisibleByP,
	NotAbsolutelyIrreducible,
	ConstantF,
	NthPowerFactor,
	InvalidExponent,
};

const char *violation_name(ViolationKind k);

struct Violation
{
	ViolationKind kind;
	std::string message;
};

struct ComponentReport
{
	std::vector<Violation> violations;
	std::vector<std::string> warnings;
	bool ok() const { return violations.empty(); }
};

ComponentReport validate_component(const Component &c);
// throws InvalidModel carrying the first violation
void require_valid(const Component &c);

int genus(const Component &c);
int total_genus(const CurveModel &M);

struct RamificationDatum
{
	bool at_infinity = false;
	Elem x0 = 0; // in the degree-m extension field
	int a = 0;   // multiplicity (a_inf = n*ceil(D/n) - D at infinity)
	uint32_t d = 1;
	Elem c = 0; // g(x0), or leading coefficient at infinity
};

struct RamificationData
{
	FieldPtr field; // F_{Q^m}
	std::vector<RamificationDatum> data;
};

RamificationData ramification_data(const Component &c, int m);

// F_{p^(s*m)}: the field itself for m = 1, otherwise the canonical extension
FieldPtr extension_field(const FieldPtr &F, int m, int max_bits = 32);

uint64_t count_component(const Component &c, int m, int jobs = 1, int max_bits = 32);
uint64_t count_component_bruteforce(const Component &c, int m, int max_bits = 32);

// points of the model over F_{Q^m}; orbit components contribute only when r | m
uint64_t count_points(const CurveModel &M, int m, int jobs = 1, int max_bits = 32);
uint64_t count_points_bruteforce(const CurveModel &M, int m, int max_bits = 32);

// sum of orbit lengths
int geometric_component_count(const CurveModel &M);
// number of absolutely irreducible components defined over F_{Q^m}
int fixed_component_count(const CurveModel &M, int m);

} // namespace wrep
