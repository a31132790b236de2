#pragma once

#include "wrep/automorphisms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wrep {

enum class ShapeKind { Tame, Wild };

// x -> xi x (tame) or x -> x + xi (wild), y -> zeta y
struct Shape
{
	ShapeKind kind = ShapeKind::Tame;
	Elem xi = 1;
	Elem zeta = 1;
};

const char *shape_name(ShapeKind k);

// shape of the data of psi on a component it fixes, if already canonical
std::optional<Shape> shape_of(const Field &F, const SemilinearAut &psi, int comp);

struct CanonicalShape
{
	int conjugator = 0; // group index, 0 = identity
	std::string conjugator_word;
	SemilinearAut conjugated; // c psi c^-1
	int comp = 0;             // component fixed by the conjugate
	Shape shape;
};

// search c in G (BFS order) with c psi c^-1 canonical on comp_c
CanonicalShape canonical_shape(const AutGroup *G, const Field &F, const SemilinearAut &psi, int comp);

struct ComponentTwist
{
	Poly f1;           // over field
	FieldPtr field;    // F_{q_rel}
	FieldPtr solve_field; // where alpha and B live
	Elem alpha = 0;
	Elem B = 1; // plays the role of beta^n
};

// f1 = B f(alpha^-1 x) (tame) or B f(x - alpha) (wild); F is the field of f
ComponentTwist twist_component(const Field &F, const Poly &f, uint32_t n, const Shape &shape, uint64_t q_rel,
                               int max_bits = 32);

struct OrbitTwist
{
	std::vector<int> members;
	int rep = 0;
	int r = 1;
	int comp_used = 0;
	std::string conjugator_word;
	Shape shape;
	ComponentTwist data;
};

struct TwistResult
{
	CurveModel model;
	std::vector<OrbitTwist> orbits;
	int64_t frob = 1;
};

// phi is raw: its frob is the p-power of the twisted model's base field
TwistResult twist_model(const CurveModel &M, const AutGroup *G, const SemilinearAut &phi, int max_bits = 32);

// n-th power equivalence of y^n = c h(x) models: f2 = u^n f1 for some u in F
bool models_equivalent(const Field &F, const Poly &f1, const Poly &f2, uint32_t n);

} // namespace wrep
