#pragma once

#include "wrep/twist.hpp"
#include "wrep/zeta.hpp"

#include <complex>
#include <string>
#include <vector>

namespace wrep {

using cplx = std::complex<long double>;

// Q[gamma] / (gamma^f - c)
class GammaRing
{
  public:
	GammaRing() = default;
	GammaRing(int f, Int c);

	using Elem = std::vector<Rat>; // length f

	int f() const { return f_; }
	const Int &c() const { return c_; }

	Elem zero() const;
	Elem from_rat(const Rat &r) const;
	Elem gamma_power(int64_t k) const; // any integer k
	Elem add(const Elem &a, const Elem &b) const;
	Elem mul(const Elem &a, const Elem &b) const;
	Elem scale(const Elem &a, const Rat &r) const;

	// characteristic polynomial of multiplication by a, low-to-high, monic
	std::vector<Rat> charpoly(const Elem &a) const;
	bool is_algebraic_integer(const Elem &a) const;
	// complex conjugation, gamma -> q / gamma; needs c real with c^2 = q^f
	Elem conjugate(const Elem &a, const Int &q) const;
	// rational value if a lies in Q
	std::optional<Rat> rational(const Elem &a) const;

	// gamma -> |c|^(1/f) exp(i pi arg(c) / f) * exp(2 pi i k / f)
	cplx embedding_gamma(int k) const;
	cplx evaluate(const Elem &a, int k) const;
	std::string to_string(const Elem &a) const;

  private:
	int f_ = 1;
	Int c_ = 1;
};

struct TraceEntry
{
	int class_index = 0;
	int element = 0;
	std::string word;    // class representative word
	int64_t j = 0;       // Frobenius power of the representative
	int jprime = 0;      // j mod f in 1..f
	bool via_inverse = false; // counted on the inverse class, then conjugated
	std::string counted; // description of phi0^j' g
	uint64_t points = 0;
	int d = 0;
	Int t = 0; // d (q^j' + 1) - points
	GammaRing::Elem trace;
	cplx value; // principal embedding
	uint64_t class_size = 0;
};

struct TraceTable
{
	GammaRing ring;
	uint64_t f = 1;
	Int c = 1;
	int two_g = 0;
	uint64_t group_order = 0;
	std::vector<TraceEntry> entries; // one per conjugacy class, in group class order
};

struct TraceOptions
{
	int jobs = 1;
	int max_field_bits = 32;
	int s0 = 1; // q = p^s0
};

// phi0 is raw (frob s0)
TraceTable trace_table(const CurveModel &M, const AutGroup &G, const SemilinearAut &phi0, const LocalPolynomial &P0,
                       const TraceOptions &opt);

// trace of rho_0 on an arbitrary group element (via its class)
const GammaRing::Elem &element_trace(const TraceTable &T, const AutGroup &G, int element);

struct CharacterTable
{
	uint64_t order = 0;
	uint64_t exponent = 1;
	struct Class
	{
		uint64_t size = 0;
		std::string rep;
	};
	struct Character
	{
		std::string name;
		int dim = 0;
		std::vector<std::vector<Rat>> values; // per class, coefficients of zeta_N^k
	};
	std::vector<Class> classes;
	std::vector<Character> characters;

	cplx value(size_t chr, size_t cls) const;
};

// structural checks: sum of dim^2, trivial first row, sizes, orthogonality
void validate_character_table(const CharacterTable &CT);

// ct class index -> group class index; ClassMismatch unless a size-preserving bijection
std::vector<int> align_classes(const AutGroup &G, const CharacterTable &CT);

struct Matching
{
	std::vector<int> gammas; // embedding choices k giving this vector
	std::vector<long long> multiplicities;
	double residual = 0;
};

struct Decomposition
{
	std::vector<Matching> matchings; // principal embedding's matching first when integral
	bool ambiguous = false;
};

// values indexed by character-table class
std::optional<Matching> decompose_values(const CharacterTable &CT, const std::vector<cplx> &values, double tol = 1e-6);

Decomposition decompose(const TraceTable &T, const CharacterTable &CT, const AutGroup &G, double tol = 1e-6);

// subgroup generated by the given words; elements must have frob = 0
std::vector<int> subgroup_elements(const AutGroup &G, const std::vector<std::string> &words);
Int fixed_space_dim(const TraceTable &T, const AutGroup &G, const std::vector<std::string> &words);

} // namespace wrep
