#pragma once

#include "wrep/curve.hpp"
#include "wrep/numeric.hpp"

#include <complex>
#include <string>
#include <vector>

namespace wrep {

// P(T) = a_0 + a_1 T + ... + a_{2g} T^{2g}
struct LocalPolynomial
{
	std::vector<Int> a;
	Int q = 1;
	int g = 0;
	int d = 1;
};

bool operator==(const LocalPolynomial &x, const LocalPolynomial &y);
std::string to_string(const LocalPolynomial &P);

// Newton identities on t_1..t_g, upper half by the functional equation
LocalPolynomial traces_to_polynomial(const std::vector<Int> &t, const Int &q, int g, int d);

struct WeilReport
{
	bool ok = true;
	std::vector<std::string> problems;
	double max_deviation = 0; // max | |alpha| - sqrt(q) |
};

WeilReport verify_weil(const LocalPolynomial &P, double tol = 1e-9);
// throws WeilViolation with the report text
void require_weil(const LocalPolynomial &P, double tol = 1e-9);

// power sums s_m = sum alpha_i^(N m) for m = 1..deg P, exact
std::vector<Int> power_sum_transform(const std::vector<Int> &a, int N);

// reciprocal roots alpha_i with multiplicity, polished in long double
struct WeilRoot
{
	std::complex<long double> alpha;
	int mult = 1;
};
std::vector<WeilRoot> weil_roots(const LocalPolynomial &P);

struct EigenvalueClass
{
	int size = 0;
	uint64_t N = 1;
	Int c = 0;
	std::vector<int> members; // indices into the expanded root list
	std::vector<Int> factor;  // class factor of P, integer coefficients
};

std::vector<EigenvalueClass> eigenvalue_classes(const LocalPolynomial &P, double tol = 1e-9);

// N of the single eigenvalue class; MultiClass otherwise
uint64_t artin_order(const LocalPolynomial &P, double tol = 1e-9);

// integer polynomial helpers, low-to-high
std::vector<Int> ipoly_mul(const std::vector<Int> &f, const std::vector<Int> &g);
std::vector<Int> ipoly_subst_power(const std::vector<Int> &f, int r); // f(T^r)

// factor for a single absolutely irreducible component over its own field
LocalPolynomial component_polynomial(const Component &c, int jobs = 1, int max_bits = 32);
// product over orbits of P_rep(T^r); q is the base field size
LocalPolynomial model_polynomial(const CurveModel &M, int jobs = 1, int max_bits = 32);
// same polynomial from whole-model traces t_m = d_m (Q^m + 1) - #M(F_{Q^m})
LocalPolynomial model_polynomial_from_traces(const CurveModel &M, int jobs = 1, int max_bits = 32);

} // namespace wrep
