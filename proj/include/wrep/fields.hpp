#pragma once

#include "wrep/numeric.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace wrep {

// Elements of F_{p^s} are packed base-p integers: the coefficient vector
// (c_0, ..., c_{s-1}) of c_0 + c_1 t + ... is stored as sum c_i p^i.
using Elem = uint32_t;

// fields up to this size keep log/antilog tables
inline constexpr uint64_t kTableLimit = uint64_t(1) << 20;

class Field
{
  public:
	// modulus: monic, degree s, low-to-high coefficients in [0, p)
	Field(uint32_t p, int s, std::vector<uint32_t> modulus, bool allow_tables = true);

	uint32_t p() const { return p_; }
	int degree() const { return s_; }
	uint64_t size() const { return q_; }
	uint64_t order() const { return q_ - 1; }
	const std::vector<uint32_t> &modulus() const { return mod_; }

	bool contains(Elem a) const { return a < q_; }
	Elem zero() const { return 0; }
	Elem one() const { return 1; }
	Elem gen() const { return s_ == 1 ? (Elem)((p_ - mod_[0]) % p_) : (Elem)p_; }
	Elem from_int(int64_t v) const;

	std::vector<uint32_t> coeffs(Elem a) const;
	Elem from_coeffs(const std::vector<uint32_t> &c) const;

	Elem add(Elem a, Elem b) const;
	Elem sub(Elem a, Elem b) const;
	Elem neg(Elem a) const;
	Elem mul(Elem a, Elem b) const;
	Elem inv(Elem a) const;
	Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
	Elem pow(Elem a, uint64_t e) const;
	Elem pow(Elem a, int64_t e) const;
	Elem pow(Elem a, int e) const { return pow(a, (int64_t)e); }

	// a^(p^j); j is reduced mod s, negative j allowed
	Elem frob(Elem a, int64_t j) const;

	// arithmetic that never touches the tables (reference path)
	Elem mul_reference(Elem a, Elem b) const;

	bool has_tables() const { return !exp_.empty(); }
	Elem primitive() const { return prim_; }
	Elem exp(uint64_t k) const;
	// discrete log base primitive(); a != 0
	uint64_t dlog(Elem a) const;

	uint64_t element_order(Elem a) const;
	const std::vector<std::pair<uint64_t, int>> &order_factors() const { return ofac_; }

	// #{w : w^d = c}
	uint64_t count_power_roots(Elem c, uint64_t d) const;

	// log tables for the counting kernel, only when has_tables(); the
	// sentinel for log(0) is order()
	const uint32_t *log_table() const { return log_.data(); }
	const uint32_t *exp_table() const { return exp_.data(); }
	// zech[k] = log(1 + g^k), or order() when 1 + g^k = 0
	const uint32_t *zech_table() const;

	std::string describe() const;

  private:
	uint32_t p_;
	int s_;
	uint64_t q_;
	std::vector<uint32_t> mod_;
	uint64_t modbits_ = 0; // p = 2 only
	std::vector<uint64_t> pw_;
	std::vector<std::pair<uint64_t, int>> ofac_;
	Elem prim_ = 1;
	std::vector<uint32_t> exp_, log_;
	mutable std::vector<uint32_t> zech_;
	mutable std::once_flag zech_once_;

	Elem pow_reference(Elem a, uint64_t e) const;
	uint64_t dlog_reference(Elem a) const;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_irreducible(uint32_t p, const std::vector<uint32_t> &modulus);

// smallest monic irreducible of degree s, coefficients compared low-to-high
std::vector<uint32_t> canonical_modulus(uint32_t p, int s);

FieldPtr make_field(uint32_t p, int s, std::optional<std::vector<uint32_t>> modulus = std::nullopt);

// process-wide cache of canonical presentations
FieldPtr canonical_field(uint32_t p, int s);

// throws FieldBoundExceeded unless p^s < 2^max_bits
void check_field_bound(uint32_t p, int s, int max_bits);
bool within_field_bound(uint32_t p, int s, int max_bits);

bool same_field(const Field &a, const Field &b);

// image of src's generator t in dst: the smallest root of src's modulus
Elem embedding_image(const Field &src, const Field &dst);
Elem embed(Elem e, const Field &src, const Field &dst);
std::optional<Elem> descend(Elem e, const Field &big, const Field &small);

// roots of a polynomial (coefficients already in F) lying in F
std::vector<Elem> roots_in_field(const Field &F, const std::vector<Elem> &f);

// a field element living in some finite field
struct FieldValue
{
	FieldPtr field;
	Elem value = 0;
};

// smallest L, a multiple of base, with c (in src) an e-th power in F_{p^L};
// 0 if none within the bit bound
int power_root_degree(const Field &src, Elem c, uint64_t e, int base, int max_bits);
// some w in F with w^e = c, if one exists in F
std::optional<Elem> power_root_in(const Field &F, Elem c, uint64_t e);

// Tr_{F_{p^L} / F_{p^E}}(a) for E | L
Elem relative_trace(const Field &F, Elem a, int E);
// smallest L = base * p^k with x^{p^E} - x + xi = 0 solvable; 0 if beyond bound
int artin_schreier_degree(const Field &src, Elem xi, int E, int base, int max_bits);
std::optional<Elem> artin_schreier_in(const Field &F, Elem xi, int E);

// alpha with alpha^(q_rel - 1) = xi^(-1)
FieldValue solve_tame(const FieldPtr &ambient, Elem xi, uint64_t q_rel, int max_bits = 32);
// alpha with alpha^q_rel - alpha + xi = 0
FieldValue solve_wild(const FieldPtr &ambient, Elem xi, uint64_t q_rel, int max_bits = 32);

// log_p(q) if q is a power of p, else -1
int log_p(uint32_t p, uint64_t q);

} // namespace wrep
