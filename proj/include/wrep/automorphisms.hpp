#pragma once

#include "wrep/curve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wrep {

// Action on component i: x_i -> A(x_perm[i]), y_i -> lambda * u(x_perm[i]) * y_perm[i],
// with u = u_num / u_den.
struct CompMap
{
	Mobius A;
	Elem lambda = 1;
	Poly u_num{1};
	Poly u_den{1};
};

// Semilinear automorphism; constants are raised to p^frob.
struct SemilinearAut
{
	int64_t frob = 0;
	std::vector<int> perm;
	std::vector<CompMap> maps;
};

SemilinearAut identity_aut(int ncomp);

// g after h on functions: (g h).x = g.(h.x)
SemilinearAut compose(const Field &F, const SemilinearAut &g, const SemilinearAut &h);
SemilinearAut inverse(const Field &F, const SemilinearAut &g);
SemilinearAut power(const Field &F, const SemilinearAut &g, int64_t k);

// canonical form: Mobius scaled (c = 1, else d = 1), u monic and reduced with
// its scalars moved into lambda, frob reduced mod period (period 0: no reduction)
SemilinearAut normalize(const Field &F, const SemilinearAut &g, int64_t period = 0);
bool same_aut(const Field &F, const SemilinearAut &g, const SemilinearAut &h, int64_t period = 0);
bool is_identity(const Field &F, const SemilinearAut &g, int64_t period);

// throws EquationMismatch, SingularMobius or InvalidGenerator
void validate_automorphism(const CurveModel &M, const SemilinearAut &g);

// affine point (x, y) on component comp, coordinates in E which contains M.field
struct AffinePoint
{
	int comp = 0;
	Elem x = 0, y = 0;
	bool operator==(const AffinePoint &o) const { return comp == o.comp && x == o.x && y == o.y; }
};

// Covariant point map T_g, with T_{gh} = T_g T_h; nullopt when the image leaves the affine chart
std::optional<AffinePoint> apply_to_point(const Field &F, const Field &E, const SemilinearAut &g, const AffinePoint &P);

// word = space separated tokens "name" or "name^k", composed left to right
std::vector<std::pair<std::string, int64_t>> parse_word(const std::string &word);

struct NamedAut
{
	std::string name;
	SemilinearAut aut;
};

class AutGroup
{
  public:
	static constexpr size_t kDefaultCap = 10000;

	// generators are validated against M; period is the Frobenius period in
	// units of p-powers (F * s0)
	AutGroup(const CurveModel &M, std::vector<NamedAut> gens, int64_t period, size_t cap = kDefaultCap);

	size_t size() const { return elems_.size(); }
	const SemilinearAut &element(size_t i) const { return elems_[i]; }
	const std::string &word(size_t i) const { return words_[i]; }
	int64_t period() const { return period_; }
	const std::vector<NamedAut> &generators() const { return gens_; }
	const Field &field() const { return *field_; }

	// index of an element (any frob representative), or -1
	int find(const SemilinearAut &g) const;
	int index_of_word(const std::string &w) const;
	int compose_index(int a, int b) const;
	int inverse_index(int a) const;

	struct ConjClass
	{
		int rep = 0; // element index
		std::vector<int> members;
	};
	const std::vector<ConjClass> &classes() const;
	int class_of(int elem) const;

	bool closed() const;

  private:
	FieldPtr field_;
	std::vector<NamedAut> gens_;
	int64_t period_;
	std::vector<SemilinearAut> elems_;
	std::vector<std::string> words_;
	std::map<std::vector<uint64_t>, int> index_;
	mutable std::vector<ConjClass> classes_;
	mutable std::vector<int> class_of_;

	std::vector<uint64_t> key(const SemilinearAut &g) const;
};

// evaluate a word without reducing frob (raw composition); unknown names throw
SemilinearAut eval_word(const Field &F, const std::vector<NamedAut> &gens, const std::string &word, int ncomp);

} // namespace wrep
