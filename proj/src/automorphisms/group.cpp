#include "wrep/automorphisms.hpp"
#include "wrep/error.hpp"

#include <deque>

namespace wrep {

AutGroup::AutGroup(const CurveModel &M, std::vector<NamedAut> gens, int64_t period, size_t cap)
    : field_(M.field), gens_(std::move(gens)), period_(period)
{
	const Field &F = *field_;
	if (period_ <= 0 || period_ % F.degree() != 0)
		throw Error(ErrorKind::InvalidGenerator, "Frobenius period " + std::to_string(period_) +
		                                             " must be a positive multiple of the field degree " +
		                                             std::to_string(F.degree()));
	const int nc = (int)M.components.size();
	for (auto &g : gens_)
	{
		try
		{
			validate_automorphism(M, g.aut);
		}
		catch (const Error &e)
		{
			throw Error(e.kind() == ErrorKind::EquationMismatch || e.kind() == ErrorKind::SingularMobius
			                ? e.kind()
			                : ErrorKind::InvalidGenerator,
			            "generator " + g.name + ": " + e.what());
		}
	}
	std::vector<SemilinearAut> ng;
	for (auto &g : gens_)
		ng.push_back(normalize(F, g.aut, period_));

	auto add = [&](const SemilinearAut &g, const std::string &w) -> bool {
		auto k = key(g);
		if (index_.count(k))
			return false;
		if (elems_.size() >= cap)
			throw Error(ErrorKind::CapExceeded, "group exceeds " + std::to_string(cap) + " elements");
		index_.emplace(std::move(k), (int)elems_.size());
		elems_.push_back(normalize(F, g, period_));
		words_.push_back(w);
		return true;
	};
	add(identity_aut(nc), "");
	for (size_t i = 0; i < elems_.size(); ++i)
		for (size_t j = 0; j < ng.size(); ++j)
		{
			SemilinearAut h = compose(F, elems_[i], ng[j]);
			add(h, words_[i].empty() ? gens_[j].name : words_[i] + " " + gens_[j].name);
		}
}

std::vector<uint64_t> AutGroup::key(const SemilinearAut &g0) const
{
	SemilinearAut g = normalize(*field_, g0, period_);
	std::vector<uint64_t> k;
	k.push_back((uint64_t)g.frob);
	for (int p : g.perm)
		k.push_back((uint64_t)p);
	for (auto &m : g.maps)
	{
		k.insert(k.end(), {m.A.a, m.A.b, m.A.c, m.A.d, m.lambda});
		k.push_back(m.u_num.size());
		k.insert(k.end(), m.u_num.begin(), m.u_num.end());
		k.push_back(m.u_den.size());
		k.insert(k.end(), m.u_den.begin(), m.u_den.end());
	}
	return k;
}

int AutGroup::find(const SemilinearAut &g) const
{
	auto it = index_.find(key(g));
	return it == index_.end() ? -1 : it->second;
}

int AutGroup::index_of_word(const std::string &w) const
{
	int i = find(eval_word(*field_, gens_, w, (int)elems_[0].perm.size()));
	if (i < 0)
		throw Error(ErrorKind::UnknownGenerator, "word '" + w + "' is not in the group");
	return i;
}

int AutGroup::compose_index(int a, int b) const
{
	int i = find(compose(*field_, elems_[a], elems_[b]));
	if (i < 0)
		throw Error(ErrorKind::InvalidGenerator, "group is not closed under composition");
	return i;
}

int AutGroup::inverse_index(int a) const
{
	int i = find(inverse(*field_, elems_[a]));
	if (i < 0)
		throw Error(ErrorKind::InvalidGenerator, "group is not closed under inversion");
	return i;
}

const std::vector<AutGroup::ConjClass> &AutGroup::classes() const
{
	if (!classes_.empty())
		return classes_;
	std::vector<int> gi, ginv;
	for (auto &g : gens_)
	{
		int i = find(g.aut);
		gi.push_back(i);
		ginv.push_back(inverse_index(i));
	}
	class_of_.assign(elems_.size(), -1);
	for (size_t e = 0; e < elems_.size(); ++e)
	{
		if (class_of_[e] >= 0)
			continue;
		ConjClass c;
		c.rep = (int)e;
		std::deque<int> q{(int)e};
		class_of_[e] = (int)classes_.size();
		while (!q.empty())
		{
			int x = q.front();
			q.pop_front();
			c.members.push_back(x);
			for (size_t j = 0; j < gi.size(); ++j)
			{
				int y = compose_index(compose_index(gi[j], x), ginv[j]);
				if (class_of_[y] < 0)
				{
					class_of_[y] = (int)classes_.size();
					q.push_back(y);
				}
			}
		}
		std::sort(c.members.begin(), c.members.end());
		classes_.push_back(std::move(c));
	}
	return classes_;
}

int AutGroup::class_of(int elem) const
{
	classes();
	return class_of_[elem];
}

bool AutGroup::closed() const
{
	for (size_t a = 0; a < elems_.size(); ++a)
	{
		if (find(inverse(*field_, elems_[a])) < 0)
			return false;
		for (size_t b = 0; b < elems_.size(); ++b)
			if (find(compose(*field_, elems_[a], elems_[b])) < 0)
				return false;
	}
	return true;
}

} // namespace wrep
