#include "wrep/error.hpp"
#include "wrep/weilrep.hpp"

#include <cmath>
#include <sstream>

namespace wrep {

GammaRing::GammaRing(int f, Int c) : f_(f), c_(std::move(c))
{
	if (f_ < 1 || c_ == 0)
		throw Error(ErrorKind::InvalidModel, "gamma ring needs f >= 1 and c != 0");
}

GammaRing::Elem GammaRing::zero() const { return Elem(f_, Rat(0)); }

GammaRing::Elem GammaRing::from_rat(const Rat &r) const
{
	Elem e = zero();
	e[0] = r;
	return e;
}

GammaRing::Elem GammaRing::gamma_power(int64_t k) const
{
	int64_t q = k / f_, r = k % f_;
	if (r < 0)
	{
		r += f_;
		--q;
	}
	Elem e = zero();
	Rat s = 1;
	for (int64_t i = 0; i < std::abs(q); ++i)
		s *= Rat(c_);
	e[r] = q >= 0 ? s : Rat(1) / s;
	return e;
}

GammaRing::Elem GammaRing::conjugate(const Elem &a, const Int &q) const
{
	Elem r = zero();
	Rat qk = 1;
	for (int k = 0; k < f_; ++k)
	{
		if (a[k] != 0)
			r = add(r, scale(gamma_power(-k), a[k] * qk));
		qk *= Rat(q);
	}
	return r;
}

GammaRing::Elem GammaRing::add(const Elem &a, const Elem &b) const
{
	Elem r = zero();
	for (int i = 0; i < f_; ++i)
		r[i] = a[i] + b[i];
	return r;
}

GammaRing::Elem GammaRing::mul(const Elem &a, const Elem &b) const
{
	std::vector<Rat> t(2 * f_, Rat(0));
	for (int i = 0; i < f_; ++i)
		for (int j = 0; j < f_; ++j)
			t[i + j] += a[i] * b[j];
	Elem r = zero();
	for (int i = 0; i < 2 * f_; ++i)
		r[i % f_] += i >= f_ ? t[i] * Rat(c_) : t[i];
	return r;
}

GammaRing::Elem GammaRing::scale(const Elem &a, const Rat &s) const
{
	Elem r = a;
	for (auto &x : r)
		x *= s;
	return r;
}

std::vector<Rat> GammaRing::charpoly(const Elem &a) const
{
	const int n = f_;
	// multiplication matrix, column i = a * gamma^i
	std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
	for (int i = 0; i < n; ++i)
	{
		Elem col = mul(a, gamma_power(i));
		for (int r = 0; r < n; ++r)
			A[r][i] = col[r];
	}
	// Faddeev-LeVerrier
	std::vector<Rat> cp(n + 1, Rat(0));
	cp[n] = 1;
	std::vector<std::vector<Rat>> Mk(n, std::vector<Rat>(n, Rat(0)));
	for (int k = 1; k <= n; ++k)
	{
		std::vector<std::vector<Rat>> AM(n, std::vector<Rat>(n, Rat(0)));
		for (int i = 0; i < n; ++i)
			for (int l = 0; l < n; ++l)
			{
				if (Mk[i][l] == 0)
					continue;
				for (int j = 0; j < n; ++j)
					AM[j][l] += A[j][i] * Mk[i][l];
			}
		// M_k = A M_{k-1} + c_{n-k+1} I
		for (int i = 0; i < n; ++i)
			AM[i][i] += cp[n - k + 1];
		Mk = AM;
		Rat tr = 0;
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				tr += A[i][j] * Mk[j][i];
		cp[n - k] = -tr / k;
	}
	return cp;
}

bool GammaRing::is_algebraic_integer(const Elem &a) const
{
	for (auto &x : charpoly(a))
		if (!is_integer(x))
			return false;
	return true;
}

std::optional<Rat> GammaRing::rational(const Elem &a) const
{
	for (int i = 1; i < f_; ++i)
		if (a[i] != 0)
			return std::nullopt;
	return a[0];
}

cplx GammaRing::embedding_gamma(int k) const
{
	const long double pi = std::acos(-1.0L);
	long double mag = std::pow(std::fabs(c_.convert_to<long double>()), 1.0L / f_);
	long double arg = (c_ < 0 ? pi : 0.0L) / f_ + 2 * pi * k / f_;
	return std::polar(mag, arg);
}

cplx GammaRing::evaluate(const Elem &a, int k) const
{
	cplx g = embedding_gamma(k), p = 1, s = 0;
	for (int i = 0; i < f_; ++i)
	{
		s += a[i].convert_to<long double>() * p;
		p *= g;
	}
	return s;
}

std::string GammaRing::to_string(const Elem &a) const
{
	std::ostringstream os;
	bool any = false;
	for (int i = 0; i < f_; ++i)
	{
		if (a[i] == 0)
			continue;
		if (any)
			os << " + ";
		os << wrep::to_string(a[i]);
		if (i == 1)
			os << "*g";
		else if (i > 1)
			os << "*g^" << i;
		any = true;
	}
	return any ? os.str() : "0";
}

} // namespace wrep
