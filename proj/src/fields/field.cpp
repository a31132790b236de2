#include "wrep/error.hpp"
#include "wrep/fields.hpp"
#include "wrep/poly.hpp"

#include <map>
#include <sstream>
#include <unordered_map>

namespace wrep {

namespace {

uint64_t clmul(uint64_t a, uint64_t b)
{
	uint64_t r = 0;
	while (b)
	{
		if (b & 1)
			r ^= a;
		a <<= 1;
		b >>= 1;
	}
	return r;
}

} // namespace

Field::Field(uint32_t p, int s, std::vector<uint32_t> modulus, bool allow_tables)
    : p_(p), s_(s), mod_(std::move(modulus))
{
	if (!is_prime_u64(p))
		throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
	if (s < 1)
		throw Error(ErrorKind::InvalidModel, "extension degree must be positive");
	if ((int)mod_.size() != s + 1 || mod_.back() != 1)
		throw Error(ErrorKind::ReducibleModulus, "modulus must be monic of degree " + std::to_string(s));
	for (uint32_t c : mod_)
		if (c >= p)
			throw Error(ErrorKind::ReducibleModulus, "modulus coefficient out of range");
	uint64_t q = checked_pow(p, s);
	if (q == 0 || q >= (uint64_t(1) << 32))
		throw Error(ErrorKind::FieldBoundExceeded, "field size " + std::to_string(p) + "^" + std::to_string(s) + " exceeds 2^32");
	q_ = q;
	pw_.resize(s + 1);
	pw_[0] = 1;
	for (int i = 1; i <= s; ++i)
		pw_[i] = pw_[i - 1] * p;
	if (p == 2)
		for (int i = 0; i <= s; ++i)
			if (mod_[i])
				modbits_ |= uint64_t(1) << i;
	if (s > 1 && !is_irreducible(p, mod_))
		throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));

	ofac_ = factorize(q_ - 1);
	// smallest primitive element
	for (Elem g = 1; g < q_; ++g)
	{
		bool ok = true;
		for (auto [r, e] : ofac_)
			if (pow_reference(g, (q_ - 1) / r) == 1)
			{
				ok = false;
				break;
			}
		if (ok)
		{
			prim_ = g;
			break;
		}
	}

	if (allow_tables && q_ <= kTableLimit)
	{
		exp_.resize(q_ - 1);
		log_.assign(q_, (uint32_t)(q_ - 1));
		Elem x = 1;
		for (uint64_t k = 0; k + 1 < q_; ++k)
		{
			exp_[k] = x;
			log_[x] = (uint32_t)k;
			x = mul_reference(x, prim_);
		}
	}
}

Elem Field::from_int(int64_t v) const
{
	int64_t r = v % (int64_t)p_;
	if (r < 0)
		r += p_;
	return (Elem)r;
}

std::vector<uint32_t> Field::coeffs(Elem a) const
{
	std::vector<uint32_t> c(s_);
	for (int i = 0; i < s_; ++i)
	{
		c[i] = a % p_;
		a /= p_;
	}
	return c;
}

Elem Field::from_coeffs(const std::vector<uint32_t> &c) const
{
	uint64_t r = 0;
	for (size_t i = 0; i < c.size() && i < (size_t)s_; ++i)
		r += (uint64_t)(c[i] % p_) * pw_[i];
	return (Elem)r;
}

Elem Field::add(Elem a, Elem b) const
{
	if (p_ == 2)
		return a ^ b;
	if (s_ == 1)
	{
		uint64_t r = (uint64_t)a + b;
		return (Elem)(r >= p_ ? r - p_ : r);
	}
	uint64_t r = 0;
	for (int i = 0; i < s_ && (a | b); ++i)
	{
		uint32_t d = a % p_ + b % p_;
		if (d >= p_)
			d -= p_;
		r += d * pw_[i];
		a /= p_;
		b /= p_;
	}
	return (Elem)r;
}

Elem Field::neg(Elem a) const
{
	if (p_ == 2)
		return a;
	uint64_t r = 0;
	for (int i = 0; i < s_ && a; ++i)
	{
		uint32_t d = a % p_;
		r += (d ? p_ - d : 0) * pw_[i];
		a /= p_;
	}
	return (Elem)r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_reference(Elem a, Elem b) const
{
	if (a == 0 || b == 0)
		return 0;
	if (s_ == 1)
		return (Elem)((uint64_t)a * b % p_);
	if (p_ == 2)
	{
		uint64_t r = clmul(a, b);
		for (int k = 2 * s_ - 2; k >= s_; --k)
			if (r >> k & 1)
				r ^= modbits_ << (k - s_);
		return (Elem)r;
	}
	uint64_t da[32], db[32], prod[64] = {};
	for (int i = 0; i < s_; ++i)
	{
		da[i] = a % p_;
		a /= p_;
		db[i] = b % p_;
		b /= p_;
	}
	for (int i = 0; i < s_; ++i)
	{
		if (!da[i])
			continue;
		for (int j = 0; j < s_; ++j)
			prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
	}
	for (int k = 2 * s_ - 2; k >= s_; --k)
	{
		uint64_t c = prod[k];
		if (!c)
			continue;
		for (int i = 0; i < s_; ++i)
			prod[k - s_ + i] = (prod[k - s_ + i] + (p_ - c) * mod_[i]) % p_;
		prod[k] = 0;
	}
	uint64_t r = 0;
	for (int i = 0; i < s_; ++i)
		r += prod[i] * pw_[i];
	return (Elem)r;
}

Elem Field::mul(Elem a, Elem b) const
{
	if (a == 0 || b == 0)
		return 0;
	if (exp_.empty())
		return mul_reference(a, b);
	uint64_t k = (uint64_t)log_[a] + log_[b];
	uint64_t n = q_ - 1;
	return exp_[k >= n ? k - n : k];
}

Elem Field::pow_reference(Elem a, uint64_t e) const
{
	Elem r = 1;
	while (e)
	{
		if (e & 1)
			r = mul_reference(r, a);
		a = mul_reference(a, a);
		e >>= 1;
	}
	return r;
}

Elem Field::pow(Elem a, uint64_t e) const
{
	if (a == 0)
		return e == 0 ? 1 : 0;
	if (!exp_.empty())
		return exp_[mulmod_u64(log_[a], e % (q_ - 1), q_ - 1)];
	Elem r = 1;
	while (e)
	{
		if (e & 1)
			r = mul(r, a);
		a = mul(a, a);
		e >>= 1;
	}
	return r;
}

Elem Field::pow(Elem a, int64_t e) const
{
	if (e >= 0)
		return pow(a, (uint64_t)e);
	if (a == 0)
		throw Error(ErrorKind::ZeroElement, "negative power of zero");
	return pow(inv(a), (uint64_t)(-e));
}

Elem Field::inv(Elem a) const
{
	if (a == 0)
		throw Error(ErrorKind::ZeroElement, "inverse of zero");
	if (!exp_.empty())
	{
		uint32_t l = log_[a];
		return exp_[l == 0 ? 0 : q_ - 1 - l];
	}
	return pow(a, q_ - 2);
}

Elem Field::frob(Elem a, int64_t j) const
{
	int64_t jj = j % s_;
	if (jj < 0)
		jj += s_;
	if (jj == 0 || a == 0)
		return a;
	return pow(a, pw_[jj]);
}

Elem Field::exp(uint64_t k) const
{
	if (!exp_.empty())
		return exp_[k % (q_ - 1)];
	return pow(prim_, k % (q_ - 1));
}

uint64_t Field::dlog(Elem a) const
{
	if (a == 0)
		throw Error(ErrorKind::ZeroElement, "discrete log of zero");
	if (!log_.empty())
		return log_[a];
	return dlog_reference(a);
}

// Pohlig-Hellman over the factorization of q-1, baby-step giant-step per prime.
uint64_t Field::dlog_reference(Elem a) const
{
	const uint64_t n = q_ - 1;
	uint64_t x = 0, mod = 1;
	for (auto [r, e] : ofac_)
	{
		uint64_t re = 1;
		for (int i = 0; i < e; ++i)
			re *= r;
		// gamma = g^(n/r) has order r
		Elem gamma = pow(prim_, n / r);
		uint64_t m = 1;
		while (m * m < r)
			++m;
		std::unordered_map<Elem, uint64_t> baby;
		baby.reserve(m * 2);
		Elem cur = 1;
		for (uint64_t j = 0; j < m; ++j)
		{
			baby.emplace(cur, j);
			cur = mul(cur, gamma);
		}
		Elem giant = inv(pow(gamma, m));
		auto small_log = [&](Elem h) -> uint64_t {
			Elem y = h;
			for (uint64_t i = 0; i <= m; ++i)
			{
				auto it = baby.find(y);
				if (it != baby.end())
					return (i * m + it->second) % r;
				y = mul(y, giant);
			}
			throw Error(ErrorKind::ZeroElement, "discrete log failed");
		};
		// digits of x mod r^e
		uint64_t xr = 0, rk = 1;
		Elem ginv = inv(prim_);
		for (int k = 0; k < e; ++k)
		{
			Elem h = mul(a, pow(ginv, xr));
			h = pow(h, n / (rk * r));
			uint64_t d = small_log(h);
			xr += d * rk;
			rk *= r;
		}
		// combine by CRT
		uint64_t t = mulmod_u64((xr + re - x % re) % re, invmod_u64(mod % re, re), re);
		x += mod * t;
		mod *= re;
		x %= mod;
	}
	return x;
}

uint64_t Field::element_order(Elem a) const
{
	if (a == 0)
		throw Error(ErrorKind::ZeroElement, "order of zero");
	uint64_t o = q_ - 1;
	for (auto [r, e] : ofac_)
		for (int i = 0; i < e && o % r == 0; ++i)
		{
			if (pow(a, o / r) != 1)
				break;
			o /= r;
		}
	return o;
}

uint64_t Field::count_power_roots(Elem c, uint64_t d) const
{
	if (c == 0)
		return 1;
	uint64_t g = gcd_u64(d, q_ - 1);
	return pow(c, (q_ - 1) / g) == 1 ? g : 0;
}

const uint32_t *Field::zech_table() const
{
	if (exp_.empty())
		return nullptr;
	std::call_once(zech_once_, [this] {
		const uint64_t n = q_ - 1;
		zech_.resize(n);
		for (uint64_t k = 0; k < n; ++k)
		{
			Elem v = add(1, exp_[k]);
			zech_[k] = v == 0 ? (uint32_t)n : log_[v];
		}
	});
	return zech_.data();
}

std::string Field::describe() const
{
	std::ostringstream os;
	os << "F_" << p_ << "^" << s_ << " mod [";
	for (size_t i = 0; i < mod_.size(); ++i)
		os << (i ? "," : "") << mod_[i];
	os << "]";
	return os.str();
}

bool is_irreducible(uint32_t p, const std::vector<uint32_t> &modulus)
{
	const int n = (int)modulus.size() - 1;
	if (n < 1)
		return false;
	if (n == 1)
		return true;
	auto Fp = canonical_field(p, 1);
	const Field &F = *Fp;
	Poly f(modulus.begin(), modulus.end());
	for (auto &c : f)
		c = F.from_int(c);
	Poly x = {0, 1};
	// x^(p^k) mod f for k = 1..n
	std::vector<Poly> xp(n + 1);
	xp[0] = x;
	for (int k = 1; k <= n; ++k)
		xp[k] = poly::powmod(F, xp[k - 1], p, f);
	if (!poly::equal(xp[n], poly::mod(F, x, f)))
		return false;
	for (auto [r, e] : factorize(n))
	{
		Poly h = poly::sub(F, xp[n / r], x);
		Poly g = poly::gcd(F, f, h);
		if (poly::degree(g) != 0)
			return false;
	}
	return true;
}

std::vector<uint32_t> canonical_modulus(uint32_t p, int s)
{
	if (s == 1)
		return {0, 1};
	uint64_t total = checked_pow(p, s);
	std::vector<uint32_t> m(s + 1);
	m[s] = 1;
	// c_0 is the most significant digit of idx; c_0 = 0 is never irreducible
	for (uint64_t idx = total / p; idx < total; ++idx)
	{
		uint64_t v = idx;
		for (int i = s - 1; i >= 0; --i)
		{
			m[i] = v % p;
			v /= p;
		}
		if (is_irreducible(p, m))
			return m;
	}
	throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

FieldPtr make_field(uint32_t p, int s, std::optional<std::vector<uint32_t>> modulus)
{
	if (!is_prime_u64(p))
		throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
	if (!modulus)
		return canonical_field(p, s);
	if (*modulus == canonical_modulus(p, s))
		return canonical_field(p, s);
	return std::make_shared<const Field>(p, s, *modulus);
}

FieldPtr canonical_field(uint32_t p, int s)
{
	static std::mutex mu;
	static std::map<std::pair<uint32_t, int>, FieldPtr> cache;
	{
		std::lock_guard<std::mutex> lock(mu);
		auto it = cache.find({p, s});
		if (it != cache.end())
			return it->second;
	}
	if (!is_prime_u64(p))
		throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
	uint64_t q = checked_pow(p, s);
	if (s < 1 || q == 0 || q >= (uint64_t(1) << 32))
		throw Error(ErrorKind::FieldBoundExceeded, "field " + std::to_string(p) + "^" + std::to_string(s) + " is too large");
	// building outside the lock: irreducibility tests recurse into the prime field
	auto F = std::make_shared<const Field>(p, s, canonical_modulus(p, s));
	std::lock_guard<std::mutex> lock(mu);
	auto [it, inserted] = cache.emplace(std::make_pair(p, s), F);
	return it->second;
}

bool within_field_bound(uint32_t p, int s, int max_bits)
{
	if (s < 1 || max_bits < 1)
		return false;
	uint64_t q = checked_pow(p, s);
	int bits = std::min(max_bits, 32);
	return q != 0 && q < (uint64_t(1) << bits);
}

void check_field_bound(uint32_t p, int s, int max_bits)
{
	if (!within_field_bound(p, s, max_bits))
		throw Error(ErrorKind::FieldBoundExceeded,
		            "F_" + std::to_string(p) + "^" + std::to_string(s) + " exceeds the " + std::to_string(max_bits) + "-bit bound");
}

bool same_field(const Field &a, const Field &b)
{
	return &a == &b || (a.p() == b.p() && a.modulus() == b.modulus());
}

int log_p(uint32_t p, uint64_t q)
{
	int e = 0;
	while (q > 1 && q % p == 0)
	{
		q /= p;
		++e;
	}
	return q == 1 ? e : -1;
}

} // namespace wrep
