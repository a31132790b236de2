#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wrep {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t lcm_u64(uint64_t a, uint64_t b);
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m);

// inverse of a modulo m, requires gcd(a, m) = 1
uint64_t invmod_u64(uint64_t a, uint64_t m);

bool is_prime_u64(uint64_t n);

// prime factorization by trial division, primes ascending
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

uint64_t euler_phi(uint64_t n);

// p^e, or 0 if it does not fit in 64 bits
uint64_t checked_pow(uint64_t p, unsigned e);

Int ipow(const Int &b, unsigned e);

bool is_integer(const Rat &r);

std::string to_string(const Int &x);
std::string to_string(const Rat &x);

} // namespace wrep
