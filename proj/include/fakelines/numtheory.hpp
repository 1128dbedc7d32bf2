#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fakelines
{

using Integer = mpz_class;
using Rational = mpq_class;

namespace nt
{

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; a must be a unit.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// p-adic valuation of n (n > 0).
int valuation(std::uint64_t n, std::uint64_t p);

/// Order of a in (Z/n)^*; a must be coprime to n.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Sieve of Eratosthenes; primes <= limit in ascending order.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

/// Exact integer square root when n is a perfect square.
bool is_perfect_square(const Integer &n, Integer *root = nullptr);

/// Residues in [0, n) coprime to n.
std::vector<std::uint64_t> units_mod(std::uint64_t n);

} // namespace nt
} // namespace fakelines
