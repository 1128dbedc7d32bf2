#include "fakelines/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace fakelines::nt
{

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0)
    {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m)
{
    // extended Euclid on signed 128-bit to stay clear of overflow
    __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
    __int128 old_s = 1, s = 0;
    while (r != 0)
    {
        __int128 q = old_r / r;
        __int128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw std::domain_error("invmod: argument is not a unit");
    __int128 mm = static_cast<__int128>(m);
    old_s %= mm;
    if (old_s < 0)
        old_s += mm;
    return static_cast<std::uint64_t>(old_s);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
    {
        if (n % p == 0)
            return n == p;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0)
    {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
    {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i)
        {
            x = mulmod(x, x, n);
            if (x == n - 1)
            {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    {
        if (n % p != 0)
            continue;
        int k = 0;
        while (n % p == 0)
        {
            n /= p;
            ++k;
        }
        out.emplace_back(p, k);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t result = n;
    for (auto [p, k] : factorize(n))
        result = result / p * (p - 1);
    return result;
}

int valuation(std::uint64_t n, std::uint64_t p)
{
    int v = 0;
    while (n != 0 && n % p == 0)
    {
        n /= p;
        ++v;
    }
    return v;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n)
{
    if (n == 1)
        return 1;
    if (std::gcd(a, n) != 1)
        throw std::domain_error("multiplicative_order: argument not coprime to modulus");
    std::uint64_t order = euler_phi(n);
    for (auto [p, k] : factorize(order))
    {
        for (int i = 0; i < k; ++i)
        {
            if (powmod(a, order / p, n) == 1)
                order /= p;
            else
                break;
        }
    }
    return order;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
    std::uint64_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint32_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i)
    {
        if (composite[i])
            continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

bool is_perfect_square(const Integer &n, Integer *root)
{
    if (n < 0)
        return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0)
        return false;
    if (root != nullptr)
        mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

std::vector<std::uint64_t> units_mod(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 0; a < n; ++a)
        if (std::gcd(a, n) == 1)
            out.push_back(a);
    if (n == 1)
        out = {0};
    return out;
}

} // namespace fakelines::nt
