#include <doctest.h>

#include <numeric>

#include "fakelines/errors.hpp"
#include "fakelines/interval.hpp"
#include "fakelines/numtheory.hpp"

using namespace fakelines;

TEST_SUITE("numtheory")
{
    TEST_CASE("primality against trial division")
    {
        auto slow = [](std::uint64_t n) {
            if (n < 2)
                return false;
            for (std::uint64_t d = 2; d * d <= n; ++d)
                if (n % d == 0)
                    return false;
            return true;
        };
        for (std::uint64_t n = 0; n < 5000; ++n)
            CHECK(nt::is_prime(n) == slow(n));
        CHECK(nt::is_prime(2305843009213693951ull));
        CHECK_FALSE(nt::is_prime(3215031751ull)); // strong pseudoprime to 2,3,5,7
    }

    TEST_CASE("factorize multiplies back")
    {
        for (std::uint64_t n : {1ull, 2ull, 360ull, 1229312ull, 453789ull, 999999999989ull})
        {
            std::uint64_t prod = 1;
            for (auto [p, k] : nt::factorize(n))
            {
                CHECK(nt::is_prime(p));
                for (int i = 0; i < k; ++i)
                    prod *= p;
            }
            CHECK(prod == n);
        }
    }

    TEST_CASE("phi and orders")
    {
        for (std::uint64_t n = 1; n < 200; ++n)
        {
            std::uint64_t count = 0;
            for (std::uint64_t a = 1; a <= n; ++a)
                count += std::gcd(a, n) == 1;
            CHECK(nt::euler_phi(n) == count);
            CHECK(nt::units_mod(n).size() == count);
        }
        CHECK(nt::multiplicative_order(2, 7) == 3);
        CHECK(nt::multiplicative_order(3, 7) == 6);
        CHECK(nt::valuation(1229312, 2) == 9);
        CHECK(nt::invmod(3, 7) == 5);
    }

    TEST_CASE("sieve")
    {
        auto ps = nt::primes_up_to(100);
        CHECK(ps.size() == 25);
        CHECK(ps.back() == 97);
    }
}

TEST_SUITE("interval")
{
    TEST_CASE("pi and roots enclose the truth")
    {
        Interval pi = Interval::pi();
        CHECK(pi.contains(mpq_class(62831853, 20000000)) == false);
        CHECK(pi.lower().to_double() <= 3.141592653589793);
        CHECK(pi.upper().to_double() >= 3.141592653589793);
        Interval two = Interval::from_integer(2);
        Interval s = two.sqrt();
        Interval sq = s * s;
        CHECK(sq.contains(mpq_class(2)));
        CHECK(sq.width() < 1e-50);
        Interval c = Interval::from_integer(1000).root(3);
        CHECK(c.contains(mpq_class(10)));
    }

    TEST_CASE("exp and log are inverse")
    {
        Interval x = Interval::from_rational(mpq_class(7, 3));
        CHECK(x.log().exp().contains(mpq_class(7, 3)));
        CHECK(Interval::from_integer(1).exp().relative_width() < 1e-50);
    }

    TEST_CASE("ordering and signs")
    {
        Interval a = Interval::from_rationals(1, 2), b = Interval::from_rationals(3, 4);
        CHECK(a.certainly_less(b));
        CHECK_FALSE(b.certainly_less(a));
        CHECK((a - b).negative());
        CHECK(Interval::from_rationals(-1, 1).contains_zero());
        CHECK((a * b).contains(mpq_class(5)));
        CHECK((b / a).contains(mpq_class(3, 2)));
        CHECK(a.scale2(3).contains(mpq_class(12)));
    }
}
