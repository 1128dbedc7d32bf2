#include <doctest.h>

#include "fakelines/errors.hpp"
#include "fakelines/torsion.hpp"
#include "test_support.hpp"

using namespace fakelines;
using fakelines::testing::field;

namespace
{

QuaternionAlgebra algebra(long d, int n, std::vector<std::pair<std::uint64_t, int>> tags)
{
    const auto &fc = field(d);
    std::vector<PrimeIdeal> ram;
    for (auto [p, f] : tags)
        ram.push_back(find_ideal(*fc.dec, p, f));
    return algebra_new(*fc.dec, n, ram);
}

} // namespace

TEST_SUITE("torsion")
{
    TEST_CASE("torsion orders")
    {
        CHECK(torsion_orders(field(2000).K()) == std::vector<unsigned>{3, 4, 5});
        CHECK(torsion_orders(field(2304).K()) == std::vector<unsigned>{3, 4, 8});
        auto o = torsion_orders(field(453789).K());
        CHECK(o == std::vector<unsigned>{3, 4, 7});
        for (auto q : torsion_orders(field(38569).K()))
            CHECK((q == 3 || q == 4 || q == 11));
    }

    TEST_CASE("Hasse embedding criterion")
    {
        auto A2000 = algebra(2000, 4, {{2, 2}, {5, 1}});
        CHECK(embeds_root_of_unity(A2000, 3) == Containment::no);
        CHECK(embeds_root_of_unity(A2000, 4) == Containment::no);
        CHECK(embeds_root_of_unity(A2000, 5) == Containment::no);
        auto A1957 = algebra(1957, 4, {{3, 1}, {7, 1}});
        CHECK(embeds_root_of_unity(A1957, 4) == Containment::yes);
        auto A453789 = algebra(453789, 4, {});
        CHECK(embeds_root_of_unity(A453789, 7) == Containment::yes);
        CHECK(embeds_root_of_unity(A453789, 3) == Containment::yes);
        CHECK_THROWS_AS(embeds_root_of_unity(A2000, 8), ValidationError);
    }

    TEST_CASE("adding a ramified prime only removes embeddings")
    {
        const auto &fc = field(2000);
        std::vector<PrimeIdeal> ideals;
        for (std::uint64_t p : {2ull, 3ull, 5ull, 11ull, 19ull})
            for (const auto &P : fc.dec->decompose(p).ideals())
                ideals.push_back(P);
        auto base = algebra_new(*fc.dec, 2, {});
        for (size_t i = 0; i < ideals.size(); ++i)
            for (size_t j = i + 1; j < ideals.size(); ++j)
            {
                auto A = algebra_new(*fc.dec, 2, {ideals[i], ideals[j]});
                for (unsigned q : {3u, 4u, 5u})
                {
                    auto big = embeds_root_of_unity(A, q);
                    CHECK(big != Containment::undetermined);
                    if (big == Containment::yes)
                        CHECK(embeds_root_of_unity(base, q) == Containment::yes);
                }
            }
    }

    TEST_CASE("index divisors")
    {
        CHECK(torsion_index_divisor(algebra(2000, 4, {{2, 2}, {5, 1}})) == 1);
        CHECK(torsion_index_divisor(algebra(2304, 4, {{2, 1}, {3, 2}})) == 1);
        CHECK(torsion_index_divisor(algebra(1957, 4, {{3, 1}, {7, 1}})) % 2 == 0);
        Integer d = torsion_index_divisor(algebra(453789, 4, {}));
        CHECK(d % 21 == 0);
        CHECK(6 % d != 0);
        CHECK_THROWS_AS(torsion_index_divisor(algebra(106069, 4, {{2, 1}})), UndeterminedTorsion);
    }

    TEST_CASE("verdicts")
    {
        auto v = fake_verdict(algebra(2000, 4, {{2, 2}, {5, 1}}), field(2000).zeta_m1());
        CHECK(v.status == VerdictStatus::fake_confirmed);
        CHECK(v.euler == 16);
        CHECK(v.torsion.complete());
        v = fake_verdict(algebra(2304, 4, {{2, 1}, {3, 2}}), field(2304).zeta_m1());
        CHECK(v.status == VerdictStatus::fake_confirmed);
        v = fake_verdict(algebra(1957, 4, {{3, 1}, {7, 1}}), field(1957).zeta_m1());
        CHECK(v.status == VerdictStatus::eliminated);
        CHECK(v.reason.find("order-2") != std::string::npos);
        v = fake_verdict(algebra(453789, 4, {}), field(453789).zeta_m1());
        CHECK(v.status == VerdictStatus::eliminated);
        CHECK(v.required_index == 6);
        v = fake_verdict(algebra(2000, 2, {}), field(2000).zeta_m1());
        CHECK(v.required_index == 12);
        CHECK(v.status != VerdictStatus::fake_confirmed);
        CHECK_THROWS_AS(fake_verdict(algebra(2000, 3, {{5, 1}}), field(2000).zeta_m1()), OddDimension);
        CHECK(to_string(VerdictStatus::candidate_unverified) == "candidate_unverified");
    }
}
