#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fakelines/errors.hpp"
#include "fakelines/pipeline.hpp"
#include "fakelines/primedec.hpp"

using namespace fakelines;

namespace
{

using P = std::vector<long>; // mod-p polynomial, constant first

void strip(P &a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// remainder of a by monic b, or empty optional-like flag via return
bool divides(const P &b, P a, long p, P &quot)
{
    strip(a);
    const size_t db = b.size() - 1;
    if (a.size() < b.size())
        return false;
    quot.assign(a.size() - db, 0);
    for (size_t i = a.size(); i-- > db;)
    {
        long c = ((a[i] % p) + p) % p;
        quot[i - db] = c;
        for (size_t j = 0; j <= db; ++j)
            a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    strip(a);
    return a.empty();
}

// Trial division by every monic polynomial in increasing degree.
std::vector<std::pair<P, int>> brute_factor(P f, long p)
{
    std::vector<std::pair<P, int>> out;
    for (size_t d = 1; f.size() > 1 && d < f.size(); ++d)
    {
        long count = 1;
        for (size_t i = 0; i < d; ++i)
            count *= p;
        for (long code = 0; code < count && f.size() > 1; ++code)
        {
            P g(d + 1, 0);
            long c = code;
            for (size_t i = 0; i < d; ++i, c /= p)
                g[i] = c % p;
            g[d] = 1;
            int mult = 0;
            P q;
            while (f.size() > 1 && divides(g, f, p, q))
            {
                f = q;
                ++mult;
            }
            if (mult)
                out.emplace_back(g, mult);
        }
    }
    return out;
}

std::vector<std::pair<P, int>> as_pairs(const std::vector<ModFactor> &fs)
{
    std::vector<std::pair<P, int>> out;
    for (const auto &f : fs)
        out.emplace_back(P(f.factor.begin(), f.factor.end()), f.multiplicity);
    std::sort(out.begin(), out.end());
    return out;
}

const FieldTableRow &row_for(long d)
{
    static const auto rows = load_bundled();
    for (const auto &r : rows)
        if (r.d_k == d)
            return r;
    throw std::runtime_error("missing row");
}

PrimeDecomposer decomposer(long d) { return *make_context(row_for(d)).dec; }

std::vector<std::pair<int, int>> sorted(std::vector<std::pair<int, int>> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

bool pm1(std::uint64_t a, std::uint64_t n) { return a % n == 1 % n || (a + 1) % n == 0; }

} // namespace

TEST_SUITE("primedec")
{
    TEST_CASE("factorization mod 2 and 3 matches trial division")
    {
        std::mt19937_64 rng(11);
        for (long p : {2L, 3L})
            for (int t = 0; t < 150; ++t)
            {
                const int deg = 1 + static_cast<int>(rng() % 8);
                std::vector<Integer> c;
                P cp;
                for (int i = 0; i < deg; ++i)
                {
                    long v = static_cast<long>(rng() % 7) - 3;
                    c.emplace_back(v);
                    cp.push_back(((v % p) + p) % p);
                }
                c.emplace_back(1);
                cp.push_back(1);
                auto want = brute_factor(cp, p);
                std::sort(want.begin(), want.end());
                CHECK(as_pairs(factor_mod_p(IntPolynomial(c), static_cast<std::uint64_t>(p))) == want);
            }
        for (const auto &row : load_bundled())
            for (long p : {2L, 3L, 5L})
            {
                P cp;
                for (const auto &x : row.coeffs)
                    cp.push_back(((x.get_si() % p) + p) % p);
                auto want = brute_factor(cp, p);
                std::sort(want.begin(), want.end());
                CHECK(as_pairs(factor_mod_p(IntPolynomial(row.coeffs), static_cast<std::uint64_t>(p))) == want);
            }
    }

    TEST_CASE("factor order is by degree")
    {
        auto fs = factor_mod_p(IntPolynomial{1, -1, -4, 0, 1}, 3);
        for (size_t i = 0; i + 1 < fs.size(); ++i)
            CHECK(modp::degree(fs[i].factor) <= modp::degree(fs[i + 1].factor));
    }

    TEST_CASE("Dedekind criterion agrees with the index")
    {
        for (const auto &row : load_bundled())
        {
            auto fc = make_context(row);
            for (auto p : fc.dec->bad_primes())
                CHECK(dedekind_index_test(fc.K().poly(), p) == (fc.K().index() % p == 0));
        }
    }

    TEST_CASE("fundamental identity for p <= 100")
    {
        for (const auto &row : load_bundled())
        {
            auto fc = make_context(row);
            for (auto p : nt::primes_up_to(100))
            {
                auto s = fc.dec->decompose(p);
                CHECK(s.total_degree() == row.m);
                CHECK(s.ideals().size() == s.factors.size());
                bool ramified = std::any_of(s.factors.begin(), s.factors.end(), [](auto ef) { return ef.first > 1; });
                if (ramified)
                    CHECK(row.d_k % p == 0);
            }
        }
    }

    TEST_CASE("cyclotomic splitting")
    {
        for (std::uint64_t n = 3; n <= 60; ++n)
            for (auto p : nt::primes_up_to(50))
            {
                auto t = cyclotomic_splitting(n, p);
                CHECK(static_cast<std::uint64_t>(t.e * t.f * t.g) == nt::euler_phi(n));
                std::uint64_t np = n;
                int a = 0;
                while (np % p == 0)
                    np /= p, ++a;
                CHECK(static_cast<std::uint64_t>(t.e) == nt::euler_phi(nt::ipow(p, static_cast<unsigned>(a))));
                CHECK(static_cast<std::uint64_t>(t.f) == (np == 1 ? 1 : nt::multiplicative_order(p % np, np)));
                CHECK(abelian_splitting(AbelianPresentation::make(n, {1}), p) == t);
            }
    }

    TEST_CASE("abelian presentations validate")
    {
        CHECK_THROWS_AS(AbelianPresentation::make(20, {1, 3}), ValidationError);
        CHECK_THROWS_AS(AbelianPresentation::make(20, {1, 2}), ValidationError);
        CHECK(AbelianPresentation::real_cyclotomic(20).degree() == 4);
        CHECK(AbelianPresentation::real_cyclotomic(7, 56).degree() == 3);
    }

    TEST_CASE("abelian and Kummer routes agree on the cyclotomic quartics")
    {
        for (long d : {1125L, 2000L, 2304L})
        {
            auto dec = decomposer(d);
            auto pres = AbelianPresentation::real_cyclotomic(*dec.field().cyclotomic_tag());
            for (auto p : nt::primes_up_to(100))
            {
                auto ab = abelian_prime_splitting(pres, p);
                CHECK(sorted(ab.factors) == sorted(dec.decompose(p).factors));
                if (dec.field().index() % p != 0)
                    CHECK(sorted(kummer_dedekind(dec.field(), p).factors) == sorted(ab.factors));
            }
        }
    }

    TEST_CASE("external splittings agree with abelian presentations")
    {
        struct Case
        {
            long d;
            AbelianPresentation pres;
        };
        // Q(sqrt5, sqrt3), Q(zeta9)^+ Q(sqrt5), Q(zeta7)^+ Q(sqrt2)
        std::vector<Case> cases = {
            {3600, AbelianPresentation::from_predicate(60, [](auto a) { return pm1(a, 5) && pm1(a, 12); })},
            {820125, AbelianPresentation::from_predicate(45, [](auto a) { return pm1(a, 9) && pm1(a, 5); })},
            {1229312, AbelianPresentation::from_predicate(56, [](auto a) { return pm1(a, 7) && pm1(a, 8); })},
        };
        for (const auto &c : cases)
        {
            auto dec = decomposer(c.d);
            REQUIRE(static_cast<int>(c.pres.degree()) == dec.field().degree());
            // the presentation describes this field: unramified primes split identically
            for (auto p : nt::primes_up_to(200))
                if (c.d % p != 0 && dec.field().index() % p != 0)
                    CHECK(sorted(abelian_prime_splitting(c.pres, p).factors) ==
                          sorted(kummer_dedekind(dec.field(), p).factors));
            for (const auto &[p, shape] : dec.overrides())
            {
                CHECK(dec.decompose(p).source == SplittingSource::external);
                CHECK(sorted(abelian_prime_splitting(c.pres, p).factors) == sorted(shape));
            }
        }
    }

    TEST_CASE("decomposer errors")
    {
        auto row = row_for(1229312);
        NumberField K = make_context(row).K();
        CHECK_THROWS_AS(kummer_dedekind(K, 2), IndexDivisible);
        PrimeDecomposer bare(K);
        CHECK_THROWS_AS(bare.decompose(2), MissingSplitting);
        CHECK_THROWS_AS(PrimeDecomposer(K, {{2, {{1, 1}}}}), ValidationError);
    }

    TEST_CASE("ideal tags")
    {
        PrimeIdeal a{2, 2, 2, 0}, b{7, 1, 1, 1};
        CHECK(a.tag() == "2^2");
        CHECK(a.norm() == 4);
        CHECK(b.tag() == "7^1#1");
        auto ideals = decomposer(820125).decompose(19).ideals();
        REQUIRE(ideals.size() == 6);
        CHECK(ideals[5].ordinal == 5);
    }

    TEST_CASE("quadratic extension splitting: Frobenius route against presentations")
    {
        for (long d : {2000L, 2304L})
        {
            auto dec = decomposer(d);
            const std::uint64_t N = *dec.field().cyclotomic_tag();
            for (unsigned q : {3u, 4u, 5u, 8u})
            {
                if (contains_real_cyclotomic(dec.field(), q) != Containment::yes)
                    continue;
                const std::uint64_t M = std::lcm<std::uint64_t>(N, q);
                auto hk = AbelianPresentation::from_predicate(M, [&](auto a) { return pm1(a, N); });
                auto hl = AbelianPresentation::from_predicate(M, [&](auto a) { return pm1(a, N) && a % q == 1; });
                REQUIRE(hk.H.size() == 2 * hl.H.size());
                for (auto p : nt::primes_up_to(60))
                {
                    const bool want = abelian_splitting(hl, p).g == 2 * abelian_splitting(hk, p).g;
                    for (const auto &P : dec.decompose(p).ideals())
                    {
                        auto got = splits_in_quadratic_ext(dec.field(), P, q);
                        REQUIRE(got != SplitVerdict::undetermined);
                        CHECK((got == SplitVerdict::split) == want);
                    }
                }
            }
        }
        // no tag and p | q: nothing to decide with
        auto dec = decomposer(106069);
        CHECK(splits_in_quadratic_ext(dec.field(), dec.decompose(2).ideals()[0], 4) == SplitVerdict::undetermined);
    }

    TEST_CASE("fast unramified pass matches full factorization")
    {
        std::vector<int> got;
        for (long d : {725L, 38569L, 1387029L, 1229312L})
        {
            auto dec = decomposer(d);
            UnramifiedSplitter sp(dec.field().poly());
            for (auto p : nt::primes_up_to(20000))
            {
                if (std::find(dec.bad_primes().begin(), dec.bad_primes().end(), p) != dec.bad_primes().end())
                    continue;
                sp.degrees(p, got);
                CHECK(got == kummer_dedekind(dec.field(), p).inertia_degrees());
            }
        }
    }
}
