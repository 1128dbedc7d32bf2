#include <doctest.h>

#include <cmath>

#include "fakelines/errors.hpp"
#include "fakelines/quatvol.hpp"
#include "test_support.hpp"

using namespace fakelines;
using fakelines::testing::field;

TEST_SUITE("quatvol")
{
    TEST_CASE("algebra descriptors validate")
    {
        const auto &fc = field(2000);
        const auto &dec = *fc.dec;
        auto p2 = find_ideal(dec, 2, 2), p5 = find_ideal(dec, 5, 1);
        CHECK(p2.norm() == 4);
        auto A = algebra_new(dec, 4, {p5, p2});
        CHECK(A.r() == 2);
        CHECK(A.ram.front().p == 2);
        CHECK(A.norm_product() == 12);
        CHECK(A.describe() == "A(2000;4,4,p2^2*p5^1)");
        CHECK_THROWS_AS(algebra_new(dec, 4, {p2}), ParityViolation);
        CHECK_THROWS_AS(algebra_new(dec, 4, {}), NotDivision);
        CHECK_THROWS_AS(algebra_new(dec, 4, {p2, p2}), ValidationError);
        CHECK_THROWS_AS(find_ideal(dec, 2, 1), UnknownIdealTag);
        CHECK_THROWS_AS(find_ideal(dec, 9, 1), UnknownIdealTag);
        CHECK_THROWS_AS(algebra_new(dec, 4, {PrimeIdeal{3, 1, 1, 0}, p5}), UnknownIdealTag);
    }

    TEST_CASE("Euler number, sign and covolume")
    {
        const auto &fc = field(2000);
        auto p2 = find_ideal(*fc.dec, 2, 2), p5 = find_ideal(*fc.dec, 5, 1);
        auto A = algebra_new(*fc.dec, 4, {p2, p5});
        CHECK(euler_number(A, fc.zeta_m1()) == 16);
        CHECK(covolume_norm1(A, fc.zeta_m1()) == 16);
        auto B = algebra_new(*fc.dec, 3, {p5});
        CHECK(euler_number(B, fc.zeta_m1()) == Rational(-8, 3));
        CHECK(covolume_norm1(B, fc.zeta_m1()) == Rational(8, 3));
        auto C = algebra_new(*fc.dec, 2, {});
        CHECK(euler_number(C, fc.zeta_m1()) == Rational(1, 3));

        auto rep = volume_report(A, fc.zeta_m1(), fc.zeta->zeta2);
        CHECK(rep.required_index == 1);
        CHECK(rep.euler_analytic.contains(Rational(16)));
        CHECK(rep.euler_analytic.relative_width() < 1e-5);
    }

    TEST_CASE("normalized volume equals vol / (2^r [k_A:k])")
    {
        struct Case
        {
            long d;
            int n;
            std::vector<std::pair<std::uint64_t, int>> ram;
        };
        for (const Case &c : std::vector<Case>{{2000, 4, {{2, 2}, {5, 1}}},
                                               {2304, 4, {{2, 1}, {3, 2}}},
                                               {1957, 4, {{3, 1}, {7, 1}}},
                                               {38569, 4, {{7, 1}}},
                                               {106069, 4, {{2, 1}}},
                                               {453789, 4, {}}})
        {
            const auto &fc = field(c.d);
            std::vector<PrimeIdeal> ram;
            for (auto [p, f] : c.ram)
                ram.push_back(find_ideal(*fc.dec, p, f));
            auto A = algebra_new(*fc.dec, c.n, ram);
            for (long ka : {1L, 2L})
            {
                Interval g = g_invariant(*fc.dec, fc.zeta->zeta2, ka);
                Rational want = covolume_norm1(A, fc.zeta_m1()) / Rational(maximal_lattice_index(A.r(), ka, {}).norm1_to_max);
                CHECK(vol_normalizer(A, *fc.dec, g).contains(want));
            }
        }
    }

    TEST_CASE("degree bound")
    {
        // 0.142 exp(0.051 m - 19.0745) <= 1  <=>  m <= (19.0745 - ln 0.142) / 0.051
        const int want = static_cast<int>(std::floor((19.0745 - std::log(0.142)) / 0.051));
        CHECK(max_degree() == want);
        CHECK(max_degree() == 412);
        CHECK(cf_lower_bound(412).upper().to_double() <= 1.0);
        CHECK(cf_lower_bound(413).lower().to_double() > 1.0);
        CHECK(cf_lower_bound(10, 2).mid() == doctest::Approx(0.142 * std::exp(0.51 - 19.0745 / 2)));
        CHECK_THROWS_AS(cf_lower_bound(0), ValidationError);
    }

    TEST_CASE("root discriminant ceilings")
    {
        for (int m = 4; m <= 8; ++m)
        {
            double want = std::pow(2 * M_PI, 4.0 / 3) / std::pow(2.0, 2.0 / (3 * m));
            CHECK(root_disc_ceiling(m).mid() == doctest::Approx(want).epsilon(1e-13));
            CHECK(root_disc_ceiling(m).width() < 1e-40);
        }
        CHECK(odlyzko_voight_min(6) == doctest::Approx(8.182));
        CHECK_THROWS_AS(odlyzko_voight_min(9), ValidationError);
    }

    TEST_CASE("class number bound")
    {
        const auto &fc = field(725);
        const double r = regulator_lower_bound(4);
        CHECK(r == doctest::Approx(0.02 * std::exp(0.46 * 4)));
        Interval h = brauer_siegel_hbound(fc.K(), 2, fc.zeta->zeta2, r);
        double want = std::pow(2.0, -2) * 725 * fc.zeta->zeta2.mid() / (std::pow(M_PI, 4) * r);
        CHECK(h.mid() == doctest::Approx(want));
        CHECK(h.mid() >= 1.0); // h(k725) = 1
        CHECK_THROWS_AS(brauer_siegel_hbound(fc.K(), 3, fc.zeta->zeta2, r), UnsupportedS);
    }

    TEST_CASE("lattice indices")
    {
        auto li = maximal_lattice_index(2, 3, {Integer(2), Integer(3)});
        CHECK(li.norm1_to_max == 12);
        CHECK(li.eichler_range == std::set<Rational>{Rational(12), Rational(6), Rational(3)});
        CHECK(maximal_lattice_index(0, 1, {}).eichler_range == std::set<Rational>{Rational(1)});
    }
}
