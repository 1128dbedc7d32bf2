#include <doctest.h>

#include <cmath>
#include <random>

#include "fakelines/errors.hpp"
#include "fakelines/pipeline.hpp"
#include "fakelines/polyfield.hpp"

using namespace fakelines;

namespace
{

// Discriminant from the four roots +-sqrt(a) +- sqrt(b), in long double.
long double biquadratic_disc_numeric(long a, long b)
{
    const long double sa = std::sqrt(static_cast<long double>(a)), sb = std::sqrt(static_cast<long double>(b));
    const long double r[4] = {sa + sb, sa - sb, -sa + sb, -sa - sb};
    long double d = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            d *= (r[i] - r[j]) * (r[i] - r[j]);
    return d;
}

int sign_changes_on_grid(const IntPolynomial &f, long lo, long hi, long steps_per_unit)
{
    int changes = 0;
    int prev = 0;
    for (long i = lo * steps_per_unit; i <= hi * steps_per_unit; ++i)
    {
        Rational x(i, steps_per_unit);
        x.canonicalize();
        int s = sgn(f.eval(x));
        if (s == 0)
        {
            ++changes; // exact root on the grid
            prev = 0;
            continue;
        }
        if (prev != 0 && s != prev)
            ++changes;
        prev = s;
    }
    return changes;
}

NumberField bundled_field(long d)
{
    for (const auto &row : load_bundled())
        if (row.d_k == d)
            return make_context(row).K();
    throw std::runtime_error("missing");
}

} // namespace

TEST_SUITE("polyfield")
{
    TEST_CASE("polynomial basics")
    {
        IntPolynomial f{5, 0, -5, 0, 1};
        CHECK(f.degree() == 4);
        CHECK(f.to_string() == "x^4 - 5*x^2 + 5");
        CHECK(f.eval(Integer(2)) == 1);
        CHECK(f.eval(Rational(1, 2)) == Rational(61, 16));
        CHECK_THROWS_AS(IntPolynomial({1, 2}), NotMonic);
        CHECK_THROWS_AS(IntPolynomial(std::vector<Integer>{Integer(3)}), NotMonic);
    }

    TEST_CASE("discriminant matches the root product")
    {
        for (long a = 2; a < 12; ++a)
            for (long b = a + 1; b < 14; ++b)
            {
                IntPolynomial f{(a - b) * (a - b), 0, -2 * (a + b), 0, 1};
                long double want = biquadratic_disc_numeric(a, b);
                CHECK(poly_disc(f).get_d() == doctest::Approx(static_cast<double>(want)).epsilon(1e-9));
            }
        CHECK(poly_disc(IntPolynomial{-2, 0, 1}) == 8);
        CHECK(poly_disc(IntPolynomial{1, 1, 1}) == -3);
        CHECK(poly_disc(IntPolynomial{1, -1, -3, 1, 1}) == 725 * 1); // x^4 + x^3 - 3x^2 - x + 1
    }

    TEST_CASE("Sturm counts agree with a fine sign-change grid")
    {
        for (const auto &row : load_bundled())
        {
            IntPolynomial f(row.coeffs);
            CHECK(sturm_count(f, Rational(-30), Rational(30)) == f.degree());
            CHECK(sign_changes_on_grid(f, -30, 30, 256) == f.degree());
            CHECK(sturm_count(f, Rational(0), Rational(30)) == sign_changes_on_grid(f, 0, 30, 256) -
                                                                   (sgn(f.eval(Rational(0))) == 0 ? 1 : 0));
        }
        IntPolynomial g{-6, 11, -6, 1}; // (x-1)(x-2)(x-3)
        CHECK(sturm_count(g, Rational(1), Rational(3)) == 2);
        CHECK(sturm_count(g, Rational(0), Rational(1)) == 1);
        CHECK_FALSE(is_totally_real(IntPolynomial{1, 0, 0, 0, 1}));
        CHECK_THROWS_AS(is_totally_real(IntPolynomial{1, 0, -2, 0, 1}), NotSquarefree);
    }

    TEST_CASE("root isolation and refinement")
    {
        IntPolynomial f{5, 0, -5, 0, 1};
        auto iso = isolate_real_roots(f);
        REQUIRE(iso.size() == 4);
        for (size_t i = 0; i + 1 < iso.size(); ++i)
            CHECK(iso[i].second <= iso[i + 1].first);
        auto roots = real_roots(f, 100);
        REQUIRE(roots.size() == 4);
        const double want[4] = {-std::sqrt(2.5 + std::sqrt(1.25)), -std::sqrt(2.5 - std::sqrt(1.25)),
                                std::sqrt(2.5 - std::sqrt(1.25)), std::sqrt(2.5 + std::sqrt(1.25))};
        for (int i = 0; i < 4; ++i)
        {
            CHECK(roots[i].width() < std::ldexp(1.0, -99));
            CHECK(roots[i].mid() == doctest::Approx(want[i]).epsilon(1e-14));
        }
    }

    TEST_CASE("field construction validates")
    {
        IntPolynomial f{5, 0, -5, 0, 1};
        NumberField K = field_new(f, 2000, 20u);
        CHECK(K.index() == 1);
        CHECK(*K.cyclotomic_tag() == 20);
        CHECK_THROWS_AS(field_new(f, 2001), DiscMismatch);
        CHECK_THROWS_AS(field_new(IntPolynomial{1, 0, 0, 0, 1}, 256), NotTotallyReal);
        NumberField L = bundled_field(1229312);
        CHECK(L.index() * L.index() * L.disc() == poly_disc(L.poly()));
        CHECK_THROWS_AS(check_no_rational_root(IntPolynomial{6, -3, 0, -2, 1}), Reducible);
        CHECK_NOTHROW(check_no_rational_root(f));
        CHECK(root_disc(K).mid() == doctest::Approx(std::pow(2000.0, 0.25)).epsilon(1e-14));
    }

    TEST_CASE("field arithmetic satisfies ring axioms")
    {
        NumberField K = bundled_field(2000);
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> d(-9, 9);
        auto rnd = [&]() {
            std::vector<Rational> c;
            for (int i = 0; i < 4; ++i)
                c.emplace_back(d(rng), 1 + std::abs(d(rng)));
            for (auto &x : c)
                x.canonicalize();
            return FieldElement::from_coords(K, c);
        };
        for (int i = 0; i < 200; ++i)
        {
            auto a = rnd(), b = rnd(), c = rnd();
            CHECK((a + b) == (b + a));
            CHECK((a * b) == (b * a));
            CHECK(((a * b) * c) == (a * (b * c)));
            CHECK((a * (b + c)) == (a * b + a * c));
            CHECK((a - a).is_zero());
            CHECK((a * FieldElement::one(K)) == a);
        }
        int checked = 0;
        for (int i = 0; i < 1000; ++i)
        {
            auto a = rnd();
            if (a.is_zero())
                continue;
            CHECK((a * a.inverse()) == FieldElement::one(K));
            CHECK(field_arith(a, a, FieldOp::inv) == a.inverse());
            ++checked;
        }
        CHECK(checked > 990);
        auto t = FieldElement::theta(K);
        CHECK(eval_at(K.poly().coeffs(), t).is_zero());
        CHECK(t.pow(4) == t.pow(2) * Rational(5) - FieldElement::one(K) * Rational(5));
        CHECK_THROWS_AS(FieldElement::zero(K).inverse(), DivisionByZero);
        auto reducible = std::make_shared<const IntPolynomial>(IntPolynomial{-1, 0, 1});
        FieldElement xm1(reducible, {Rational(-1), Rational(1)});
        CHECK_THROWS_AS(xm1.inverse(), ZeroDivisor);
    }

    TEST_CASE("cyclotomic polynomials")
    {
        auto mobius = [](unsigned n) {
            int mu = 1;
            for (auto [p, k] : nt::factorize(n))
            {
                if (k > 1)
                    return 0;
                mu = -mu;
            }
            return mu;
        };
        for (unsigned n = 1; n <= 60; ++n)
        {
            auto c = cyclotomic_poly(n);
            CHECK(c.size() - 1 == nt::euler_phi(n));
            Rational want = 1;
            for (unsigned d = 1; d <= n; ++d)
                if (n % d == 0)
                {
                    int mu = mobius(n / d);
                    Rational v = Rational((Integer(1) << d) - 1);
                    if (mu == 1)
                        want *= v;
                    else if (mu == -1)
                        want /= v;
                }
            Integer at2 = 0;
            for (size_t i = c.size(); i-- > 0;)
                at2 = at2 * 2 + c[i];
            CHECK(Rational(at2) == want);
        }
        for (unsigned q : {5u, 7u, 8u, 9u, 11u, 12u, 13u, 16u})
        {
            IntPolynomial psi = real_cyclotomic_poly(q);
            CHECK(static_cast<std::uint64_t>(psi.degree()) == nt::euler_phi(q) / 2);
            for (unsigned k = 1; k < q; ++k)
            {
                if (std::gcd(k, q) != 1)
                    continue;
                long double x = 2 * std::cos(2 * 3.14159265358979323846264338L * k / q), v = 0;
                for (int i = psi.degree(); i >= 0; --i)
                    v = v * x + psi[i].get_d();
                CHECK(std::fabs(static_cast<double>(v)) < 1e-9);
            }
        }
        CHECK(real_cyclotomic_disc(5) == 5);
        CHECK(real_cyclotomic_disc(7) == 49);
        CHECK(real_cyclotomic_disc(8) == 8);
        CHECK(real_cyclotomic_disc(9) == 81);
        CHECK(real_cyclotomic_disc(12) == 12);
        CHECK(real_cyclotomic_disc(16) == 2048);
        CHECK(real_cyclotomic_disc(20) == 2000);
    }

    TEST_CASE("real cyclotomic subfields")
    {
        NumberField k2000 = bundled_field(2000);
        std::optional<FieldElement> w;
        CHECK(contains_real_cyclotomic(k2000, 5, &w) == Containment::yes);
        REQUIRE(w);
        CHECK(eval_at(real_cyclotomic_poly(5).coeffs(), *w).is_zero());
        CHECK(contains_real_cyclotomic(k2000, 3) == Containment::yes);
        CHECK(contains_real_cyclotomic(k2000, 8) == Containment::no);
        CHECK(contains_real_cyclotomic(k2000, 20) == Containment::yes);

        NumberField k2304 = bundled_field(2304);
        CHECK(contains_real_cyclotomic(k2304, 8) == Containment::yes);
        CHECK(contains_real_cyclotomic(k2304, 12) == Containment::yes);
        CHECK(contains_real_cyclotomic(k2304, 5) == Containment::no);

        NumberField k453789 = bundled_field(453789);
        CHECK(contains_real_cyclotomic(k453789, 7, &w) == Containment::yes);
        CHECK(eval_at(real_cyclotomic_poly(7).coeffs(), *w).is_zero());
        CHECK(contains_real_cyclotomic(k453789, 9) == Containment::no);

        // untagged field; the answer must come from the certificate
        NumberField k725 = bundled_field(725);
        CHECK(contains_real_cyclotomic(k725, 5, &w) == Containment::yes);
        CHECK(eval_at(real_cyclotomic_poly(5).coeffs(), *w).is_zero());
    }
}
