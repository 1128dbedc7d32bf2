#include "fakelines/quatvol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fakelines/errors.hpp"

namespace fakelines
{

namespace
{

Rational frac(const Integer &a, const Integer &b)
{
    Rational q(a, b);
    q.canonicalize();
    return q;
}

} // namespace

Integer QuaternionAlgebra::norm_product() const
{
    Integer prod = 1;
    for (const auto &P : ram)
        prod *= P.norm() - 1;
    return prod;
}

std::string QuaternionAlgebra::describe() const
{
    std::ostringstream out;
    out << "A(" << K.disc() << ";" << m() << "," << n << ",";
    if (ram.empty())
        out << "1";
    for (size_t i = 0; i < ram.size(); ++i)
        out << (i ? "*" : "") << "p" << ram[i].tag();
    out << ")";
    return out.str();
}

PrimeIdeal find_ideal(const PrimeDecomposer &dec, std::uint64_t p, int f, int ordinal)
{
    if (!nt::is_prime(p))
        throw UnknownIdealTag(std::to_string(p) + " is not prime");
    int seen = 0;
    for (const auto &P : dec.decompose(p).ideals())
    {
        if (P.f != f)
            continue;
        if (seen++ == ordinal)
            return P;
    }
    throw UnknownIdealTag("no prime of inertia degree " + std::to_string(f) + " above " + std::to_string(p) +
                          " in field of discriminant " + dec.field().disc().get_str());
}

QuaternionAlgebra algebra_new(const PrimeDecomposer &dec, int n, std::vector<PrimeIdeal> ram)
{
    const int m = dec.field().degree();
    if (n < 1 || n > m)
        throw ValidationError("need 1 <= n <= m, got n = " + std::to_string(n));
    std::sort(ram.begin(), ram.end());
    if (std::adjacent_find(ram.begin(), ram.end()) != ram.end())
        throw ValidationError("duplicate ramified prime");
    for (const auto &P : ram)
    {
        auto ideals = dec.decompose(P.p).ideals();
        if (std::find(ideals.begin(), ideals.end(), P) == ideals.end())
            throw UnknownIdealTag("p" + P.tag() + " with e = " + std::to_string(P.e) + " is not a prime of the field");
    }
    const int r = static_cast<int>(ram.size());
    if ((m - n + r) % 2 != 0)
        throw ParityViolation("m - n + r = " + std::to_string(m - n + r) + " is odd");
    if ((m - n) + r < 1)
        throw NotDivision("no ramified place, the algebra is a matrix algebra");
    return QuaternionAlgebra{dec.field(), n, std::move(ram)};
}

Rational euler_number(const QuaternionAlgebra &A, const Rational &zeta_m1)
{
    const int m = A.m(), n = A.n;
    Rational v = zeta_m1 * A.norm_product();
    const int e = n - m + 1;
    if (e >= 0)
        mpz_mul_2exp(v.get_num_mpz_t(), v.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpz_mul_2exp(v.get_den_mpz_t(), v.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    v.canonicalize();
    return ((m + n) % 2 == 0) ? v : Rational(-v);
}

Rational covolume_norm1(const QuaternionAlgebra &A, const Rational &zeta_m1)
{
    return abs(euler_number(A, zeta_m1));
}

Interval euler_crosscheck(const QuaternionAlgebra &A, const Interval &zeta2)
{
    const int m = A.m();
    const mpfr_prec_t prec = zeta2.precision();
    Interval d = Interval::from_integer(A.K.disc(), prec);
    Interval v = zeta2 * d * d.sqrt() * Interval::from_integer(A.norm_product(), prec) / Interval::pi(prec).pow(2 * m);
    return v.scale2(A.n - 2 * m + 1);
}

VolumeReport volume_report(const QuaternionAlgebra &A, const Rational &zeta_m1, const Interval &zeta2)
{
    VolumeReport r{covolume_norm1(A, zeta_m1), euler_number(A, zeta_m1), euler_crosscheck(A, zeta2), Rational(0)};
    Rational two_n(1);
    mpz_mul_2exp(two_n.get_num_mpz_t(), two_n.get_num_mpz_t(), static_cast<mp_bitcnt_t>(A.n));
    r.required_index = two_n / r.vol_norm1;
    return r;
}

int dyadic_count(const PrimeDecomposer &dec) { return static_cast<int>(dec.decompose(2).factors.size()); }

Interval g_invariant(const PrimeDecomposer &dec, const Interval &zeta2, long ka_index)
{
    if (ka_index < 1)
        throw ValidationError("[k_A:k] must be positive");
    const int m = dec.field().degree();
    const int t = dyadic_count(dec);
    const mpfr_prec_t prec = zeta2.precision();
    Interval d = Interval::from_integer(dec.field().disc(), prec);
    Interval v = zeta2 * d * d.sqrt() / (Interval::pi(prec).pow(2 * m) * Interval::from_integer(Integer(ka_index), prec));
    return v.scale2(-(2 * m - 1 + t));
}

Interval vol_normalizer(const QuaternionAlgebra &A, const PrimeDecomposer &dec, const Interval &g)
{
    const int t = dyadic_count(dec);
    int t_prime = 0;
    Rational prod = 1;
    for (const auto &P : A.ram)
    {
        if (P.norm() == 2)
            ++t_prime;
        else
            prod *= frac(P.norm() - 1, 2);
    }
    return (g * Interval::from_rational(prod, g.precision())).scale2(t - t_prime + A.n);
}

Interval cf_lower_bound(int m, long kpa_index)
{
    if (m < 1 || kpa_index < 1)
        throw ValidationError("cf_lower_bound needs m >= 1 and [k'_A:k] >= 1");
    Interval a = Interval::from_rational(frac(51, 1000)) * Interval::from_integer(m);
    Interval b = Interval::from_rational(frac(190745, 10000)) / Interval::from_integer(Integer(kpa_index));
    return Interval::from_rational(frac(142, 1000)) * (a - b).exp();
}

int max_degree()
{
    Interval one = Interval::from_integer(1);
    int m = 1;
    while (!one.certainly_less(cf_lower_bound(m + 1, 1)))
        ++m;
    return m;
}

double regulator_lower_bound(int m, const RegulatorConstants &c) { return c.c1 * std::exp(c.c2 * m); }

Interval brauer_siegel_hbound(const NumberField &K, double s, const Interval &zeta2, double r_lower)
{
    if (s != 2.0)
        throw UnsupportedS("only s = 2 is implemented");
    if (!(r_lower > 0))
        throw ValidationError("regulator lower bound must be positive");
    const int m = K.degree();
    const mpfr_prec_t prec = zeta2.precision();
    Interval v = Interval::from_integer(K.disc(), prec) * zeta2 /
                 (Interval::pi(prec).pow(m) * Interval::from_bounds(r_lower, r_lower, prec));
    return v.scale2(2 - m);
}

Interval root_disc_ceiling(int m)
{
    if (m < 1)
        throw ValidationError("degree must be positive");
    Interval two_pi = Interval::pi().scale2(1);
    Interval num = (two_pi.log() * Interval::from_rational(frac(4, 3))).exp();
    Interval den = (Interval::from_integer(2).log() * Interval::from_rational(frac(2, 3 * m))).exp();
    return num / den;
}

double odlyzko_voight_min(int m)
{
    switch (m)
    {
    case 4:
        return 5.189;
    case 5:
        return 6.809;
    case 6:
        return 8.182;
    case 7:
        return 11.051;
    case 8:
        return 11.385;
    default:
        throw ValidationError("minimal root discriminant tabulated only for 4 <= m <= 8");
    }
}

LatticeIndices maximal_lattice_index(int r, long ka_index, const std::vector<Integer> &eichler_norms)
{
    if (r < 0 || ka_index < 1)
        throw ValidationError("need r >= 0 and [k_A:k] >= 1");
    LatticeIndices out;
    out.norm1_to_max = Integer(ka_index);
    mpz_mul_2exp(out.norm1_to_max.get_mpz_t(), out.norm1_to_max.get_mpz_t(), static_cast<mp_bitcnt_t>(r));
    Rational prod = 1;
    for (const auto &N : eichler_norms)
        prod *= N + 1;
    for (size_t s = 0; s <= eichler_norms.size(); ++s)
    {
        Rational v = prod;
        mpz_mul_2exp(v.get_den_mpz_t(), v.get_den_mpz_t(), static_cast<mp_bitcnt_t>(s));
        v.canonicalize();
        out.eichler_range.insert(v);
    }
    return out;
}

} // namespace fakelines
