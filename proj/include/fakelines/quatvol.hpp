#pragma once

#include <set>
#include <utility>
#include <vector>

#include "fakelines/interval.hpp"
#include "fakelines/primedec.hpp"

namespace fakelines
{

/// A(k; m, n, d_A): split at n infinite places, ramified at the listed finite primes.
struct QuaternionAlgebra
{
    NumberField K;
    int n = 0;
    std::vector<PrimeIdeal> ram;

    int m() const { return K.degree(); }
    int r() const { return static_cast<int>(ram.size()); }
    /// prod (N p - 1) over the ramified primes
    Integer norm_product() const;
    std::string describe() const;
};

/// Validates the descriptor against the decomposition of K.
/// Throws ParityViolation, NotDivision, UnknownIdealTag.
QuaternionAlgebra algebra_new(const PrimeDecomposer &dec, int n, std::vector<PrimeIdeal> ram);

/// Resolve the ordinal-th ideal of inertia degree f above p.
PrimeIdeal find_ideal(const PrimeDecomposer &dec, std::uint64_t p, int f, int ordinal = 0);

/// (-1)^(m+n) 2^(n-m+1) zeta_k(-1) prod(Np - 1); the orbifold Euler number, sign (-1)^n.
Rational euler_number(const QuaternionAlgebra &A, const Rational &zeta_m1);

/// |euler_number|, the normalized covolume of the norm-one group.
Rational covolume_norm1(const QuaternionAlgebra &A, const Rational &zeta_m1);

/// 2^(n-2m+1) pi^(-2m) d_k^(3/2) zeta_k(2) prod(Np - 1), positive.
Interval euler_crosscheck(const QuaternionAlgebra &A, const Interval &zeta2);

struct VolumeReport
{
    Rational vol_norm1;
    Rational euler;
    Interval euler_analytic;
    Rational required_index;
};

VolumeReport volume_report(const QuaternionAlgebra &A, const Rational &zeta_m1, const Interval &zeta2);

/// Number of primes of K above 2.
int dyadic_count(const PrimeDecomposer &dec);

/// g(k, A) = d^(3/2) zeta_k(2) / (2^(2m-1+t) pi^(2m) [k_A:k]).
Interval g_invariant(const PrimeDecomposer &dec, const Interval &zeta2, long ka_index = 1);

/// 2^(t-t'+n) g(k,A) prod_{Np != 2} (Np - 1)/2, t' the ramified primes of norm 2.
Interval vol_normalizer(const QuaternionAlgebra &A, const PrimeDecomposer &dec, const Interval &g);

/// 0.142 exp(0.051 m - 19.0745 / [k'_A:k]).
Interval cf_lower_bound(int m, long kpa_index = 1);

/// Largest m for which the bound at [k'_A:k] = 1 does not exceed 1.
int max_degree();

/// Zimmert-type regulator lower bound c1 exp(c2 m); placeholder constants.
struct RegulatorConstants
{
    double c1 = 0.02;
    double c2 = 0.46;
};

double regulator_lower_bound(int m, const RegulatorConstants &c = {});

/// h_k <= 2^(2-m) d_k zeta_k(2) / (pi^m R_lower); only s = 2. Throws UnsupportedS.
Interval brauer_siegel_hbound(const NumberField &K, double s, const Interval &zeta2, double r_lower);

/// (2 pi)^(4/3) / 2^(2/(3m)).
Interval root_disc_ceiling(int m);

/// Smallest root discriminant of a totally real field of degree m, 4 <= m <= 8.
double odlyzko_voight_min(int m);

struct LatticeIndices
{
    Integer norm1_to_max;
    std::set<Rational> eichler_range;
};

/// 2^r [k_A:k], and {2^-s prod(Nq + 1) : 0 <= s <= |S|}.
LatticeIndices maximal_lattice_index(int r, long ka_index, const std::vector<Integer> &eichler_norms);

} // namespace fakelines
