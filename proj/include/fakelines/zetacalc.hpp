#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fakelines/interval.hpp"
#include "fakelines/primedec.hpp"

namespace fakelines
{

constexpr std::uint64_t kDefaultCutoff = 2000000;

/// Primes up to a limit, shared between Euler products.
class PrimeTable
{
public:
    explicit PrimeTable(std::uint64_t limit);
    std::uint64_t limit() const { return limit_; }
    const std::vector<std::uint32_t> &primes() const { return primes_; }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> primes_;
};

std::shared_ptr<const PrimeTable> shared_primes(std::uint64_t limit);

struct Zeta2Result
{
    Interval value;        // encloses zeta_k(2)
    Interval truncated;    // encloses the finite product alone
    std::uint64_t cutoff;
};

/// Euler product over p <= cutoff with the tail bound exp(m / (cutoff - 1)).
/// Throws MissingSplitting when a ramified prime has no decomposition.
Zeta2Result zeta2_truncated(const PrimeDecomposer &dec, std::uint64_t cutoff, unsigned jobs = 1);

/// Denominator bound for zeta_k(-1) in degree m.
Integer denominator_bound(int m);

/// The looser bound 2^(3m) 3^m prod{p : (p-1) | 2m} p.
Integer generous_denominator_bound(int m);

struct ZetaValues
{
    Interval zeta2;
    Rational zeta_minus1;
    std::uint64_t cutoff;
    Integer B;
};

/// Interval for (-1)^m 2^-m pi^-2m d^(3/2) zeta_k(2).
Interval functional_equation(const Interval &zeta2, const Integer &d_k, int m, mpfr_prec_t prec = kDefaultPrecision);

/// Inverse direction: zeta_k(2) from an exact zeta_k(-1).
Interval zeta2_from_minus1(const Rational &zeta_m1, const Integer &d_k, int m, mpfr_prec_t prec = kDefaultPrecision);

struct ZetaOptions
{
    std::uint64_t cutoff = kDefaultCutoff;
    int max_doublings = 4;
    Integer B = 0; // 0 selects denominator_bound(m)
    unsigned jobs = 1;
};

/// Exact zeta_k(-1) by reconstruction from the Euler product.
ZetaValues zeta_minus1(const PrimeDecomposer &dec, const ZetaOptions &opts = {});

/// Element of Q(zeta_o) reduced modulo the o-th cyclotomic polynomial.
class CyclotomicNumber
{
public:
    explicit CyclotomicNumber(unsigned order = 1);
    static CyclotomicNumber rational(unsigned order, const Rational &r);
    /// zeta_o^k
    static CyclotomicNumber root(unsigned order, long k);

    unsigned order() const { return order_; }
    const std::vector<Rational> &coeffs() const { return coeffs_; }
    bool is_rational() const;
    Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

    CyclotomicNumber operator+(const CyclotomicNumber &o) const;
    CyclotomicNumber operator-(const CyclotomicNumber &o) const;
    CyclotomicNumber operator*(const CyclotomicNumber &o) const;
    CyclotomicNumber operator*(const Rational &r) const;
    bool operator==(const CyclotomicNumber &o) const;

    std::string to_string() const;

private:
    void reduce();
    unsigned order_;
    std::vector<Rational> coeffs_;
};

class DirichletCharacter
{
public:
    DirichletCharacter(unsigned modulus, unsigned order, std::vector<int> exps);

    unsigned modulus() const { return modulus_; }
    /// Values live in the order-th roots of unity.
    unsigned value_order() const { return order_; }
    /// Exponent k with chi(a) = zeta_order^k, or -1 when gcd(a, N) > 1.
    int exponent(std::uint64_t a) const { return exps_[a % modulus_]; }
    CyclotomicNumber value(std::uint64_t a) const;

    bool is_even() const;
    bool is_trivial() const;
    unsigned conductor() const { return conductor_; }
    /// The primitive character inducing this one.
    DirichletCharacter primitive() const;

private:
    unsigned modulus_;
    unsigned order_;
    std::vector<int> exps_;
    unsigned conductor_;
};

/// All phi(N) characters mod N.
std::vector<DirichletCharacter> dirichlet_characters(unsigned N);

/// B_{2,chi} evaluated at the conductor. Throws OddCharacter.
CyclotomicNumber bernoulli_B2(const DirichletCharacter &chi);

/// zeta of Q(zeta_N)^+ at -1 as the product of -B_{2,chi}/2 over even characters.
Rational zeta_minus1_abelian(unsigned N);

} // namespace fakelines
