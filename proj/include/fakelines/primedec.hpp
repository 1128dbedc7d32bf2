#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fakelines/polyfield.hpp"

namespace fakelines
{

/// Polynomial over F_p, constant term first, no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

namespace modp
{
ModPoly reduce(const IntPolynomial &f, std::uint64_t p);
ModPoly from_rational_poly(const RatPoly &f, std::uint64_t p);
int degree(const ModPoly &a);
ModPoly mul(const ModPoly &a, const ModPoly &b, std::uint64_t p);
std::pair<ModPoly, ModPoly> divmod(const ModPoly &a, const ModPoly &b, std::uint64_t p);
ModPoly gcd(ModPoly a, ModPoly b, std::uint64_t p);
ModPoly make_monic(ModPoly a, std::uint64_t p);
std::string to_string(const ModPoly &a);
} // namespace modp

struct ModFactor
{
    ModPoly factor; // monic irreducible
    int multiplicity;

    bool operator==(const ModFactor &o) const = default;
};

/// Squarefree, distinct-degree and equal-degree factorization of f mod p.
/// Factors come back sorted by degree then coefficients, from the top down.
std::vector<ModFactor> factor_mod_p(const IntPolynomial &f, std::uint64_t p);

/// Dedekind's criterion: true iff p divides [O_k : Z[theta]].
bool dedekind_index_test(const IntPolynomial &f, std::uint64_t p);

/// A prime ideal of K above p, distinguished by ordinal among ideals with the same (e, f).
struct PrimeIdeal
{
    std::uint64_t p = 0;
    int e = 1;
    int f = 1;
    int ordinal = 0;

    Integer norm() const;
    /// "p^f", with "#k" appended for the k-th ideal of the same shape when k > 0.
    std::string tag() const;
    auto operator<=>(const PrimeIdeal &o) const = default;
};

enum class SplittingSource
{
    kummer,
    abelian,
    external
};

std::string to_string(SplittingSource s);

struct PrimeSplitting
{
    std::uint64_t p = 0;
    std::vector<std::pair<int, int>> factors; // (e, f), sorted
    SplittingSource source = SplittingSource::kummer;

    int total_degree() const;
    std::vector<int> inertia_degrees() const;
    std::vector<PrimeIdeal> ideals() const;
};

/// Kummer-Dedekind read-off. Throws IndexDivisible when p divides the index.
PrimeSplitting kummer_dedekind(const NumberField &K, std::uint64_t p);

struct SplittingType
{
    int e;
    int f;
    int g;
    bool operator==(const SplittingType &o) const = default;
};

SplittingType cyclotomic_splitting(std::uint64_t n, std::uint64_t p);

/// Subfield of Q(zeta_M) fixed by the subgroup H of (Z/M)^*.
struct AbelianPresentation
{
    std::uint64_t M = 1;
    std::vector<std::uint64_t> H;

    /// Validates closure and coprimality, returning a sorted copy.
    static AbelianPresentation make(std::uint64_t M, std::vector<std::uint64_t> H);
    /// H = {+-1 mod N} seen inside (Z/M)^*, M a multiple of N.
    static AbelianPresentation real_cyclotomic(std::uint64_t N, std::uint64_t M = 0);
    /// H = {a : pred(a)}.
    template <class Pred> static AbelianPresentation from_predicate(std::uint64_t M, Pred pred)
    {
        std::vector<std::uint64_t> h;
        for (auto a : nt::units_mod(M))
            if (pred(a))
                h.push_back(a);
        return make(M, std::move(h));
    }

    std::uint64_t degree() const;
};

SplittingType abelian_splitting(const AbelianPresentation &pres, std::uint64_t p);

/// Splitting taken from abelian_splitting, expanded to per-ideal factors.
PrimeSplitting abelian_prime_splitting(const AbelianPresentation &pres, std::uint64_t p);

enum class SplitVerdict
{
    split,
    nonsplit,
    undetermined
};

std::string to_string(SplitVerdict v);

/// Behaviour of the prime ideal in k(zeta_q)/k, assuming that extension is quadratic.
SplitVerdict splits_in_quadratic_ext(const NumberField &K, const PrimeIdeal &ideal, unsigned q);

/// Per-field decomposition with optional externally supplied data.
class PrimeDecomposer
{
public:
    using Overrides = std::map<std::uint64_t, std::vector<std::pair<int, int>>>;

    explicit PrimeDecomposer(NumberField K, Overrides overrides = {});

    const NumberField &field() const { return K_; }
    const Overrides &overrides() const { return overrides_; }

    /// Full splitting of p. Throws MissingSplitting if no backend applies.
    PrimeSplitting decompose(std::uint64_t p) const;

    /// Primes dividing disc(f); every other prime is unramified with Kummer shape.
    const std::vector<std::uint64_t> &bad_primes() const { return bad_primes_; }

private:
    NumberField K_;
    Overrides overrides_;
    std::vector<std::uint64_t> bad_primes_;
};

/// Inertia degrees of a prime not dividing disc(f), distinct-degree pass only.
/// Keeps its scratch buffers between calls; one instance per thread.
class UnramifiedSplitter
{
public:
    explicit UnramifiedSplitter(const IntPolynomial &f);

    /// Sorted inertia degrees of p (p must not divide disc(f), p < 2^28).
    void degrees(std::uint32_t p, std::vector<int> &out);

private:
    int m_;
    std::vector<Integer> coeffs_;
    std::vector<std::int64_t> small_;
    bool small_ok_;
};

} // namespace fakelines
