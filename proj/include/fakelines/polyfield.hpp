#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fakelines/interval.hpp"
#include "fakelines/numtheory.hpp"

namespace fakelines
{

/// Monic polynomial with integer coefficients, constant term first.
class IntPolynomial
{
public:
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer> &coeffs() const { return coeffs_; }
    const Integer &operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }

    Integer eval(const Integer &x) const;
    Rational eval(const Rational &x) const;

    /// Human form such as x^4 - 5*x^2 + 5.
    std::string to_string() const;

    bool operator==(const IntPolynomial &o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Integer> coeffs_;
};

/// Dense polynomial over Q, constant term first, no trailing zeros.
using RatPoly = std::vector<Rational>;

namespace qpoly
{
RatPoly from(const IntPolynomial &f);
int degree(const RatPoly &a);
void trim(RatPoly &a);
RatPoly derivative(const RatPoly &a);
RatPoly sub(const RatPoly &a, const RatPoly &b);
RatPoly mul(const RatPoly &a, const RatPoly &b);
/// Quotient and remainder; b nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly &a, const RatPoly &b);
RatPoly monic_gcd(RatPoly a, RatPoly b);
Rational eval(const RatPoly &a, const Rational &x);
} // namespace qpoly

Integer poly_disc(const IntPolynomial &f);

/// Throws NotSquarefree when gcd(f, f') is not constant.
bool is_totally_real(const IntPolynomial &f);

/// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const IntPolynomial &f, const Rational &a, const Rational &b);

/// Disjoint rational intervals (lo, hi], each holding exactly one real root, ascending.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPolynomial &f);

/// All real roots refined by exact bisection to width below 2^-bits.
std::vector<Interval> real_roots(const IntPolynomial &f, mpfr_prec_t bits);

/// Quick rational-root screen over divisors of the constant term; throws Reducible.
void check_no_rational_root(const IntPolynomial &f);

class NumberField
{
public:
    const IntPolynomial &poly() const { return *f_; }
    std::shared_ptr<const IntPolynomial> poly_ptr() const { return f_; }
    int degree() const { return f_->degree(); }
    const Integer &disc() const { return d_k_; }
    /// [O_k : Z[theta]]
    const Integer &index() const { return index_; }
    std::optional<unsigned> cyclotomic_tag() const { return tag_; }

    friend NumberField field_new(const IntPolynomial &f, const Integer &d_k, std::optional<unsigned> tag);

private:
    std::shared_ptr<const IntPolynomial> f_;
    Integer d_k_;
    Integer index_;
    std::optional<unsigned> tag_;
};

/// Validates disc(f) = index^2 * d_k and total reality.
NumberField field_new(const IntPolynomial &f, const Integer &d_k, std::optional<unsigned> tag = std::nullopt);

/// d_k^(1/m) as a certified interval.
Interval root_disc(const NumberField &K, mpfr_prec_t prec = kDefaultPrecision);

/// Element of Q[x]/(f) in power-basis coordinates.
class FieldElement
{
public:
    FieldElement(std::shared_ptr<const IntPolynomial> modulus, std::vector<Rational> coords);
    static FieldElement zero(const NumberField &K);
    static FieldElement one(const NumberField &K);
    static FieldElement theta(const NumberField &K);
    static FieldElement from_coords(const NumberField &K, std::vector<Rational> coords);

    const std::vector<Rational> &coords() const { return coords_; }
    const std::shared_ptr<const IntPolynomial> &modulus() const { return modulus_; }
    bool is_zero() const;

    FieldElement operator+(const FieldElement &o) const;
    FieldElement operator-(const FieldElement &o) const;
    FieldElement operator*(const FieldElement &o) const;
    FieldElement operator*(const Rational &c) const;
    /// Throws DivisionByZero for 0 and ZeroDivisor when f turns out reducible.
    FieldElement inverse() const;
    FieldElement pow(unsigned k) const;

    bool operator==(const FieldElement &o) const { return coords_ == o.coords_; }

private:
    void check_same(const FieldElement &o) const;

    std::shared_ptr<const IntPolynomial> modulus_;
    std::vector<Rational> coords_;
};

enum class FieldOp
{
    add,
    mul,
    inv
};

/// inv ignores b.
FieldElement field_arith(const FieldElement &a, const FieldElement &b, FieldOp op);

/// Evaluate an integer polynomial at a field element.
FieldElement eval_at(const std::vector<Integer> &coeffs, const FieldElement &x);

enum class Containment
{
    yes,
    no,
    undetermined
};

std::string to_string(Containment c);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_poly(unsigned n);

/// Minimal polynomial of 2cos(2 pi / q).
IntPolynomial real_cyclotomic_poly(unsigned q);

/// Discriminant of Q(zeta_q + zeta_q^-1).
Integer real_cyclotomic_disc(unsigned q);

/// Decides Q(zeta_q)^+ inside K. Yes answers carry an exact certificate.
Containment contains_real_cyclotomic(const NumberField &K, unsigned q, mpfr_prec_t start_bits = 128);

/// Variant that returns the certified element when the answer is yes.
Containment contains_real_cyclotomic(const NumberField &K, unsigned q, std::optional<FieldElement> *witness,
                                     mpfr_prec_t start_bits = 128);

} // namespace fakelines
