#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace fakelines
{

constexpr mpfr_prec_t kDefaultPrecision = 192;

/// Owning wrapper around an mpfr_t.
class BigFloat
{
public:
    explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision);
    BigFloat(const BigFloat &other);
    BigFloat(BigFloat &&other) noexcept;
    BigFloat &operator=(const BigFloat &other);
    BigFloat &operator=(BigFloat &&other) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
    std::string to_string(int digits = 20) const;

private:
    mpfr_t value_;
};

/// Closed interval [lo, hi] with outward rounding on every operation.
class Interval
{
public:
    explicit Interval(mpfr_prec_t prec = kDefaultPrecision);

    static Interval from_integer(const mpz_class &v, mpfr_prec_t prec = kDefaultPrecision);
    static Interval from_rational(const mpq_class &v, mpfr_prec_t prec = kDefaultPrecision);
    static Interval from_rationals(const mpq_class &lo, const mpq_class &hi, mpfr_prec_t prec = kDefaultPrecision);
    static Interval from_bounds(double lo, double hi, mpfr_prec_t prec = kDefaultPrecision);
    static Interval pi(mpfr_prec_t prec = kDefaultPrecision);

    const BigFloat &lower() const { return lo_; }
    const BigFloat &upper() const { return hi_; }
    mpfr_prec_t precision() const { return lo_.precision(); }

    Interval operator+(const Interval &o) const;
    Interval operator-(const Interval &o) const;
    Interval operator*(const Interval &o) const;
    Interval operator/(const Interval &o) const;
    Interval operator-() const;

    Interval pow(long k) const;
    /// Multiply by 2^k (exact).
    Interval scale2(long k) const;
    Interval sqrt() const;
    Interval exp() const;
    Interval log() const;
    /// k-th root of a positive interval.
    Interval root(unsigned long k) const;

    bool contains(const mpq_class &v) const;
    bool contains_zero() const;
    bool positive() const;
    bool negative() const;
    /// Every point of *this is strictly below every point of o.
    bool certainly_less(const Interval &o) const;

    double mid() const;
    double width() const;
    /// width / |mid|; infinite when the interval straddles zero.
    double relative_width() const;
    std::string to_string(int digits = 15) const;

private:
    BigFloat lo_, hi_;
};

} // namespace fakelines
