#include "fakelines/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fakelines
{

BigFloat::BigFloat(mpfr_prec_t prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat &other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&other) noexcept
{
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

BigFloat &BigFloat::operator=(const BigFloat &other)
{
    if (this != &other)
    {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const
{
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
    return std::string(buf.data());
}

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval Interval::from_integer(const mpz_class &v, mpfr_prec_t prec)
{
    Interval r(prec);
    mpfr_set_z(r.lo_.get(), v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.get(), v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_rational(const mpq_class &v, mpfr_prec_t prec)
{
    Interval r(prec);
    mpfr_set_q(r.lo_.get(), v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_rationals(const mpq_class &lo, const mpq_class &hi, mpfr_prec_t prec)
{
    if (lo > hi)
        throw std::invalid_argument("Interval: lower bound exceeds upper bound");
    Interval r(prec);
    mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_bounds(double lo, double hi, mpfr_prec_t prec)
{
    if (!(lo <= hi))
        throw std::invalid_argument("Interval: lower bound exceeds upper bound");
    Interval r(prec);
    mpfr_set_d(r.lo_.get(), lo, MPFR_RNDD);
    mpfr_set_d(r.hi_.get(), hi, MPFR_RNDU);
    return r;
}

Interval Interval::pi(mpfr_prec_t prec)
{
    Interval r(prec);
    mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
    mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval &o) const
{
    Interval r(std::max(precision(), o.precision()));
    mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval &o) const
{
    Interval r(std::max(precision(), o.precision()));
    mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const
{
    Interval r(precision());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval &o) const
{
    const mpfr_prec_t prec = std::max(precision(), o.precision());
    Interval r(prec);
    BigFloat t(prec);
    mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
    mpfr_srcptr b[2] = {o.lo_.get(), o.hi_.get()};
    bool first = true;
    for (auto x : a)
    {
        for (auto y : b)
        {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), r.lo_.get()))
                mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), r.hi_.get()))
                mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    return r;
}

Interval Interval::operator/(const Interval &o) const
{
    if (o.contains_zero())
        throw std::domain_error("Interval: division by an interval containing zero");
    const mpfr_prec_t prec = std::max(precision(), o.precision());
    Interval inv(prec);
    mpfr_ui_div(inv.lo_.get(), 1, o.hi_.get(), MPFR_RNDD);
    mpfr_ui_div(inv.hi_.get(), 1, o.lo_.get(), MPFR_RNDU);
    return *this * inv;
}

Interval Interval::pow(long k) const
{
    if (k < 0)
        return Interval::from_integer(1, precision()) / pow(-k);
    Interval result = Interval::from_integer(1, precision());
    Interval base = *this;
    while (k > 0)
    {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

Interval Interval::scale2(long k) const
{
    Interval r(precision());
    mpfr_mul_2si(r.lo_.get(), lo_.get(), k, MPFR_RNDD);
    mpfr_mul_2si(r.hi_.get(), hi_.get(), k, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const
{
    if (mpfr_sgn(lo_.get()) < 0)
        throw std::domain_error("Interval: sqrt of negative values");
    Interval r(precision());
    mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::exp() const
{
    Interval r(precision());
    mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::log() const
{
    if (!positive())
        throw std::domain_error("Interval: log of non-positive values");
    Interval r(precision());
    mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::root(unsigned long k) const
{
    if (mpfr_sgn(lo_.get()) < 0)
        throw std::domain_error("Interval: root of negative values");
    Interval r(precision());
    mpfr_rootn_ui(r.lo_.get(), lo_.get(), k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_.get(), hi_.get(), k, MPFR_RNDU);
    return r;
}

bool Interval::contains(const mpq_class &v) const
{
    return mpfr_cmp_q(lo_.get(), v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), v.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

bool Interval::positive() const { return mpfr_sgn(lo_.get()) > 0; }

bool Interval::negative() const { return mpfr_sgn(hi_.get()) < 0; }

bool Interval::certainly_less(const Interval &o) const { return mpfr_less_p(hi_.get(), o.lo_.get()) != 0; }

double Interval::mid() const
{
    BigFloat t(precision() + 1);
    mpfr_add(t.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
    return t.to_double();
}

double Interval::width() const
{
    BigFloat t(precision());
    mpfr_sub(t.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return t.to_double(MPFR_RNDU);
}

double Interval::relative_width() const
{
    if (contains_zero())
        return std::numeric_limits<double>::infinity();
    return width() / std::fabs(mid());
}

std::string Interval::to_string(int digits) const
{
    return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

} // namespace fakelines
