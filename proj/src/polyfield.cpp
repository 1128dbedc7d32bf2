#include "fakelines/polyfield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fakelines/errors.hpp"

namespace fakelines
{

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() < 2)
        throw NotMonic("degree must be at least 1");
    if (coeffs_.back() != 1)
        throw NotMonic("leading coefficient is " + coeffs_.back().get_str());
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
    : IntPolynomial(std::vector<Integer>(coeffs.begin(), coeffs.end()))
{
}

Integer IntPolynomial::eval(const Integer &x) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::eval(const Rational &x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i)
    {
        const Integer &c = coeffs_[static_cast<size_t>(i)];
        if (c == 0)
            continue;
        Integer a = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0)
        {
            out << a;
            continue;
        }
        if (a != 1)
            out << a << "*";
        out << "x";
        if (i > 1)
            out << "^" << i;
    }
    return out.str();
}

namespace qpoly
{

RatPoly from(const IntPolynomial &f)
{
    RatPoly out;
    for (const auto &c : f.coeffs())
        out.emplace_back(c);
    return out;
}

void trim(RatPoly &a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int degree(const RatPoly &a) { return static_cast<int>(a.size()) - 1; }

RatPoly derivative(const RatPoly &a)
{
    RatPoly out;
    for (size_t i = 1; i < a.size(); ++i)
        out.push_back(a[i] * static_cast<long>(i));
    trim(out);
    return out;
}

RatPoly sub(const RatPoly &a, const RatPoly &b)
{
    RatPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    trim(out);
    return out;
}

RatPoly mul(const RatPoly &a, const RatPoly &b)
{
    if (a.empty() || b.empty())
        return {};
    RatPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly &a, const RatPoly &b)
{
    if (b.empty())
        throw DivisionByZero("polynomial division by zero");
    RatPoly r = a;
    trim(r);
    const int db = degree(b);
    if (degree(r) < db)
        return {{}, r};
    RatPoly q(static_cast<size_t>(degree(r) - db + 1));
    const Rational lead = b.back();
    for (int k = degree(r); k >= db; --k)
    {
        Rational c = r[static_cast<size_t>(k)] / lead;
        q[static_cast<size_t>(k - db)] = c;
        if (c == 0)
            continue;
        for (int i = 0; i <= db; ++i)
            r[static_cast<size_t>(k - db + i)] -= c * b[static_cast<size_t>(i)];
    }
    r.resize(static_cast<size_t>(db));
    trim(r);
    trim(q);
    return {q, r};
}

RatPoly monic_gcd(RatPoly a, RatPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty())
    {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty())
    {
        Rational lead = a.back();
        for (auto &c : a)
            c /= lead;
    }
    return a;
}

Rational eval(const RatPoly &a, const Rational &x)
{
    Rational acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

} // namespace qpoly

namespace
{

// Bareiss fraction-free elimination
Integer determinant(std::vector<std::vector<Integer>> a)
{
    const size_t n = a.size();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (size_t k = 0; k + 1 < n; ++k)
    {
        if (a[k][k] == 0)
        {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
        {
            for (size_t j = k + 1; j < n; ++j)
            {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

int sign_of(const Rational &v) { return sgn(v); }

struct SturmChain
{
    std::vector<RatPoly> seq;

    explicit SturmChain(const IntPolynomial &f)
    {
        RatPoly p0 = qpoly::from(f);
        RatPoly p1 = qpoly::derivative(p0);
        seq.push_back(p0);
        if (p1.empty())
            return;
        seq.push_back(p1);
        while (true)
        {
            RatPoly r = qpoly::divmod(seq[seq.size() - 2], seq.back()).second;
            if (r.empty())
                break;
            for (auto &c : r)
                c = -c;
            seq.push_back(std::move(r));
        }
    }

    int variations_at(const Rational &x) const
    {
        int count = 0, last = 0;
        for (const auto &p : seq)
        {
            int s = sign_of(qpoly::eval(p, x));
            if (s == 0)
                continue;
            if (last != 0 && s != last)
                ++count;
            last = s;
        }
        return count;
    }

    // +1 for +infinity, -1 for -infinity
    int variations_at_infinity(int side) const
    {
        int count = 0, last = 0;
        for (const auto &p : seq)
        {
            int s = sign_of(p.back());
            if (side < 0 && (qpoly::degree(p) % 2 == 1))
                s = -s;
            if (last != 0 && s != last)
                ++count;
            last = s;
        }
        return count;
    }
};

void require_squarefree(const IntPolynomial &f)
{
    RatPoly p = qpoly::from(f);
    RatPoly g = qpoly::monic_gcd(p, qpoly::derivative(p));
    if (qpoly::degree(g) > 0)
        throw NotSquarefree(f.to_string());
}

Rational cauchy_bound(const IntPolynomial &f)
{
    Integer mx = 0;
    for (int i = 0; i < f.degree(); ++i)
        mx = std::max(mx, Integer(abs(f[i])));
    return Rational(mx + 1);
}

} // namespace

Integer poly_disc(const IntPolynomial &f)
{
    const int m = f.degree();
    if (m == 1)
        return 1;
    std::vector<Integer> df;
    for (int i = 1; i <= m; ++i)
        df.push_back(f[i] * i);
    // Sylvester matrix of f (degree m) and f' (degree m-1)
    const int n = m - 1;
    const int size = m + n;
    std::vector<std::vector<Integer>> syl(static_cast<size_t>(size), std::vector<Integer>(static_cast<size_t>(size), 0));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            syl[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = f[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            syl[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] = df[static_cast<size_t>(n - i)];
    Integer res = determinant(std::move(syl));
    return ((m * (m - 1) / 2) % 2 == 0) ? res : Integer(-res);
}

bool is_totally_real(const IntPolynomial &f)
{
    require_squarefree(f);
    SturmChain chain(f);
    int count = chain.variations_at_infinity(-1) - chain.variations_at_infinity(+1);
    return count == f.degree();
}

int sturm_count(const IntPolynomial &f, const Rational &a, const Rational &b)
{
    require_squarefree(f);
    SturmChain chain(f);
    return chain.variations_at(a) - chain.variations_at(b);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPolynomial &f)
{
    require_squarefree(f);
    SturmChain chain(f);
    Rational bound = cauchy_bound(f);
    std::vector<std::pair<Rational, Rational>> out;
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty())
    {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int n = chain.variations_at(lo) - chain.variations_at(hi);
        if (n == 0)
            continue;
        if (n == 1)
        {
            out.emplace_back(lo, hi);
            continue;
        }
        Rational mid = (lo + hi) / 2;
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    return out;
}

std::vector<Interval> real_roots(const IntPolynomial &f, mpfr_prec_t bits)
{
    std::vector<Interval> out;
    const mpfr_prec_t prec = bits + 32;
    Rational eps(1);
    mpz_mul_2exp(eps.get_den_mpz_t(), eps.get_den_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    for (auto [lo, hi] : isolate_real_roots(f))
    {
        if (f.eval(hi) == 0)
        {
            out.push_back(Interval::from_rational(hi, prec));
            continue;
        }
        bool exact = false;
        while (f.eval(lo) == 0)
        {
            Rational mid = (lo + hi) / 2;
            if (f.eval(mid) == 0)
            {
                lo = hi = mid;
                exact = true;
                break;
            }
            if (sturm_count(f, mid, hi) == 1)
                lo = mid;
            else
                hi = mid;
        }
        if (!exact)
        {
            int slo = sgn(f.eval(lo));
            while (hi - lo > eps)
            {
                Rational mid = (lo + hi) / 2;
                int s = sgn(f.eval(mid));
                if (s == 0)
                {
                    lo = hi = mid;
                    break;
                }
                if (s == slo)
                    lo = mid;
                else
                    hi = mid;
            }
        }
        out.push_back(Interval::from_rationals(lo, hi, prec));
    }
    return out;
}

void check_no_rational_root(const IntPolynomial &f)
{
    if (f.degree() < 2)
        return;
    Integer c0 = abs(f[0]);
    if (c0 == 0)
        throw Reducible(f.to_string() + " has root 0");
    if (c0 > Integer("1000000000000"))
        return;
    for (Integer d = 1; d * d <= c0; ++d)
    {
        if (c0 % d != 0)
            continue;
        for (const Integer &cand : {d, Integer(c0 / d)})
        {
            if (f.eval(cand) == 0 || f.eval(Integer(-cand)) == 0)
                throw Reducible(f.to_string() + " has an integer root");
        }
    }
}

NumberField field_new(const IntPolynomial &f, const Integer &d_k, std::optional<unsigned> tag)
{
    if (d_k <= 0)
        throw DiscMismatch("field discriminant must be positive");
    check_no_rational_root(f);
    if (!is_totally_real(f))
        throw NotTotallyReal(f.to_string());
    Integer disc = poly_disc(f);
    if (disc % d_k != 0)
        throw DiscMismatch("disc(f) = " + disc.get_str() + " is not a multiple of " + d_k.get_str());
    Integer ratio = disc / d_k;
    Integer root;
    if (ratio <= 0 || !nt::is_perfect_square(ratio, &root))
        throw DiscMismatch("disc(f)/d_k = " + ratio.get_str() + " is not a positive square");
    NumberField K;
    K.f_ = std::make_shared<const IntPolynomial>(f);
    K.d_k_ = d_k;
    K.index_ = root;
    K.tag_ = tag;
    return K;
}

Interval root_disc(const NumberField &K, mpfr_prec_t prec)
{
    return Interval::from_integer(K.disc(), prec).root(static_cast<unsigned long>(K.degree()));
}

// ---------------------------------------------------------------- elements

FieldElement::FieldElement(std::shared_ptr<const IntPolynomial> modulus, std::vector<Rational> coords)
    : modulus_(std::move(modulus)), coords_(std::move(coords))
{
    const size_t m = static_cast<size_t>(modulus_->degree());
    if (coords_.size() > m)
    {
        // reduce an over-long representative
        RatPoly r(coords_.begin(), coords_.end());
        r = qpoly::divmod(r, qpoly::from(*modulus_)).second;
        coords_.assign(r.begin(), r.end());
    }
    coords_.resize(m, Rational(0));
}

FieldElement FieldElement::zero(const NumberField &K) { return FieldElement(K.poly_ptr(), {}); }

FieldElement FieldElement::one(const NumberField &K) { return FieldElement(K.poly_ptr(), {Rational(1)}); }

FieldElement FieldElement::theta(const NumberField &K)
{
    if (K.degree() == 1)
        return FieldElement(K.poly_ptr(), {Rational(-K.poly()[0])});
    return FieldElement(K.poly_ptr(), {Rational(0), Rational(1)});
}

FieldElement FieldElement::from_coords(const NumberField &K, std::vector<Rational> coords)
{
    return FieldElement(K.poly_ptr(), std::move(coords));
}

bool FieldElement::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational &c) { return c == 0; });
}

void FieldElement::check_same(const FieldElement &o) const
{
    if (modulus_ != o.modulus_ && !(*modulus_ == *o.modulus_))
        throw std::invalid_argument("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement &o) const
{
    check_same(o);
    std::vector<Rational> c(coords_);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] += o.coords_[i];
    return FieldElement(modulus_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement &o) const
{
    check_same(o);
    std::vector<Rational> c(coords_);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] -= o.coords_[i];
    return FieldElement(modulus_, std::move(c));
}

FieldElement FieldElement::operator*(const Rational &s) const
{
    std::vector<Rational> c(coords_);
    for (auto &x : c)
        x *= s;
    return FieldElement(modulus_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement &o) const
{
    check_same(o);
    const int m = modulus_->degree();
    std::vector<Rational> prod(static_cast<size_t>(2 * m - 1), Rational(0));
    for (int i = 0; i < m; ++i)
    {
        if (coords_[static_cast<size_t>(i)] == 0)
            continue;
        for (int j = 0; j < m; ++j)
            prod[static_cast<size_t>(i + j)] += coords_[static_cast<size_t>(i)] * o.coords_[static_cast<size_t>(j)];
    }
    // x^m = -(c_0 + ... + c_{m-1} x^{m-1})
    for (int k = 2 * m - 2; k >= m; --k)
    {
        Rational c = prod[static_cast<size_t>(k)];
        if (c == 0)
            continue;
        for (int i = 0; i < m; ++i)
            prod[static_cast<size_t>(k - m + i)] -= c * (*modulus_)[i];
    }
    prod.resize(static_cast<size_t>(m));
    return FieldElement(modulus_, std::move(prod));
}

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    RatPoly a(coords_.begin(), coords_.end());
    qpoly::trim(a);
    RatPoly b = qpoly::from(*modulus_);
    // extended Euclid tracking the cofactor of a
    RatPoly s0{Rational(1)}, s1{};
    RatPoly r0 = a, r1 = b;
    while (!r1.empty())
    {
        auto [q, r] = qpoly::divmod(r0, r1);
        RatPoly s = qpoly::sub(s0, qpoly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (qpoly::degree(r0) > 0)
        throw ZeroDivisor("defining polynomial " + modulus_->to_string() + " is reducible");
    Rational g = r0[0];
    for (auto &c : s0)
        c /= g;
    return FieldElement(modulus_, std::vector<Rational>(s0.begin(), s0.end()));
}

FieldElement FieldElement::pow(unsigned k) const
{
    FieldElement result(modulus_, {Rational(1)});
    FieldElement base = *this;
    while (k > 0)
    {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k > 0)
            base = base * base;
    }
    return result;
}

FieldElement field_arith(const FieldElement &a, const FieldElement &b, FieldOp op)
{
    switch (op)
    {
    case FieldOp::add:
        return a + b;
    case FieldOp::mul:
        return a * b;
    case FieldOp::inv:
        return a.inverse();
    }
    throw std::invalid_argument("unknown field operation");
}

FieldElement eval_at(const std::vector<Integer> &coeffs, const FieldElement &x)
{
    FieldElement acc(x.modulus(), {});
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + FieldElement(x.modulus(), {Rational(*it)});
    return acc;
}

// ------------------------------------------------------ cyclotomic subfields

std::string to_string(Containment c)
{
    switch (c)
    {
    case Containment::yes:
        return "yes";
    case Containment::no:
        return "no";
    case Containment::undetermined:
        return "undetermined";
    }
    return "?";
}

namespace
{

std::vector<Integer> int_divexact(std::vector<Integer> a, const std::vector<Integer> &b)
{
    // b monic
    const size_t db = b.size() - 1;
    std::vector<Integer> q(a.size() - db, 0);
    for (size_t k = a.size() - 1; k + 1 > db; --k)
    {
        Integer c = a[k];
        q[k - db] = c;
        for (size_t i = 0; i <= db; ++i)
            a[k - db + i] -= c * b[i];
        if (k == db)
            break;
    }
    return q;
}

std::vector<Integer> cyclotomic_coeffs(unsigned n)
{
    std::vector<Integer> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            num = int_divexact(num, cyclotomic_coeffs(d));
    return num;
}

std::vector<Integer> poly_mul_int(const std::vector<Integer> &a, const std::vector<Integer> &b)
{
    std::vector<Integer> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

bool tag_contains(unsigned N, unsigned q)
{
    // Q(zeta_q)^+ is inside Q(zeta_N)^+ iff every a = +-1 mod N is +-1 mod q, read mod lcm(N, q)
    const std::uint64_t M = std::lcm<std::uint64_t>(N, q);
    for (std::uint64_t a = 1; a < M; ++a)
    {
        if (std::gcd(a, M) != 1)
            continue;
        bool in_h = (a % N == 1 % N) || ((a + 1) % N == 0);
        if (!in_h)
            continue;
        bool fixes = (a % q == 1) || ((a + 1) % q == 0);
        if (!fixes)
            return false;
    }
    return true;
}

// best convergent of x with denominator <= cap
Rational continued_fraction(const Rational &x, const Integer &cap)
{
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Integer num = x.get_num(), den = x.get_den();
    Rational best(0);
    bool have = false;
    while (den != 0)
    {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > cap)
            break;
        best = Rational(p2, q2);
        best.canonicalize();
        have = true;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Integer r = num - a * den;
        num = den;
        den = r;
    }
    return have ? best : Rational(0);
}

bool solve_linear(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat> b, std::vector<BigFloat> &x,
                  mpfr_prec_t prec)
{
    const size_t n = b.size();
    BigFloat t(prec), u(prec);
    for (size_t k = 0; k < n; ++k)
    {
        size_t piv = k;
        for (size_t i = k + 1; i < n; ++i)
            if (mpfr_cmpabs(a[i][k].get(), a[piv][k].get()) > 0)
                piv = i;
        if (mpfr_zero_p(a[piv][k].get()))
            return false;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (size_t i = k + 1; i < n; ++i)
        {
            mpfr_div(t.get(), a[i][k].get(), a[k][k].get(), MPFR_RNDN);
            for (size_t j = k; j < n; ++j)
            {
                mpfr_mul(u.get(), t.get(), a[k][j].get(), MPFR_RNDN);
                mpfr_sub(a[i][j].get(), a[i][j].get(), u.get(), MPFR_RNDN);
            }
            mpfr_mul(u.get(), t.get(), b[k].get(), MPFR_RNDN);
            mpfr_sub(b[i].get(), b[i].get(), u.get(), MPFR_RNDN);
        }
    }
    x.assign(n, BigFloat(prec));
    for (size_t k = n; k-- > 0;)
    {
        mpfr_set(t.get(), b[k].get(), MPFR_RNDN);
        for (size_t j = k + 1; j < n; ++j)
        {
            mpfr_mul(u.get(), a[k][j].get(), x[j].get(), MPFR_RNDN);
            mpfr_sub(t.get(), t.get(), u.get(), MPFR_RNDN);
        }
        mpfr_div(x[k].get(), t.get(), a[k][k].get(), MPFR_RNDN);
    }
    return true;
}

std::optional<FieldElement> try_certify(const NumberField &K, unsigned q, const IntPolynomial &psi, mpfr_prec_t bits)
{
    const int m = K.degree();
    const int d = psi.degree();
    const mpfr_prec_t prec = bits + 64;
    std::vector<Interval> roots = real_roots(K.poly(), bits);
    std::vector<BigFloat> alpha;
    for (const auto &r : roots)
    {
        BigFloat v(prec);
        mpfr_add(v.get(), r.lower().get(), r.upper().get(), MPFR_RNDN);
        mpfr_div_2ui(v.get(), v.get(), 1, MPFR_RNDN);
        alpha.push_back(std::move(v));
    }
    if (static_cast<int>(alpha.size()) != m)
        return std::nullopt;

    // conjugates 2cos(2 pi j / q), j = 1 first
    std::vector<BigFloat> conj;
    for (unsigned j = 1; 2 * j < q; ++j)
    {
        if (std::gcd(j, q) != 1)
            continue;
        BigFloat v(prec);
        mpfr_const_pi(v.get(), MPFR_RNDN);
        mpfr_mul_ui(v.get(), v.get(), 2 * j, MPFR_RNDN);
        mpfr_div_ui(v.get(), v.get(), q, MPFR_RNDN);
        mpfr_cos(v.get(), v.get(), MPFR_RNDN);
        mpfr_mul_2ui(v.get(), v.get(), 1, MPFR_RNDN);
        conj.push_back(std::move(v));
    }
    if (static_cast<int>(conj.size()) != d)
        return std::nullopt;

    std::vector<std::vector<BigFloat>> vander(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j)
    {
        BigFloat pw(prec);
        mpfr_set_ui(pw.get(), 1, MPFR_RNDN);
        for (int i = 0; i < m; ++i)
        {
            vander[static_cast<size_t>(j)].push_back(pw);
            mpfr_mul(pw.get(), pw.get(), alpha[static_cast<size_t>(j)].get(), MPFR_RNDN);
        }
    }

    std::vector<int> labels;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < m / d - (r == 0 ? 1 : 0); ++c)
            labels.push_back(r);
    std::sort(labels.begin(), labels.end());

    const Integer cap = 1000000;
    BigFloat tol(prec);
    mpfr_set_ui(tol.get(), 1, MPFR_RNDN);
    mpfr_div_2ui(tol.get(), tol.get(), static_cast<unsigned long>(bits / 2), MPFR_RNDN);
    do
    {
        std::vector<BigFloat> rhs;
        rhs.push_back(conj[0]);
        for (int l : labels)
            rhs.push_back(conj[static_cast<size_t>(l)]);
        std::vector<BigFloat> sol;
        if (!solve_linear(vander, rhs, sol, prec))
            continue;
        std::vector<Rational> coords;
        bool ok = true;
        BigFloat diff(prec);
        for (auto &s : sol)
        {
            Rational exact;
            mpfr_get_q(exact.get_mpq_t(), s.get());
            Rational guess = continued_fraction(exact, cap);
            mpfr_sub_q(diff.get(), s.get(), guess.get_mpq_t(), MPFR_RNDN);
            if (mpfr_cmpabs(diff.get(), tol.get()) > 0)
            {
                ok = false;
                break;
            }
            coords.push_back(guess);
        }
        if (!ok)
            continue;
        FieldElement beta = FieldElement::from_coords(K, coords);
        if (eval_at(psi.coeffs(), beta).is_zero())
            return beta;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return std::nullopt;
}

} // namespace

std::vector<Integer> cyclotomic_poly(unsigned n)
{
    if (n == 0)
        throw std::invalid_argument("cyclotomic_poly needs n >= 1");
    return cyclotomic_coeffs(n);
}

IntPolynomial real_cyclotomic_poly(unsigned q)
{
    if (q < 3)
        throw std::invalid_argument("real_cyclotomic_poly needs q >= 3");
    std::vector<Integer> phi = cyclotomic_coeffs(q);
    const size_t d = (phi.size() - 1) / 2;
    // x^-d Phi(x) = c_d + sum_k c_{d+k} (x^k + x^-k), and x^k + x^-k = D_k(x + 1/x)
    std::vector<Integer> result(d + 1, 0);
    result[0] = phi[d];
    std::vector<Integer> dm2{2}, dm1{0, 1};
    for (size_t k = 1; k <= d; ++k)
    {
        const std::vector<Integer> &dk = dm1;
        for (size_t i = 0; i < dk.size(); ++i)
            result[i] += phi[d + k] * dk[i];
        std::vector<Integer> next = poly_mul_int(dm1, {0, 1});
        for (size_t i = 0; i < dm2.size(); ++i)
            next[i] -= dm2[i];
        dm2 = dm1;
        dm1 = next;
    }
    return IntPolynomial(result);
}

Integer real_cyclotomic_disc(unsigned q) { return poly_disc(real_cyclotomic_poly(q)); }

Containment contains_real_cyclotomic(const NumberField &K, unsigned q, mpfr_prec_t start_bits)
{
    return contains_real_cyclotomic(K, q, nullptr, start_bits);
}

Containment contains_real_cyclotomic(const NumberField &K, unsigned q, std::optional<FieldElement> *witness,
                                     mpfr_prec_t start_bits)
{
    if (q < 3)
        throw std::invalid_argument("contains_real_cyclotomic needs q >= 3");
    const int m = K.degree();
    const int d = static_cast<int>(nt::euler_phi(q) / 2);
    if (m % d != 0)
        return Containment::no;
    IntPolynomial psi = real_cyclotomic_poly(q);
    if (d == 1)
    {
        if (witness != nullptr)
            *witness = FieldElement::from_coords(K, {Rational(-psi[0])});
        return Containment::yes;
    }
    // a subfield L forces d_L^[K:L] | d_K
    Integer dsub = real_cyclotomic_disc(q);
    Integer need;
    mpz_pow_ui(need.get_mpz_t(), dsub.get_mpz_t(), static_cast<unsigned long>(m / d));
    if (K.disc() % need != 0)
        return Containment::no;

    std::optional<Containment> by_tag;
    if (auto tag = K.cyclotomic_tag())
        by_tag = tag_contains(*tag, q) ? Containment::yes : Containment::no;
    if (by_tag == Containment::no)
        return Containment::no;

    mpfr_prec_t bits = start_bits;
    for (int attempt = 0; attempt <= 4; ++attempt, bits *= 2)
    {
        if (auto beta = try_certify(K, q, psi, bits))
        {
            if (witness != nullptr)
                *witness = *beta;
            return Containment::yes;
        }
    }
    return by_tag.value_or(Containment::undetermined);
}

} // namespace fakelines
