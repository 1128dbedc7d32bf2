#include "fakelines/zetacalc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "fakelines/errors.hpp"

namespace fakelines
{

// ------------------------------------------------------------ primes

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit), primes_(nt::primes_up_to(limit)) {}

std::shared_ptr<const PrimeTable> shared_primes(std::uint64_t limit)
{
    static std::mutex mu;
    static std::shared_ptr<const PrimeTable> cached;
    std::lock_guard<std::mutex> lock(mu);
    if (!cached || cached->limit() < limit)
        cached = std::make_shared<const PrimeTable>(std::max<std::uint64_t>(limit, kDefaultCutoff));
    return cached;
}

// ------------------------------------------------------------ Euler product

namespace
{

constexpr size_t kBlockPrimes = 8192;

inline double down(double x) { return std::nextafter(x, 0.0); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

struct Bounds
{
    double lo = 1.0;
    double hi = 1.0;
};

// multiply in (1 - p^(-2f))^(-1) with outward rounding
inline void local_factor(Bounds &acc, std::uint64_t p, int f)
{
    const double pp = static_cast<double>(p) * static_cast<double>(p); // exact for p < 2^26
    const double inv = 1.0 / pp;
    double x_lo = down(inv), x_hi = up(inv);
    for (int i = 1; i < f; ++i)
    {
        x_lo = down(x_lo * down(inv));
        x_hi = up(x_hi * up(inv));
    }
    const double den_hi = up(1.0 - x_lo);
    const double den_lo = down(1.0 - x_hi);
    acc.lo = down(acc.lo * down(1.0 / den_hi));
    acc.hi = up(acc.hi * up(1.0 / den_lo));
}

Bounds block_product(const PrimeDecomposer &dec, const std::vector<std::uint32_t> &primes, size_t begin, size_t end)
{
    UnramifiedSplitter splitter(dec.field().poly());
    const auto &bad = dec.bad_primes();
    std::vector<int> degs;
    Bounds acc;
    for (size_t i = begin; i < end; ++i)
    {
        const std::uint32_t p = primes[i];
        if (std::find(bad.begin(), bad.end(), p) != bad.end() || dec.overrides().count(p) != 0)
        {
            for (auto [e, f] : dec.decompose(p).factors)
                local_factor(acc, p, f);
            continue;
        }
        splitter.degrees(p, degs);
        for (int f : degs)
            local_factor(acc, p, f);
    }
    return acc;
}

} // namespace

Zeta2Result zeta2_truncated(const PrimeDecomposer &dec, std::uint64_t cutoff, unsigned jobs)
{
    if (cutoff < 2)
        throw std::invalid_argument("Euler product cutoff must be at least 2");
    auto table = shared_primes(cutoff);
    const auto &primes = table->primes();
    const size_t count = static_cast<size_t>(std::upper_bound(primes.begin(), primes.end(), cutoff) - primes.begin());
    const size_t nblocks = (count + kBlockPrimes - 1) / kBlockPrimes;
    std::vector<Bounds> blocks(nblocks);

    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&]() {
        try
        {
            for (size_t b = next++; b < nblocks; b = next++)
                blocks[b] = block_product(dec, primes, b * kBlockPrimes, std::min(count, (b + 1) * kBlockPrimes));
        }
        catch (...)
        {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure)
                failure = std::current_exception();
            next = nblocks;
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<size_t>(nblocks, 1))));
    if (jobs == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    // combine in block order so the enclosure does not depend on scheduling
    Bounds total;
    for (const auto &b : blocks)
    {
        total.lo = down(total.lo * b.lo);
        total.hi = up(total.hi * b.hi);
    }

    Interval truncated = Interval::from_bounds(total.lo, total.hi);
    // log of the tail is at most m / (cutoff - 1)
    Interval tail_exp = Interval::from_rational(Rational(dec.field().degree(), static_cast<unsigned long>(cutoff - 1)));
    Interval tail = (Interval::from_bounds(0.0, 1.0) * tail_exp).exp();
    return {truncated * tail, truncated, cutoff};
}

// ------------------------------------------------------------ reconstruction

Integer denominator_bound(int m)
{
    if (m < 1)
        throw std::invalid_argument("denominator_bound needs m >= 1");
    const auto um = static_cast<std::uint64_t>(m);
    Integer B = 1;
    const int two = std::max(0, 4 + nt::valuation(um, 2) - m);
    mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), static_cast<mp_bitcnt_t>(two));
    for (std::uint64_t l = 3; l <= 2 * um + 1; l += 2)
    {
        if (!nt::is_prime(l) || (2 * um) % (l - 1) != 0)
            continue;
        B *= static_cast<unsigned long>(nt::ipow(l, static_cast<unsigned>(1 + nt::valuation(um, l))));
    }
    return B;
}

Integer generous_denominator_bound(int m)
{
    if (m < 1)
        throw std::invalid_argument("denominator_bound needs m >= 1");
    const auto um = static_cast<std::uint64_t>(m);
    Integer B;
    mpz_ui_pow_ui(B.get_mpz_t(), 24, um); // 2^(3m) 3^m
    for (std::uint64_t l = 2; l <= 2 * um + 1; ++l)
        if (nt::is_prime(l) && (2 * um) % (l - 1) == 0)
            B *= static_cast<unsigned long>(l);
    return B;
}

Interval functional_equation(const Interval &zeta2, const Integer &d_k, int m, mpfr_prec_t prec)
{
    Interval d = Interval::from_integer(d_k, prec);
    Interval pi = Interval::pi(prec);
    Interval v = zeta2 * d * d.sqrt() / pi.pow(2 * m);
    v = v.scale2(-m);
    return (m % 2 == 0) ? v : -v;
}

Interval zeta2_from_minus1(const Rational &zeta_m1, const Integer &d_k, int m, mpfr_prec_t prec)
{
    Interval d = Interval::from_integer(d_k, prec);
    Interval pi = Interval::pi(prec);
    Interval v = Interval::from_rational(zeta_m1, prec) * pi.pow(2 * m) / (d * d.sqrt());
    v = v.scale2(m);
    return (m % 2 == 0) ? v : -v;
}

ZetaValues zeta_minus1(const PrimeDecomposer &dec, const ZetaOptions &opts)
{
    const int m = dec.field().degree();
    const Integer B = opts.B > 0 ? opts.B : denominator_bound(m);
    const Interval scale = Interval::from_integer(B);
    std::uint64_t cutoff = opts.cutoff;
    std::string last;
    for (int attempt = 0; attempt <= opts.max_doublings; ++attempt, cutoff *= 2)
    {
        Zeta2Result z = zeta2_truncated(dec, cutoff, opts.jobs);
        Interval v = functional_equation(z.value, dec.field().disc(), m) * scale;
        Integer lo, hi;
        mpfr_get_z(lo.get_mpz_t(), v.lower().get(), MPFR_RNDU);
        mpfr_get_z(hi.get_mpz_t(), v.upper().get(), MPFR_RNDD);
        if (lo == hi && lo != 0)
        {
            Rational r(lo, B);
            r.canonicalize();
            return {z.value, r, cutoff, B};
        }
        last = v.to_string(12);
    }
    throw AmbiguousReconstruction("B*zeta_k(-1) enclosure " + last + " for d_k = " + dec.field().disc().get_str() +
                                  " does not isolate one integer");
}

// ------------------------------------------------------------ cyclotomic numbers

CyclotomicNumber::CyclotomicNumber(unsigned order) : order_(order)
{
    if (order == 0)
        throw std::invalid_argument("cyclotomic order must be positive");
    coeffs_.assign(static_cast<size_t>(nt::euler_phi(order)), Rational(0));
}

CyclotomicNumber CyclotomicNumber::rational(unsigned order, const Rational &r)
{
    CyclotomicNumber c(order);
    c.coeffs_[0] = r;
    return c;
}

CyclotomicNumber CyclotomicNumber::root(unsigned order, long k)
{
    CyclotomicNumber c(order);
    long e = k % static_cast<long>(order);
    if (e < 0)
        e += order;
    c.coeffs_.assign(static_cast<size_t>(e) + 1, Rational(0));
    c.coeffs_[static_cast<size_t>(e)] = 1;
    c.reduce();
    return c;
}

void CyclotomicNumber::reduce()
{
    const std::vector<Integer> phi = cyclotomic_poly(order_);
    const size_t d = phi.size() - 1;
    for (size_t k = coeffs_.size(); k-- > d;)
    {
        Rational c = coeffs_[k];
        if (c == 0)
            continue;
        for (size_t i = 0; i <= d; ++i)
            coeffs_[k - d + i] -= c * phi[i];
    }
    coeffs_.resize(d, Rational(0));
}

bool CyclotomicNumber::is_rational() const
{
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational &c) { return c == 0; });
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber &o) const
{
    if (o.order_ != order_)
        throw std::invalid_argument("cyclotomic orders differ");
    CyclotomicNumber r(*this);
    for (size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] += o.coeffs_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber &o) const
{
    if (o.order_ != order_)
        throw std::invalid_argument("cyclotomic orders differ");
    CyclotomicNumber r(*this);
    for (size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] -= o.coeffs_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const Rational &s) const
{
    CyclotomicNumber r(*this);
    for (auto &c : r.coeffs_)
        c *= s;
    return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber &o) const
{
    if (o.order_ != order_)
        throw std::invalid_argument("cyclotomic orders differ");
    CyclotomicNumber r(order_);
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
    {
        if (coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.reduce();
    return r;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber &o) const
{
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

std::string CyclotomicNumber::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i)
    {
        if (coeffs_[i] == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        out << coeffs_[i];
        if (i > 0)
            out << "*z" << order_ << "^" << i;
    }
    if (first)
        out << "0";
    return out.str();
}

// ------------------------------------------------------------ characters

DirichletCharacter::DirichletCharacter(unsigned modulus, unsigned order, std::vector<int> exps)
    : modulus_(modulus), order_(order), exps_(std::move(exps)), conductor_(modulus)
{
    for (unsigned d = 1; d <= modulus_; ++d)
    {
        if (modulus_ % d != 0)
            continue;
        bool trivial_on_kernel = true;
        for (unsigned a = 1; a < modulus_ && trivial_on_kernel; ++a)
            if (exps_[a] > 0 && a % d == 1 % d)
                trivial_on_kernel = false;
        if (trivial_on_kernel)
        {
            conductor_ = d;
            break;
        }
    }
}

CyclotomicNumber DirichletCharacter::value(std::uint64_t a) const
{
    int k = exponent(a);
    if (k < 0)
        return CyclotomicNumber(order_);
    return CyclotomicNumber::root(order_, k);
}

bool DirichletCharacter::is_even() const { return modulus_ <= 2 || exps_[modulus_ - 1] == 0; }

bool DirichletCharacter::is_trivial() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](int k) { return k <= 0; });
}

DirichletCharacter DirichletCharacter::primitive() const
{
    const unsigned f = conductor_;
    std::vector<int> ex(f, -1);
    for (unsigned b = 0; b < f; ++b)
    {
        if (std::gcd(b, f) != 1 && f > 1)
            continue;
        for (unsigned a = b; a < modulus_ + f; a += f)
        {
            if (std::gcd(a % modulus_, modulus_) == 1)
            {
                ex[b] = exps_[a % modulus_];
                break;
            }
        }
    }
    if (f == 1)
        ex[0] = 0;
    return DirichletCharacter(f, order_, std::move(ex));
}

std::vector<DirichletCharacter> dirichlet_characters(unsigned N)
{
    if (N == 0)
        throw std::invalid_argument("modulus must be positive");
    // generators of (Z/N)^* from the prime-power decomposition, lifted by CRT
    std::vector<std::uint64_t> gens, orders;
    for (auto [p, k] : nt::factorize(N))
    {
        const std::uint64_t pk = nt::ipow(p, static_cast<unsigned>(k));
        const std::uint64_t rest = N / pk;
        auto lift = [&](std::uint64_t g) {
            for (std::uint64_t x = g % pk; x < N; x += pk)
                if (x % rest == 1 % rest)
                    return x;
            return g;
        };
        if (p == 2)
        {
            if (k >= 2)
            {
                gens.push_back(lift(pk - 1));
                orders.push_back(2);
            }
            if (k >= 3)
            {
                gens.push_back(lift(5));
                orders.push_back(pk / 4);
            }
            continue;
        }
        const std::uint64_t phi = nt::euler_phi(pk);
        std::uint64_t g = 2;
        while (nt::multiplicative_order(g, pk) != phi)
            ++g;
        gens.push_back(lift(g));
        orders.push_back(phi);
    }
    std::uint64_t expo = 1;
    for (auto o : orders)
        expo = std::lcm(expo, o);

    // discrete logs by walking all exponent vectors
    const size_t r = gens.size();
    std::vector<std::vector<std::uint64_t>> logs(N, std::vector<std::uint64_t>(r, 0));
    std::vector<std::uint64_t> idx(r, 0);
    while (true)
    {
        std::uint64_t a = 1 % N;
        for (size_t i = 0; i < r; ++i)
            a = nt::mulmod(a, nt::powmod(gens[i], idx[i], N), N);
        logs[a] = idx;
        size_t i = 0;
        while (i < r && ++idx[i] == orders[i])
            idx[i++] = 0;
        if (i == r)
            break;
    }

    std::vector<DirichletCharacter> out;
    std::vector<std::uint64_t> t(r, 0);
    while (true)
    {
        std::vector<int> ex(N, -1);
        for (std::uint64_t a = 0; a < N; ++a)
        {
            if (std::gcd(a, static_cast<std::uint64_t>(N)) != 1 && N > 1)
                continue;
            std::uint64_t k = 0;
            for (size_t i = 0; i < r; ++i)
                k += t[i] * (expo / orders[i]) * logs[a][i];
            ex[a] = static_cast<int>(k % expo);
        }
        out.emplace_back(N, static_cast<unsigned>(expo), std::move(ex));
        size_t i = 0;
        while (i < r && ++t[i] == orders[i])
            t[i++] = 0;
        if (i == r)
            break;
    }
    return out;
}

CyclotomicNumber bernoulli_B2(const DirichletCharacter &chi)
{
    if (!chi.is_even())
        throw OddCharacter("B_2 needs an even character");
    DirichletCharacter prim = chi.primitive();
    const unsigned o = chi.value_order();
    if (prim.conductor() == 1)
        return CyclotomicNumber::rational(o, Rational(1, 6));
    const unsigned f = prim.conductor();
    CyclotomicNumber sum(o);
    for (unsigned a = 1; a <= f; ++a)
    {
        int k = prim.exponent(a);
        if (k < 0)
            continue;
        sum = sum + CyclotomicNumber::root(o, k) * Rational(static_cast<long>(a) * a);
    }
    return sum * Rational(1, f);
}

Rational zeta_minus1_abelian(unsigned N)
{
    auto chars = dirichlet_characters(N);
    const unsigned o = chars.front().value_order();
    CyclotomicNumber prod = CyclotomicNumber::rational(o, 1);
    for (const auto &chi : chars)
    {
        if (!chi.is_even())
            continue;
        prod = prod * (bernoulli_B2(chi) * Rational(-1, 2));
    }
    if (!prod.is_rational())
        throw std::logic_error("character product is not rational: " + prod.to_string());
    return prod.rational_part();
}

} // namespace fakelines
