#include "fakelines/primedec.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fakelines/errors.hpp"

namespace fakelines
{

namespace modp
{

namespace
{
void trim(ModPoly &a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint64_t mod_of(const Integer &c, std::uint64_t p)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    return r.get_ui();
}
} // namespace

ModPoly reduce(const IntPolynomial &f, std::uint64_t p)
{
    ModPoly out;
    for (const auto &c : f.coeffs())
        out.push_back(mod_of(c, p));
    trim(out);
    return out;
}

ModPoly from_rational_poly(const RatPoly &f, std::uint64_t p)
{
    ModPoly out;
    for (const auto &c : f)
    {
        std::uint64_t den = mod_of(c.get_den(), p);
        if (den == 0)
            throw DivisionByZero("denominator divisible by p");
        out.push_back(nt::mulmod(mod_of(c.get_num(), p), nt::invmod(den, p), p));
    }
    trim(out);
    return out;
}

int degree(const ModPoly &a) { return static_cast<int>(a.size()) - 1; }

ModPoly add(const ModPoly &a, const ModPoly &b, std::uint64_t p)
{
    ModPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i)
        out[i] = (out[i] + b[i]) % p;
    trim(out);
    return out;
}

ModPoly sub(const ModPoly &a, const ModPoly &b, std::uint64_t p)
{
    ModPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i)
        out[i] = (out[i] + p - b[i]) % p;
    trim(out);
    return out;
}

ModPoly mul(const ModPoly &a, const ModPoly &b, std::uint64_t p)
{
    if (a.empty() || b.empty())
        return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + nt::mulmod(a[i], b[j], p)) % p;
    trim(out);
    return out;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly &a, const ModPoly &b, std::uint64_t p)
{
    if (b.empty())
        throw DivisionByZero("polynomial division by zero mod p");
    ModPoly r = a;
    trim(r);
    const int db = degree(b);
    if (degree(r) < db)
        return {{}, r};
    ModPoly q(static_cast<size_t>(degree(r) - db + 1), 0);
    const std::uint64_t inv = nt::invmod(b.back(), p);
    for (int k = degree(r); k >= db; --k)
    {
        std::uint64_t c = nt::mulmod(r[static_cast<size_t>(k)], inv, p);
        q[static_cast<size_t>(k - db)] = c;
        if (c == 0)
            continue;
        for (int i = 0; i <= db; ++i)
        {
            auto &slot = r[static_cast<size_t>(k - db + i)];
            slot = (slot + p - nt::mulmod(c, b[static_cast<size_t>(i)], p)) % p;
        }
    }
    r.resize(static_cast<size_t>(db));
    trim(r);
    trim(q);
    return {q, r};
}

ModPoly make_monic(ModPoly a, std::uint64_t p)
{
    trim(a);
    if (a.empty() || a.back() == 1)
        return a;
    std::uint64_t inv = nt::invmod(a.back(), p);
    for (auto &c : a)
        c = nt::mulmod(c, inv, p);
    return a;
}

ModPoly gcd(ModPoly a, ModPoly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty())
    {
        ModPoly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

ModPoly derivative(const ModPoly &a, std::uint64_t p)
{
    ModPoly out;
    for (size_t i = 1; i < a.size(); ++i)
        out.push_back(nt::mulmod(a[i], i % p, p));
    trim(out);
    return out;
}

ModPoly powmod(ModPoly base, const Integer &exp, const ModPoly &mod, std::uint64_t p)
{
    ModPoly result{1};
    result = divmod(result, mod, p).second;
    base = divmod(base, mod, p).second;
    const size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;)
    {
        result = divmod(mul(result, result, p), mod, p).second;
        if (mpz_tstbit(exp.get_mpz_t(), i))
            result = divmod(mul(result, base, p), mod, p).second;
    }
    return result;
}

std::string to_string(const ModPoly &a)
{
    if (a.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(a); i >= 0; --i)
    {
        std::uint64_t c = a[static_cast<size_t>(i)];
        if (c == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        if (i == 0)
        {
            out << c;
            continue;
        }
        if (c != 1)
            out << c << "*";
        out << "x";
        if (i > 1)
            out << "^" << i;
    }
    return out.str();
}

} // namespace modp

namespace
{

using modp::degree;

// Yun-style squarefree decomposition in characteristic p
std::vector<ModFactor> squarefree_parts(const ModPoly &f, std::uint64_t p)
{
    std::vector<ModFactor> out;
    ModPoly c = modp::gcd(f, modp::derivative(f, p), p);
    ModPoly w = modp::divmod(f, c, p).first;
    int i = 1;
    while (degree(w) > 0)
    {
        ModPoly y = modp::gcd(w, c, p);
        ModPoly z = modp::divmod(w, y, p).first;
        if (degree(z) > 0)
            out.push_back({modp::make_monic(z, p), i});
        ++i;
        w = y;
        c = modp::divmod(c, y, p).first;
    }
    if (degree(c) > 0)
    {
        // c is a p-th power
        ModPoly root;
        for (size_t k = 0; k < c.size(); k += p)
            root.push_back(c[k]);
        for (auto part : squarefree_parts(modp::make_monic(root, p), p))
        {
            part.multiplicity *= static_cast<int>(p);
            out.push_back(part);
        }
    }
    return out;
}

std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly g, std::uint64_t p)
{
    std::vector<std::pair<ModPoly, int>> out;
    const ModPoly x{0, 1};
    ModPoly h = modp::divmod(x, g, p).second;
    for (int d = 1; 2 * d <= degree(g); ++d)
    {
        h = modp::powmod(h, Integer(static_cast<unsigned long>(p)), g, p);
        ModPoly part = modp::gcd(g, modp::sub(h, x, p), p);
        if (degree(part) > 0)
        {
            out.emplace_back(part, d);
            g = modp::divmod(g, part, p).first;
            h = modp::divmod(h, g, p).second;
        }
    }
    if (degree(g) > 0)
        out.emplace_back(modp::make_monic(g, p), degree(g));
    return out;
}

void equal_degree(const ModPoly &g, int d, std::uint64_t p, std::mt19937_64 &rng, std::vector<ModPoly> &out)
{
    if (degree(g) == d)
    {
        out.push_back(modp::make_monic(g, p));
        return;
    }
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    while (true)
    {
        ModPoly a;
        for (int i = 0; i < degree(g); ++i)
            a.push_back(coeff(rng));
        while (!a.empty() && a.back() == 0)
            a.pop_back();
        if (degree(a) < 1)
            continue;
        ModPoly b;
        if (p == 2)
        {
            // trace map a + a^2 + ... + a^(2^(d-1))
            ModPoly term = modp::divmod(a, g, p).second;
            b = term;
            for (int i = 1; i < d; ++i)
            {
                term = modp::divmod(modp::mul(term, term, p), g, p).second;
                b = modp::add(b, term, p);
            }
        }
        else
        {
            Integer e;
            mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            b = modp::sub(modp::powmod(a, e, g, p), ModPoly{1}, p);
        }
        ModPoly split = modp::gcd(g, b, p);
        if (degree(split) > 0 && degree(split) < degree(g))
        {
            equal_degree(split, d, p, rng, out);
            equal_degree(modp::divmod(g, split, p).first, d, p, rng, out);
            return;
        }
    }
}

bool factor_less(const ModFactor &a, const ModFactor &b)
{
    if (a.factor.size() != b.factor.size())
        return a.factor.size() < b.factor.size();
    for (size_t i = a.factor.size(); i-- > 0;)
        if (a.factor[i] != b.factor[i])
            return a.factor[i] < b.factor[i];
    return a.multiplicity < b.multiplicity;
}

std::vector<Integer> lift(const ModPoly &a)
{
    std::vector<Integer> out;
    for (auto c : a)
        out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

} // namespace

std::vector<ModFactor> factor_mod_p(const IntPolynomial &f, std::uint64_t p)
{
    if (!nt::is_prime(p))
        throw std::invalid_argument("factor_mod_p: modulus is not prime");
    ModPoly fp = modp::reduce(f, p);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
    std::vector<ModFactor> out;
    for (const auto &part : squarefree_parts(fp, p))
    {
        for (const auto &[block, d] : distinct_degree(part.factor, p))
        {
            std::vector<ModPoly> irreducibles;
            equal_degree(block, d, p, rng, irreducibles);
            for (auto &g : irreducibles)
                out.push_back({std::move(g), part.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

bool dedekind_index_test(const IntPolynomial &f, std::uint64_t p)
{
    auto factors = factor_mod_p(f, p);
    ModPoly g{1}, h{1};
    for (const auto &fac : factors)
    {
        g = modp::mul(g, fac.factor, p);
        for (int i = 1; i < fac.multiplicity; ++i)
            h = modp::mul(h, fac.factor, p);
    }
    if (degree(h) < 1)
        return false;
    // F = (f - g h) / p over Z, with g, h lifted to [0, p)
    std::vector<Integer> gi = lift(g), hi = lift(h);
    std::vector<Integer> gh(gi.size() + hi.size() - 1, 0);
    for (size_t i = 0; i < gi.size(); ++i)
        for (size_t j = 0; j < hi.size(); ++j)
            gh[i + j] += gi[i] * hi[j];
    std::vector<Integer> F(std::max(gh.size(), f.coeffs().size()), 0);
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        F[i] += f.coeffs()[i];
    for (size_t i = 0; i < gh.size(); ++i)
        F[i] -= gh[i];
    ModPoly Fp;
    for (auto &c : F)
    {
        Integer q;
        mpz_divexact_ui(q.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(p));
        Fp.push_back(r.get_ui());
    }
    while (!Fp.empty() && Fp.back() == 0)
        Fp.pop_back();
    ModPoly common = modp::gcd(modp::gcd(Fp, g, p), h, p);
    return degree(common) > 0;
}

// ------------------------------------------------------------ splittings

Integer PrimeIdeal::norm() const
{
    Integer n;
    mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f));
    return n;
}

std::string PrimeIdeal::tag() const
{
    std::string s = std::to_string(p) + "^" + std::to_string(f);
    if (ordinal > 0)
        s += "#" + std::to_string(ordinal);
    return s;
}

std::string to_string(SplittingSource s)
{
    switch (s)
    {
    case SplittingSource::kummer:
        return "kummer";
    case SplittingSource::abelian:
        return "abelian";
    case SplittingSource::external:
        return "external";
    }
    return "?";
}

int PrimeSplitting::total_degree() const
{
    int s = 0;
    for (auto [e, f] : factors)
        s += e * f;
    return s;
}

std::vector<int> PrimeSplitting::inertia_degrees() const
{
    std::vector<int> out;
    for (auto [e, f] : factors)
        out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PrimeIdeal> PrimeSplitting::ideals() const
{
    std::vector<PrimeIdeal> out;
    std::map<std::pair<int, int>, int> seen;
    for (auto [e, f] : factors)
        out.push_back({p, e, f, seen[{e, f}]++});
    return out;
}

PrimeSplitting kummer_dedekind(const NumberField &K, std::uint64_t p)
{
    if (dedekind_index_test(K.poly(), p))
        throw IndexDivisible(std::to_string(p) + " divides the index of Z[theta] in " + K.poly().to_string());
    PrimeSplitting s;
    s.p = p;
    s.source = SplittingSource::kummer;
    for (const auto &fac : factor_mod_p(K.poly(), p))
        s.factors.emplace_back(fac.multiplicity, degree(fac.factor));
    std::sort(s.factors.begin(), s.factors.end());
    return s;
}

SplittingType cyclotomic_splitting(std::uint64_t n, std::uint64_t p)
{
    const int v = nt::valuation(n, p);
    const std::uint64_t pv = nt::ipow(p, static_cast<unsigned>(v));
    const std::uint64_t rest = n / pv;
    const int e = static_cast<int>(nt::euler_phi(pv));
    const int f = rest == 1 ? 1 : static_cast<int>(nt::multiplicative_order(p % rest, rest));
    const int g = static_cast<int>(nt::euler_phi(n)) / (e * f);
    return {e, f, g};
}

AbelianPresentation AbelianPresentation::make(std::uint64_t M, std::vector<std::uint64_t> H)
{
    if (M == 0)
        throw ValidationError("abelian presentation needs M >= 1");
    for (auto &a : H)
        a %= M;
    std::sort(H.begin(), H.end());
    H.erase(std::unique(H.begin(), H.end()), H.end());
    std::vector<bool> in(M, false);
    for (auto a : H)
    {
        if (std::gcd(a, M) != 1 && M > 1)
            throw ValidationError("subgroup element " + std::to_string(a) + " is not a unit mod " + std::to_string(M));
        in[a] = true;
    }
    for (auto a : H)
        for (auto b : H)
            if (!in[nt::mulmod(a, b, M)])
                throw ValidationError("subgroup is not closed under multiplication");
    if (H.empty())
        throw ValidationError("subgroup is empty");
    return AbelianPresentation{M, std::move(H)};
}

AbelianPresentation AbelianPresentation::real_cyclotomic(std::uint64_t N, std::uint64_t M)
{
    if (M == 0)
        M = N;
    if (M % N != 0)
        throw ValidationError("modulus must be a multiple of the conductor");
    return from_predicate(M, [N](std::uint64_t a) { return a % N == 1 % N || (a + 1) % N == 0; });
}

std::uint64_t AbelianPresentation::degree() const { return nt::euler_phi(M) / H.size(); }

SplittingType abelian_splitting(const AbelianPresentation &pres, std::uint64_t p)
{
    const std::uint64_t M = pres.M;
    const int nu = nt::valuation(M, p);
    const std::uint64_t pnu = nt::ipow(p, static_cast<unsigned>(nu));
    const std::uint64_t rest = M / pnu;

    std::vector<bool> in_h(M, false);
    for (auto a : pres.H)
        in_h[a] = true;

    std::vector<bool> in_d(M, false);
    std::vector<std::uint64_t> inertia;
    for (auto a : nt::units_mod(M))
    {
        if (a % rest == 1 % rest)
        {
            inertia.push_back(a);
            in_d[a] = true;
        }
    }
    // Frobenius lift: p mod rest, 1 mod p^nu
    std::uint64_t frob = 1 % M;
    for (std::uint64_t x = 0; x < M; ++x)
    {
        if (x % rest == p % rest && x % pnu == 1 % pnu)
        {
            frob = x;
            break;
        }
    }
    std::vector<std::uint64_t> decomp = inertia;
    std::uint64_t power = frob;
    while (!in_d[power])
    {
        for (auto a : inertia)
        {
            std::uint64_t b = nt::mulmod(a, power, M);
            if (!in_d[b])
            {
                in_d[b] = true;
                decomp.push_back(b);
            }
        }
        power = nt::mulmod(power, frob, M);
    }

    auto count_in_h = [&](const std::vector<std::uint64_t> &s) {
        return static_cast<std::uint64_t>(std::count_if(s.begin(), s.end(), [&](std::uint64_t a) { return in_h[a]; }));
    };
    const std::uint64_t e = inertia.size() / count_in_h(inertia);
    const std::uint64_t ef = decomp.size() / count_in_h(decomp);
    const std::uint64_t f = ef / e;
    const std::uint64_t g = pres.degree() / ef;
    return {static_cast<int>(e), static_cast<int>(f), static_cast<int>(g)};
}

PrimeSplitting abelian_prime_splitting(const AbelianPresentation &pres, std::uint64_t p)
{
    SplittingType t = abelian_splitting(pres, p);
    PrimeSplitting s;
    s.p = p;
    s.source = SplittingSource::abelian;
    s.factors.assign(static_cast<size_t>(t.g), {t.e, t.f});
    return s;
}

std::string to_string(SplitVerdict v)
{
    switch (v)
    {
    case SplitVerdict::split:
        return "split";
    case SplitVerdict::nonsplit:
        return "nonsplit";
    case SplitVerdict::undetermined:
        return "undetermined";
    }
    return "?";
}

SplitVerdict splits_in_quadratic_ext(const NumberField &K, const PrimeIdeal &ideal, unsigned q)
{
    if (q % ideal.p != 0)
    {
        // Frobenius of the ideal acts on zeta_q by raising to its norm
        const std::uint64_t n = nt::powmod(ideal.p, static_cast<std::uint64_t>(ideal.f), q);
        return n == 1 ? SplitVerdict::split : SplitVerdict::nonsplit;
    }
    auto tag = K.cyclotomic_tag();
    if (!tag)
        return SplitVerdict::undetermined;
    const std::uint64_t N = *tag;
    const std::uint64_t M = std::lcm<std::uint64_t>(N, q);
    auto in_k = [N](std::uint64_t a) { return a % N == 1 % N || (a + 1) % N == 0; };
    auto hk = AbelianPresentation::from_predicate(M, in_k);
    auto hl = AbelianPresentation::from_predicate(M, [&](std::uint64_t a) { return in_k(a) && a % q == 1; });
    if (hk.H.size() != 2 * hl.H.size())
        return SplitVerdict::undetermined;
    SplittingType below = abelian_splitting(hk, ideal.p);
    SplittingType above = abelian_splitting(hl, ideal.p);
    if (below.e != ideal.e || below.f != ideal.f)
        return SplitVerdict::undetermined;
    return above.g == 2 * below.g ? SplitVerdict::split : SplitVerdict::nonsplit;
}

// ------------------------------------------------------------ decomposer

PrimeDecomposer::PrimeDecomposer(NumberField K, Overrides overrides)
    : K_(std::move(K)), overrides_(std::move(overrides))
{
    for (const auto &[p, shape] : overrides_)
    {
        int total = 0;
        for (auto [e, f] : shape)
            total += e * f;
        if (total != K_.degree())
            throw ValidationError("splitting override at " + std::to_string(p) + " violates sum e*f = m");
    }
    Integer disc = abs(poly_disc(K_.poly()));
    if (!disc.fits_ulong_p())
        throw ValidationError("polynomial discriminant too large for trial factorization");
    for (auto [p, k] : nt::factorize(disc.get_ui()))
        bad_primes_.push_back(p);
}

PrimeSplitting PrimeDecomposer::decompose(std::uint64_t p) const
{
    if (auto it = overrides_.find(p); it != overrides_.end())
    {
        PrimeSplitting s;
        s.p = p;
        s.source = SplittingSource::external;
        s.factors = it->second;
        std::sort(s.factors.begin(), s.factors.end());
        return s;
    }
    bool bad = std::find(bad_primes_.begin(), bad_primes_.end(), p) != bad_primes_.end();
    if (!bad || !dedekind_index_test(K_.poly(), p))
        return kummer_dedekind(K_, p);
    if (auto tag = K_.cyclotomic_tag())
        return abelian_prime_splitting(AbelianPresentation::real_cyclotomic(*tag), p);
    throw MissingSplitting("no decomposition available for p = " + std::to_string(p) + " in field of discriminant " +
                           K_.disc().get_str());
}

// ------------------------------------------------------------ fast path

UnramifiedSplitter::UnramifiedSplitter(const IntPolynomial &f) : m_(f.degree()), coeffs_(f.coeffs())
{
    small_ok_ = true;
    for (const auto &c : coeffs_)
    {
        if (!c.fits_slong_p())
        {
            small_ok_ = false;
            break;
        }
        small_.push_back(c.get_si());
    }
}

namespace
{

struct FastRing
{
    int m;
    std::uint64_t p;
    std::uint64_t neg[16];      // -f_i mod p
    std::uint64_t high[16][16]; // x^(m+k) mod f

    void reduce_product(const std::uint64_t *t, std::uint64_t *out) const
    {
        // t has 2m-1 reduced entries
        for (int j = 0; j < m; ++j)
        {
            std::uint64_t acc = t[j];
            for (int k = 0; k + m <= 2 * m - 2; ++k)
                acc += t[m + k] * high[k][j];
            out[j] = acc % p;
        }
    }

    void mul(const std::uint64_t *a, const std::uint64_t *b, std::uint64_t *out) const
    {
        std::uint64_t t[32];
        for (int k = 0; k <= 2 * m - 2; ++k)
        {
            std::uint64_t acc = 0;
            const int lo = std::max(0, k - m + 1), hi = std::min(k, m - 1);
            for (int i = lo; i <= hi; ++i)
                acc += a[i] * b[k - i];
            t[k] = acc % p;
        }
        reduce_product(t, out);
    }

    void times_x(std::uint64_t *a) const
    {
        std::uint64_t top = a[m - 1];
        for (int i = m - 1; i > 0; --i)
            a[i] = a[i - 1];
        a[0] = 0;
        for (int i = 0; i < m; ++i)
            a[i] = (a[i] + top * neg[i]) % p;
    }
};

} // namespace

void UnramifiedSplitter::degrees(std::uint32_t p, std::vector<int> &out)
{
    out.clear();
    if (m_ == 1)
    {
        out.push_back(1);
        return;
    }
    if (!small_ok_ || p >= (1U << 28) || m_ > 15)
    {
        for (const auto &fac : factor_mod_p(IntPolynomial(coeffs_), p))
            out.push_back(degree(fac.factor));
        std::sort(out.begin(), out.end());
        return;
    }
    FastRing R;
    R.m = m_;
    R.p = p;
    const auto sp = static_cast<std::int64_t>(p);
    for (int i = 0; i < m_; ++i)
    {
        std::int64_t c = small_[static_cast<size_t>(i)] % sp;
        if (c < 0)
            c += sp;
        R.neg[i] = c == 0 ? 0 : static_cast<std::uint64_t>(sp - c);
    }
    for (int j = 0; j < m_; ++j)
        R.high[0][j] = R.neg[j];
    for (int k = 1; k + 1 < m_; ++k)
    {
        for (int j = 0; j < m_; ++j)
            R.high[k][j] = R.high[k - 1][j];
        R.times_x(R.high[k]);
    }

    // x^p by left-to-right square and multiply
    std::uint64_t acc[16] = {0}, tmp[16];
    acc[1] = 1;
    int top = 31 - __builtin_clz(p);
    for (int bit = top - 1; bit >= 0; --bit)
    {
        R.mul(acc, acc, tmp);
        std::copy(tmp, tmp + m_, acc);
        if ((p >> bit) & 1U)
            R.times_x(acc);
    }

    // Frobenius matrix rows x^(ip)
    std::uint64_t frob[16][16];
    std::fill(&frob[0][0], &frob[0][0] + 16 * 16, 0);
    frob[0][0] = 1;
    std::copy(acc, acc + m_, frob[1]);
    for (int i = 2; i < m_; ++i)
        R.mul(frob[i - 1], acc, frob[i]);

    ModPoly g = modp::reduce(IntPolynomial(coeffs_), p);
    std::uint64_t h[16];
    std::copy(acc, acc + m_, h);
    for (int d = 1; 2 * d <= degree(g); ++d)
    {
        ModPoly hx(h, h + m_);
        hx[1] = (hx[1] + p - 1) % p;
        while (!hx.empty() && hx.back() == 0)
            hx.pop_back();
        ModPoly part = modp::gcd(g, hx, p);
        const int dp = degree(part);
        if (dp > 0)
        {
            for (int k = 0; k < dp / d; ++k)
                out.push_back(d);
            g = modp::divmod(g, part, p).first;
        }
        // h <- h^p = sum h_j x^(jp)
        std::uint64_t next[16];
        for (int j = 0; j < m_; ++j)
        {
            unsigned __int128 s = 0;
            for (int i = 0; i < m_; ++i)
                s += static_cast<unsigned __int128>(h[i]) * frob[i][j];
            next[j] = static_cast<std::uint64_t>(s % p);
        }
        std::copy(next, next + m_, h);
    }
    if (degree(g) > 0)
        out.push_back(degree(g));
    std::sort(out.begin(), out.end());
}

} // namespace fakelines
