#include "fakelines/torsion.hpp"

#include <sstream>

#include "fakelines/errors.hpp"

namespace fakelines
{

namespace
{

bool is_prime_power(unsigned q)
{
    auto fac = nt::factorize(q);
    return fac.size() == 1;
}

} // namespace

std::vector<std::pair<unsigned, Containment>> torsion_candidates(const NumberField &K)
{
    const unsigned m = static_cast<unsigned>(K.degree());
    std::vector<std::pair<unsigned, Containment>> out;
    // phi(q) <= 2m forces q <= 4m^2 with room to spare
    for (unsigned q = 3; q <= 4 * m * m + 4; ++q)
    {
        if (!is_prime_power(q))
            continue;
        const auto half = nt::euler_phi(q) / 2;
        if (m % half != 0)
            continue;
        Containment c = contains_real_cyclotomic(K, q);
        if (c != Containment::no)
            out.emplace_back(q, c);
    }
    return out;
}

std::vector<unsigned> torsion_orders(const NumberField &K)
{
    std::vector<unsigned> out;
    for (auto [q, c] : torsion_candidates(K))
        out.push_back(q);
    return out;
}

namespace
{

Containment hasse(const QuaternionAlgebra &A, unsigned q)
{
    bool unknown = false;
    for (const auto &P : A.ram)
    {
        switch (splits_in_quadratic_ext(A.K, P, q))
        {
        case SplitVerdict::split:
            return Containment::no;
        case SplitVerdict::undetermined:
            unknown = true;
            break;
        case SplitVerdict::nonsplit:
            break;
        }
    }
    return unknown ? Containment::undetermined : Containment::yes;
}

} // namespace

Containment embeds_root_of_unity(const QuaternionAlgebra &A, unsigned q)
{
    Containment c = contains_real_cyclotomic(A.K, q);
    if (c == Containment::no)
        throw ValidationError("zeta_" + std::to_string(q) + " does not generate a quadratic extension of k");
    if (c == Containment::undetermined)
        return Containment::undetermined;
    return hasse(A, q);
}

bool TorsionReport::complete() const
{
    for (auto v : verdicts)
        if (v == Containment::undetermined)
            return false;
    return true;
}

std::string TorsionReport::describe() const
{
    std::ostringstream out;
    for (size_t i = 0; i < checked_orders.size(); ++i)
        out << (i ? " " : "") << "q=" << checked_orders[i] << ":" << to_string(verdicts[i]);
    return out.str();
}

TorsionReport torsion_report(const QuaternionAlgebra &A)
{
    TorsionReport rep;
    for (auto [q, c] : torsion_candidates(A.K))
    {
        Containment v = c == Containment::undetermined ? Containment::undetermined : hasse(A, q);
        rep.checked_orders.push_back(q);
        rep.verdicts.push_back(v);
        if (v == Containment::yes)
        {
            Integer order = q % 2 ? Integer(q) : Integer(q / 2);
            mpz_lcm(rep.index_divisor.get_mpz_t(), rep.index_divisor.get_mpz_t(), order.get_mpz_t());
        }
    }
    return rep;
}

Integer torsion_index_divisor(const QuaternionAlgebra &A)
{
    TorsionReport rep = torsion_report(A);
    if (!rep.complete())
        throw UndeterminedTorsion(A.describe() + ": " + rep.describe());
    return rep.index_divisor;
}

std::string to_string(VerdictStatus s)
{
    switch (s)
    {
    case VerdictStatus::fake_confirmed:
        return "fake_confirmed";
    case VerdictStatus::candidate_unverified:
        return "candidate_unverified";
    case VerdictStatus::eliminated:
        return "eliminated";
    }
    return "?";
}

FakeVerdict fake_verdict(const QuaternionAlgebra &A, const Rational &zeta_m1)
{
    if (A.n % 2 != 0)
        throw OddDimension("n = " + std::to_string(A.n) + " admits no fake product");
    FakeVerdict v;
    v.algebra = A.describe();
    v.euler = covolume_norm1(A, zeta_m1);
    Rational two_n(1);
    mpz_mul_2exp(two_n.get_num_mpz_t(), two_n.get_num_mpz_t(), static_cast<mp_bitcnt_t>(A.n));
    v.required_index = two_n / v.euler;

    if (v.required_index.get_den() != 1)
    {
        v.status = VerdictStatus::eliminated;
        v.reason = "2^n / vol = " + v.required_index.get_str() + " is not an integer";
        return v;
    }
    v.torsion = torsion_report(A);
    const Integer &req = v.required_index.get_num();
    const Integer &div = v.torsion.index_divisor;
    if (req % div != 0)
    {
        v.status = VerdictStatus::eliminated;
        v.reason = "torsion forces index divisible by " + div.get_str() + ", which does not divide " + req.get_str();
        if (req == 1 && div % 2 == 0)
            v.reason += " (order-2 torsion at index 1)";
        return v;
    }
    if (!v.torsion.complete())
    {
        v.status = VerdictStatus::candidate_unverified;
        v.reason = "torsion undetermined: " + v.torsion.describe();
        return v;
    }
    if (req == 1 && div == 1)
    {
        v.status = VerdictStatus::fake_confirmed;
        v.reason = "index 1, no embeddable torsion";
        return v;
    }
    v.status = VerdictStatus::candidate_unverified;
    v.reason = "index " + req.get_str() + " compatible with torsion divisor " + div.get_str() +
               "; existence of a torsion-free subgroup not decided";
    return v;
}

} // namespace fakelines
