#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fakelines/quatvol.hpp"

namespace fakelines
{

/// Prime powers q >= 3 with phi(q)/2 | m and Q(zeta_q)^+ possibly inside K.
std::vector<std::pair<unsigned, Containment>> torsion_candidates(const NumberField &K);
std::vector<unsigned> torsion_orders(const NumberField &K);

/// Hasse criterion for k(zeta_q) inside A.
Containment embeds_root_of_unity(const QuaternionAlgebra &A, unsigned q);

struct TorsionReport
{
    std::vector<unsigned> checked_orders;
    std::vector<Containment> verdicts; // parallel to checked_orders
    Integer index_divisor = 1;         // only from definite yes verdicts

    bool complete() const;
    std::string describe() const;
};

TorsionReport torsion_report(const QuaternionAlgebra &A);

/// lcm of the orders in PSL of the embeddable roots of unity. Throws UndeterminedTorsion.
Integer torsion_index_divisor(const QuaternionAlgebra &A);

enum class VerdictStatus
{
    fake_confirmed,
    candidate_unverified,
    eliminated
};

std::string to_string(VerdictStatus s);

struct FakeVerdict
{
    std::string algebra;
    Rational euler;
    Rational required_index;
    VerdictStatus status = VerdictStatus::candidate_unverified;
    std::string reason;
    TorsionReport torsion;
};

/// Throws OddDimension for odd n.
FakeVerdict fake_verdict(const QuaternionAlgebra &A, const Rational &zeta_m1);

} // namespace fakelines
