#pragma once

#include <stdexcept>
#include <string>

namespace fakelines
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define FAKELINES_ERROR(Name)                                                  \
    class Name : public Error                                                  \
    {                                                                          \
    public:                                                                    \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}   \
    }

// polyfield
FAKELINES_ERROR(NotMonic);
FAKELINES_ERROR(NotSquarefree);
FAKELINES_ERROR(NotTotallyReal);
FAKELINES_ERROR(DiscMismatch);
FAKELINES_ERROR(Reducible);
FAKELINES_ERROR(DivisionByZero);
FAKELINES_ERROR(ZeroDivisor);

// primedec
FAKELINES_ERROR(IndexDivisible);
FAKELINES_ERROR(MissingSplitting);

// zetacalc
FAKELINES_ERROR(AmbiguousReconstruction);
FAKELINES_ERROR(OddCharacter);

// quatvol
FAKELINES_ERROR(ParityViolation);
FAKELINES_ERROR(NotDivision);
FAKELINES_ERROR(UnknownIdealTag);
FAKELINES_ERROR(UnsupportedS);

// torsion
FAKELINES_ERROR(UndeterminedTorsion);
FAKELINES_ERROR(OddDimension);

// pipeline
FAKELINES_ERROR(ParseError);
FAKELINES_ERROR(ValidationError);
FAKELINES_ERROR(RegressionMismatch);

#undef FAKELINES_ERROR

} // namespace fakelines
