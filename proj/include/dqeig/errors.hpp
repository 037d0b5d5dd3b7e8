#pragma once

#include <stdexcept>
#include <string>

namespace dqeig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define DQEIG_DECLARE_ERROR(Name)                                  \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(what) {}    \
    }

DQEIG_DECLARE_ERROR(DivisionUndefined);
DQEIG_DECLARE_ERROR(NotInvertible);
DQEIG_DECLARE_ERROR(NotAppreciable);
DQEIG_DECLARE_ERROR(ZeroInput);
DQEIG_DECLARE_ERROR(ZeroVector);
DQEIG_DECLARE_ERROR(DimensionMismatch);
DQEIG_DECLARE_ERROR(NotAdjointStructured);
DQEIG_DECLARE_ERROR(OddLength);
DQEIG_DECLARE_ERROR(NotHermitian);
DQEIG_DECLARE_ERROR(NoConvergence);
DQEIG_DECLARE_ERROR(ClusterInstability);
DQEIG_DECLARE_ERROR(NotAnEigenvector);
DQEIG_DECLARE_ERROR(SparsityTooHigh);
DQEIG_DECLARE_ERROR(DegenerateRandomDraw);
DQEIG_DECLARE_ERROR(ParseError);
DQEIG_DECLARE_ERROR(InvalidArgument);

#undef DQEIG_DECLARE_ERROR

}  // namespace dqeig
