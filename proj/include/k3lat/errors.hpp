#pragma once

#include <stdexcept>
#include <string>

namespace k3lat {

/* Base of every error the library raises on bad input or an impossible
 * request. Each subclass carries the name used in reports and on the
 * command line. */
struct error : public std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual char const * kind() const noexcept { return "Error"; }
};

#define K3LAT_ERROR(Name)                                                   \
    struct Name : public error {                                            \
        using error::error;                                                 \
        char const * kind() const noexcept override { return #Name; }       \
    }

K3LAT_ERROR(ParseError);
K3LAT_ERROR(InvalidArgument);
K3LAT_ERROR(DimensionMismatch);
K3LAT_ERROR(NotSymmetric);
K3LAT_ERROR(DegenerateLattice);
K3LAT_ERROR(DegenerateSublattice);
K3LAT_ERROR(OddLattice);
K3LAT_ERROR(NotInDual);
K3LAT_ERROR(ZeroTwist);
K3LAT_ERROR(InvalidForm);
K3LAT_ERROR(TooLarge);
K3LAT_ERROR(EmptyResult);
K3LAT_ERROR(ZeroDiscriminant);
K3LAT_ERROR(NoMatch);
K3LAT_ERROR(Ambiguous);
K3LAT_ERROR(SearchTooLarge);
K3LAT_ERROR(WrongSignature);

#undef K3LAT_ERROR

} // namespace k3lat
