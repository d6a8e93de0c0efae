#ifndef SPINECENSUS_ERRORS_HPP
#define SPINECENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinecensus {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SPINECENSUS_ERROR(name)                      \
    class name : public Error {                      \
    public:                                          \
        explicit name(const std::string& what)       \
            : Error(std::string(#name ": ") + what) {} \
    }

// graph construction
SPINECENSUS_ERROR(DegreeError);
SPINECENSUS_ERROR(SelfPairError);
SPINECENSUS_ERROR(LimitError);

// spines
SPINECENSUS_ERROR(DisconnectedError);
SPINECENSUS_ERROR(ShapeError);
SPINECENSUS_ERROR(NonCoherentTraceError);
SPINECENSUS_ERROR(UnknownEdgeError);

// reduction
SPINECENSUS_ERROR(PreconditionError);
SPINECENSUS_ERROR(ConstructionFailure);
SPINECENSUS_ERROR(ReductionFailure);

// triangulations and records
SPINECENSUS_ERROR(ValidationError);

// counting
SPINECENSUS_ERROR(ParityError);

#undef SPINECENSUS_ERROR

} // namespace spinecensus

#endif
