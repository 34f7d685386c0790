#ifndef POLYDUAL_ERRORS_HPP
#define POLYDUAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polydual {

enum class Errc {
    DimensionMismatch,
    EmptyOperand,
    EmptyRegion,
    ImproperFunction,
    PointOutsideDomain,
    PointNotFeasible,
    InconsistentSystem,
    PremiseViolated,
    HiddenAssumptionFails,
    LimitExceeded,
    ParseError,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DimensionMismatch:     return "DimensionMismatch";
        case Errc::EmptyOperand:          return "EmptyOperand";
        case Errc::EmptyRegion:           return "EmptyRegion";
        case Errc::ImproperFunction:      return "ImproperFunction";
        case Errc::PointOutsideDomain:    return "PointOutsideDomain";
        case Errc::PointNotFeasible:      return "PointNotFeasible";
        case Errc::InconsistentSystem:    return "InconsistentSystem";
        case Errc::PremiseViolated:       return "PremiseViolated";
        case Errc::HiddenAssumptionFails: return "HiddenAssumptionFails";
        case Errc::LimitExceeded:         return "LimitExceeded";
        case Errc::ParseError:            return "ParseError";
        case Errc::Internal:              return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace polydual

#endif
