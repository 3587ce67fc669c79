#ifndef DFN_ERRORS_HPP
#define DFN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dfn {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input file could not be parsed. Carries a line/column when the parser can
// locate the defect, -1 otherwise (semantic errors name the entity instead).
struct ParseError : Error {
    int line = -1;
    int column = -1;
    ParseError(const std::string& what, int line_ = -1, int column_ = -1)
        : Error(what), line(line_), column(column_) {}
};

// Network or scenario failed validation (disconnected graph, inverted
// bounds, slack problems, bad gas data, ...).
struct ValidationError : Error {
    using Error::Error;
};

// primal_objective was handed flows that do not satisfy conservation.
struct InfeasibleFlow : Error {
    using Error::Error;
};

// optimality_gap was handed bounds computed on different instances.
struct MismatchedScenario : Error {
    using Error::Error;
};

// Closed-form gas evaluations require every edge to have exponent 2.
struct NotGasNetwork : Error {
    using Error::Error;
};

} // namespace dfn

#endif
