#ifndef EULERINT_ERRORS_HPP
#define EULERINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eulerint {

// Every failure mode has a stable code so callers (and the CLI exit-code
// mapping) can dispatch without string matching.
enum class Err {
    DegenerateSimplex,
    DuplicateCell,
    OverlappingInteriors,
    UnknownCell,
    EmptyRange,
    TooFewVertices,
    InvalidMap,
    NotOneDimensional,
    NotConvex,
    NotCounterclockwise,
    EpsilonTooLarge,
    NotContinuous,
    TieError,
    NotManifoldFixture,
    NotFiberConstant,
    NotConstructibleIntegrand,
    SupportTouchesBoundary,
    SupportOutsideWindow,
    ZeroConfidenceNeighborhood,
    ParseError,
    IncompatibleMethod,
    ConfigError,
};

const char* err_name(Err e);

class EulerError : public std::runtime_error {
  public:
    EulerError(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

    Err code() const { return code_; }

  private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
    throw EulerError(code, msg);
}

inline void require(bool cond, Err code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace eulerint

#endif
