#ifndef PUSHTRACK_ERRORS_HPP
#define PUSHTRACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pushtrack {

// Error identities named by the module contracts. `input_error` separates
// exit-code-2 conditions (bad user input) from exit-code-1 mathematics.
enum class ErrorKind {
    MalformedCode,
    UnknownFaceLabel,
    BadSurface,
    UnknownCrossing,
    NotFilling,
    HypothesisViolated,
    NotInReducedCone,
    InconsistentTrack,
    NotPrimitive,
    IndexOutOfRange,
    BadGenus,
    BadParameters,
    Io,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

    // Everything here describes an unusable input; mathematical failures
    // (a failed sandwich or acceptance criterion) are signaled by return
    // values, not exceptions.
    bool input_error() const {
        switch (kind_) {
            case ErrorKind::MalformedCode:
            case ErrorKind::UnknownFaceLabel:
            case ErrorKind::BadSurface:
            case ErrorKind::UnknownCrossing:
            case ErrorKind::NotFilling:
            case ErrorKind::HypothesisViolated:
            case ErrorKind::IndexOutOfRange:
            case ErrorKind::BadGenus:
            case ErrorKind::BadParameters:
            case ErrorKind::Io:
                return true;
            default:
                return false;
        }
    }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

}  // namespace pushtrack

#endif
