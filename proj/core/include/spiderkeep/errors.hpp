#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spiderkeep {

// Every failure the library can signal on purpose. Tools map these to exit
// codes; tests match on the code, not the message.
enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    IndexOutOfRange,
    MalformedLine,
    UnknownVertex,
    EmptyGraph,
    CompleteGraph,
    Disconnected,
    NotACut,
    CapExceeded,
    HypothesisNotMet,
    ZeroLeg,
    NotATree,
    OrderMismatch,
    ExtractionFailed,
    ReductionFailed,
    TooLarge,
    BadParameters,
    GenerationBudgetExceeded,
    IoError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) +
                             (detail.empty() ? "" : ": " + detail)),
          code_(code),
          detail_(detail) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail = "") {
    throw Error(code, detail);
}

}  // namespace spiderkeep
