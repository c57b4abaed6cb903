#pragma once

#include <stdexcept>
#include <string>

namespace strcyc {

// Error taxonomy shared across the library. The CLI maps codes to exit
// statuses (input/shape errors -> 2, budget exhaustion -> 3).
class Error : public std::runtime_error {
public:
    enum class Code {
        MalformedInput,
        NotSeparated,
        TooFewVertices,
        OutOfRange,
        AlreadyClosed,
        InvalidRun,
        CoincidingEndpoints,
        UnsupportedShape,
        NotSquarefree,
        NotMinimal,
        NonSquarefreeProduct,
        TooManyVariables,
        Internal,
    };

    Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

    const char* codeName() const {
        switch (code_) {
        case Code::MalformedInput: return "MalformedInput";
        case Code::NotSeparated: return "NotSeparated";
        case Code::TooFewVertices: return "TooFewVertices";
        case Code::OutOfRange: return "OutOfRange";
        case Code::AlreadyClosed: return "AlreadyClosed";
        case Code::InvalidRun: return "InvalidRun";
        case Code::CoincidingEndpoints: return "CoincidingEndpoints";
        case Code::UnsupportedShape: return "UnsupportedShape";
        case Code::NotSquarefree: return "NotSquarefree";
        case Code::NotMinimal: return "NotMinimal";
        case Code::NonSquarefreeProduct: return "NonSquarefreeProduct";
        case Code::TooManyVariables: return "TooManyVariables";
        case Code::Internal: return "Internal";
        }
        return "Unknown";
    }

private:
    Code code_;
};

// Raised when a Groebner run exceeds its reduction-step budget. Callers that
// can report a partial result catch this and mark the run inconclusive.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(long long steps)
        : std::runtime_error("reduction step budget exceeded"), steps_(steps) {}
    long long steps() const { return steps_; }

private:
    long long steps_;
};

[[noreturn]] inline void fail(Error::Code code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace strcyc
