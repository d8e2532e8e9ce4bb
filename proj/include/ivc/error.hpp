#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivc {

enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    BadParameter,
    EmptyFactor,
    OutOfRange,
    NotBipartite,
    NotRegular,
    NotClass1,
    BudgetExceeded,
    InvalidAlpha,
    BadN,
    BadDims,
    MissingParameter,
    ParseError,
    ConstructionFailed,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ivc
