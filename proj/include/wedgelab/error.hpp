#pragma once

#include <stdexcept>
#include <string>

namespace wedgelab {

// Mirrors wl_status in wedgelab.h; values must stay in sync.
enum class ErrorCode : int {
    InvalidArgument = 1,
    Io = 2,
    Parse = 3,
    DuplicatePoint = 4,
    OriginPoint = 5,
    CapExceeded = 6,
    CollinearPair = 7,
    Projection = 8,
    CoincidentLines = 9,
    RotationExhausted = 10,
    GeneratorExhausted = 11,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace wedgelab
