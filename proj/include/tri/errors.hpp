#pragma once

#include <stdexcept>
#include <string>

namespace tri {

enum class Err {
    InvolutionViolation,
    NotClosed,
    Disconnected,
    UnsupportedSize,
    NotAManifold,
    MalformedSignature,
    IllegalMove,
    SizeAboveCeiling,
    EmptyLevel,
    BadInput,
};

class TriError : public std::runtime_error {
public:
    TriError(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

} // namespace tri
