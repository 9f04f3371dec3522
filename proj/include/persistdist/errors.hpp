#pragma once

#include <stdexcept>
#include <string>

namespace persistdist {

// Raised by StaircaseInterval::validate; `kind` names the violated invariant.
class ValidationError : public std::runtime_error {
public:
    enum class Kind {
        NonMonotoneChain,
        ChainsEndpointMismatch,
        EmptyRegion,
        NonRectilinearEdge,
        SelfTouchingChains,
    };

    ValidationError(Kind kind, const std::string& detail)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + detail), kind_(kind) {}

    Kind kind() const { return kind_; }

    static const char* kind_name(Kind k) {
        switch (k) {
        case Kind::NonMonotoneChain: return "NonMonotoneChain";
        case Kind::ChainsEndpointMismatch: return "ChainsEndpointMismatch";
        case Kind::EmptyRegion: return "EmptyRegion";
        case Kind::NonRectilinearEdge: return "NonRectilinearEdge";
        case Kind::SelfTouchingChains: return "SelfTouchingChains";
        }
        return "ValidationError";
    }

private:
    Kind kind_;
};

class ShapeMismatch : public std::runtime_error {
public:
    explicit ShapeMismatch(const std::string& detail)
        : std::runtime_error("ShapeMismatch: " + detail) {}
};

class TooManyComponents : public std::runtime_error {
public:
    explicit TooManyComponents(const std::string& detail)
        : std::runtime_error("TooManyComponents: " + detail) {}
};

class SizeLimitExceeded : public std::runtime_error {
public:
    explicit SizeLimitExceeded(const std::string& detail)
        : std::runtime_error("SizeLimitExceeded: " + detail) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& detail) : std::runtime_error("ParseError: " + detail) {}
};

}  // namespace persistdist
