#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclaudit {

/// Base class for every error thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// exact arithmetic
struct ZeroDenominator : Error { using Error::Error; };
struct VariableMismatch : Error { using Error::Error; };
struct NonInvertibleConstantTerm : Error { using Error::Error; };
struct PoleAtOne : Error { using Error::Error; };
struct InvalidRationalText : Error { using Error::Error; };

// appell families
struct ZeroPrefactorConstant : Error { using Error::Error; };
struct ZeroLambda : Error { using Error::Error; };
struct MalformedDocument : Error { using Error::Error; };

// cyclic / q engines
struct TableTooShort : Error { using Error::Error; };

// modular periods
struct NonUnimodular : Error { using Error::Error; };
struct WeightMismatch : Error { using Error::Error; };
struct UnsupportedWeight : Error { using Error::Error; };
struct NotCuspidal : Error { using Error::Error; };
struct InsufficientTruncation : Error { using Error::Error; };

// analytic layer
struct NonConvergent : Error { using Error::Error; };
struct NearPole : Error { using Error::Error; };

/// Thrown when the requested accuracy would need more terms than the
/// configured ceiling allows; carries the bound that *is* achievable.
class AccuracyUnreachable : public Error {
public:
    AccuracyUnreachable(const std::string& what, double achievable)
        : Error(what), achievable_bound(achievable) {}
    double achievable_bound;
};

// cli / parsing
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};
struct UnknownVariable : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace cyclaudit
