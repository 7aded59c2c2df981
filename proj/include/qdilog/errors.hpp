#pragma once

#include <stdexcept>
#include <string>

namespace qdilog {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input sits on or within 1e-13 of a principal branch cut.
struct CutProximity : Error { using Error::Error; };

struct DomainError : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct OutOfStrip : Error { using Error::Error; };
struct PoleProximity : Error { using Error::Error; };
struct BandViolation : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct DegenerateRoot : Error { using Error::Error; };
struct NonGenericLambda : Error { using Error::Error; };

} // namespace qdilog
