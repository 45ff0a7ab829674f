#pragma once

#include <stdexcept>
#include <string>

namespace pierce {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateAngle : Error { using Error::Error; };
struct DegenerateEdge : Error { using Error::Error; };
struct CollinearPoints : Error { using Error::Error; };
struct DuplicatePoints : Error { using Error::Error; };
struct EmptyInstance : Error { using Error::Error; };
struct NonFiniteCoordinate : Error { using Error::Error; };
struct NotASpanningTree : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct ZeroRadius : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct OddCount : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace pierce
