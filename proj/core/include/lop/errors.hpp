#pragma once

#include <stdexcept>
#include <string>

namespace lop {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// geometry kernel
struct DegenerateInput : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };
struct InvalidPolygon : Error { using Error::Error; };

// layout / border
struct EmptyLayout : Error { using Error::Error; };
struct MissingCircle : Error { using Error::Error; };
struct DuplicateId : Error { using Error::Error; };
struct InvalidSpan : Error { using Error::Error; };
struct TooSmall : Error { using Error::Error; };

// placement / solver
struct NoFeasibleTangentPlacement : Error { using Error::Error; };
struct Unsolvable : Error { using Error::Error; };
struct ConstructionStuck : Error { using Error::Error; };
struct TooFewCircles : Error { using Error::Error; };

// permutations / batch
struct CountExceedsSpace : Error { using Error::Error; };
struct AllRunsFailed : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

}  // namespace lop
