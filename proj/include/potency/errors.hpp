#pragma once

#include <stdexcept>
#include <string>

namespace potency {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// complex construction / queries
struct EmptyInput : Error { using Error::Error; };
struct DuplicateVertexInFacet : Error { using Error::Error; };
struct NonMaximalFacet : Error { using Error::Error; };
struct DimensionOutOfRange : Error { using Error::Error; };
struct SimplexNotInComplex : Error { using Error::Error; };
struct NotPure : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct NotPseudomanifold : Error { using Error::Error; };

// quotients
struct DegenerateFacet : Error { using Error::Error; };

// group machinery
struct Disconnected : Error { using Error::Error; };
struct UnknownBase : Error { using Error::Error; };
struct NotSubcomplex : Error { using Error::Error; };
struct NotClosed3Manifold : Error { using Error::Error; };
struct AbelianizationNotZ : Error { using Error::Error; };
struct MatrixTooLarge : Error { using Error::Error; };
struct TooManyGenerators : Error { using Error::Error; };

// geometry
struct TooMany : Error { using Error::Error; };

// io
struct IoError : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };

/// Parse failure in one of the text formats; carries the 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("parse error at line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace potency
