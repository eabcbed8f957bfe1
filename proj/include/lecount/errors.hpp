#pragma once

#include <stdexcept>
#include <string>

namespace lecount {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cover list closes into a directed cycle.
struct CycleError : Error {
    using Error::Error;
};

// Element index outside 0..n-1.
struct IndexError : Error {
    using Error::Error;
};

// Relation added between already comparable elements.
struct ComparableError : Error {
    using Error::Error;
};

// Pair removed or folded that is not a cover of the poset.
struct NotACoverError : Error {
    using Error::Error;
};

// Input exceeds a size cap of an exponential-time routine.
struct LimitError : Error {
    using Error::Error;
};

// Fold set contains a cover whose removal does not disconnect anything.
struct NotBridgeError : Error {
    using Error::Error;
};

// Operation requires a connected poset.
struct NotConnectedError : Error {
    using Error::Error;
};

// Component order does not induce connected subposets on every interval.
struct NotPathOrderError : Error {
    using Error::Error;
};

// Determinant evaluation produced a non-integer count.
struct NonIntegralError : Error {
    using Error::Error;
};

// Poset fails one of the three d-completeness conditions; `clause` is 1, 2
// or 3 and `detail` names the witnessing convex set or interval.
struct NotDCompleteError : Error {
    int clause;
    std::string detail;
    NotDCompleteError(int clause_, std::string detail_)
        : Error("d-completeness clause " + std::to_string(clause_) +
                " violated: " + detail_),
          clause(clause_),
          detail(std::move(detail_)) {}
};

// Hook recurrence admits two candidate values for the same element.
struct AmbiguityError : Error {
    using Error::Error;
};

// Folded poset is not a rooted tree where one is required.
struct NotRootedTreeError : Error {
    using Error::Error;
};

// Labeling is not regular where regularity is required.
struct NotRegularLabelingError : Error {
    using Error::Error;
};

// Poset admits no fold set realizing it as a mobile tree poset.
struct NotMobileTreeError : Error {
    using Error::Error;
};

// Labeling is not partitioned-regular with respect to the component order.
struct NotPartitionedRegularError : Error {
    using Error::Error;
};

// Exact polynomial division left a remainder.
struct NonPolynomialError : Error {
    using Error::Error;
};

// Coefficient-wise division of polynomials failed.
struct DivisionError : Error {
    using Error::Error;
};

// Mobile specification declares more than one anchor.
struct MultipleAnchorError : Error {
    using Error::Error;
};

// Matrix or spectrum dimensions do not match.
struct DimensionError : Error {
    using Error::Error;
};

// Poset is not a tree poset where one is required.
struct NotTreePosetError : Error {
    using Error::Error;
};

// Given labeling admits no merge order satisfying the label hypothesis.
struct IncompatibleLabelingError : Error {
    using Error::Error;
};

// Interpolated polynomial fails at the held-out verification point.
struct InterpolationMismatchError : Error {
    using Error::Error;
};

// Input text rejected by the surface-language parser.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : Error("parse error at " + std::to_string(line_) + ":" +
                std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

}  // namespace lecount
