#pragma once

#include <stdexcept>
#include <string>

namespace windiso {

/// Curve with fewer than 3 distinct vertices where a proper polygon is required.
class DegenerateCurveError : public std::invalid_argument {
public:
    explicit DegenerateCurveError(const std::string& what) : std::invalid_argument(what) {}
};

/// Query point lies exactly on the curve; the winding number is undefined there.
class OnCurveError : public std::domain_error {
public:
    explicit OnCurveError(const std::string& what) : std::domain_error(what) {}
};

/// A certified bound failed. Carries enough context to reproduce the failure.
class TheoremViolationError : public std::logic_error {
public:
    explicit TheoremViolationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace windiso
