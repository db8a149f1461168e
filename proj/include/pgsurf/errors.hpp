#pragma once

#include <stdexcept>
#include <string>

namespace pgsurf {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// W vanished at the evaluation point; curvature is undefined there.
class LightlikeSurface : public Error {
public:
    using Error::Error;
};

/// Both x-partials vanish (pseudo-Euclidean tangent plane).
class InadmissiblePatch : public Error {
public:
    using Error::Error;
};

/// Denominator of a specialized factorable formula vanished.
class LightlikeLocus : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Evaluation outside the radicand-positive region of a closed form.
class DomainError : public Error {
public:
    using Error::Error;
};

class BlowUp : public Error {
public:
    using Error::Error;
};

/// An ODE state left the causal branch it was started on.
class BranchViolation : public Error {
public:
    using Error::Error;
};

class GridRejected : public Error {
public:
    using Error::Error;
};

}  // namespace pgsurf
