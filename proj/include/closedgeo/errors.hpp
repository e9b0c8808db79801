#pragma once

#include <stdexcept>
#include <string>

#include "closedgeo/rational.hpp"

namespace closedgeo {

/// An evaluation point j/m landed exactly on a stored rotation phase. The
/// rational phase cannot stand in for an irrational one at this iterate.
class PhaseCollision : public std::runtime_error {
public:
    explicit PhaseCollision(Rational phase)
        : std::runtime_error("evaluation point " + phase.str() + " coincides with a rotation phase"),
          phase_(phase)
    {
    }

    const Rational& phase() const noexcept { return phase_; }

private:
    Rational phase_;
};

class PrecondViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a profile document or constructor input breaks a structural
/// invariant. The message names the first violation.
class InvalidProfile : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace closedgeo
