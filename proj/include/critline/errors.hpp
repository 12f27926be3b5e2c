#pragma once

#include <stdexcept>
#include <string>

namespace critline {

// Input outside an operation's domain (bad tolerance, empty sequence, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation requested exactly at a pole.
class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

// A series or bracketing loop hit its cap before reaching tolerance.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Conjugate-ratio evaluation refused: the reflected point sits on or next to
// a zero of the denominator and the quotient degenerates to 0/0 there.
class near_zero_error : public std::runtime_error {
public:
    near_zero_error(const std::string& what, double zero_ordinate, double distance)
        : std::runtime_error(what), zero_ordinate(zero_ordinate), distance(distance) {}

    double zero_ordinate;  // ordinate of the offending zero
    double distance;       // |t| distance from it
};

}  // namespace critline
