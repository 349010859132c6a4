#ifndef CYCLO_ERRORS_HPP
#define CYCLO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclo {

// Base for everything the library throws. `computational()` separates
// failures of a valid request (overflow, budget, size) from bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual bool computational() const noexcept { return false; }
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class NoPrimesInClass : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
    bool computational() const noexcept override { return true; }
};

class BudgetExhausted : public Error {
public:
    using Error::Error;
    bool computational() const noexcept override { return true; }
};

class TooLarge : public Error {
public:
    using Error::Error;
    bool computational() const noexcept override { return true; }
};

class InternalError : public Error {
public:
    using Error::Error;
    bool computational() const noexcept override { return true; }
};

class CheckpointError : public Error {
public:
    using Error::Error;
    bool computational() const noexcept override { return true; }
};

} // namespace cyclo

#endif
