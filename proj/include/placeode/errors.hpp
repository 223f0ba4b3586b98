#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace placeode {

class Field;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Raised when adjoining a root would exceed the absolute degree cap.
class ExtensionLimitExceeded : public Error {
public:
    ExtensionLimitExceeded(std::string msg, std::shared_ptr<const Field> partial)
        : Error(std::move(msg)), partial_(std::move(partial)) {}
    const std::shared_ptr<const Field>& partial_tower() const { return partial_; }

private:
    std::shared_ptr<const Field> partial_;
};

// input validation
class InvalidInput : public Error {
public:
    using Error::Error;
};

class NotIrreducible : public InvalidInput {
public:
    NotIrreducible(std::string msg, std::string witness)
        : InvalidInput(std::move(msg)), witness_(std::move(witness)) {}
    /// Rendered nontrivial factor.
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

class NoDerivative : public InvalidInput {
public:
    NoDerivative() : InvalidInput("the equation does not involve y'") {}
};

class TrivialLinear : public InvalidInput {
public:
    TrivialLinear() : InvalidInput("the equation has the trivial form y' - lambda") {}
};

class CommonComponent : public Error {
public:
    CommonComponent() : Error("the polynomials share a common component") {}
};

class PointNotOnCurve : public Error {
public:
    PointNotOnCurve() : Error("the point does not lie on the curve") {}
};

class NotAUnit : public Error {
public:
    NotAUnit() : Error("series is not a unit") {}
};

class InnerNotPositiveOrder : public Error {
public:
    InnerNotPositiveOrder() : Error("inner series of a composition must have positive order") {}
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

class NotOrderSuitable : public Error {
public:
    NotOrderSuitable() : Error("place is not order-suitable") {}
};

class SeparantVanishes : public Error {
public:
    SeparantVanishes() : Error("the separant vanishes at the initial tuple") {}
};

class ParseError : public InvalidInput {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : InvalidInput(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace placeode
