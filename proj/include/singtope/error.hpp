#pragma once

#include <stdexcept>
#include <string>

namespace singtope {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid graph description.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A graph operation received an argument outside its domain.
class GraphError : public Error {
public:
    using Error::Error;
};

class NotNegativeDefinite : public Error {
public:
    NotNegativeDefinite() : Error("intersection form is not negative definite") {}
};

/// Laufer's algorithm ran past its step budget. Only possible when the
/// definiteness check has been bypassed or is wrong.
class StepBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A verdict that the combinatorics cannot license (e.g. conicality of a
/// non-rational graph).
class VerdictRefused : public Error {
public:
    using Error::Error;
};

} // namespace singtope
