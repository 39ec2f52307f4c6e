#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
};

class NonInvertibleSubstitution : public Error {
    using Error::Error;
};
class DivisionByZero : public Error {
    using Error::Error;
};
class MissingAssignment : public Error {
    using Error::Error;
};
class UnknownVariable : public Error {
    using Error::Error;
};
class UnsupportedFamily : public Error {
    using Error::Error;
};
class UndefinedStatistic : public Error {
    using Error::Error;
};
class PositionOutOfRange : public Error {
    using Error::Error;
};
class InvalidGap : public Error {
    using Error::Error;
};
class MissingLetter : public Error {
    using Error::Error;
};
class NotSymmetric : public Error {
    using Error::Error;
};
class NotHomogeneous : public Error {
    using Error::Error;
};
class UnknownRecurrence : public Error {
    using Error::Error;
};
class UnknownGrammar : public Error {
    using Error::Error;
};

class BudgetExceeded : public Error {
   public:
    BudgetExceeded(const std::string& family, int n, int budget)
        : Error("budget exceeded for " + family + ": n=" + std::to_string(n) + " > budget " +
                std::to_string(budget)),
          budget_(budget) {}
    int budget() const noexcept { return budget_; }

   private:
    int budget_;
};

/// Raised when an internal consistency guard fails (never expected on valid input).
class InternalError : public Error {
    using Error::Error;
};

}  // namespace gg
