#ifndef PLCAT_ERRORS_HPP
#define PLCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plcat {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyComplexError : Error { using Error::Error; };
struct DuplicateLabelError : Error { using Error::Error; };
struct InvalidFaceError : Error { using Error::Error; };
struct InvalidSimplexError : Error { using Error::Error; };
struct InvalidMaskError : Error { using Error::Error; };
struct NotConnectedError : Error { using Error::Error; };
struct NotPureError : Error { using Error::Error; };
struct NotAPermutationError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct NotACycleError : Error { using Error::Error; };
struct SpheresNotDisjointError : Error { using Error::Error; };
struct MapMismatchError : Error { using Error::Error; };
struct InvalidTriangleError : Error { using Error::Error; };
struct LabelCollisionError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct NotACoverError : Error { using Error::Error; };
struct NotEnrichedError : Error { using Error::Error; };
struct TooManyVariablesError : Error { using Error::Error; };
struct WrongCountError : Error { using Error::Error; };
struct TriangleNotInSphereError : Error { using Error::Error; };

// Violated named precondition; carries which clause failed.
struct PreconditionViolationError : Error {
    std::string clause;
    PreconditionViolationError(std::string clause_, const std::string& msg)
        : Error(msg), clause(std::move(clause_)) {}
};

// Parse error with 1-based source line when known.
struct SyntaxError : Error {
    int line;
    explicit SyntaxError(const std::string& msg, int line_ = 0) : Error(msg), line(line_) {}
};

// Clause that does not have exactly three literals.
struct NotThreeCnfError : Error {
    int clause_index;
    explicit NotThreeCnfError(const std::string& msg, int idx = -1) : Error(msg), clause_index(idx) {}
};

}  // namespace plcat

#endif
