#ifndef PATHBASIS_ERRORS_HPP
#define PATHBASIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pathbasis {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (JSON, DOT, or mini-language source).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Graph violates a structural requirement (missing begin/end, empty
/// node set, no begin-to-end path).
class StructuralError : public Error {
public:
    explicit StructuralError(const std::string& msg) : Error(msg) {}
};

/// An operation was called outside its contract (e.g. count_trivial on
/// a non-trivial block, endpoint mismatch in a path combination).
class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

/// No offered candidate path could restore a full-rank basis.
class SubstituteError : public Error {
public:
    explicit SubstituteError(const std::string& msg) : Error(msg) {}
};

/// Path enumeration hit its budget before spanning the path space.
class EnumerationError : public Error {
public:
    explicit EnumerationError(const std::string& msg) : Error(msg) {}
};

} // namespace pathbasis

#endif
