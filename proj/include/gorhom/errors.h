#pragma once

#include <stdexcept>
#include <string>

namespace gorhom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg) : Error("NotPrime: " + msg) {}
};

struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& msg) : Error("NotAdmissible: " + msg) {}
};

struct UnknownVertex : Error {
    explicit UnknownVertex(const std::string& msg) : Error("UnknownVertex: " + msg) {}
};

struct AlgebraMismatch : Error {
    explicit AlgebraMismatch(const std::string& msg) : Error("AlgebraMismatch: " + msg) {}
};

struct NotNakayama : Error {
    explicit NotNakayama(const std::string& msg) : Error("NotNakayama: " + msg) {}
};

/* An isomorphism test came back undetermined inside a certification path.
 * Certificates never guess, so the whole certification aborts with this. */
struct UndeterminedIsomorphism : Error {
    explicit UndeterminedIsomorphism(const std::string& msg)
        : Error("UndeterminedIsomorphism: " + msg) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error("PreconditionError: " + msg) {}
};

struct ParseError : Error {
    int line, column;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ": " + msg),
          line(line_), column(col_) {}
};

}  // namespace gorhom
