#pragma once

#include <stdexcept>
#include <string>

namespace vext {

// Base class for all library diagnostics.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Canonicalization or an arithmetic result needs a cyclic period above the cap.
class PeriodLimitExceeded : public Error {
public:
    explicit PeriodLimitExceeded(const std::string& what) : Error(what) {}
};

// A rational-function result exceeds the configured polynomial degree cap.
class DegreeLimitExceeded : public Error {
public:
    explicit DegreeLimitExceeded(const std::string& what) : Error(what) {}
};

// Eventual membership of a branch in the given subset is outside the decidable fragment.
class UndecidableMembership : public Error {
public:
    explicit UndecidableMembership(const std::string& what) : Error(what) {}
};

// A relation body cannot decide a rational-function branch eventually.
class UndecidableBranch : public Error {
public:
    explicit UndecidableBranch(const std::string& what) : Error(what) {}
};

class ArityMismatch : public Error {
public:
    explicit ArityMismatch(const std::string& what) : Error(what) {}
};

// Quantification over a domain that cannot be enumerated (e.g. an interval union).
class NonEnumerableDomain : public Error {
public:
    explicit NonEnumerableDomain(const std::string& what) : Error(what) {}
};

class NonEnumerableCarrier : public Error {
public:
    explicit NonEnumerableCarrier(const std::string& what) : Error(what) {}
};

// An argument branch eventually leaves the function's domain.
class DomainViolation : public Error {
public:
    explicit DomainViolation(const std::string& what) : Error(what) {}
};

class NotAChain : public Error {
public:
    explicit NotAChain(const std::string& what) : Error(what) {}
};

class DomainMismatch : public Error {
public:
    explicit DomainMismatch(const std::string& what) : Error(what) {}
};

// Division by a value with an identically-zero branch (zero or a zero divisor).
class ZeroBranchDivisor : public Error {
public:
    explicit ZeroBranchDivisor(const std::string& what) : Error(what) {}
};

// An enumeration request is too large to complete.
class SizeLimit : public Error {
public:
    explicit SizeLimit(const std::string& what) : Error(what) {}
};

class TypeError : public Error {
public:
    explicit TypeError(const std::string& what) : Error(what) {}
};

// Parse diagnostic carrying a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, const std::string& what)
        : Error(what), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace vext
