#pragma once

#include <stdexcept>
#include <string>

namespace lotto_edge {

// Base of every error raised by the library. name() is the stable identifier
// the CLI prints before exiting with status 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

// A lottery description is malformed (bad prize data, ways exceed t, f <= 0, ...).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error("ConfigError", what) {}
};

// The bound-based classifiers were invoked on a lottery that is not major
// (t < 500) or pays out too much outside the jackpot (F < 0.8).
class HypothesisViolation : public Error {
public:
    explicit HypothesisViolation(const std::string& what)
        : Error("HypothesisViolation", what) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what) : Error("SingularMatrix", what) {}
};

class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(const std::string& what)
        : Error("NotPositiveDefinite", what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

// Brute-force oracles refuse sizes that would not finish in reasonable time.
class SizeGuard : public Error {
public:
    explicit SizeGuard(const std::string& what) : Error("SizeGuard", what) {}
};

}  // namespace lotto_edge
