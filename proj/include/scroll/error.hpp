#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scroll {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidVariety : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// The exact-sequence constraints leave more than one cohomology table for a twist.
class AmbiguousConnectingMap : public Error {
public:
    explicit AmbiguousConnectingMap(int twist)
        : Error("ambiguous connecting map: Sym2 Omega(" + std::to_string(twist) +
                ") cohomology is not pinned by the available constraints"),
          twist_(twist) {}
    int twist() const noexcept { return twist_; }

private:
    int twist_;
};

class UnsupportedTensor : public Error {
public:
    using Error::Error;
};

class UnsupportedKind : public Error {
public:
    using Error::Error;
};

/// Hirzebruch-Riemann-Roch produced a non-integer; the ring arithmetic is broken.
class NonIntegralEuler : public Error {
public:
    using Error::Error;
};

class InconsistentUlrich : public Error {
public:
    using Error::Error;
};

class NotUlrich : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class ConsistencyFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace scroll
