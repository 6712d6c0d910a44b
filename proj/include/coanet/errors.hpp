#pragma once

#include <stdexcept>
#include <string>

namespace coanet {

/// Base class for all coanet errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Transport-level failure (DNS, connect, timeout, connection reset).
class NetworkError : public Error {
public:
    using Error::Error;
};

/// A page kept failing after the configured number of retries.
class RetriesExhausted : public NetworkError {
public:
    using NetworkError::NetworkError;
};

/// The response is not a valid OAI-PMH document of the expected kind.
class ProtocolError : public Error {
public:
    using Error::Error;
};

/// The repository speaks a protocol version other than 2.0.
class UnsupportedVersion : public ProtocolError {
public:
    using ProtocolError::ProtocolError;
};

/// Top-level <error> element in an OAI-PMH response.
class OaiError : public Error {
public:
    OaiError(std::string code, const std::string& message)
        : Error("OAI error [" + code + "]: " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class EmptyNameError : public Error {
public:
    using Error::Error;
};

class EmptyGraphError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Snapshot file written with an incompatible format version.
class VersionMismatch : public Error {
public:
    using Error::Error;
};

/// Snapshot file failed its integrity check or is structurally broken.
class CorruptSnapshot : public Error {
public:
    using Error::Error;
};

/// Invalid HarvestJob state transition.
class StateError : public Error {
public:
    using Error::Error;
};

/// Lookup of an unknown repository or partition.
class NotFoundError : public Error {
public:
    using Error::Error;
};

} // namespace coanet
