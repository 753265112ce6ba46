#pragma once

#include <stdexcept>
#include <string>

namespace asvd {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Constant input where variation is required (normalization, Pearson,
// per-pattern range splitting, noise scaling).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

class InvalidShape : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

class MaskMismatch : public Error {
public:
    using Error::Error;
};

class KindMismatch : public Error {
public:
    using Error::Error;
};

class InvalidFactor : public Error {
public:
    using Error::Error;
};

class EmptyForeground : public Error {
public:
    using Error::Error;
};

class IndivisibleGrid : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace asvd
