#pragma once

#include <stdexcept>
#include <string>

namespace qsv {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroConstantTerm : Error {
    ZeroConstantTerm() : Error("invert: constant term is zero") {}
};

struct NonzeroInnerConstant : Error {
    NonzeroInnerConstant() : Error("compose: inner series has nonzero constant term") {}
};

struct BadLowestTerm : Error {
    BadLowestTerm() : Error("reversion: need zero constant term and invertible linear term") {}
};

struct NonIntegerExponent : Error {
    explicit NonIntegerExponent(const std::string& what) : Error(what) {}
};

struct ArityMismatch : Error {
    ArityMismatch() : Error("multiseries: operand arities differ") {}
};

struct DivergentProduct : Error {
    explicit DivergentProduct(const std::string& what) : Error(what) {}
};

struct BadParameter : Error {
    explicit BadParameter(const std::string& what) : Error(what) {}
};

struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& id) : Error("unknown identity: " + id) {}
};

struct SizeTooLarge : Error {
    explicit SizeTooLarge(const std::string& what) : Error(what) {}
};

struct NoStabilization : Error {
    explicit NoStabilization(const std::string& what) : Error(what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct UnboundedSum : Error {
    explicit UnboundedSum(const std::string& what) : Error(what) {}
};

} // namespace qsv
