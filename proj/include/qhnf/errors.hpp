#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhnf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), position_(pos) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Malformed input document; `path` names the offending field.
class SchemaError : public Error {
public:
    SchemaError(const std::string& path, const std::string& msg)
        : Error("schema error at '" + path + "': " + msg), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

class NotDivisible : public Error {
public:
    NotDivisible() : Error("polynomial is not divisible") {}
};

class NotCoprime : public Error {
public:
    NotCoprime(long k, long l)
        : Error("weights (" + std::to_string(k) + "," + std::to_string(l) + ") are not coprime positive integers") {}
};

class NotStrictMap : public Error {
public:
    NotStrictMap() : Error("substitution is not tangent to the identity in the weighted filtration") {}
};

class NotStrictGauge : public Error {
public:
    NotStrictGauge() : Error("gauge is not strict: components must raise the quasi-degree") {}
};

class DegreeZeroObstruction : public Error {
public:
    DegreeZeroObstruction() : Error("contraction q has a nonzero quasi-degree 0 component") {}
};

class RelationViolated : public Error {
public:
    explicit RelationViolated(const std::string& what) : Error("index relation violated: " + what) {}
};

class DegenerateBranches : public Error {
public:
    explicit DegenerateBranches(const std::string& what) : Error("degenerate branches: " + what) {}
};

class NotFactoredOverField : public Error {
public:
    NotFactoredOverField() : Error("branch coefficients are not in the coefficient field") {}
};

class AxisRequired : public Error {
public:
    AxisRequired() : Error("operation requires epsilon0 = epsilonInf = 1") {}
};

class NotInvariantDivisor : public Error {
public:
    NotInvariantDivisor() : Error("divisor {y=0} is not invariant for the strict form") {}
};

class HigherOrderPole : public Error {
public:
    HigherOrderPole() : Error("residue requested at a pole of order >= 2") {}
};

class NonGeneric : public Error {
public:
    explicit NonGeneric(int m)
        : Error("hamiltonian system is singular at m = " + std::to_string(m)), degree_(m) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

class NonGenericRadial : public Error {
public:
    explicit NonGenericRadial(int m)
        : Error("radial system is singular at m = " + std::to_string(m)), degree_(m) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

class PrerequisiteDegreesDirty : public Error {
public:
    explicit PrerequisiteDegreesDirty(int m)
        : Error("graded slices below degree d+" + std::to_string(m) + " are not normalized") {}
};

class TruncationTooSmall : public Error {
public:
    explicit TruncationTooSmall(const std::string& what) : Error("truncation too small: " + what) {}
};

class NotInClass : public Error {
public:
    explicit NotInClass(const std::string& what) : Error("form is not in the class: " + what) {}
};

}  // namespace qhnf
