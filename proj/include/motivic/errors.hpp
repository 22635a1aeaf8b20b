#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

/// Exact 64-bit arithmetic left its representable range.
class ArithmeticOverflow : public std::runtime_error {
public:
    explicit ArithmeticOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration would visit more candidate tuples than the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Expression lies outside the fragment the point counter can enumerate.
class NotCountable : public std::runtime_error {
public:
    explicit NotCountable(const std::string& what) : std::runtime_error(what) {}
};

/// An equation in a projective block is not homogeneous in that block.
class NonHomogeneousEquation : public std::runtime_error {
public:
    explicit NonHomogeneousEquation(const std::string& what) : std::runtime_error(what) {}
};

/// A point blow-up asked for more rational centers than the ambient space has.
class TooFewRationalPoints : public std::runtime_error {
public:
    explicit TooFewRationalPoints(const std::string& what) : std::runtime_error(what) {}
};

/// Interpolation produced non-integer coefficients or failed to reproduce a sample.
class NonIntegralFit : public std::runtime_error {
public:
    explicit NonIntegralFit(const std::string& what) : std::runtime_error(what) {}
};

/// Lexical or syntax error, always carrying a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace motivic
