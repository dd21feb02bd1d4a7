#pragma once

#include <stdexcept>
#include <string>

namespace trs {

/// Base class for all structured errors raised by the library. The `code`
/// is a stable machine-readable tag; `what()` carries the human-readable
/// message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// A symbol was applied to the wrong number of arguments.
class ArityMismatch : public Error {
public:
    ArityMismatch(const std::string& symbol, int expected, int got)
        : Error("arity_mismatch",
                "symbol '" + symbol + "' expects " + std::to_string(expected) +
                    " argument(s), got " + std::to_string(got)),
          symbol_(symbol), expected_(expected), got_(got) {}

    const std::string& symbol() const { return symbol_; }
    int expected() const { return expected_; }
    int got() const { return got_; }

private:
    std::string symbol_;
    int expected_;
    int got_;
};

/// A symbol was used with two different arities.
class ArityConflict : public Error {
public:
    explicit ArityConflict(const std::string& symbol)
        : Error("arity_conflict",
                "symbol '" + symbol + "' used with conflicting arities"),
          symbol_(symbol) {}

    const std::string& symbol() const { return symbol_; }

private:
    std::string symbol_;
};

/// Lexical or grammatical error in an input document.
class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, const std::string& message)
        : Error("syntax_error",
                "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A name in a certificate does not resolve against the signature.
class UnknownSymbol : public Error {
public:
    explicit UnknownSymbol(const std::string& name)
        : Error("unknown_symbol", "unknown symbol '" + name + "'"),
          name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// A polynomial mapping uses a variable outside 1..arity(f).
class PolyArityMismatch : public Error {
public:
    explicit PolyArityMismatch(const std::string& symbol)
        : Error("poly_arity_mismatch",
                "polynomial for '" + symbol +
                    "' references a variable beyond the symbol arity"),
          symbol_(symbol) {}

    const std::string& symbol() const { return symbol_; }

private:
    std::string symbol_;
};

/// Polynomial operands live in different numbers of variables.
class DimensionMismatch : public Error {
public:
    DimensionMismatch(int left, int right)
        : Error("dimension_mismatch",
                "polynomial dimension mismatch: " + std::to_string(left) +
                    " vs " + std::to_string(right)) {}
};

/// A term exceeds the variable bound of a bounded-term conversion.
class BoundExceeded : public Error {
public:
    BoundExceeded(int maxvar, int bound)
        : Error("bound_exceeded",
                "term has variable index " + std::to_string(maxvar) +
                    " above bound " + std::to_string(bound)) {}
};

} // namespace trs
