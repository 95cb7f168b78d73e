#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace quiverkit {

/// Structured evidence attached to a decision: a counterexample for a
/// negative answer or a certificate for a positive one.  `groups` holds
/// id sequences; their meaning depends on `kind` (a path is one group of
/// edge ids, a vertex pair is one group of two vertex ids, a chain is one
/// group per stage).
struct Witness {
    std::string kind;
    std::vector<std::vector<std::string>> groups;

    bool operator==(const Witness&) const = default;
};

/// Input text rejected by a parser.  Positions are 1-based; column 0 means
/// "whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0, int column = 0)
        : std::runtime_error(position_prefix(line, column) + message),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string position_prefix(int line, int column) {
        if (line <= 0) return {};
        std::string p = "line " + std::to_string(line);
        if (column > 0) p += ", column " + std::to_string(column);
        return p + ": ";
    }

    int line_;
    int column_;
};

/// A configured resource bound was hit (cycle cap, path length cap,
/// basis bound).  Carries the bound that was exceeded.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::string message, long long cap)
        : std::runtime_error(std::move(message)), cap_(cap) {}

    long long cap() const { return cap_; }

private:
    long long cap_;
};

/// An operation was called outside its stated domain (non-semiprime input
/// to a semiprime-only decomposition, element outside an embedding's image,
/// mismatched ambient graphs).  Carries a witness when one exists.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(std::string message, Witness witness = {})
        : std::runtime_error(std::move(message)), witness_(std::move(witness)) {}

    const Witness& witness() const { return witness_; }

private:
    Witness witness_;
};

} // namespace quiverkit
