#pragma once

#include <stdexcept>
#include <string>

namespace cellci {

// Input text could not be parsed. `line` is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// The Buchberger pair budget was exceeded; the computation is abandoned,
// never silently truncated.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical cross-check failed: the combinatorial verdict and the
// algebraic pipeline disagree, or a certificate invariant is violated.
// Reaching this means a bug in the engine, and CLI callers exit with a
// dedicated status so pipelines can tell it apart from operational errors.
class TheoremViolation : public std::logic_error {
public:
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cellci
