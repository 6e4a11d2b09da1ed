#pragma once

#include <stdexcept>
#include <string>

namespace hcm {

// Malformed input (graph files, list files, cover JSON). Carries a 1-based
// line number when one is known.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg, long line = -1)
        : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// An enumeration/memoization cap was exceeded. The message names the cap and,
// where applicable, the offending vertex.
class cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters outside the regime a formula is defined on (non-positive log
// arguments, fugacity out of range, and the like).
class regime_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hcm
