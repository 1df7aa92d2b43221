#pragma once

#include <stdexcept>
#include <string>

namespace pacsig {

// Input is structurally valid but carries no usable information
// (e.g. an all-zero amplitude sequence).
class degenerate_input_error : public std::runtime_error {
public:
    explicit degenerate_input_error(const std::string& msg)
        : std::runtime_error(msg) {}
};

// A numeric chain produced values outside its valid region
// (e.g. a non-positive dispersion factor). The message carries the
// intermediate values for inspection.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg)
        : std::runtime_error(msg) {}
};

} // namespace pacsig
