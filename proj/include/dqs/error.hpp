#pragma once

#include <stdexcept>
#include <string>

namespace dqs {

// Invalid input at the level of the mathematics (bad label, mismatched
// groups, ill-defined homomorphism, ...). The CLI maps this to exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource bound (height limit, Weyl-group size, ...) was hit.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Parse errors carry the offending position when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    explicit parse_error(const std::string& what) : std::runtime_error(what), pos(0) {}
    std::size_t pos;
};

} // namespace dqs
