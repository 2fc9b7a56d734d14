#pragma once

#include <stdexcept>
#include <string>

namespace transit {

// Malformed or out-of-range input data (bad file, bad vertex index, ...).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a documented size guard of a desk-scale operation.
class capability_error : public std::runtime_error {
public:
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// API misuse (e.g. passing a transit-function claim where a graph claim is required).
class usage_error : public std::logic_error {
public:
    explicit usage_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace transit
