#pragma once

#include <stdexcept>
#include <string>

namespace cdens {

// Bad user input: missing paths, malformed configs, unknown columns.
// The CLI maps this to exit code 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Column/role mismatches between datasets, models and mappings.
struct schema_error : std::runtime_error {
    explicit schema_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A referenced object (commit, column, file) does not exist.
struct not_found_error : std::runtime_error {
    explicit not_found_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cdens
