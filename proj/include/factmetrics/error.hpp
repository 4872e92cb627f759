#pragma once

#include <stdexcept>
#include <string>

namespace factmetrics {

// Error categories map onto the CLI exit-code contract:
//   0 success, 1 usage error, 2 data error, 3 numerical failure.

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace factmetrics
