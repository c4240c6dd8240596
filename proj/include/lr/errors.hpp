#pragma once

#include <stdexcept>
#include <string>

namespace lr {

// Domain errors: the requested object does not exist for these inputs.
struct invalid_shape : std::domain_error {
    explicit invalid_shape(const std::string& what) : std::domain_error(what) {}
};

struct not_partition_shape : std::domain_error {
    explicit not_partition_shape(const std::string& what) : std::domain_error(what) {}
};

struct unbounded_sequence : std::domain_error {
    explicit unbounded_sequence(const std::string& what) : std::domain_error(what) {}
};

// Resource/window errors: the computation was cut off, not wrong.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct non_polynomial_window : std::runtime_error {
    explicit non_polynomial_window(const std::string& what) : std::runtime_error(what) {}
};

struct non_integer_sequence : std::runtime_error {
    explicit non_integer_sequence(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace lr
