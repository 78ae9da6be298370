#pragma once

#include <stdexcept>

namespace glfrac {

/// Bad content in a config/model/data document (parse failure, missing or
/// invalid fields).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure: unreadable input, unwritable output.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace glfrac
