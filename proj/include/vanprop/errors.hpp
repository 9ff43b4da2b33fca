#pragma once

#include <stdexcept>
#include <string>

namespace vanprop {

/// Bad user-supplied data (malformed partition string, non-normal subgroup, ...).
/// CLI maps this to exit status 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource limit was exceeded (table limit, element cap, ...).
/// CLI maps this to exit status 3.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check that must hold mathematically failed; never caught internally.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace vanprop
