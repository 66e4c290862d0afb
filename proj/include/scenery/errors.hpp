#ifndef SCENERY_ERRORS_HPP
#define SCENERY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scenery {

// Input failed a structural or numerical check (bad table, bad representation,
// inconsistent tensor, group mismatch, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation would exceed a configured size limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest number of entries any dense tensor or matrix may hold unless the
// caller overrides it.
inline constexpr std::size_t kDefaultMaxEntries = std::size_t{1} << 24;

// Returns base^exp, or throws CapExceeded when the result would exceed cap.
std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap,
                          const std::string& what);

}  // namespace scenery

#endif  // SCENERY_ERRORS_HPP
