#include "scenery/errors.hpp"

namespace scenery {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap,
                          const std::string& what) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base) {
      throw CapExceeded(what + ": size exceeds cap of " + std::to_string(cap) +
                        " entries");
    }
    result *= base;
  }
  if (result > cap) {
    throw CapExceeded(what + ": size exceeds cap of " + std::to_string(cap) +
                      " entries");
  }
  return result;
}

}  // namespace scenery
