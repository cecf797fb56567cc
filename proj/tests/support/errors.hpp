#pragma once

#include <functional>
#include <optional>
#include <ostream>

#include "bitplane_lab/error.hpp"

namespace bpl {

inline void PrintTo(Errc code, std::ostream* os) { *os << to_string(code); }

}  // namespace bpl

namespace bpl::testing {

/// Code of the bpl::Error thrown by fn, or nullopt when nothing is thrown.
inline std::optional<Errc> thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace bpl::testing
