#pragma once

#include <stdexcept>
#include <string>

// Internal invariants are enforced unconditionally; a violation means the
// library itself (not the caller) is wrong, so it surfaces as logic_error.
#define NSG_CHECK(cond, msg)                                             \
  do {                                                                   \
    if (!(cond)) throw std::logic_error(std::string("nsg invariant: ") + (msg)); \
  } while (0)
