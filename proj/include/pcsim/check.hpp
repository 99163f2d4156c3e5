#pragma once

#include <stdexcept>
#include <string>

namespace pcsim {

// Internal invariant check, active in all build types. Preconditions on public
// entry points throw std::invalid_argument / std::out_of_range instead.
#define PCSIM_CHECK(cond, msg)                                                 \
    do {                                                                       \
        if (!(cond)) throw std::logic_error(std::string("pcsim: ") + (msg));   \
    } while (0)

} // namespace pcsim
