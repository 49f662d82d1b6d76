#pragma once

#include <stdexcept>

namespace wldh {

// Thrown when a structural guarantee of the engine fails at runtime
// (e.g. a reduction step that must exist cannot be found). Distinct from
// std::invalid_argument, which covers bad caller input.
struct contract_violation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace wldh
