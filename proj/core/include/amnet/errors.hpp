#pragma once

#include <stdexcept>
#include <string>

namespace amnet {

/// Runtime failure inside a simulation (contract violations, bad scripted
/// actions, unwritable outputs). The CLI maps this to exit code 2.
class SimError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace amnet
