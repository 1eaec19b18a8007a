#ifndef THZSIM_CONFIG_HPP
#define THZSIM_CONFIG_HPP

#include <map>
#include <optional>
#include <string>

#include "thzsim/sweep.hpp"

namespace thzsim::io {

/// Everything one CLI invocation needs; all fields default to the stock
/// simulation parameter set.
struct FullConfig {
    channel::LinkConfig link;
    mc::McConfig mc;
    sweep::SweepSpec sweep;
};

// Loads a flat key=value file ('#' comments) if path is set, then applies
// overrides on top. Unknown keys, type mismatches, and invariant violations
// throw std::runtime_error naming the offending key.
FullConfig parse_config(const std::optional<std::string>& path,
                        const std::map<std::string, std::string>& overrides);

}  // namespace thzsim::io

#endif
