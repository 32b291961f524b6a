#pragma once

#include <cstdint>

namespace urban {

// Virtual time in seconds.
using SimTime = double;

using NodeId = std::int32_t;
using FlowId = std::int32_t;

inline constexpr NodeId kBroadcast = -1;

}  // namespace urban
