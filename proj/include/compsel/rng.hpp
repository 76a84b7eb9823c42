// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace compsel {

using Stream = std::mt19937_64;

/// Counter-based stream derivation: the stream for (seed, path...) depends only
/// on its arguments, never on the order in which streams are created.
Stream derive_substream(std::uint64_t master_seed, std::uint64_t index);
Stream derive_substream(std::uint64_t master_seed, std::initializer_list<std::uint64_t> path);

}  // namespace compsel
