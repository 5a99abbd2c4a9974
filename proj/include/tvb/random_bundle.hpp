#pragma once

#include <random>

#include "tvb/bundle.hpp"

namespace tvb {

// Structurally valid filtrations with jump values inside [jump_lo, jump_hi]
// and random nested spans. On two-dimensional fans the result is always
// compatible; higher dimensions give no such guarantee.
ToricBundle random_bundle(const Fan& fan, int max_rank, long long jump_lo, long long jump_hi,
                          std::mt19937_64& rng);

}  // namespace tvb
