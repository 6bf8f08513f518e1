#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tecss/graph.hpp"

namespace tecss {

// Family parameters by name; missing ones take the family defaults.
using GeneratorParams = std::map<std::string, std::int64_t>;

// Families: random-2ec (n, p_percent), glued-cliques (a, b, shared, drop),
// cycle-ring (k, cyclen, links, chords), structured-random (n, degree).
// Reproducible for a fixed seed. Throws RejectionLimit when no 2EC sample is
// found and InvalidArgument on unknown families or bad parameters.
MultiGraph generate(const std::string& family, const GeneratorParams& params, std::uint64_t seed);

std::vector<std::string> generator_families();

// Parameters the family accepts with their defaults.
GeneratorParams generator_defaults(const std::string& family);

}  // namespace tecss
