#pragma once

// JSON payloads shared by the CLI (--json) and the HTTP service, so both
// emit byte-identical documents for identical inputs. Press sets and kernel
// elements are arrays of 1-based ids; configurations are bit strings.

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "trilights/engine.hpp"
#include "trilights/propagation.hpp"

namespace trilights::json {

using nlohmann::json;

json ids(const PressSet& x);

/// {n, solvable, kernelDimension, solutionCount, canonical, particular[, enumerated]}
/// solutionCount is a decimal string (exact for any kernel dimension).
json solve_report(const SolveReport& r);
json board(const BoardGeometry& b);
json table(const std::vector<std::pair<int, int>>& rows);
json kernel(int n, const std::vector<PressSet>& basis, const std::optional<std::vector<PressSet>>& elements);
json random(const Configuration& c, std::uint64_t seed);
json matchings(int n, bool parity, const std::optional<std::uint64_t>& count);
json layout(const BlockLayout& layout);
json propagation(const PressSet& element, const BlockLayout& layout);

/// Accepts either a bit string or an array of 1-based ids.
PressSet press_set_from(int n, const json& value);

}  // namespace trilights::json
