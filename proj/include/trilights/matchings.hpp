#pragma once

// Coverings of the board by 1x1 and 2x1 pieces: partitions of the buttons
// into singletons and neighbouring pairs. The mod-2 determinant of A(n)
// equals the parity of the number of such coverings.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace trilights {

inline constexpr int kCoveringOracleMaxSize = 6;

struct Covering {
  int n = 0;
  /// Each part holds one or two 1-based button ids.
  std::vector<std::vector<int>> parts;

  /// "{1,2};{3};{4};{5,9};{6,10};{7,8}"
  static Covering parse(int n, std::string_view text);
  std::string to_string() const;
};

enum class CoveringIssue {
  none,
  bad_part_size,   // a part with zero or more than two ids
  id_out_of_range,
  duplicate_id,    // some button appears in two parts
  missing_id,      // some button appears in no part
  not_adjacent,    // a pair whose buttons are not neighbours
};

const char* to_string(CoveringIssue issue) noexcept;

struct CoveringCheck {
  bool valid = false;
  CoveringIssue issue = CoveringIssue::none;
  explicit operator bool() const noexcept { return valid; }
};

CoveringCheck validate_covering(const Covering& cov);

/// Exhaustive count by depth-first search: at the lowest uncovered button,
/// branch on leaving it single or pairing it with each uncovered neighbour
/// of higher index. Throws ErrorKind::oracle_range above kCoveringOracleMaxSize.
std::uint64_t count_coverings(int n);
/// Same search, handing every covering found to `visit`.
std::uint64_t count_coverings(int n, const std::function<void(const Covering&)>& visit);

/// Parity of the covering count, computed as det A(n) mod 2 (any size).
bool coverings_parity(int n);

}  // namespace trilights
