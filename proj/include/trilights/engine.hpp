#pragma once

// Game semantics on top of the board geometry and GF(2) algebra.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trilights/board.hpp"
#include "trilights/gf2.hpp"

namespace trilights {

inline constexpr int kDefaultEnumerateCap = 16;
/// Hard ceiling on any enumeration cap (2^24 vectors).
inline constexpr int kMaxEnumerateCap = 24;
inline constexpr int kBruteForceMaxSize = 4;
inline constexpr std::string_view kRandomEngineName = "mt19937_64";

/// A length-beta(n) bit vector tied to a board size. The tag keeps lit-state
/// vectors and press sets from being mixed up.
template <class Tag>
class BoardVector {
 public:
  BoardVector() = default;
  explicit BoardVector(int n) : n_(n), bits_(static_cast<std::size_t>(button_count(n))) {}
  BoardVector(int n, gf2::BitVector bits);

  /// Positional bit string: character i-1 is button i.
  static BoardVector parse(int n, std::string_view bits);
  /// Comma-separated 1-based ids, e.g. "3,4". Empty string is the empty set.
  static BoardVector from_ids(int n, std::string_view ids);
  static BoardVector from_ids(int n, const std::vector<int>& ids);

  int size() const noexcept { return n_; }
  int beta() const noexcept { return static_cast<int>(bits_.size()); }
  const gf2::BitVector& bits() const noexcept { return bits_; }
  gf2::BitVector& bits() noexcept { return bits_; }

  /// 1-based id access.
  bool test(int id) const { return bits_.get(static_cast<std::size_t>(id - 1)); }
  void toggle(int id) { bits_.flip(static_cast<std::size_t>(id - 1)); }

  std::vector<int> ids() const;
  std::string to_string() const { return bits_.to_string(); }
  std::string to_id_list() const;

  friend bool operator==(const BoardVector&, const BoardVector&) = default;

 private:
  int n_ = 0;
  gf2::BitVector bits_;
};

struct ConfigurationTag {};
struct PressSetTag {};
/// Bit j = 1 means button j+1 is lit.
using Configuration = BoardVector<ConfigurationTag>;
/// Bit i = 1 means button i+1 is pressed. Kernel elements are press sets.
using PressSet = BoardVector<PressSetTag>;

/// Decimal string for 2^exponent.
std::string power_of_two(int exponent);

struct SolveReport {
  int n = 0;
  bool solvable = false;
  int kernel_dimension = 0;
  /// Exact decimal count: 2^kernel_dimension when solvable, else "0".
  std::string solution_count = "0";
  std::optional<PressSet> particular;
  std::optional<PressSet> canonical;
  /// All solutions in Gray-code order, present only when kernel_dimension <= cap.
  std::optional<std::vector<PressSet>> enumerated;
};

/// Everything derived from A(n) that the engine reuses across calls.
struct GameData {
  BoardGeometry board;
  gf2::BitMatrix matrix;
  gf2::EliminationResult elimination;
  std::vector<PressSet> kernel_basis;

  explicit GameData(int n);
  int kernel_dimension() const noexcept { return static_cast<int>(kernel_basis.size()); }
};

/// Per-size cache of GameData. Each size is computed at most once even
/// under concurrent first requests; readers share immutable data.
class GameCache {
 public:
  std::shared_ptr<const GameData> get(int n);
  std::size_t cached_sizes() const;

  static GameCache& global();

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const GameData> data;
  };
  mutable std::mutex mu_;
  std::map<int, std::shared_ptr<Slot>> slots_;
};

/// Returns A x + c.
Configuration press(const Configuration& c, const PressSet& x);
bool is_solvable(const Configuration& c);
SolveReport solve_config(const Configuration& c, int enumerate_cap = kDefaultEnumerateCap);

std::vector<PressSet> kernel_basis(int n);
int kernel_dimension(int n);
/// (n, dimension) pairs for n in [from, to], ascending. Sizes are computed on
/// up to `threads` workers (0 = hardware concurrency).
std::vector<std::pair<int, int>> dimension_table(int from, int to, unsigned threads = 0);
/// All 2^l kernel elements in Gray-code order, or nullopt when l > cap.
std::optional<std::vector<PressSet>> enumerate_kernel(int n, int cap = kDefaultEnumerateCap);

/// press(all-off, X) for X drawn uniformly from a seeded mt19937_64.
Configuration random_solvable(int n, std::uint64_t seed);

/// Exhaustive oracle: every X with press(c, X) = all-off, found by simulating
/// toggles over neighbour lists. Ascending by mask value (bit i = button i+1).
std::vector<PressSet> brute_force_solutions(const Configuration& c);

/// Enumeration cap honouring the TRILIGHTS_ENUM_CAP environment variable.
int default_enumerate_cap();

}  // namespace trilights
