#pragma once

// Kernel propagation: a kernel element T of the size-n game yields a kernel
// element of the size m = n + (n+2)j game. The big triangle is cut into
// (j+1)^2 size-n blocks separated by width-1 lines of unused buttons, and
// each block carries T transformed by the reflection across the line it
// shares with its neighbour.
//
// Band b (0..j) holds b+1 upright blocks and b inverted blocks:
//   upright u:  rows b(n+2)+1+s, columns u(n+2)+1 .. u(n+2)+1+s   (s = 0..n-1)
//   inverted v: rows b(n+2)+t,   columns v(n+2)+t+2 .. v(n+2)+n+1 (t = 0..n-1)

#include <string>
#include <vector>

#include "trilights/board.hpp"
#include "trilights/engine.hpp"

namespace trilights {

enum class Orientation { upright, inverted };

const char* to_string(Orientation o) noexcept;

struct Block {
  Orientation orientation = Orientation::upright;
  int band = 0;
  int slot = 0;
  /// Pattern transform relative to the block's canonical placement: an
  /// upright block is a translate of the size-n board, an inverted block is
  /// the size-n board reflected across a horizontal line.
  Symmetry symmetry = Symmetry::identity;
  /// cells[c] is the target cell (0-based) holding local cell c.
  std::vector<int> cells;
};

struct BlockLayout {
  int n = 0;
  int j = 0;
  int m = 0;
  std::vector<Block> blocks;
  /// Target cells (0-based, ascending) that belong to no block.
  std::vector<int> separators;

  /// One line per block:
  /// "band=b slot=u orientation=upright|inverted symmetry=<name> cells=<ids>"
  std::string dump() const;
};

/// Throws ErrorKind::range for n < 1 or j < 1 and ErrorKind::size when the
/// target board exceeds kMaxBoardSize.
BlockLayout block_layout(int n, int j);

/// Throws ErrorKind::precondition if `kernel_element` is not in the kernel of
/// A(n), and ErrorKind::construction_failure if the assembled element fails
/// verification. Never returns an unverified result.
PressSet propagate(const PressSet& kernel_element, int j);
PressSet propagate(const PressSet& kernel_element, const BlockLayout& layout);

/// True iff A(m) x = 0. Throws ErrorKind::shape when x is not for size m.
bool verify_kernel_membership(const PressSet& x, int m);

/// True iff every separator button has an even number of neighbours in x.
bool separators_even(const BlockLayout& layout, const PressSet& x);

}  // namespace trilights
