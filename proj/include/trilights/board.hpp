#pragma once

// Geometry of the triangular board.
//
// A board of size n has rows r = 1..n, row r holding columns k = 1..r, and
// beta = n(n+1)/2 buttons. Public ids are 1-based and assigned top to bottom,
// left to right: id(r, k) = r(r-1)/2 + k. Inside the library buttons are
// addressed by 0-based "cell" indices (cell = id - 1).

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trilights/gf2.hpp"

namespace trilights {

inline constexpr int kMaxBoardSize = 128;

struct RowCol {
  int row = 0;
  int col = 0;
  friend bool operator==(const RowCol&, const RowCol&) = default;
};

/// Barycentric-style coordinates with x + y + z = n - 1:
/// x = k - 1, y = r - k, z = n - r.
struct TriCoord {
  int x = 0;
  int y = 0;
  int z = 0;
  friend bool operator==(const TriCoord&, const TriCoord&) = default;
};

/// The six elements of the dihedral group of the triangle. Rotations act on
/// TriCoord as (x,y,z) -> (y,z,x) (`rotate`) and its inverse; each reflection
/// is taken across the height through the named corner.
enum class Symmetry {
  identity,
  rotate,
  rotate_inverse,
  reflect_apex,          // (r,k) -> (r, r+1-k); swaps x and y
  reflect_bottom_left,   // swaps x and z
  reflect_bottom_right,  // swaps y and z
};

inline constexpr std::array<Symmetry, 6> kAllSymmetries = {
    Symmetry::identity,     Symmetry::rotate,              Symmetry::rotate_inverse,
    Symmetry::reflect_apex, Symmetry::reflect_bottom_left, Symmetry::reflect_bottom_right,
};

std::string_view to_string(Symmetry s) noexcept;
Symmetry symmetry_from_string(std::string_view name);

/// a after b: apply `b` first, then `a`.
Symmetry compose(Symmetry a, Symmetry b) noexcept;
Symmetry inverse(Symmetry s) noexcept;
TriCoord apply(Symmetry s, TriCoord c) noexcept;

constexpr int button_count(int n) noexcept { return n * (n + 1) / 2; }

/// 1-based id of (r, k). Throws ErrorKind::coordinate when off the board.
int index_of(int r, int k, int n);
/// Inverse of index_of.
RowCol rowcol_of(int id, int n);

TriCoord to_tricoord(RowCol rc, int n) noexcept;
RowCol from_tricoord(TriCoord t, int n) noexcept;

class BoardGeometry {
 public:
  /// Throws ErrorKind::size unless 1 <= n <= kMaxBoardSize.
  explicit BoardGeometry(int n);

  int size() const noexcept { return n_; }
  int beta() const noexcept { return static_cast<int>(rows_.size()); }

  bool contains(int r, int k) const noexcept { return r >= 1 && r <= n_ && k >= 1 && k <= r; }
  int cell(int r, int k) const noexcept { return r * (r - 1) / 2 + k - 1; }
  RowCol rowcol(int cell) const noexcept { return {rows_[cell], cols_[cell]}; }
  int row_of(int cell) const noexcept { return rows_[cell]; }
  int col_of(int cell) const noexcept { return cols_[cell]; }

  std::span<const int> neighbors(int cell) const noexcept { return neighbors_[cell]; }
  bool adjacent(int a, int b) const noexcept;

  /// perm[c] is the image of cell c under s.
  std::vector<int> permutation(Symmetry s) const;
  int map(Symmetry s, int cell) const noexcept;

  /// beta x beta matrix with a_ij = 1 iff i == j or i, j are neighbors.
  gf2::BitMatrix game_matrix() const;

 private:
  int n_;
  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<std::vector<int>> neighbors_;
};

gf2::BitMatrix game_matrix(int n);

/// Permutes the coordinates of a length-beta vector by the cell map of s.
gf2::BitVector apply_symmetry(Symmetry s, const gf2::BitVector& v, const BoardGeometry& board);

}  // namespace trilights
