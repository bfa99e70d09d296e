#include "trilights/board.hpp"

#include <algorithm>

#include "trilights/error.hpp"

namespace trilights {

namespace {

// new[i] = old[perm[i]] over the coordinate triple (x, y, z).
using CoordPerm = std::array<int, 3>;

constexpr CoordPerm perm_of(Symmetry s) noexcept {
  switch (s) {
    case Symmetry::identity: return {0, 1, 2};
    case Symmetry::rotate: return {1, 2, 0};
    case Symmetry::rotate_inverse: return {2, 0, 1};
    case Symmetry::reflect_apex: return {1, 0, 2};
    case Symmetry::reflect_bottom_left: return {2, 1, 0};
    case Symmetry::reflect_bottom_right: return {0, 2, 1};
  }
  return {0, 1, 2};
}

Symmetry from_perm(const CoordPerm& p) noexcept {
  for (Symmetry s : kAllSymmetries) {
    if (perm_of(s) == p) return s;
  }
  return Symmetry::identity;
}

// (dr, dk) offsets of the six tangent neighbours.
constexpr std::array<std::array<int, 2>, 6> kNeighborOffsets = {{
    {0, -1}, {0, 1}, {-1, -1}, {-1, 0}, {1, 0}, {1, 1},
}};

}  // namespace

std::string_view to_string(Symmetry s) noexcept {
  switch (s) {
    case Symmetry::identity: return "identity";
    case Symmetry::rotate: return "rotate";
    case Symmetry::rotate_inverse: return "rotate_inverse";
    case Symmetry::reflect_apex: return "reflect_apex";
    case Symmetry::reflect_bottom_left: return "reflect_bottom_left";
    case Symmetry::reflect_bottom_right: return "reflect_bottom_right";
  }
  return "identity";
}

Symmetry symmetry_from_string(std::string_view name) {
  for (Symmetry s : kAllSymmetries) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorKind::parse, "unknown symmetry '" + std::string(name) + "'");
}

Symmetry compose(Symmetry a, Symmetry b) noexcept {
  const CoordPerm pa = perm_of(a);
  const CoordPerm pb = perm_of(b);
  return from_perm({pb[pa[0]], pb[pa[1]], pb[pa[2]]});
}

Symmetry inverse(Symmetry s) noexcept {
  for (Symmetry t : kAllSymmetries) {
    if (compose(s, t) == Symmetry::identity) return t;
  }
  return Symmetry::identity;
}

TriCoord apply(Symmetry s, TriCoord c) noexcept {
  const std::array<int, 3> old = {c.x, c.y, c.z};
  const CoordPerm p = perm_of(s);
  return {old[p[0]], old[p[1]], old[p[2]]};
}

int index_of(int r, int k, int n) {
  if (n < 1 || r < 1 || r > n || k < 1 || k > r) {
    throw Error(ErrorKind::coordinate, "(" + std::to_string(r) + "," + std::to_string(k) +
                                           ") is not a button of a size-" + std::to_string(n) + " board");
  }
  return r * (r - 1) / 2 + k;
}

RowCol rowcol_of(int id, int n) {
  if (n < 1 || id < 1 || id > button_count(n)) {
    throw Error(ErrorKind::coordinate,
                "button " + std::to_string(id) + " is not on a size-" + std::to_string(n) + " board");
  }
  int r = 1;
  while (r * (r + 1) / 2 < id) ++r;
  return {r, id - r * (r - 1) / 2};
}

TriCoord to_tricoord(RowCol rc, int n) noexcept {
  return {rc.col - 1, rc.row - rc.col, n - rc.row};
}

RowCol from_tricoord(TriCoord t, int n) noexcept { return {n - t.z, t.x + 1}; }

BoardGeometry::BoardGeometry(int n) : n_(n) {
  if (n < 1 || n > kMaxBoardSize) {
    throw Error(ErrorKind::size, "board size must be in [1, " + std::to_string(kMaxBoardSize) +
                                     "], got " + std::to_string(n));
  }
  const int beta = button_count(n);
  rows_.reserve(beta);
  cols_.reserve(beta);
  for (int r = 1; r <= n; ++r) {
    for (int k = 1; k <= r; ++k) {
      rows_.push_back(r);
      cols_.push_back(k);
    }
  }
  neighbors_.resize(beta);
  for (int c = 0; c < beta; ++c) {
    for (const auto& [dr, dk] : kNeighborOffsets) {
      const int r = rows_[c] + dr;
      const int k = cols_[c] + dk;
      if (contains(r, k)) neighbors_[c].push_back(cell(r, k));
    }
    std::sort(neighbors_[c].begin(), neighbors_[c].end());
  }
}

bool BoardGeometry::adjacent(int a, int b) const noexcept {
  const auto& nb = neighbors_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

int BoardGeometry::map(Symmetry s, int c) const noexcept {
  const RowCol rc = from_tricoord(apply(s, to_tricoord(rowcol(c), n_)), n_);
  return cell(rc.row, rc.col);
}

std::vector<int> BoardGeometry::permutation(Symmetry s) const {
  std::vector<int> perm(beta());
  for (int c = 0; c < beta(); ++c) perm[c] = map(s, c);
  return perm;
}

gf2::BitMatrix BoardGeometry::game_matrix() const {
  gf2::BitMatrix a(beta(), beta());
  for (int i = 0; i < beta(); ++i) {
    a.set(i, i);
    for (int j : neighbors_[i]) a.set(i, j);
  }
  return a;
}

gf2::BitMatrix game_matrix(int n) { return BoardGeometry(n).game_matrix(); }

gf2::BitVector apply_symmetry(Symmetry s, const gf2::BitVector& v, const BoardGeometry& board) {
  if (v.size() != static_cast<std::size_t>(board.beta())) {
    throw Error(ErrorKind::shape, "vector length " + std::to_string(v.size()) + " does not match beta = " +
                                      std::to_string(board.beta()));
  }
  gf2::BitVector out(v.size());
  for (std::size_t c : v.ones()) out.set(static_cast<std::size_t>(board.map(s, static_cast<int>(c))));
  return out;
}

}  // namespace trilights
