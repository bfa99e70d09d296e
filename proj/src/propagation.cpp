#include "trilights/propagation.hpp"

#include <algorithm>
#include <functional>

#include "trilights/error.hpp"

namespace trilights {

namespace {

using CellMap = std::vector<RowCol>;

// Lattice reflections. Offsets (0,1), (1,0), (1,1) point right, down-left
// and down-right, so each family below fixes one of the three line directions.
RowCol reflect_across_row(RowCol p, int row) { return {2 * row - p.row, p.col - (p.row - row)}; }
RowCol reflect_across_column(RowCol p, int col) { return {p.row - (p.col - col), 2 * col - p.col}; }
RowCol reflect_across_diagonal(RowCol p, int diff) { return {diff + p.col, p.row - diff}; }

CellMap transform(const CellMap& from, const std::function<RowCol(RowCol)>& f) {
  CellMap out;
  out.reserve(from.size());
  for (RowCol p : from) out.push_back(f(p));
  return out;
}

RowCol canonical_place(const Block& b, RowCol local, int n) {
  const int stride = n + 2;
  if (b.orientation == Orientation::upright) {
    return {b.band * stride + local.row, b.slot * stride + local.col};
  }
  return {b.band * stride + n - local.row, b.slot * stride + local.col - local.row + n + 1};
}

// Cells of a block straight from the row/column ranges in the header.
std::vector<RowCol> block_region(Orientation o, int band, int slot, int n) {
  const int stride = n + 2;
  std::vector<RowCol> cells;
  for (int s = 0; s < n; ++s) {
    if (o == Orientation::upright) {
      const int row = band * stride + 1 + s;
      for (int c = slot * stride + 1; c <= slot * stride + 1 + s; ++c) cells.push_back({row, c});
    } else {
      const int row = band * stride + s;
      for (int c = slot * stride + s + 2; c <= slot * stride + n + 1; ++c) cells.push_back({row, c});
    }
  }
  return cells;
}

}  // namespace

const char* to_string(Orientation o) noexcept { return o == Orientation::upright ? "upright" : "inverted"; }

std::string BlockLayout::dump() const {
  std::string s;
  for (const Block& b : blocks) {
    s += "band=" + std::to_string(b.band) + " slot=" + std::to_string(b.slot) +
         " orientation=" + to_string(b.orientation) + " symmetry=" + std::string(to_string(b.symmetry)) +
         " cells=";
    std::vector<int> ids(b.cells.begin(), b.cells.end());
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(ids[i] + 1);
    }
    s += '\n';
  }
  return s;
}

BlockLayout block_layout(int n, int j) {
  if (n < 1 || j < 1) {
    throw Error(ErrorKind::range, "propagation needs n >= 1 and j >= 1, got n = " + std::to_string(n) +
                                      ", j = " + std::to_string(j));
  }
  const int stride = n + 2;
  const long long m = static_cast<long long>(n) + static_cast<long long>(stride) * j;
  if (m > kMaxBoardSize) {
    throw Error(ErrorKind::size, "target size " + std::to_string(m) + " exceeds " + std::to_string(kMaxBoardSize));
  }

  BlockLayout layout;
  layout.n = n;
  layout.j = j;
  layout.m = static_cast<int>(m);
  const BoardGeometry local(n);
  const BoardGeometry target(layout.m);

  CellMap apex;
  for (int c = 0; c < local.beta(); ++c) apex.push_back(local.rowcol(c));

  std::vector<CellMap> prev_upright{apex};
  std::vector<std::pair<Block, CellMap>> placed;
  placed.push_back({Block{Orientation::upright, 0, 0, Symmetry::identity, {}}, apex});

  for (int b = 1; b <= j; ++b) {
    const int gap_row = b * stride - 1;
    std::vector<CellMap> inverted;
    for (int v = 0; v < b; ++v) {
      inverted.push_back(transform(prev_upright[v], [&](RowCol p) { return reflect_across_row(p, gap_row); }));
    }
    std::vector<CellMap> upright;
    upright.push_back(transform(inverted[0], [&](RowCol p) { return reflect_across_diagonal(p, b * stride - 1); }));
    for (int u = 1; u <= b; ++u) {
      upright.push_back(transform(inverted[u - 1], [&](RowCol p) { return reflect_across_column(p, u * stride); }));
      if (u < b) {
        // Reached again through the inverted block on the right: the two
        // reflection paths must agree.
        const int diff = (b - u) * stride - 1;
        const CellMap other = transform(inverted[u], [&](RowCol p) { return reflect_across_diagonal(p, diff); });
        if (other != upright[u]) {
          throw Error(ErrorKind::construction_failure, "inconsistent reflection maps at band " +
                                                           std::to_string(b) + " slot " + std::to_string(u));
        }
      }
    }
    for (int u = 0; u <= b; ++u) placed.push_back({Block{Orientation::upright, b, u, Symmetry::identity, {}}, upright[u]});
    for (int v = 0; v < b; ++v) placed.push_back({Block{Orientation::inverted, b, v, Symmetry::identity, {}}, inverted[v]});
    prev_upright = std::move(upright);
  }

  std::vector<bool> used(static_cast<std::size_t>(target.beta()), false);
  for (auto& [block, map] : placed) {
    // The reflected image must be exactly the block's nominal region.
    auto region = block_region(block.orientation, block.band, block.slot, n);
    auto image = map;
    auto by_pos = [](RowCol a, RowCol b2) { return a.row != b2.row ? a.row < b2.row : a.col < b2.col; };
    std::sort(region.begin(), region.end(), by_pos);
    std::sort(image.begin(), image.end(), by_pos);
    if (region != image) {
      throw Error(ErrorKind::construction_failure, "block at band " + std::to_string(block.band) + " slot " +
                                                       std::to_string(block.slot) + " left its region");
    }

    bool found = false;
    for (Symmetry s : kAllSymmetries) {
      bool match = true;
      for (int c = 0; c < local.beta() && match; ++c) {
        match = canonical_place(block, local.rowcol(local.map(s, c)), n) == map[c];
      }
      if (match) {
        block.symmetry = s;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::construction_failure, "block map is not a board symmetry at band " +
                                                       std::to_string(block.band) + " slot " +
                                                       std::to_string(block.slot));
    }

    for (RowCol p : map) {
      if (!target.contains(p.row, p.col) || used[target.cell(p.row, p.col)]) {
        throw Error(ErrorKind::construction_failure, "blocks overlap or leave the board");
      }
      const int cell = target.cell(p.row, p.col);
      used[cell] = true;
      block.cells.push_back(cell);
    }
    layout.blocks.push_back(std::move(block));
  }
  for (int c = 0; c < target.beta(); ++c) {
    if (!used[c]) layout.separators.push_back(c);
  }
  return layout;
}

bool verify_kernel_membership(const PressSet& x, int m) {
  if (x.size() != m) {
    throw Error(ErrorKind::shape, "press set is for n = " + std::to_string(x.size()) + ", expected " +
                                      std::to_string(m));
  }
  const auto game = GameCache::global().get(m);
  return gf2::mat_vec(game->matrix, x.bits()).none();
}

bool separators_even(const BlockLayout& layout, const PressSet& x) {
  const BoardGeometry target(layout.m);
  for (int cell : layout.separators) {
    int count = 0;
    for (int nb : target.neighbors(cell)) count += x.bits().get(static_cast<std::size_t>(nb)) ? 1 : 0;
    if (count % 2 != 0) return false;
  }
  return true;
}

PressSet propagate(const PressSet& kernel_element, const BlockLayout& layout) {
  if (kernel_element.size() != layout.n) {
    throw Error(ErrorKind::shape, "kernel element is for n = " + std::to_string(kernel_element.size()) +
                                      " but layout is for n = " + std::to_string(layout.n));
  }
  if (!verify_kernel_membership(kernel_element, layout.n)) {
    throw Error(ErrorKind::precondition, "press set is not a kernel element of the size-" +
                                             std::to_string(layout.n) + " game");
  }
  PressSet x(layout.m);
  for (const Block& block : layout.blocks) {
    for (std::size_t c : kernel_element.bits().ones()) x.bits().set(static_cast<std::size_t>(block.cells[c]));
  }
  if (!separators_even(layout, x)) {
    throw Error(ErrorKind::construction_failure, "a separator button has an odd number of pressed neighbours");
  }
  if (!verify_kernel_membership(x, layout.m)) {
    throw Error(ErrorKind::construction_failure, "propagated element is not in the kernel of the size-" +
                                                     std::to_string(layout.m) + " game");
  }
  return x;
}

PressSet propagate(const PressSet& kernel_element, int j) {
  return propagate(kernel_element, block_layout(kernel_element.size(), j));
}

}  // namespace trilights
