#include <gtest/gtest.h>

#include <set>

#include "trilights/engine.hpp"
#include "trilights/error.hpp"
#include "trilights/propagation.hpp"

using namespace trilights;

namespace {

bool in_kernel(const PressSet& x) { return gf2::mat_vec(game_matrix(x.size()), x.bits()).none(); }

std::vector<int> row_ids(int m, int r) {
  std::vector<int> ids;
  for (int k = 1; k <= r; ++k) ids.push_back(index_of(r, k, m));
  return ids;
}

}  // namespace

TEST(Layout, SizeTwoOneStep) {
  const auto layout = block_layout(2, 1);
  EXPECT_EQ(layout.m, 6);
  ASSERT_EQ(layout.blocks.size(), 4U);
  const std::string expected =
      "band=0 slot=0 orientation=upright symmetry=identity cells=1,2,3\n"
      "band=1 slot=0 orientation=upright symmetry=rotate_inverse cells=11,16,17\n"
      "band=1 slot=1 orientation=upright symmetry=rotate cells=15,20,21\n"
      "band=1 slot=0 orientation=inverted symmetry=identity cells=8,9,13\n";
  EXPECT_EQ(layout.dump(), expected);
}

TEST(Layout, HorizontalSeparatorBelowFirstBand) {
  for (int n = 1; n <= 8; ++n) {
    const auto layout = block_layout(n, 1);
    const std::set<int> seps(layout.separators.begin(), layout.separators.end());
    for (int id : row_ids(layout.m, n + 1)) EXPECT_TRUE(seps.count(id - 1)) << "n=" << n << " id=" << id;
  }
}

TEST(Layout, SingleButtonBlocks) {
  const auto layout = block_layout(1, 1);
  EXPECT_EQ(layout.m, 4);
  EXPECT_EQ(layout.blocks.size(), 4U);
  EXPECT_EQ(layout.separators.size(), 6U);
}

TEST(Layout, PartitionAndSeparation) {
  for (int n = 1; n <= 6; ++n) {
    for (int j = 1; j <= 3; ++j) {
      const auto layout = block_layout(n, j);
      ASSERT_EQ(layout.m, n + (n + 2) * j);
      const BoardGeometry target(layout.m);
      std::vector<int> owner(static_cast<std::size_t>(target.beta()), -1);
      for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
        ASSERT_EQ(static_cast<int>(layout.blocks[b].cells.size()), button_count(n));
        for (int c : layout.blocks[b].cells) {
          ASSERT_EQ(owner[c], -1) << "overlap n=" << n << " j=" << j;
          owner[c] = static_cast<int>(b);
        }
      }
      std::vector<int> unowned;
      for (int c = 0; c < target.beta(); ++c) {
        if (owner[c] == -1) unowned.push_back(c);
      }
      EXPECT_EQ(unowned, layout.separators);
      EXPECT_EQ(layout.blocks.size(), static_cast<std::size_t>((j + 1) * (j + 1)));
      // Distinct blocks never touch: the separators have width one.
      for (int c = 0; c < target.beta(); ++c) {
        if (owner[c] == -1) continue;
        for (int nb : target.neighbors(c)) {
          EXPECT_TRUE(owner[nb] == -1 || owner[nb] == owner[c]) << "n=" << n << " j=" << j;
        }
      }
    }
  }
}

TEST(Layout, BandComposition) {
  const auto layout = block_layout(3, 3);
  for (int b = 0; b <= 3; ++b) {
    int upright = 0;
    int inverted = 0;
    for (const auto& blk : layout.blocks) {
      if (blk.band != b) continue;
      (blk.orientation == Orientation::upright ? upright : inverted)++;
    }
    EXPECT_EQ(upright, b + 1);
    EXPECT_EQ(inverted, b);
  }
}

TEST(Layout, BlocksPreserveAdjacency) {
  for (int n = 1; n <= 6; ++n) {
    const auto layout = block_layout(n, 2);
    const BoardGeometry src(n);
    const BoardGeometry dst(layout.m);
    for (const auto& blk : layout.blocks) {
      for (int a = 0; a < src.beta(); ++a) {
        for (int b = 0; b < src.beta(); ++b) {
          ASSERT_EQ(src.adjacent(a, b), dst.adjacent(blk.cells[a], blk.cells[b]));
        }
      }
    }
  }
}

TEST(Layout, Errors) {
  for (auto [n, j] : std::vector<std::pair<int, int>>{{0, 1}, {3, 0}, {2, -1}}) {
    try {
      block_layout(n, j);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::range);
    }
  }
  try {
    block_layout(20, 6);  // m = 152
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::size);
  }
}

TEST(Propagate, SoundForEveryBasisElement) {
  for (int n = 1; n <= 22; ++n) {
    const auto basis = kernel_basis(n);
    for (int j = 1; j <= 2; ++j) {
      const auto layout = block_layout(n, j);
      gf2::BitMatrix images(basis.size(), static_cast<std::size_t>(button_count(layout.m)));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto x = propagate(basis[i], layout);
        EXPECT_EQ(x.size(), layout.m);
        EXPECT_TRUE(in_kernel(x)) << "n=" << n << " j=" << j << " element " << i;
        EXPECT_TRUE(separators_even(layout, x));
        EXPECT_EQ(x.bits().count(), basis[i].bits().count() * static_cast<std::size_t>((j + 1) * (j + 1)));
        images.row(i) = x.bits();
      }
      // Propagation is injective, so independence carries over.
      if (!basis.empty()) EXPECT_EQ(gf2::rank(images), basis.size());
    }
  }
}

TEST(Propagate, NonzeroKernelAtPropagatedSizes) {
  for (int n : {2, 5, 6}) {
    for (int j = 1; j <= 3; ++j) {
      const int m = n + (n + 2) * j;
      EXPECT_GE(kernel_dimension(m), kernel_dimension(n)) << "m=" << m;
      EXPECT_GT(kernel_dimension(m), 0) << "m=" << m;
    }
  }
}

// Size 75 = 5 + 7*10: two independent verified kernel elements, checked
// against the game matrix built here.
TEST(Propagate, SizeSeventyFiveCertificate) {
  const auto basis = kernel_basis(5);
  ASSERT_EQ(basis.size(), 2U);
  const auto a75 = game_matrix(75);
  gf2::BitMatrix images(2, static_cast<std::size_t>(button_count(75)));
  for (std::size_t i = 0; i < 2; ++i) {
    const auto x = propagate(basis[i], 10);
    EXPECT_TRUE(x.bits().any());
    EXPECT_TRUE(gf2::mat_vec(a75, x.bits()).none());
    images.row(i) = x.bits();
  }
  EXPECT_EQ(gf2::rank(images), 2U);
}

TEST(Propagate, EmptyElementGivesEmpty) {
  const auto x = propagate(PressSet(5), 2);
  EXPECT_EQ(x.size(), 19);
  EXPECT_TRUE(x.bits().none());
}

TEST(Propagate, RejectsNonKernelInput) {
  try {
    propagate(PressSet::from_ids(2, "1"), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition);
  }
  try {
    propagate(PressSet(3), block_layout(2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::shape);
  }
}

TEST(VerifyKernelMembership, Examples) {
  EXPECT_TRUE(verify_kernel_membership(PressSet::from_ids(2, "1,2"), 2));
  EXPECT_FALSE(verify_kernel_membership(PressSet::from_ids(2, "1"), 2));
  EXPECT_TRUE(verify_kernel_membership(PressSet(3), 3));
  try {
    verify_kernel_membership(PressSet(2), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::shape);
  }
}

TEST(SeparatorsEven, DetectsOddSeparator) {
  const auto layout = block_layout(2, 1);
  // Button 4 = (3,1) is a separator adjacent to button 2.
  EXPECT_FALSE(separators_even(layout, PressSet::from_ids(6, "2")));
  EXPECT_TRUE(separators_even(layout, PressSet(6)));
}
