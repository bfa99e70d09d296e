#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

#include "trilights/engine.hpp"
#include "trilights/error.hpp"

using namespace trilights;

namespace {

Configuration random_config(std::mt19937_64& rng, int n) {
  Configuration c(n);
  for (int i = 0; i < c.beta(); ++i) c.bits().set(static_cast<std::size_t>(i), (rng() & 1U) != 0);
  return c;
}

PressSet random_press(std::mt19937_64& rng, int n) {
  PressSet x(n);
  for (int i = 0; i < x.beta(); ++i) x.bits().set(static_cast<std::size_t>(i), (rng() & 1U) != 0);
  return x;
}

std::set<std::string> as_strings(const std::vector<PressSet>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(x.to_string());
  return out;
}

std::set<std::string> span_of(const std::vector<PressSet>& basis, int n) {
  std::set<std::string> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << basis.size()); ++m) {
    gf2::BitVector v(static_cast<std::size_t>(button_count(n)));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((m >> i) & 1U) v ^= basis[i].bits();
    }
    out.insert(v.to_string());
  }
  return out;
}

}  // namespace

TEST(BoardVector, ParsingAndFormatting) {
  const auto c = Configuration::parse(3, "010001");
  EXPECT_EQ(c.ids(), (std::vector<int>{2, 6}));
  EXPECT_EQ(c.to_string(), "010001");
  const auto x = PressSet::from_ids(3, "3,4");
  EXPECT_EQ(x.to_string(), "001100");
  EXPECT_EQ(x.to_id_list(), "3,4");
  EXPECT_EQ(PressSet::from_ids(3, "").to_string(), "000000");
  EXPECT_EQ(PressSet::from_ids(3, " 1, 6 ").to_string(), "100001");
}

TEST(BoardVector, MalformedInput) {
  EXPECT_THROW(Configuration::parse(3, "01000"), Error);
  EXPECT_THROW(Configuration::parse(3, "0100012"), Error);
  EXPECT_THROW(Configuration::parse(3, "01a001"), Error);
  EXPECT_THROW(PressSet::from_ids(3, "3,,4"), Error);
  EXPECT_THROW(PressSet::from_ids(3, "7"), Error);
  EXPECT_THROW(PressSet::from_ids(3, "0"), Error);
  EXPECT_THROW(Configuration::parse(0, ""), Error);
  try {
    Configuration::parse(4, "111");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_NE(std::string(e.what()).find("10"), std::string::npos);
  }
}

TEST(Press, WorkedExample) {
  EXPECT_EQ(press(Configuration::parse(3, "010001"), PressSet::from_ids(3, "3,4")).to_string(), "111100");
}

TEST(Press, EmptyPressIsIdentity) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 10; ++n) {
    const auto c = random_config(rng, n);
    EXPECT_EQ(press(c, PressSet(n)), c);
  }
}

TEST(Press, SingleButtonOnSizeTwo) {
  EXPECT_EQ(press(Configuration(2), PressSet::from_ids(2, "1")).to_string(), "111");
}

TEST(Press, SizeMismatch) {
  try {
    press(Configuration(3), PressSet(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::shape);
  }
}

TEST(Solvable, SizeTwoExamples) {
  EXPECT_TRUE(is_solvable(Configuration::parse(2, "111")));
  EXPECT_FALSE(is_solvable(Configuration::parse(2, "100")));
  for (int n = 1; n <= 30; ++n) EXPECT_TRUE(is_solvable(Configuration(n)));
}

TEST(SolveConfig, WorkedExampleIsUnique) {
  const auto r = solve_config(Configuration::parse(3, "101101"));
  EXPECT_TRUE(r.solvable);
  EXPECT_EQ(r.kernel_dimension, 0);
  EXPECT_EQ(r.solution_count, "1");
  ASSERT_TRUE(r.canonical);
  EXPECT_EQ(r.canonical->to_id_list(), "3,4");
  ASSERT_TRUE(r.enumerated);
  EXPECT_EQ(r.enumerated->size(), 1U);
}

TEST(SolveConfig, SizeTwoAllLit) {
  const auto r = solve_config(Configuration::parse(2, "111"));
  EXPECT_TRUE(r.solvable);
  EXPECT_EQ(r.kernel_dimension, 2);
  EXPECT_EQ(r.solution_count, "4");
  ASSERT_TRUE(r.enumerated);
  EXPECT_EQ(as_strings(*r.enumerated), (std::set<std::string>{"100", "010", "001", "111"}));
  // Minimum weight, then lexicographically smallest mask.
  EXPECT_EQ(r.canonical->to_string(), "001");
}

TEST(SolveConfig, SingleButtonBoard) {
  const auto r = solve_config(Configuration::parse(1, "1"));
  ASSERT_TRUE(r.canonical);
  EXPECT_EQ(r.canonical->to_id_list(), "1");
}

TEST(SolveConfig, UnsolvableReport) {
  const auto r = solve_config(Configuration::parse(2, "010"));
  EXPECT_FALSE(r.solvable);
  EXPECT_EQ(r.kernel_dimension, 2);
  EXPECT_EQ(r.solution_count, "0");
  EXPECT_FALSE(r.particular);
  EXPECT_FALSE(r.canonical);
  EXPECT_FALSE(r.enumerated);
}

TEST(SolveConfig, CapBoundsEnumeration) {
  // n = 14 has a 10-dimensional kernel.
  const auto c = random_solvable(14, 5);
  const auto small = solve_config(c, 9);
  EXPECT_EQ(small.solution_count, "1024");
  EXPECT_FALSE(small.enumerated);
  EXPECT_EQ(small.canonical, small.particular);
  const auto full = solve_config(c, 10);
  ASSERT_TRUE(full.enumerated);
  EXPECT_EQ(full.enumerated->size(), 1024U);
  EXPECT_EQ(as_strings(*full.enumerated).size(), 1024U);
  for (const auto& x : *full.enumerated) {
    EXPECT_LE(full.canonical->bits().count(), x.bits().count());
    EXPECT_TRUE(press(c, x).bits().none());
  }
  EXPECT_THROW(solve_config(c, -1), Error);
  EXPECT_THROW(solve_config(c, kMaxEnumerateCap + 1), Error);
}

TEST(SolveConfig, ExactCountForLargeKernel) {
  const auto r = solve_config(Configuration(62));
  EXPECT_EQ(r.kernel_dimension, 42);
  EXPECT_EQ(r.solution_count, "4398046511104");
  EXPECT_FALSE(r.enumerated);
}

TEST(PowerOfTwo, Decimal) {
  EXPECT_EQ(power_of_two(0), "1");
  EXPECT_EQ(power_of_two(10), "1024");
  EXPECT_EQ(power_of_two(64), "18446744073709551616");
  EXPECT_EQ(power_of_two(100), "1267650600228229401496703205376");
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(3).empty());
  EXPECT_EQ(span_of(kernel_basis(2), 2), (std::set<std::string>{"000", "110", "011", "101"}));
  EXPECT_EQ(kernel_basis(5).size(), 2U);
  EXPECT_EQ(kernel_dimension(1), 0);
  EXPECT_EQ(kernel_dimension(14), 10);
  EXPECT_EQ(kernel_dimension(62), 42);
}

TEST(Kernel, DimensionTableSpots) {
  const auto t = dimension_table(1, 10);
  std::vector<int> dims;
  for (const auto& [n, d] : t) dims.push_back(d);
  EXPECT_EQ(dims, (std::vector<int>{0, 2, 0, 0, 2, 4, 0, 0, 0, 2}));
  EXPECT_EQ(t.front().first, 1);
  EXPECT_EQ(t.back().first, 10);
  EXPECT_EQ(dimension_table(40, 40), (std::vector<std::pair<int, int>>{{40, 16}}));
  EXPECT_EQ(dimension_table(80, 80), (std::vector<std::pair<int, int>>{{80, 0}}));
  EXPECT_THROW(dimension_table(0, 3), Error);
  EXPECT_THROW(dimension_table(5, 4), Error);
}

TEST(Kernel, TableIndependentOfThreadCount) {
  EXPECT_EQ(dimension_table(1, 30, 1), dimension_table(1, 30, 4));
}

TEST(Kernel, Enumeration) {
  EXPECT_EQ(enumerate_kernel(2, 2)->size(), 4U);
  EXPECT_FALSE(enumerate_kernel(2, 1));
  EXPECT_EQ(enumerate_kernel(22, 4)->size(), 16U);
  const auto trivial = enumerate_kernel(3, 0);
  ASSERT_TRUE(trivial);
  ASSERT_EQ(trivial->size(), 1U);
  EXPECT_TRUE(trivial->front().bits().none());
}

// Certificates for the sizes where the computed dimension differs from the
// published table: an explicit inverse for the invertible ones, explicit
// independent kernel vectors for the others.
TEST(Kernel, InvertibilityCertificates) {
  for (int n : {36, 55, 56, 76}) {
    const auto game = GameCache::global().get(n);
    ASSERT_EQ(game->kernel_dimension(), 0) << n;
    const auto& inv = *game->elimination.transform;  // T * A = I when A is invertible
    for (std::size_t i = 0; i < game->matrix.rows(); ++i) {
      // Row i of T*A equals e_i; A is symmetric so (T*A)_ij = <T_i, A_j>.
      for (std::size_t j = 0; j < game->matrix.rows(); ++j) {
        ASSERT_EQ(inv.row(i).dot(game->matrix.row(j)), i == j) << "n=" << n;
      }
    }
  }
  for (int n : {66, 75}) {
    const auto basis = kernel_basis(n);
    ASSERT_EQ(basis.size(), 2U) << n;
    const auto game = GameCache::global().get(n);
    for (const auto& b : basis) EXPECT_TRUE(gf2::mat_vec(game->matrix, b.bits()).none());
  }
}

TEST(RandomSolvable, DeterministicAndSolvable) {
  for (int n = 1; n <= 40; ++n) {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 123456789ULL}) {
      const auto c = random_solvable(n, seed);
      EXPECT_EQ(c, random_solvable(n, seed));
      EXPECT_TRUE(is_solvable(c));
    }
  }
}

TEST(RandomSolvable, SingleButtonMatchesDrawnPressSet) {
  // seed 0: first mt19937_64 output is odd, so X = {1}.
  std::mt19937_64 rng(0);
  const bool pressed = (rng() & 1U) != 0;
  EXPECT_EQ(random_solvable(1, 0).to_string(), pressed ? "1" : "0");
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_solutions(Configuration::parse(2, "111")).size(), 4U);
  EXPECT_TRUE(brute_force_solutions(Configuration::parse(2, "010")).empty());
  const auto sols = brute_force_solutions(Configuration::parse(3, "101101"));
  ASSERT_EQ(sols.size(), 1U);
  EXPECT_EQ(sols[0].to_id_list(), "3,4");
  try {
    brute_force_solutions(Configuration(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::oracle_range);
  }
}

TEST(EngineProperties, DoublePressAndComposition) {
  std::mt19937_64 rng(777);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto c = random_config(rng, n);
    const auto x = random_press(rng, n);
    const auto y = random_press(rng, n);
    EXPECT_EQ(press(press(c, x), x), c);
    EXPECT_EQ(press(press(c, x), y), press(c, PressSet(n, x.bits() ^ y.bits())));
  }
}

TEST(EngineProperties, OracleEquivalenceExhaustiveUpToThree) {
  for (int n = 1; n <= 3; ++n) {
    const int beta = button_count(n);
    for (std::uint32_t m = 0; m < (1U << beta); ++m) {
      Configuration c(n);
      for (int i = 0; i < beta; ++i) c.bits().set(static_cast<std::size_t>(i), (m >> i) & 1U);
      const auto report = solve_config(c, 16);
      const auto oracle = brute_force_solutions(c);
      if (report.solvable) {
        ASSERT_TRUE(report.enumerated);
        EXPECT_EQ(as_strings(*report.enumerated), as_strings(oracle));
      } else {
        EXPECT_TRUE(oracle.empty());
      }
    }
  }
}

TEST(EngineProperties, OracleEquivalenceRandomSizeFour) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto c = random_config(rng, 4);
    const auto report = solve_config(c, 16);
    const auto oracle = brute_force_solutions(c);
    EXPECT_EQ(report.solvable, !oracle.empty());
    if (report.solvable) EXPECT_EQ(as_strings(*report.enumerated), as_strings(oracle));
  }
}

TEST(EngineProperties, SolutionCountsAndCensus) {
  for (int n = 1; n <= 4; ++n) {
    const int beta = button_count(n);
    const int l = kernel_dimension(n);
    std::uint64_t solvable = 0;
    for (std::uint32_t m = 0; m < (1U << beta); ++m) {
      Configuration c(n);
      for (int i = 0; i < beta; ++i) c.bits().set(static_cast<std::size_t>(i), (m >> i) & 1U);
      const auto sols = brute_force_solutions(c);
      if (sols.empty()) continue;
      ++solvable;
      EXPECT_EQ(sols.size(), std::size_t{1} << l);
    }
    EXPECT_EQ(solvable << l, std::uint64_t{1} << beta);
  }
}

TEST(EngineProperties, KernelDimensionAtMostSize) {
  for (const auto& [n, l] : dimension_table(1, 80)) EXPECT_LE(l, n);
}

TEST(EngineProperties, KernelCardinalityByEnumeration) {
  for (int n = 1; n <= 10; ++n) {
    const auto all = enumerate_kernel(n, 16);
    ASSERT_TRUE(all);
    EXPECT_EQ(all->size(), std::size_t{1} << kernel_dimension(n));
    EXPECT_EQ(as_strings(*all).size(), all->size());
  }
}

TEST(EngineProperties, LastRowInjectivity) {
  for (int n = 1; n <= 22; ++n) {
    if (kernel_dimension(n) == 0) continue;
    const auto all = enumerate_kernel(n, 16);
    ASSERT_TRUE(all) << n;
    std::set<std::string> last_rows;
    const std::size_t first = static_cast<std::size_t>(button_count(n - 1));
    for (const auto& x : *all) last_rows.insert(x.to_string().substr(first));
    EXPECT_EQ(last_rows.size(), all->size()) << n;
  }
}

TEST(EngineProperties, KernelClosedUnderBoardSymmetries) {
  for (int n = 1; n <= 22; ++n) {
    const auto game = GameCache::global().get(n);
    for (const auto& b : game->kernel_basis) {
      for (Symmetry s : kAllSymmetries) {
        EXPECT_TRUE(gf2::mat_vec(game->matrix, apply_symmetry(s, b.bits(), game->board)).none())
            << "n=" << n << " " << to_string(s);
      }
    }
  }
}

TEST(EngineProperties, InvertibleIffEveryConfigUniquelySolvable) {
  for (int n = 1; n <= 4; ++n) {
    const int beta = button_count(n);
    bool all_unique = true;
    for (std::uint32_t m = 0; m < (1U << beta); ++m) {
      Configuration c(n);
      for (int i = 0; i < beta; ++i) c.bits().set(static_cast<std::size_t>(i), (m >> i) & 1U);
      all_unique = all_unique && brute_force_solutions(c).size() == 1;
    }
    EXPECT_EQ(gf2::det_parity(game_matrix(n)), all_unique) << n;
  }
}

TEST(GameCache, ConcurrentFirstAccessComputesOnce) {
  GameCache cache;
  std::vector<std::shared_ptr<const GameData>> seen(8);
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < seen.size(); ++t) {
      threads.emplace_back([&, t] { seen[t] = cache.get(45); });
    }
  }
  for (const auto& p : seen) EXPECT_EQ(p.get(), seen.front().get());
  EXPECT_EQ(cache.cached_sizes(), 1U);
  EXPECT_THROW(cache.get(0), Error);
}

TEST(EnumerateCap, EnvironmentOverride) {
  ::unsetenv("TRILIGHTS_ENUM_CAP");
  EXPECT_EQ(default_enumerate_cap(), kDefaultEnumerateCap);
  ::setenv("TRILIGHTS_ENUM_CAP", "3", 1);
  EXPECT_EQ(default_enumerate_cap(), 3);
  ::setenv("TRILIGHTS_ENUM_CAP", "nope", 1);
  EXPECT_EQ(default_enumerate_cap(), kDefaultEnumerateCap);
  ::unsetenv("TRILIGHTS_ENUM_CAP");
}
