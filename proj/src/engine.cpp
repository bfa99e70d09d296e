#include "trilights/engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <random>
#include <thread>

#include "trilights/error.hpp"

namespace trilights {

namespace {

void require_size(const BoardVector<ConfigurationTag>& c, const BoardVector<PressSetTag>& x) {
  if (c.size() != x.size()) {
    throw Error(ErrorKind::shape, "configuration is for n = " + std::to_string(c.size()) +
                                      " but press set is for n = " + std::to_string(x.size()));
  }
}

void check_cap(int cap) {
  if (cap < 0 || cap > kMaxEnumerateCap) {
    throw Error(ErrorKind::range, "enumerate cap must be in [0, " + std::to_string(kMaxEnumerateCap) + "]");
  }
}

}  // namespace

template <class Tag>
BoardVector<Tag>::BoardVector(int n, gf2::BitVector bits) : n_(n), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(button_count(n))) {
    throw Error(ErrorKind::shape, "expected " + std::to_string(button_count(n)) + " bits for n = " +
                                      std::to_string(n) + ", got " + std::to_string(bits_.size()));
  }
}

template <class Tag>
BoardVector<Tag> BoardVector<Tag>::parse(int n, std::string_view bits) {
  if (n < 1 || n > kMaxBoardSize) throw Error(ErrorKind::size, "board size out of range: " + std::to_string(n));
  const auto beta = static_cast<std::size_t>(button_count(n));
  if (bits.size() != beta || bits.find_first_not_of("01") != std::string_view::npos) {
    throw Error(ErrorKind::parse, "expected a string of exactly " + std::to_string(beta) +
                                      " characters over {0,1} for n = " + std::to_string(n));
  }
  return BoardVector(n, gf2::BitVector::from_string(bits));
}

template <class Tag>
BoardVector<Tag> BoardVector<Tag>::from_ids(int n, const std::vector<int>& ids) {
  if (n < 1 || n > kMaxBoardSize) throw Error(ErrorKind::size, "board size out of range: " + std::to_string(n));
  BoardVector v(n);
  for (int id : ids) {
    if (id < 1 || id > v.beta()) {
      throw Error(ErrorKind::coordinate, "button " + std::to_string(id) + " is not on a size-" +
                                             std::to_string(n) + " board");
    }
    v.bits_.set(static_cast<std::size_t>(id - 1));
  }
  return v;
}

template <class Tag>
BoardVector<Tag> BoardVector<Tag>::from_ids(int n, std::string_view text) {
  std::vector<int> ids;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int id = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::parse, "malformed button list '" + std::string(text) + "'");
    }
    ids.push_back(id);
    pos = end + 1;
  }
  return from_ids(n, ids);
}

template <class Tag>
std::vector<int> BoardVector<Tag>::ids() const {
  std::vector<int> out;
  for (std::size_t i : bits_.ones()) out.push_back(static_cast<int>(i) + 1);
  return out;
}

template <class Tag>
std::string BoardVector<Tag>::to_id_list() const {
  std::string s;
  for (int id : ids()) {
    if (!s.empty()) s += ',';
    s += std::to_string(id);
  }
  return s;
}

template class BoardVector<ConfigurationTag>;
template class BoardVector<PressSetTag>;

std::string power_of_two(int exponent) {
  // Little-endian decimal digits.
  std::vector<int> digits{1};
  for (int e = 0; e < exponent; ++e) {
    int carry = 0;
    for (int& d : digits) {
      const int v = d * 2 + carry;
      d = v % 10;
      carry = v / 10;
    }
    if (carry != 0) digits.push_back(carry);
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += static_cast<char>('0' + *it);
  return s;
}

GameData::GameData(int n)
    : board(n), matrix(board.game_matrix()), elimination(gf2::row_reduce(matrix, true)) {
  for (auto& v : gf2::null_space(elimination)) kernel_basis.emplace_back(n, std::move(v));
}

std::shared_ptr<const GameData> GameCache::get(int n) {
  if (n < 1 || n > kMaxBoardSize) {
    throw Error(ErrorKind::size, "board size must be in [1, " + std::to_string(kMaxBoardSize) +
                                     "], got " + std::to_string(n));
  }
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard lock(mu_);
    auto& s = slots_[n];
    if (!s) s = std::make_shared<Slot>();
    slot = s;
  }
  std::call_once(slot->once, [&] { slot->data = std::make_shared<const GameData>(n); });
  return slot->data;
}

std::size_t GameCache::cached_sizes() const {
  std::lock_guard lock(mu_);
  return slots_.size();
}

GameCache& GameCache::global() {
  static GameCache cache;
  return cache;
}

Configuration press(const Configuration& c, const PressSet& x) {
  require_size(c, x);
  const auto game = GameCache::global().get(c.size());
  return Configuration(c.size(), gf2::mat_vec(game->matrix, x.bits()) ^ c.bits());
}

bool is_solvable(const Configuration& c) {
  const auto game = GameCache::global().get(c.size());
  return gf2::solve(game->elimination, c.bits()).has_value();
}

SolveReport solve_config(const Configuration& c, int enumerate_cap) {
  check_cap(enumerate_cap);
  const auto game = GameCache::global().get(c.size());
  SolveReport report;
  report.n = c.size();
  report.kernel_dimension = game->kernel_dimension();

  auto x = gf2::solve(game->elimination, c.bits());
  if (!x) return report;

  report.solvable = true;
  report.solution_count = power_of_two(report.kernel_dimension);
  report.particular = PressSet(c.size(), *x);
  report.canonical = report.particular;

  if (report.kernel_dimension > enumerate_cap) return report;

  const auto& basis = game->kernel_basis;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  std::vector<PressSet> all;
  all.reserve(total);
  gf2::BitVector current = *x;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i != 0) current ^= basis[static_cast<std::size_t>(std::countr_zero(i))].bits();
    if (gf2::mat_vec(game->matrix, current) != c.bits()) {
      throw Error(ErrorKind::construction_failure, "enumerated solution failed verification");
    }
    all.emplace_back(c.size(), current);
  }
  const auto best = std::min_element(all.begin(), all.end(), [](const PressSet& a, const PressSet& b) {
    const auto wa = a.bits().count();
    const auto wb = b.bits().count();
    if (wa != wb) return wa < wb;
    return gf2::lex_less(a.bits(), b.bits());
  });
  report.canonical = *best;
  report.enumerated = std::move(all);
  return report;
}

std::vector<PressSet> kernel_basis(int n) { return GameCache::global().get(n)->kernel_basis; }

int kernel_dimension(int n) { return GameCache::global().get(n)->kernel_dimension(); }

std::vector<std::pair<int, int>> dimension_table(int from, int to, unsigned threads) {
  if (from < 1 || to < from || to > kMaxBoardSize) {
    throw Error(ErrorKind::range, "table range must satisfy 1 <= from <= to <= " +
                                      std::to_string(kMaxBoardSize));
  }
  const int count = to - from + 1;
  std::vector<std::pair<int, int>> table(static_cast<std::size_t>(count));
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));

  // Largest sizes first so the slow eliminations start early.
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      const int n = to - i;
      table[static_cast<std::size_t>(n - from)] = {n, kernel_dimension(n)};
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return table;
}

std::optional<std::vector<PressSet>> enumerate_kernel(int n, int cap) {
  check_cap(cap);
  const auto game = GameCache::global().get(n);
  if (game->kernel_dimension() > cap) return std::nullopt;
  const auto& basis = game->kernel_basis;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  std::vector<PressSet> out;
  out.reserve(total);
  gf2::BitVector current(static_cast<std::size_t>(game->board.beta()));
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i != 0) current ^= basis[static_cast<std::size_t>(std::countr_zero(i))].bits();
    if (gf2::mat_vec(game->matrix, current).any()) {
      throw Error(ErrorKind::construction_failure, "kernel element failed verification");
    }
    out.emplace_back(n, current);
  }
  return out;
}

Configuration random_solvable(int n, std::uint64_t seed) {
  PressSet x(n);
  std::mt19937_64 rng(seed);
  auto words = x.bits().words();
  for (auto& w : words) w = rng();
  // Clear tail bits past beta.
  const auto tail = static_cast<std::size_t>(x.beta()) % gf2::kWordBits;
  if (tail != 0) words.back() &= (gf2::Word{1} << tail) - 1;
  return press(Configuration(n), x);
}

std::vector<PressSet> brute_force_solutions(const Configuration& c) {
  const int n = c.size();
  if (n < 1 || n > kBruteForceMaxSize) {
    throw Error(ErrorKind::oracle_range, "brute-force oracle supports n <= " +
                                             std::to_string(kBruteForceMaxSize) + ", got " + std::to_string(n));
  }
  const BoardGeometry board(n);
  const int beta = board.beta();
  std::vector<std::uint32_t> toggles(static_cast<std::size_t>(beta));
  for (int i = 0; i < beta; ++i) {
    toggles[i] = std::uint32_t{1} << i;
    for (int j : board.neighbors(i)) toggles[i] |= std::uint32_t{1} << j;
  }
  std::uint32_t start = 0;
  for (int i = 0; i < beta; ++i) {
    if (c.bits().get(static_cast<std::size_t>(i))) start |= std::uint32_t{1} << i;
  }

  std::vector<PressSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << beta); ++mask) {
    std::uint32_t state = start;
    for (int i = 0; i < beta; ++i) {
      if ((mask >> i) & 1U) state ^= toggles[i];
    }
    if (state != 0) continue;
    PressSet x(n);
    for (int i = 0; i < beta; ++i) {
      if ((mask >> i) & 1U) x.bits().set(static_cast<std::size_t>(i));
    }
    out.push_back(std::move(x));
  }
  return out;
}

int default_enumerate_cap() {
  const char* env = std::getenv("TRILIGHTS_ENUM_CAP");
  if (env == nullptr) return kDefaultEnumerateCap;
  std::string_view text(env);
  int cap = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc{} || ptr != text.data() + text.size() || cap < 0 || cap > kMaxEnumerateCap) {
    return kDefaultEnumerateCap;
  }
  return cap;
}

}  // namespace trilights
