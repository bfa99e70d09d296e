#include "trilights/matchings.hpp"

#include <charconv>

#include "trilights/board.hpp"
#include "trilights/engine.hpp"
#include "trilights/error.hpp"

namespace trilights {

const char* to_string(CoveringIssue issue) noexcept {
  switch (issue) {
    case CoveringIssue::none: return "none";
    case CoveringIssue::bad_part_size: return "bad-part-size";
    case CoveringIssue::id_out_of_range: return "id-out-of-range";
    case CoveringIssue::duplicate_id: return "duplicate-id";
    case CoveringIssue::missing_id: return "missing-id";
    case CoveringIssue::not_adjacent: return "not-adjacent";
  }
  return "unknown";
}

Covering Covering::parse(int n, std::string_view text) {
  Covering cov;
  cov.n = n;
  std::size_t pos = 0;
  auto fail = [&] { throw Error(ErrorKind::parse, "malformed covering '" + std::string(text) + "'"); };
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(pos, end - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (part.size() < 2 || part.front() != '{' || part.back() != '}') fail();
    part = part.substr(1, part.size() - 2);

    std::vector<int> ids;
    std::size_t p = 0;
    while (p <= part.size()) {
      std::size_t e = part.find(',', p);
      if (e == std::string_view::npos) e = part.size();
      std::string_view tok = part.substr(p, e - p);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int id = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) fail();
      ids.push_back(id);
      p = e + 1;
    }
    cov.parts.push_back(std::move(ids));
    pos = end + 1;
  }
  return cov;
}

std::string Covering::to_string() const {
  std::string s;
  for (const auto& part : parts) {
    if (!s.empty()) s += ';';
    s += '{';
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(part[i]);
    }
    s += '}';
  }
  return s;
}

CoveringCheck validate_covering(const Covering& cov) {
  const BoardGeometry board(cov.n);
  std::vector<bool> seen(static_cast<std::size_t>(board.beta()), false);
  auto bad = [](CoveringIssue issue) { return CoveringCheck{false, issue}; };
  for (const auto& part : cov.parts) {
    if (part.empty() || part.size() > 2) return bad(CoveringIssue::bad_part_size);
    for (int id : part) {
      if (id < 1 || id > board.beta()) return bad(CoveringIssue::id_out_of_range);
      if (seen[id - 1]) return bad(CoveringIssue::duplicate_id);
      seen[id - 1] = true;
    }
    if (part.size() == 2 && !board.adjacent(part[0] - 1, part[1] - 1)) {
      return bad(CoveringIssue::not_adjacent);
    }
  }
  for (bool s : seen) {
    if (!s) return bad(CoveringIssue::missing_id);
  }
  return {true, CoveringIssue::none};
}

namespace {

class CoveringSearch {
 public:
  CoveringSearch(int n, const std::function<void(const Covering&)>* visit)
      : board_(n), covered_(static_cast<std::size_t>(board_.beta()), false), visit_(visit) {
    current_.n = n;
  }

  std::uint64_t run() {
    descend(0);
    return count_;
  }

 private:
  void descend(int from) {
    int cell = from;
    while (cell < board_.beta() && covered_[cell]) ++cell;
    if (cell == board_.beta()) {
      ++count_;
      if (visit_ != nullptr) (*visit_)(current_);
      return;
    }
    covered_[cell] = true;

    current_.parts.push_back({cell + 1});
    descend(cell + 1);
    current_.parts.pop_back();

    for (int nb : board_.neighbors(cell)) {
      if (nb < cell || covered_[nb]) continue;
      covered_[nb] = true;
      current_.parts.push_back({cell + 1, nb + 1});
      descend(cell + 1);
      current_.parts.pop_back();
      covered_[nb] = false;
    }
    covered_[cell] = false;
  }

  BoardGeometry board_;
  std::vector<bool> covered_;
  const std::function<void(const Covering&)>* visit_;
  Covering current_;
  std::uint64_t count_ = 0;
};

std::uint64_t run_search(int n, const std::function<void(const Covering&)>* visit) {
  if (n < 1 || n > kCoveringOracleMaxSize) {
    throw Error(ErrorKind::oracle_range, "covering oracle supports 1 <= n <= " +
                                             std::to_string(kCoveringOracleMaxSize) + ", got " +
                                             std::to_string(n));
  }
  return CoveringSearch(n, visit).run();
}

}  // namespace

std::uint64_t count_coverings(int n) { return run_search(n, nullptr); }

std::uint64_t count_coverings(int n, const std::function<void(const Covering&)>& visit) {
  return run_search(n, &visit);
}

bool coverings_parity(int n) {
  const auto game = GameCache::global().get(n);
  return game->elimination.rank == static_cast<std::size_t>(game->board.beta());
}

}  // namespace trilights
