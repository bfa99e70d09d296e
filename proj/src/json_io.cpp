#include "trilights/json_io.hpp"

#include <algorithm>

#include "trilights/error.hpp"

namespace trilights::json {

json ids(const PressSet& x) { return x.ids(); }

json solve_report(const SolveReport& r) {
  json j = {
      {"n", r.n},
      {"solvable", r.solvable},
      {"kernelDimension", r.kernel_dimension},
      {"solutionCount", r.solution_count},
      {"canonical", r.canonical ? ids(*r.canonical) : json(nullptr)},
      {"particular", r.particular ? ids(*r.particular) : json(nullptr)},
  };
  if (r.enumerated) {
    json all = json::array();
    for (const auto& x : *r.enumerated) all.push_back(ids(x));
    j["enumerated"] = std::move(all);
  }
  return j;
}

json board(const BoardGeometry& b) {
  json nbs = json::array();
  for (int c = 0; c < b.beta(); ++c) {
    json row = json::array();
    for (int nb : b.neighbors(c)) row.push_back(nb + 1);
    nbs.push_back(std::move(row));
  }
  return {{"n", b.size()}, {"beta", b.beta()}, {"neighbors", std::move(nbs)}};
}

json table(const std::vector<std::pair<int, int>>& rows) {
  json out = json::array();
  for (const auto& [n, dim] : rows) out.push_back({{"n", n}, {"dimension", dim}});
  return out;
}

json kernel(int n, const std::vector<PressSet>& basis, const std::optional<std::vector<PressSet>>& elements) {
  json b = json::array();
  for (const auto& x : basis) b.push_back(ids(x));
  json out = {{"n", n}, {"dimension", basis.size()}, {"basis", std::move(b)}};
  if (elements) {
    json e = json::array();
    for (const auto& x : *elements) e.push_back(ids(x));
    out["elements"] = std::move(e);
  }
  return out;
}

json random(const Configuration& c, std::uint64_t seed) {
  return {{"n", c.size()}, {"config", c.to_string()}, {"seed", seed}, {"prng", std::string(kRandomEngineName)}};
}

json matchings(int n, bool parity, const std::optional<std::uint64_t>& count) {
  json out = {{"n", n}, {"parity", parity ? 1 : 0}};
  if (count) {
    out["count"] = *count;
    out["agree"] = ((*count % 2) == 1) == parity;
  }
  return out;
}

json layout(const BlockLayout& l) {
  json blocks = json::array();
  for (const Block& b : l.blocks) {
    std::vector<int> cells;
    for (int c : b.cells) cells.push_back(c + 1);
    std::sort(cells.begin(), cells.end());
    blocks.push_back({{"band", b.band},
                      {"slot", b.slot},
                      {"orientation", to_string(b.orientation)},
                      {"symmetry", std::string(to_string(b.symmetry))},
                      {"cells", std::move(cells)}});
  }
  std::vector<int> seps;
  for (int c : l.separators) seps.push_back(c + 1);
  return {{"n", l.n}, {"j", l.j}, {"m", l.m}, {"blocks", std::move(blocks)}, {"separators", std::move(seps)}};
}

json propagation(const PressSet& element, const BlockLayout& l) {
  return {{"m", l.m}, {"element", ids(element)}, {"verified", true}, {"layout", layout(l)}};
}

PressSet press_set_from(int n, const json& value) {
  if (value.is_string()) return PressSet::parse(n, value.get<std::string>());
  if (value.is_array()) {
    std::vector<int> list;
    for (const auto& v : value) {
      if (!v.is_number_integer()) throw Error(ErrorKind::parse, "button ids must be integers");
      list.push_back(v.get<int>());
    }
    return PressSet::from_ids(n, list);
  }
  throw Error(ErrorKind::parse, "expected a bit string or an array of button ids");
}

}  // namespace trilights::json
