#pragma once

// JSON-over-HTTP facade over the engine. Stateless: every handler is a pure
// function of its request, backed by the shared per-size GameCache.
//
//   GET  /api/board/{n}                  {n, beta, neighbors}
//   POST /api/press     {n, config, buttons}      -> {config}
//   POST /api/solve     {n, config[, enumerateCap]} -> solve report
//   POST /api/hint      {n, config}      {button}
//   GET  /api/kernel/{n}?enumerate=bool  {n, dimension, basis[, elements]}
//   GET  /api/random/{n}?seed=S          {n, config, seed, prng}
//   GET  /api/table?from=A&to=B          [{n, dimension}...]
//   GET  /api/matchings/{n}              {n, parity[, count, agree]}
//   POST /api/propagate {n, element, j}  {m, element, verified, layout}
//
// Status codes: 400 malformed input, 422 unsolvable where a solution is
// required, 500 failed internal verification.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace httplib {
class Server;
}

namespace trilights::service {

struct Response {
  int status = 200;
  nlohmann::json body;
};

Response board(int n);
Response press(const nlohmann::json& body);
Response solve(const nlohmann::json& body);
Response hint(const nlohmann::json& body);
Response kernel(int n, bool enumerate);
Response random(int n, std::optional<std::uint64_t> seed);
Response table(int from, int to);
Response matchings(int n);
Response propagate(const nlohmann::json& body);

/// Registers every route plus CORS handling on `server`.
void install_routes(httplib::Server& server);

/// Blocks serving on host:port. Returns false if the socket cannot be bound.
bool serve(const std::string& host, int port);

}  // namespace trilights::service
