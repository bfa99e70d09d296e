#include "trilights/service.hpp"

#include <charconv>
#include <functional>
#include <random>

#include "httplib.h"
#include "trilights/error.hpp"
#include "trilights/json_io.hpp"
#include "trilights/matchings.hpp"

namespace trilights::service {

using nlohmann::json;
namespace io = trilights::json;

namespace {

Response error(int status, const std::string& message, const std::string& kind) {
  return {status, {{"error", message}, {"kind", kind}}};
}

// Maps library failures onto status codes.
Response guarded(const std::function<Response()>& handler) {
  try {
    return handler();
  } catch (const Error& e) {
    const int status = e.kind() == ErrorKind::construction_failure ? 500 : 400;
    return error(status, e.what(), to_string(e.kind()));
  } catch (const json::exception& e) {
    return error(400, e.what(), "json");
  }
}

int require_int(const json& body, const char* key) {
  if (!body.is_object() || !body.contains(key) || !body[key].is_number_integer()) {
    throw Error(ErrorKind::parse, std::string("missing integer field '") + key + "'");
  }
  return body[key].get<int>();
}

Configuration require_config(const json& body, int n) {
  if (!body.contains("config") || !body["config"].is_string()) {
    throw Error(ErrorKind::parse, "missing bit-string field 'config'");
  }
  return Configuration::parse(n, body["config"].get<std::string>());
}

template <class T>
std::optional<T> parse_number(const std::string& text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

int path_int(const httplib::Request& req) {
  const auto v = parse_number<int>(req.matches[1].str());
  if (!v) throw Error(ErrorKind::parse, "path parameter must be an integer");
  return *v;
}

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

json parse_body(const httplib::Request& req) { return json::parse(req.body); }

}  // namespace

Response board(int n) {
  return guarded([&] { return Response{200, io::board(BoardGeometry(n))}; });
}

Response press(const json& body) {
  return guarded([&] {
    const int n = require_int(body, "n");
    const Configuration c = require_config(body, n);
    if (!body.contains("buttons")) throw Error(ErrorKind::parse, "missing field 'buttons'");
    const PressSet x = io::press_set_from(n, body["buttons"]);
    return Response{200, {{"n", n}, {"config", trilights::press(c, x).to_string()}}};
  });
}

Response solve(const json& body) {
  return guarded([&] {
    const int n = require_int(body, "n");
    const Configuration c = require_config(body, n);
    const int cap = body.contains("enumerateCap") ? require_int(body, "enumerateCap") : default_enumerate_cap();
    return Response{200, io::solve_report(solve_config(c, cap))};
  });
}

Response hint(const json& body) {
  return guarded([&] {
    const int n = require_int(body, "n");
    const Configuration c = require_config(body, n);
    const SolveReport report = solve_config(c, default_enumerate_cap());
    if (!report.solvable) return error(422, "configuration has no solution", "unsolvable");
    const auto ids = report.canonical->ids();
    return Response{200, {{"button", ids.empty() ? json(nullptr) : json(ids.front())}}};
  });
}

Response kernel(int n, bool enumerate) {
  return guarded([&] {
    std::optional<std::vector<PressSet>> elements;
    if (enumerate) elements = enumerate_kernel(n, default_enumerate_cap());
    return Response{200, io::kernel(n, kernel_basis(n), elements)};
  });
}

Response random(int n, std::optional<std::uint64_t> seed) {
  return guarded([&] {
    if (!seed) {
      std::random_device rd;
      seed = (std::uint64_t{rd()} << 32) | rd();
    }
    return Response{200, io::random(random_solvable(n, *seed), *seed)};
  });
}

Response table(int from, int to) {
  return guarded([&] { return Response{200, io::table(dimension_table(from, to))}; });
}

Response matchings(int n) {
  return guarded([&] {
    std::optional<std::uint64_t> count;
    const bool parity = coverings_parity(n);
    if (n <= kCoveringOracleMaxSize) count = count_coverings(n);
    return Response{200, io::matchings(n, parity, count)};
  });
}

Response propagate(const json& body) {
  return guarded([&] {
    const int n = require_int(body, "n");
    const int j = require_int(body, "j");
    if (!body.contains("element")) throw Error(ErrorKind::parse, "missing field 'element'");
    const PressSet t = io::press_set_from(n, body["element"]);
    const BlockLayout layout = block_layout(n, j);
    const PressSet x = trilights::propagate(t, layout);
    return Response{200, io::propagation(x, layout)};
  });
}

void install_routes(httplib::Server& server) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  // Wraps a handler so malformed bodies and path parameters become 400s.
  auto route = [](std::function<Response(const httplib::Request&)> fn) {
    return [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
      send(res, guarded([&] { return fn(req); }));
    };
  };

  server.Get(R"(/api/board/(-?\d+))", route([](const auto& req) { return board(path_int(req)); }));
  server.Post("/api/press", route([](const auto& req) { return press(parse_body(req)); }));
  server.Post("/api/solve", route([](const auto& req) { return solve(parse_body(req)); }));
  server.Post("/api/hint", route([](const auto& req) { return hint(parse_body(req)); }));
  server.Get(R"(/api/kernel/(-?\d+))", route([](const auto& req) {
               const std::string e = req.get_param_value("enumerate");
               return kernel(path_int(req), e == "true" || e == "1");
             }));
  server.Get(R"(/api/random/(-?\d+))", route([](const auto& req) {
               std::optional<std::uint64_t> seed;
               if (req.has_param("seed")) {
                 seed = parse_number<std::uint64_t>(req.get_param_value("seed"));
                 if (!seed) throw Error(ErrorKind::parse, "seed must be a non-negative integer");
               }
               return random(path_int(req), seed);
             }));
  server.Get("/api/table", route([](const auto& req) {
               const auto from = parse_number<int>(req.get_param_value("from"));
               const auto to = parse_number<int>(req.get_param_value("to"));
               if (!from || !to) throw Error(ErrorKind::parse, "from and to must be integers");
               return table(*from, *to);
             }));
  server.Get(R"(/api/matchings/(-?\d+))", route([](const auto& req) { return matchings(path_int(req)); }));
  server.Post("/api/propagate", route([](const auto& req) { return propagate(parse_body(req)); }));
}

bool serve(const std::string& host, int port) {
  httplib::Server server;
  install_routes(server);
  return server.listen(host, port);
}

}  // namespace trilights::service
