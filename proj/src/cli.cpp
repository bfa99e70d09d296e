#include "trilights/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "trilights/engine.hpp"
#include "trilights/error.hpp"
#include "trilights/json_io.hpp"
#include "trilights/matchings.hpp"
#include "trilights/propagation.hpp"
#include "trilights/render.hpp"
#include "trilights/service.hpp"

namespace trilights::cli {

namespace {

namespace fs = std::filesystem;

std::string id_list_or_empty(const PressSet& x) {
  const std::string s = x.to_id_list();
  return s.empty() ? "(empty)" : s;
}

struct RenderTarget {
  std::string format;  // "", "text" or "svg"
  std::string dir;

  bool enabled() const { return !format.empty(); }

  void write(const std::string& stem, const std::string& text_body, const std::string& svg_body) const {
    fs::create_directories(dir);
    const bool svg = format == "svg";
    const fs::path path = fs::path(dir) / (stem + (svg ? ".svg" : ".txt"));
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::parse, "cannot write " + path.string());
    file << (svg ? svg_body : text_body);
  }
};

void add_render_options(CLI::App* cmd, RenderTarget& target) {
  cmd->add_option("--render", target.format, "Write renderings in this format")
      ->check(CLI::IsMember({"text", "svg"}));
  cmd->add_option("--out", target.dir, "Output directory for renderings")->default_val(".");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangular Lights Out: solver, kernel explorer and service", "trilights"};
  app.require_subcommand(1);

  int n = 0;
  std::string config;
  std::string buttons;
  bool as_json = false;
  int enumerate_cap = default_enumerate_cap();
  std::function<int()> action;

  auto* solve_cmd = app.add_subcommand("solve", "Solve a configuration");
  solve_cmd->add_option("--n", n, "Board size")->required();
  solve_cmd->add_option("--config", config, "Lit buttons as a bit string (character i-1 = button i)")->required();
  solve_cmd->add_option("--enumerate-cap", enumerate_cap, "Enumerate all solutions when the kernel dimension is at most this")
      ->check(CLI::Range(0, kMaxEnumerateCap));
  solve_cmd->add_flag("--json", as_json, "Emit JSON");
  solve_cmd->callback([&] {
    action = [&] {
      const SolveReport report = solve_config(Configuration::parse(n, config), enumerate_cap);
      if (as_json) {
        out << json::solve_report(report).dump() << '\n';
      } else {
        out << "solvable: " << (report.solvable ? "yes" : "no") << '\n';
        out << "kernel dimension: " << report.kernel_dimension << '\n';
        out << "solutions: " << report.solution_count << '\n';
        if (report.solvable) {
          out << "canonical: " << id_list_or_empty(*report.canonical) << '\n';
          out << "particular: " << id_list_or_empty(*report.particular) << '\n';
          if (report.enumerated) {
            out << "enumerated:\n";
            for (const auto& x : *report.enumerated) out << "  " << id_list_or_empty(x) << '\n';
          }
        }
      }
      return report.solvable ? kOk : kUnsolvable;
    };
  });

  auto* press_cmd = app.add_subcommand("press", "Press a set of buttons");
  press_cmd->add_option("--n", n, "Board size")->required();
  press_cmd->add_option("--config", config, "Starting configuration bit string")->required();
  press_cmd->add_option("--buttons", buttons, "Comma-separated 1-based button ids")->required();
  press_cmd->callback([&] {
    action = [&] {
      out << press(Configuration::parse(n, config), PressSet::from_ids(n, buttons)).to_string() << '\n';
      return kOk;
    };
  });

  bool enumerate = false;
  RenderTarget kernel_render;
  auto* kernel_cmd = app.add_subcommand("kernel", "Kernel dimension, basis and elements");
  kernel_cmd->add_option("--n", n, "Board size")->required();
  kernel_cmd->add_flag("--enumerate", enumerate, "List every kernel element (bounded by the enumeration cap)");
  kernel_cmd->add_flag("--json", as_json, "Emit JSON");
  add_render_options(kernel_cmd, kernel_render);
  kernel_cmd->callback([&] {
    action = [&] {
      const auto basis = kernel_basis(n);
      std::optional<std::vector<PressSet>> elements;
      if (enumerate) elements = enumerate_kernel(n, enumerate_cap);
      if (as_json) {
        out << json::kernel(n, basis, elements).dump() << '\n';
      } else {
        out << "dimension: " << basis.size() << '\n';
        out << "basis:\n";
        for (const auto& b : basis) out << "  " << b.to_string() << '\n';
        if (enumerate) {
          if (elements) {
            out << "elements (" << elements->size() << "):\n";
            for (const auto& e : *elements) out << "  " << e.to_string() << '\n';
          } else {
            out << "elements: 2^" << basis.size() << " exceeds the enumeration cap\n";
          }
        }
      }
      if (kernel_render.enabled()) {
        const auto& shown = elements ? *elements : basis;
        const std::string kind = elements ? "element" : "basis";
        for (std::size_t i = 0; i < shown.size(); ++i) {
          SvgOptions opt;
          opt.title = "n=" + std::to_string(n) + " kernel " + kind + " " + std::to_string(i + 1);
          kernel_render.write("kernel-n" + std::to_string(n) + "-" + kind + "-" + std::to_string(i + 1),
                              to_text(shown[i]), to_svg(shown[i], opt));
        }
      }
      return kOk;
    };
  });

  int from = 1;
  int to = 1;
  auto* table_cmd = app.add_subcommand("table", "Kernel dimension table");
  table_cmd->add_option("--from", from, "First board size")->required();
  table_cmd->add_option("--to", to, "Last board size")->required();
  table_cmd->add_flag("--json", as_json, "Emit JSON");
  table_cmd->callback([&] {
    action = [&] {
      const auto rows = dimension_table(from, to);
      if (as_json) {
        out << json::table(rows).dump() << '\n';
      } else {
        for (std::size_t i = 0; i < rows.size(); ++i) out << (i == 0 ? "" : " ") << rows[i].second;
        out << '\n';
      }
      return kOk;
    };
  });

  bool want_count = false;
  bool want_parity = false;
  auto* match_cmd = app.add_subcommand("matchings", "Covering count and parity versus det A mod 2");
  match_cmd->add_option("--n", n, "Board size")->required();
  match_cmd->add_flag("--count", want_count, "Count coverings exhaustively (small boards only)");
  match_cmd->add_flag("--parity", want_parity, "Report det A mod 2");
  match_cmd->add_flag("--json", as_json, "Emit JSON");
  match_cmd->callback([&] {
    action = [&] {
      if (!want_count && !want_parity) {
        want_parity = true;
        want_count = n <= kCoveringOracleMaxSize;
      }
      const bool parity = coverings_parity(n);
      std::optional<std::uint64_t> count;
      if (want_count) count = count_coverings(n);
      const bool agree = !count || ((*count % 2 == 1) == parity);
      if (as_json) {
        out << json::matchings(n, parity, count).dump() << '\n';
      } else if (count) {
        out << *count << (*count % 2 == 1 ? " (odd)" : " (even)") << "; det parity " << (parity ? 1 : 0) << "; "
            << (agree ? "agree" : "DISAGREE") << '\n';
      } else {
        out << "det parity " << (parity ? 1 : 0) << " (" << (parity ? "odd" : "even") << " number of coverings)\n";
      }
      return agree ? kOk : kVerificationFailure;
    };
  });

  int element = 1;
  int j = 1;
  RenderTarget prop_render;
  auto* prop_cmd = app.add_subcommand("propagate", "Propagate a kernel basis element to size n+(n+2)j");
  prop_cmd->add_option("--n", n, "Source board size")->required();
  prop_cmd->add_option("--element", element, "1-based index into the kernel basis")->required();
  prop_cmd->add_option("--j", j, "Propagation step j >= 1")->required();
  prop_cmd->add_flag("--json", as_json, "Emit JSON");
  add_render_options(prop_cmd, prop_render);
  prop_cmd->callback([&] {
    action = [&] {
      const auto basis = kernel_basis(n);
      if (element < 1 || element > static_cast<int>(basis.size())) {
        err << "element must be in [1, " << basis.size() << "] for n = " << n << '\n';
        return kUsage;
      }
      const BlockLayout layout = block_layout(n, j);
      const PressSet x = propagate(basis[element - 1], layout);
      if (as_json) {
        out << json::propagation(x, layout).dump() << '\n';
      } else {
        out << "m: " << layout.m << '\n';
        out << "element: " << x.to_string() << '\n';
        out << "verified: true\n";
        out << layout.dump();
      }
      if (prop_render.enabled()) {
        const std::string stem = "propagate-n" + std::to_string(n) + "-e" + std::to_string(element) + "-j" +
                                 std::to_string(j);
        prop_render.write(stem, to_text(x), to_svg(x));
        prop_render.write(stem + "-layout", layout.dump(), to_svg(layout, x));
      }
      return kOk;
    };
  });

  std::uint64_t seed = 0;
  auto* random_cmd = app.add_subcommand("random", "Generate a solvable configuration");
  random_cmd->add_option("--n", n, "Board size")->required();
  random_cmd->add_option("--seed", seed, "PRNG seed")->required();
  random_cmd->add_flag("--json", as_json, "Emit JSON");
  random_cmd->callback([&] {
    action = [&] {
      const Configuration c = random_solvable(n, seed);
      if (as_json) {
        out << json::random(c, seed).dump() << '\n';
      } else {
        out << c.to_string() << '\n' << "# seed=" << seed << " prng=" << kRandomEngineName << '\n';
      }
      return kOk;
    };
  });

  int port = 8080;
  std::string host = "0.0.0.0";
  auto* serve_cmd = app.add_subcommand("serve", "Start the JSON service");
  serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->callback([&] {
    action = [&] {
      err << "listening on " << host << ":" << port << '\n';
      if (!service::serve(host, port)) {
        err << "cannot bind " << host << ":" << port << '\n';
        return kUsage;
      }
      return kOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::construction_failure ? kVerificationFailure : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
}

}  // namespace trilights::cli
