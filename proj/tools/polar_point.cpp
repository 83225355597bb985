// polar-point: find a real point on every connected component of a bounded
// smooth real hypersurface f = 0.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polar/errors.hpp"
#include "polar/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAssumption = 2;
constexpr int kExitInternal = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::string error_kind(const polar::AssumptionViolation& e) {
  if (dynamic_cast<const polar::NotSquarefree*>(&e)) return "not_squarefree";
  if (dynamic_cast<const polar::PositiveDimensional*>(&e)) return "positive_dimensional";
  if (dynamic_cast<const polar::NotRadical*>(&e)) return "not_radical";
  if (dynamic_cast<const polar::SeparationFailure*>(&e)) return "separation_failure";
  if (dynamic_cast<const polar::RetryExhausted*>(&e)) return "retry_exhausted";
  return "assumption_violation";
}

void print_error(const std::string& kind, const std::string& message,
                 const std::string& witness = "") {
  nlohmann::ordered_json j;
  j["schema"] = "polar-point/1";
  j["error"] = {{"kind", kind}, {"message", message}};
  if (!witness.empty()) j["error"]["witness"] = witness;
  std::cout << j.dump(2) << "\n";
  std::cerr << "polar-point: " << message << "\n";
}

int run_solve(const std::string& expr, const std::string& slp_file, const std::string& vars,
              const std::string& levels, const std::string& box, const std::string& format,
              polar::SolveOptions options, bool timings, bool quiet) {
  if (format != "json") {
    std::cerr << "polar-point: unsupported format '" << format << "' (only json)\n";
    return kExitUsage;
  }
  if (expr.empty() == slp_file.empty()) {
    std::cerr << "polar-point: give exactly one of an expression or --slp <file>\n";
    return kExitUsage;
  }
  try {
    std::vector<std::string> names = split(vars, ',');
    polar::SolveInput input = [&] {
      if (!expr.empty()) return polar::input_from_text(expr, names);
      std::ifstream in(slp_file);
      if (!in) throw polar::InvalidArgument("cannot open SLP file " + slp_file);
      std::stringstream buf;
      buf << in.rdbuf();
      return polar::input_from_slp_json(buf.str(), names);
    }();
    if (levels == "all") {
      options.all_levels = true;
    } else if (!levels.empty()) {
      for (const auto& s : split(levels, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(s, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != s.size() || s.empty()) {
          throw polar::InvalidArgument("bad level '" + s + "' in --levels");
        }
        options.levels.push_back(v);
      }
    }
    if (!box.empty()) options.box = polar::parse_box(box);

    polar::SolveReport report = polar::solve(input, options);
    std::cout << polar::report_to_json(report, timings) << "\n";
    if (!quiet) std::cerr << polar::report_summary(report);
    return kExitOk;
  } catch (const polar::NotSquarefree& e) {
    print_error(error_kind(e), e.what(), e.witness());
    return kExitAssumption;
  } catch (const polar::RetryExhausted& e) {
    print_error(error_kind(e), e.what(), e.last_certificate());
    return kExitAssumption;
  } catch (const polar::AssumptionViolation& e) {
    print_error(error_kind(e), e.what());
    return kExitAssumption;
  } catch (const polar::InvalidArgument& e) {
    print_error("usage", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kExitInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real points on every connected component of a smooth hypersurface f = 0"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Run the critical-point pipeline on f");
  std::string expr, slp_file, vars, levels, box, format = "json";
  polar::SolveOptions options;
  bool no_timings = false, quiet = false;
  solve->add_option("expression", expr, "Polynomial in infix form, e.g. \"x1^2 + x2^2 - 1\"");
  solve->add_option("--slp", slp_file, "Read f as a JSON straight-line program");
  solve->add_option("--vars", vars, "Comma-separated variable order (default: detected)");
  solve->add_option("--seed", options.seed, "Random seed")->capture_default_str();
  solve->add_option("--precision", options.precision, "Output precision in bits")
      ->capture_default_str()
      ->check(CLI::Range(1u, 100000u));
  solve->add_option("--levels", levels, "Degree profile levels: all or i,j,... (default n-1)");
  solve->add_option("--box", box, "Oracle box \"lo1,hi1;lo2,hi2;...\" (n <= 3)");
  solve->add_option("--resolution", options.resolution, "Oracle cells per axis")
      ->check(CLI::Range(8u, 4096u));
  solve->add_option("--format", format, "Output format")->capture_default_str();
  solve->add_option("--height", options.genericity.height, "Height bound of random rationals")
      ->capture_default_str()
      ->check(CLI::Range(2u, 1000000u));
  solve->add_option("--retries", options.genericity.retry_budget, "Genericity retry budget")
      ->capture_default_str()
      ->check(CLI::Range(1u, 1000u));
  solve->add_flag("--no-timings", no_timings, "Omit the timings field");
  solve->add_flag("-q,--quiet", quiet, "No summary on standard error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return run_solve(expr, slp_file, vars, levels, box, format, options, !no_timings, quiet);
}
