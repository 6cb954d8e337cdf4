#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "braidscope/io.hpp"

namespace braidscope {

/// Configuration and input-file problems; the CLI maps these to exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command { Gen, Compute, Verify, Vk, Export };
enum class SubdivideMode { Auto, Off };
enum class OutputFormat { Text, Json, Dot };

struct RunConfig {
  Command command = Command::Compute;
  std::string graph_spec;
  int tokens = 1;
  bool tokens_given = false;
  SubdivideMode subdivide = SubdivideMode::Auto;
  bool certify = false;
  bool euler = false;
  OutputFormat format = OutputFormat::Text;
  long long budget = kDefaultTietzeBudget;
  std::vector<int> base;
  // verify
  Family family = Family::SunK2Tokens;
  int param_min = 1;
  int param_max = 1;
  // vk
  std::string input_path;
};

inline long long budget_from_env_or_default() {
  if (const char* env = std::getenv("BRAIDSCOPE_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (!end || *end != '\0' || v < 1)
      throw ConfigError("BRAIDSCOPE_BUDGET must be a positive integer");
    return v;
  }
  return kDefaultTietzeBudget;
}

/// Accepts "sun:k", "star:k", "cycle:m", "path:m", or a path to a graph
/// JSON file.
inline Graph parse_graph_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon);
    std::string tail = spec.substr(colon + 1);
    char* end = nullptr;
    long value = std::strtol(tail.c_str(), &end, 10);
    if (tail.empty() || !end || *end != '\0')
      throw ConfigError("bad graph spec parameter: " + spec);
    try {
      if (head == "sun") return make_sun(static_cast<int>(value));
      if (head == "star") return make_star(static_cast<int>(value));
      if (head == "cycle") return make_cycle(static_cast<int>(value));
      if (head == "path") return make_path(static_cast<int>(value));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("bad graph spec: ") + e.what());
    }
    throw ConfigError("unknown graph family in spec: " + head);
  }
  std::ifstream in(spec);
  if (!in) throw ConfigError("cannot open graph file: " + spec);
  try {
    json j = json::parse(in);
    return graph_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("bad graph json in " + spec + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("bad graph in " + spec + ": " + e.what());
  }
}

namespace detail {

inline int run_gen(const RunConfig& cfg, std::ostream& out) {
  Graph g = parse_graph_spec(cfg.graph_spec);
  if (cfg.tokens_given && cfg.subdivide == SubdivideMode::Auto)
    g = subdivide_for(g, cfg.tokens);
  out << graph_to_json(g).dump(2) << '\n';
  return 0;
}

inline int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == OutputFormat::Dot)
    throw ConfigError("compute supports text or json output; use export for DOT");
  Graph g = parse_graph_spec(cfg.graph_spec);
  Graph working = g;
  if (cfg.subdivide == SubdivideMode::Auto) {
    working = subdivide_for(g, cfg.tokens);
  } else if (!meets_token_conditions(g, cfg.tokens)) {
    err << "warning: subdivision is off and the graph does not meet the token-capacity "
           "conditions; the computed group may not be the braid group\n";
  }
  ConfigComplex cx = enumerate_complex(working, cfg.tokens);
  if (!cfg.base.empty()) cx = with_base(std::move(cx), cfg.base);
  auto counts = count_cells_all_dims(working, cfg.tokens);
  long long chi = euler_characteristic(working, cfg.tokens);
  auto comps = connected_components(cx);
  if (comps.count != 1) {
    err << "error: the configuration complex has " << comps.count
        << " components; no single fundamental group\n";
    return 1;
  }
  Presentation pres = fundamental_presentation(cx);
  std::optional<long long> rank;
  Presentation simplified;
  if (cfg.certify) {
    auto result = tietze_simplify(pres, cfg.budget);
    simplified = result.presentation;
    if (simplified.relators.empty())
      rank = static_cast<long long>(simplified.generator_names.size());
  }
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["graph"] = graph_to_json(working);
    j["tokens"] = cfg.tokens;
    j["counts"] = counts;
    j["euler"] = chi;
    j["components"] = comps.count;
    j["presentation"] = presentation_to_json(pres);
    if (cfg.certify) {
      if (rank)
        j["certified_rank"] = *rank;
      else
        j["certified_rank"] = nullptr;
      j["basis"] = rank ? json(simplified.generator_names) : json(nullptr);
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "graph: " << working.vertex_count << " vertices, " << working.edges.size()
      << " edges\n";
  out << "tokens: " << cfg.tokens << '\n';
  out << "cells:";
  for (long long c : counts) out << ' ' << c;
  out << '\n';
  if (cfg.euler) out << "euler: " << chi << '\n';
  out << "components: " << comps.count << '\n';
  out << "presentation: " << pres.generator_names.size() << " generators, "
      << pres.relators.size() << " relators\n";
  out << presentation_to_text(pres);
  if (cfg.certify) {
    if (rank) {
      out << "certified rank: " << *rank << '\n';
      out << "basis:";
      for (const auto& n : simplified.generator_names) out << ' ' << n;
      out << '\n';
    } else {
      out << "certified rank: unknown\n";
    }
  }
  return 0;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == OutputFormat::Dot)
    throw ConfigError("verify supports text or json output");
  VerifyReport report = verify_family(cfg.family, cfg.param_min, cfg.param_max, cfg.budget);
  if (cfg.format == OutputFormat::Json) {
    out << verify_report_to_json(report).dump(2) << '\n';
  } else {
    out << std::left << std::setw(16) << "family" << std::setw(7) << "param" << std::setw(10)
        << "expected" << std::setw(10) << "computed" << std::setw(7) << "chi" << std::setw(12)
        << "consistent" << "status\n";
    for (const auto& row : report.rows) {
      out << std::left << std::setw(16) << row.family << std::setw(7) << row.param
          << std::setw(10) << row.expected << std::setw(10)
          << (row.computed ? std::to_string(*row.computed) : std::string("unknown"))
          << std::setw(7) << row.chi << std::setw(12) << (row.consistent ? "yes" : "no")
          << (row.pass ? "pass" : "fail") << '\n';
    }
  }
  return report.all_pass ? 0 : 1;
}

inline int run_vk(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == OutputFormat::Dot) throw ConfigError("vk supports text or json output");
  std::ifstream in(cfg.input_path);
  if (!in) throw ConfigError("cannot open input file: " + cfg.input_path);
  GvkInput input;
  try {
    input = gvk_from_json(json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad van Kampen input json: ") + e.what());
  }
  Presentation pushed;
  try {
    pushed = gvk_pushout(input);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid van Kampen input: ") + e.what());
  }
  std::optional<long long> rank;
  if (cfg.certify) rank = certify_free(pushed, cfg.budget);
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["presentation"] = presentation_to_json(pushed);
    if (cfg.certify) {
      if (rank)
        j["certified_rank"] = *rank;
      else
        j["certified_rank"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << presentation_to_text(pushed);
    if (cfg.certify) {
      if (rank)
        out << "certified rank: " << *rank << '\n';
      else
        out << "certified rank: unknown\n";
    }
  }
  return 0;
}

inline int run_export(const RunConfig& cfg, std::ostream& out) {
  Graph g = parse_graph_spec(cfg.graph_spec);
  if (cfg.subdivide == SubdivideMode::Auto) g = subdivide_for(g, cfg.tokens);
  ConfigComplex cx = enumerate_complex(g, cfg.tokens);
  out << skeleton_to_dot(cx);
  return 0;
}

}  // namespace detail

/// Executes one command against the given streams and returns the exit
/// status (0 ok, 1 verification/computation failure, ConfigError for 2).
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.tokens < 1) throw ConfigError("tokens must be a positive integer");
  if (cfg.budget < 1) throw ConfigError("budget must be a positive integer");
  switch (cfg.command) {
    case Command::Gen: return detail::run_gen(cfg, out);
    case Command::Compute: return detail::run_compute(cfg, out, err);
    case Command::Verify: return detail::run_verify(cfg, out);
    case Command::Vk: return detail::run_vk(cfg, out);
    case Command::Export: return detail::run_export(cfg, out);
  }
  throw ConfigError("unknown command");
}

}  // namespace braidscope
