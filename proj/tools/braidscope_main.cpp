#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "braidscope/cli.hpp"

namespace {

braidscope::OutputFormat parse_format(const std::string& s) {
  if (s == "text") return braidscope::OutputFormat::Text;
  if (s == "json") return braidscope::OutputFormat::Json;
  if (s == "dot") return braidscope::OutputFormat::Dot;
  throw braidscope::ConfigError("unknown format: " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidscope: exact braid groups of graphs via discretized configuration spaces"};
  app.require_subcommand(1);

  braidscope::RunConfig cfg;
  std::string subdivide = "auto";
  std::string format;
  std::string family;

  auto add_graph_options = [&](CLI::App* cmd) {
    cmd->add_option("--graph", cfg.graph_spec,
                    "Graph spec: sun:k | star:k | cycle:m | path:m | json file")
        ->required();
    cmd->add_option("--subdivide", subdivide, "auto (default) or off")
        ->check(CLI::IsMember({"auto", "off"}));
  };

  CLI::App* gen = app.add_subcommand("gen", "Emit a graph as JSON");
  add_graph_options(gen);
  CLI::Option* gen_tokens =
      gen->add_option("--tokens", cfg.tokens, "Subdivide for this many tokens");

  CLI::App* compute = app.add_subcommand(
      "compute", "Cell counts, Euler characteristic, presentation and certified rank");
  add_graph_options(compute);
  compute->add_option("--tokens", cfg.tokens, "Number of tokens")->required();
  compute->add_flag("--certify", cfg.certify, "Certify the free rank");
  compute->add_flag("--euler", cfg.euler, "Print the Euler characteristic");
  compute->add_option("--base", cfg.base, "Base 0-cell as a vertex list, e.g. 0,2,5")
      ->delimiter(',');
  compute->add_option("--budget", cfg.budget, "Tietze step budget");
  compute->add_option("--format", format, "text (default) or json");

  CLI::App* verify = app.add_subcommand("verify", "Check a graph family against its theorem");
  verify->add_option("--family", family,
                     "star3_ntokens | sun1_ntokens | sun_k_2tokens")
      ->required();
  verify->add_option("--min", cfg.param_min, "Smallest parameter (default 1)");
  verify->add_option("--max", cfg.param_max, "Largest parameter")->required();
  verify->add_option("--budget", cfg.budget, "Tietze step budget");
  verify->add_option("--format", format, "text (default) or json");

  CLI::App* vk = app.add_subcommand("vk", "Generalized Van Kampen operations");
  vk->require_subcommand(1);
  CLI::App* pushout = vk->add_subcommand("pushout", "Pushout presentation from a JSON input");
  pushout->add_option("--input", cfg.input_path, "GvkInput JSON file")->required();
  pushout->add_flag("--certify", cfg.certify, "Certify the free rank of the result");
  pushout->add_option("--budget", cfg.budget, "Tietze step budget");
  pushout->add_option("--format", format, "text (default) or json");

  CLI::App* exp = app.add_subcommand("export", "DOT export of the complex's 1-skeleton");
  add_graph_options(exp);
  exp->add_option("--tokens", cfg.tokens, "Number of tokens")->required();

  try {
    cfg.budget = braidscope::budget_from_env_or_default();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const braidscope::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(gen)) {
      cfg.command = braidscope::Command::Gen;
      cfg.tokens_given = gen_tokens->count() > 0;
    } else if (app.got_subcommand(compute)) {
      cfg.command = braidscope::Command::Compute;
    } else if (app.got_subcommand(verify)) {
      cfg.command = braidscope::Command::Verify;
      cfg.family = braidscope::family_from_name(family);
      if (verify->count("--min") == 0)
        cfg.param_min = 1;
    } else if (app.got_subcommand(vk)) {
      cfg.command = braidscope::Command::Vk;
    } else if (app.got_subcommand(exp)) {
      cfg.command = braidscope::Command::Export;
    }
    cfg.subdivide = subdivide == "off" ? braidscope::SubdivideMode::Off
                                       : braidscope::SubdivideMode::Auto;
    if (!format.empty()) cfg.format = parse_format(format);
    return braidscope::run(cfg, std::cout, std::cerr);
  } catch (const braidscope::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
