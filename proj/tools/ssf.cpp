#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ssf/cli.hpp"

using ssf::cli::json;

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in split spin factor algebras and their exceptional cover"};
  std::string command;
  std::string config_path;
  std::optional<std::string> alpha, mu, format, output;
  std::optional<std::uint64_t> p, cap, seed;
  std::optional<unsigned> workers;

  std::string command_help = "one of:";
  for (const auto& c : ssf::cli::commands()) command_help += " " + c;
  app.add_option("command", command, command_help)->required()->check(CLI::IsMember(ssf::cli::commands()));
  app.add_option("-c,--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--alpha", alpha, "override alpha, e.g. 3 or -2/5");
  app.add_option("--mu", mu, "override mu with a single value");
  app.add_option("--p", p, "work over F_p instead of the configured field");
  app.add_option("--cap", cap, "axet orbit cap");
  app.add_option("--seed", seed, "seed for sampled searches");
  app.add_option("--workers", workers, "parallel workers for mu sweeps");
  app.add_option("--format", format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", output, "write the report here instead of stdout");
  CLI11_PARSE(app, argc, argv);

  json config = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    try {
      config = json::parse(in);
    } catch (const json::exception& e) {
      std::cerr << "cannot parse " << config_path << ": " << e.what() << "\n";
      return ssf::cli::kConfigError;
    }
  }
  if (alpha) config["alpha"] = *alpha;
  if (mu) {
    config["mu"] = *mu;
    config.erase("mu_list");
    config.erase("mu_range");
  }
  if (p) config["field"] = json{{"kind", "prime"}, {"p", *p}};
  if (cap) config["budgets"]["axet_cap"] = *cap;
  if (seed) config["seed"] = *seed;
  if (workers) config["workers"] = *workers;
  if (format) config["format"] = *format;
  if (output) config["output"] = *output;

  const auto outcome = ssf::cli::execute(command, config);
  const bool text = config.is_object() && config.value("format", std::string("json")) == "text";
  const std::string rendered = text ? ssf::cli::render_text(outcome.report) : outcome.report.dump(2) + "\n";
  const std::string out_path = config.is_object() && config.contains("output") && config.at("output").is_string()
                                   ? config.at("output").get<std::string>()
                                   : std::string();
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return ssf::cli::kConfigError;
    }
    out << rendered;
  }
  return outcome.exit_code;
}
