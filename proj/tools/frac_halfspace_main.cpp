#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "frachole/campaigns.hpp"

namespace {

// --block.key=value overrides, collected from the unparsed remainder.
std::vector<std::pair<std::string, std::string>> parse_overrides(
    const std::vector<std::string>& extras) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& tok : extras) {
    if (tok.rfind("--", 0) != 0) throw frachole::ConfigError("unrecognized argument: " + tok);
    const auto eq = tok.find('=');
    if (eq == std::string::npos || tok.find('.') == std::string::npos || eq < tok.find('.'))
      throw frachole::ConfigError("unrecognized argument: " + tok +
                                  " (overrides use --block.key=value)");
    out.emplace_back(tok.substr(2, eq - 2), tok.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational toolkit for the fractional problem on the half space with a hole"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> campaigns;
  std::string out_dir;
  bool deterministic = false;

  auto* run = app.add_subcommand("run", "execute verification campaigns");
  run->add_option("--config", config_path, "JSON config file")->required();
  run->add_option("--campaign", campaigns, "campaign selection (repeatable)");
  run->add_option("--out", out_dir, "output directory override");
  run->add_flag("--deterministic", deterministic, "force deterministic reductions");
  run->allow_extras(true);

  std::string report_dir;
  auto* report = app.add_subcommand("report", "consolidate campaign artifacts");
  report->add_option("--out", report_dir, "directory holding campaign outputs")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      auto overrides = parse_overrides(run->remaining());
      if (deterministic) overrides.emplace_back("solver.deterministic", "true");
      frachole::Config cfg = frachole::load_config(config_path, overrides);
      if (!campaigns.empty()) cfg.campaigns = campaigns;
      if (!out_dir.empty()) cfg.out_dir = out_dir;
      return frachole::run_campaigns(cfg);
    }
    return frachole::write_report(report_dir);
  } catch (const frachole::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
