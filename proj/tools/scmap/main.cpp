#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "run.hpp"

namespace {

using namespace scmap::cli;

RunConfig build_config(int argc, char** argv, CLI::App& app) {
  std::string config_path, example, spec_path, lines_path, format, out, command_flag, command_pos;
  std::optional<double> tol, epsilon;

  app.add_option("command", command_pos, "grid | boundary | classify | verify | dims");
  app.add_option("--cmd", command_flag, "command (alternative to the positional form)");
  app.add_option("--config", config_path, "JSON run configuration; flags override it");
  app.add_option("--example", example, "gallery entry: type-a, type-b, type-c, type-d, pillar");
  app.add_option("--spec", spec_path, "JSON file holding an inline map specification");
  app.add_option("--lines", lines_path, "JSON file holding line requests (grid)");
  app.add_option("--format", format, "csv | svg | json");
  app.add_option("--out", out, "output directory");
  app.add_option("--tol", tol, "quadrature absolute tolerance");
  app.add_option("--epsilon", epsilon, "offset of the lines hugging the real axis");
  app.parse(argc, argv);

  RunConfig cfg;
  if (!config_path.empty())
    apply_config_json(cfg, read_json_file(config_path));
  if (!command_pos.empty() && !command_flag.empty() && command_pos != command_flag)
    throw ConfigError("conflicting commands '" + command_pos + "' and '" + command_flag + "'");
  if (!command_pos.empty())
    cfg.command = parse_command(command_pos);
  if (!command_flag.empty())
    cfg.command = parse_command(command_flag);
  if (!example.empty() && !spec_path.empty())
    throw ConfigError("give either --example or --spec, not both");
  if (!example.empty()) {
    const auto name = scmap::parse_gallery_name(example);
    if (!name)
      throw ConfigError("unknown example '" + example + "'");
    cfg.source = *name;
  }
  if (!spec_path.empty())
    cfg.source = spec_from_json(read_json_file(spec_path));
  if (!lines_path.empty())
    cfg.lines = lines_from_json(read_json_file(lines_path));
  if (!format.empty())
    cfg.format = parse_format(format);
  if (!out.empty())
    cfg.out = out;
  if (tol)
    cfg.tol = *tol;
  if (epsilon)
    cfg.epsilon = *epsilon;
  return cfg;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schwarz-Christoffel map explorer"};
  RunConfig cfg;
  try {
    cfg = build_config(argc, argv, app);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return run(cfg);
}
