#include "floqlat/cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "floqlat/cli/commands.hpp"

namespace floqlat::cli {
namespace {

struct RawArgs {
  std::string jt;
  std::string jt_min;
  std::string jt_max;
  std::string variant;
  std::string open;
  std::string format = "csv";
};

void apply(const RawArgs& raw, RunConfig& cfg) {
  if (!raw.jt.empty()) cfg.jt = parse_jt(raw.jt, "--jt");
  if (!raw.jt_min.empty()) cfg.jt_min = parse_jt(raw.jt_min, "--jt-min");
  if (!raw.jt_max.empty()) cfg.jt_max = parse_jt(raw.jt_max, "--jt-max");
  try {
    if (!raw.variant.empty()) cfg.variant = parse_variant(raw.variant);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("--variant: ") + e.what());
  }
  try {
    if (!raw.open.empty()) cfg.open = parse_open_direction(raw.open);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("--open: ") + e.what());
  }
  if (raw.format == "csv")
    cfg.format = Format::Csv;
  else if (raw.format == "json")
    cfg.format = Format::Json;
  else
    throw ValidationError("--format: expected csv or json, got '" + raw.format + "'");
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path out(path);
  const char* dir = std::getenv(kOutputDirEnv);
  if (dir && *dir && out.is_relative()) out = std::filesystem::path(dir) / out;
  return out;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Floquet and static lattice spectra, edge states and duality checks", "floqlat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  RawArgs raw;
  std::size_t sites = 0;
  std::size_t steps = 0;
  double tol = 0.0;
  double k_plus = 0.0;

  app.add_option("--model", cfg.model, "floquet, static (edge-wavefunction: also both)");
  app.add_option("--variant", raw.variant, "static chain: A (Wilson-Dirac) or B (SSH)");
  app.add_option("--jt", raw.jt, "J*T, e.g. 1.5pi or 4.712");
  app.add_option("--period", cfg.period, "drive period T");
  app.add_option("--grid", cfg.grid, "momenta per Brillouin-zone axis");
  auto* sites_opt = app.add_option("--sites", sites, "transverse cells of the strip");
  app.add_option("--open", raw.open, "open direction: x-minus or x-plus");
  app.add_option("--format", raw.format, "csv or json");
  app.add_option("-o,--output", cfg.output, "output file (stdout when absent)");
  app.add_option("--jt-min", raw.jt_min, "phase-scan lower JT");
  app.add_option("--jt-max", raw.jt_max, "phase-scan upper JT");
  auto* steps_opt = app.add_option("--steps", steps, "scan points");
  auto* k_opt = app.add_option("--k-plus", k_plus, "conserved momentum for edge-wavefunction");
  auto* tol_opt = app.add_option("--tol", tol, "strip comparison tolerance in 1/T");

  const std::pair<const char*, const char*> commands[] = {
      {"pbc-spectrum", "bulk spectrum on the periodic grid"},
      {"strip-spectrum", "strip spectrum against the conserved momentum"},
      {"compare", "shifted Floquet vs static spectra, bulk and strip"},
      {"edge-wavefunction", "edge-state densities and census"},
      {"phase-scan", "bulk gap and edge census against JT"},
      {"nogo-check", "2D Wilson-Dirac constraint solver over m in [-1, 1]"},
  };
  for (const auto& [name, about] : commands) app.add_subcommand(name, about)->fallthrough();
  auto usage = [&] { return app.get_formatter()->make_help(&app, "floqlat", CLI::AppFormatMode::Normal); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << usage();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << usage();
    return 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (*sites_opt) cfg.sites = sites;
    if (*steps_opt) cfg.steps = steps;
    if (*k_opt) cfg.k_plus = k_plus;
    if (*tol_opt) cfg.tol = tol;
    apply(raw, cfg);
    cfg.validate();

    const Table table = run_command(cfg);
    std::ostringstream buf;
    if (cfg.format == Format::Csv)
      write_csv(table, buf);
    else
      write_json(table, make_meta(cfg), buf);

    if (cfg.output.empty()) {
      out << buf.str();
      return 0;
    }
    const auto path = resolve_output(cfg.output);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << path.string() << " for writing\n";
      return 1;
    }
    file << buf.str();
    file.close();
    if (!file) {
      err << "error: failed writing " << path.string() << '\n';
      return 1;
    }
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace floqlat::cli
