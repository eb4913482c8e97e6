// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gicbound/gicbound.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

struct Flags {
  std::optional<int> k;
  std::optional<double> p;
  std::optional<double> p_db;
  std::optional<std::string> g;
  std::optional<std::string> g2;
  std::optional<double> alpha;
  std::optional<std::string> field;
  std::optional<std::string> bounds;
  std::optional<int> grid;
  std::optional<int> threads;
  std::optional<std::string> profile;
  std::optional<std::string> axis;
  std::optional<double> start;
  std::optional<double> stop;
  std::optional<double> step;
  std::optional<double> mag1;
  std::optional<double> mag2;
  std::optional<std::string> figure;
  std::string config;
  std::string out;
  std::string report;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--k", f.k, "Number of users");
  app->add_option("--p", f.p, "Per-user power (linear)");
  app->add_option("--p-db", f.p_db, "Per-user power in dB");
  app->add_option("--g", f.g, "Cross gain, e.g. 0.5 or 0.3+0.4i");
  app->add_option("--g2", f.g2, "Second cross gain (three-user semi-symmetric)");
  app->add_option("--alpha", f.alpha, "Sets |g|^2 = P^(alpha-1)");
  app->add_option("--field", f.field, "real or complex")->check(CLI::IsMember({"real", "complex"}));
  app->add_option("--bounds", f.bounds, "Comma list of bound names or all");
  app->add_option("--grid", f.grid, "Surface points per phase axis");
  app->add_option("--threads", f.threads, "Worker threads");
  app->add_option("--profile", f.profile, "Search profile: standard or light");
  app->add_option("--config", f.config, "JSON file with the same keys as the flags");
  app->add_option("--out", f.out, "Output CSV path (directory for reproduce)");
  app->add_option("--report", f.report, "Write the JSON summary here");
}

template <typename T>
void put(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

nlohmann::json build_config(const Flags& f) {
  nlohmann::json j = nlohmann::json::object();
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw std::runtime_error("cannot read config file " + f.config);
    j = nlohmann::json::parse(in);
    if (!j.is_object()) throw std::runtime_error("config file must hold a JSON object");
  }
  put(j, "k", f.k);
  put(j, "p", f.p);
  put(j, "p_db", f.p_db);
  put(j, "g", f.g);
  put(j, "g2", f.g2);
  put(j, "alpha", f.alpha);
  put(j, "field", f.field);
  put(j, "bounds", f.bounds);
  put(j, "grid", f.grid);
  put(j, "threads", f.threads);
  put(j, "profile", f.profile);
  put(j, "axis", f.axis);
  put(j, "start", f.start);
  put(j, "stop", f.stop);
  put(j, "step", f.step);
  put(j, "mag1", f.mag1);
  put(j, "mag2", f.mag2);
  put(j, "figure", f.figure);
  return j;
}

int status_exit(gic_status s) {
  if (s == GIC_ERR_CONFIG || s == GIC_ERR_DOMAIN || s == GIC_ERR_NULL_ARG) return kExitConfig;
  if (s == GIC_ERR_INFEASIBLE) return kExitInfeasible;
  return kExitInternal;
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  os << text;
  return static_cast<bool>(os);
}

int run(const std::string& verb, const Flags& f) {
  std::string cfg;
  try {
    cfg = build_config(f).dump();
  } catch (const std::exception& e) {
    std::cerr << "gicb: " << e.what() << "\n";
    return kExitConfig;
  }
  gic_table* t = nullptr;
  const gic_status s = gic_run(verb.c_str(), cfg.c_str(), &t);
  if (s != GIC_OK) {
    std::cerr << "gicb: " << gic_status_string(s) << ": " << gic_last_error() << "\n";
    return status_exit(s);
  }
  int code = kExitOk;
  const std::size_t parts = gic_table_parts(t);
  const bool to_dir = verb == "reproduce";
  if (to_dir) std::filesystem::create_directories(f.out.empty() ? "." : f.out);
  for (std::size_t i = 0; i < parts && code == kExitOk; ++i) {
    char* csv = nullptr;
    if (gic_table_csv(t, i, &csv) != GIC_OK) {
      std::cerr << "gicb: " << gic_last_error() << "\n";
      code = kExitInternal;
      break;
    }
    if (to_dir) {
      const std::filesystem::path dir = f.out.empty() ? "." : f.out;
      const auto path = dir / (std::string(gic_table_part_name(t, i)) + ".csv");
      if (!write_text(path.string(), csv)) code = kExitInternal;
      else std::cerr << "wrote " << path.string() << "\n";
    } else if (!f.out.empty()) {
      if (!write_text(f.out, csv)) code = kExitInternal;
    } else {
      std::fputs(csv, stdout);
    }
    gic_string_free(csv);
  }
  if (code == kExitOk) {
    const std::string report = gic_table_report_json(t);
    if (!f.report.empty()) {
      if (!write_text(f.report, report + "\n")) code = kExitInternal;
    } else if (verb == "surface" || verb == "largek") {
      std::cerr << report << "\n";
    }
  }
  if (code == kExitInternal) std::cerr << "gicb: could not write output\n";
  if (code == kExitOk && gic_table_all_infeasible(t)) {
    std::cerr << "gicb: every requested bound is infeasible\n";
    code = kExitInfeasible;
  }
  gic_table_free(t);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper and lower bounds on the sum capacity of Gaussian interference channels"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate bounds at one channel");
  add_common(eval, f);

  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate bounds along one axis");
  add_common(sweep, f);
  sweep->add_option("--axis", f.axis, "alpha, g2, phase, snr_db or K");
  sweep->add_option("--start", f.start, "First axis value");
  sweep->add_option("--stop", f.stop, "Last axis value (excluded for phase)");
  sweep->add_option("--step", f.step, "Axis step");

  CLI::App* surface = app.add_subcommand("surface", "Three-user semi-symmetric phase surface");
  add_common(surface, f);
  surface->add_option("--mag1", f.mag1, "|g1|^2");
  surface->add_option("--mag2", f.mag2, "|g2|^2");

  CLI::App* largek = app.add_subcommand("largek", "Closed-form bounds and power offset for large K");
  add_common(largek, f);

  CLI::App* repro = app.add_subcommand("reproduce", "Write the data behind a figure");
  add_common(repro, f);
  repro->add_option("figure", f.figure, "fig1, fig2, fig4, fig4a, fig5, fig6, fig8, fig11, fig12, fig13-like")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  for (CLI::App* sub : {eval, sweep, surface, largek, repro})
    if (sub->parsed()) return run(sub->get_name(), f);
  return kExitConfig;
}
