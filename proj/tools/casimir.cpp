// Command-line front end: single-point evaluations, parameter sweeps, the
// built-in validation suite, permittivity tables, and the material store.
//
// Exit codes: 0 success, 1 validation failure, 2 configuration error,
//             3 numerical degradation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/validation.hpp"

namespace {

using namespace casimir;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDegraded = 3;

double parse_length(const std::string& text) {
  size_t pos = 0;
  double v = std::stod(text, &pos);
  std::string suffix = text.substr(pos);
  if (suffix == "nm") return v * 1e-9;
  if (suffix == "um") return v * 1e-6;
  if (suffix == "mm") return v * 1e-3;
  if (suffix == "m" || suffix.empty()) return v;
  throw std::invalid_argument("unknown length unit '" + suffix + "'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// `key = value` per line, '#' comments; keys mirror the long CLI options.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

struct CommonOpts {
  std::string metal = "ideal-metal";
  std::string dielectric;
  std::string store_dir = "materials";
  double tail_tol = 1e-10;
  double quad_tol = 1e-10;
  int threads = 0;

  SolverSettings settings() const {
    SolverSettings s;
    s.quadrature.relative_tolerance = quad_tol;
    s.matsubara_tail_tol = tail_tol;
    s.threads = threads;
    return s;
  }
};

int cmd_point(const CommonOpts& common, const std::string& a_text, double T, bool as_json) {
  MaterialStore store(common.store_dir);
  const MaterialRecord metal = resolve_material(common.metal, &store);
  const MaterialRecord diel = resolve_material(common.dielectric, &store);
  const PlateConfig cfg{parse_length(a_text), T};
  const SolverSettings s = common.settings();

  const double F = free_energy(cfg, metal.model, diel.model, s);
  const double P = pressure(cfg, metal.model, diel.model, s);
  const double S = entropy(cfg, metal.model, diel.model, s);
  const double dF = relative_thermal_correction_F(cfg, metal.model, diel.model, s);
  const double dP = relative_thermal_correction_P(cfg, metal.model, diel.model, s);
  const double s_ev = S / electron_volt;

  if (as_json) {
    nlohmann::json j;
    j["separation_m"] = cfg.separation;
    j["temperature_K"] = cfg.temperature;
    j["T_eff_K"] = cfg.effective_temperature();
    j["tau"] = cfg.tau();
    j["free_energy_J_m2"] = F;
    j["pressure_Pa"] = P;
    j["entropy_J_m2_K"] = S;
    j["entropy_eV_m2_K"] = s_ev;
    j["delta_F"] = dF;
    j["delta_P"] = dP;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "separation     = " << fmt(cfg.separation) << " m\n"
              << "temperature    = " << fmt(cfg.temperature) << " K\n"
              << "T_eff          = " << fmt(cfg.effective_temperature()) << " K\n"
              << "tau            = " << fmt(cfg.tau()) << "\n"
              << "free energy    = " << fmt(F) << " J/m^2\n"
              << "pressure       = " << fmt(P) << " Pa\n"
              << "entropy        = " << fmt(S) << " J/(m^2 K)  (" << fmt(s_ev)
              << " eV/(m^2 K))\n"
              << "delta_T F      = " << fmt(dF) << "\n"
              << "delta_T P      = " << fmt(dP) << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const CommonOpts& common, const std::string& axis_name, const std::string& min_text,
              const std::string& max_text, int steps, const std::string& fixed_text,
              const std::string& output) {
  MaterialStore store(common.store_dir);
  const MaterialRecord metal = resolve_material(common.metal, &store);
  const MaterialRecord diel = resolve_material(common.dielectric, &store);

  SweepAxis axis;
  PlateConfig base{};
  double lo, hi;
  if (axis_name == "temperature") {
    axis = SweepAxis::temperature;
    lo = std::stod(min_text);
    hi = std::stod(max_text);
    base.separation = parse_length(fixed_text);
    base.temperature = 0.0;
  } else if (axis_name == "separation") {
    axis = SweepAxis::separation;
    lo = parse_length(min_text);
    hi = parse_length(max_text);
    base.separation = lo;
    base.temperature = std::stod(fixed_text);
  } else {
    throw std::invalid_argument("axis must be temperature or separation");
  }

  const auto rows = sweep(axis, lo, hi, steps, base, metal.model, diel.model, common.settings());

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output.empty() && output != "-") {
    file.open(output);
    if (!file) throw std::invalid_argument("cannot write '" + output + "'");
    out = &file;
  }
  *out << "axis_value,free_energy_J_m2,pressure_Pa,entropy_J_m2_K,delta_F,delta_P\n";
  bool degraded = false;
  for (const auto& r : rows) {
    if (r.degraded) {
      degraded = true;
      *out << fmt(r.axis_value) << ",nan,nan,nan,nan,nan\n";
      std::cerr << "warning: tolerance not met at axis value " << fmt(r.axis_value) << "\n";
      continue;
    }
    *out << fmt(r.axis_value) << ',' << fmt(r.free_energy) << ',' << fmt(r.pressure) << ','
         << fmt(r.entropy) << ',' << fmt(r.delta_F) << ',' << fmt(r.delta_P) << "\n";
  }
  return degraded ? kExitDegraded : kExitOk;
}

int cmd_validate(const std::string& suite, const SolverSettings& s) {
  std::vector<CheckResult> results;
  if (suite == "all")
    results = validate_all(s);
  else if (suite == "dilute")
    results = validate_dilute(s);
  else if (suite == "const-eps")
    results = validate_const_eps(s);
  else if (suite == "materials") {
    std::cout << "note: no user-supplied tabulated Au/Si data; running fallback-model subset\n";
    results = validate_materials(s);
  } else
    throw std::invalid_argument("suite must be one of: all, dilute, const-eps, materials");

  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-4s %-58s measured % .6g", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                r.description.c_str(), r.measured);
    if (r.lo < r.hi) std::printf("  window [%g, %g]", r.lo, r.hi);
    std::printf("\n");
    if (!r.passed) {
      ++failed;
      if (!r.note.empty()) std::printf("       note: %s\n", r.note.c_str());
    }
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? kExitOk : kExitValidation;
}

int cmd_perm_table(const CommonOpts& common, const std::string& material, double xi_min,
                   double xi_max, int steps, const std::string& output) {
  MaterialStore store(common.store_dir);
  const MaterialRecord rec = resolve_material(material, &store);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output.empty() && output != "-") {
    file.open(output);
    if (!file) throw std::invalid_argument("cannot write '" + output + "'");
    out = &file;
  }
  *out << "xi_rad_s,epsilon\n";
  for (int i = 0; i < steps; ++i) {
    const double xi = xi_min * std::pow(xi_max / xi_min, steps == 1 ? 0.0 : double(i) / (steps - 1));
    const EpsValue e = eval_epsilon(rec.model, xi);
    *out << fmt(xi) << ',' << (e.infinite ? "inf" : fmt(e.value)) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal Casimir interaction between a metal and a dielectric half-space"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string config_path;
  app.add_option("--config", config_path, "key = value config file (keys match long options)");
  app.add_option("--metal", common.metal, "metal-side material (default ideal-metal)");
  app.add_option("--dielectric", common.dielectric, "dielectric-side material");
  app.add_option("--store", common.store_dir, "material store directory");
  app.add_option("--tail-tol", common.tail_tol, "Matsubara tail tolerance");
  app.add_option("--quad-tol", common.quad_tol, "quadrature relative tolerance");
  app.add_option("--threads", common.threads, "worker threads (0 = auto)");

  auto* point = app.add_subcommand("point", "evaluate one (separation, temperature) point");
  std::string a_text = "1um";
  double T = 300.0;
  bool as_json = false;
  point->add_option("--separation,-a", a_text, "separation (nm/um/mm/m suffix)");
  point->add_option("--temperature,-T", T, "temperature in K");
  point->add_flag("--json", as_json, "machine-readable output");

  auto* sw = app.add_subcommand("sweep", "sweep temperature or separation, emit CSV");
  std::string axis = "temperature", min_text, max_text, fixed_text, output;
  int steps = 11;
  sw->add_option("--axis", axis, "temperature | separation")->required();
  sw->add_option("--min", min_text, "axis minimum (K, or length with suffix)")->required();
  sw->add_option("--max", max_text, "axis maximum")->required();
  sw->add_option("--steps", steps, "number of rows (>= 2)");
  sw->add_option("--fixed", fixed_text, "the other variable's value")->required();
  sw->add_option("--output,-o", output, "output CSV path (default stdout)");

  auto* val = app.add_subcommand("validate", "run the built-in validation suite");
  std::string suite = "all";
  val->add_option("suite", suite, "all | dilute | const-eps | materials");

  auto* pt = app.add_subcommand("perm-table", "tabulate eps(i xi) on a log grid, emit CSV");
  std::string pt_material;
  double xi_min = 1e13, xi_max = 1e18;
  int pt_steps = 61;
  pt->add_option("material", pt_material, "material name or inline form")->required();
  pt->add_option("--xi-min", xi_min, "lowest xi, rad/s");
  pt->add_option("--xi-max", xi_max, "highest xi, rad/s");
  pt->add_option("--steps", pt_steps, "grid size");
  pt->add_option("--output,-o", output, "output CSV path (default stdout)");

  auto* mat = app.add_subcommand("material", "material store operations");
  auto* mat_list = mat->add_subcommand("list", "list builtin and stored materials");
  auto* mat_reg = mat->add_subcommand("register", "register a material from a definition file");
  std::string def_path;
  mat_reg->add_option("definition", def_path, ".material definition file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      auto kv = read_config(config_path);
      auto take = [&](const char* k, auto& slot, auto conv) {
        if (kv.count(k)) slot = conv(kv[k]);
      };
      auto id = [](const std::string& v) { return v; };
      take("metal", common.metal, id);
      take("dielectric", common.dielectric, id);
      take("store", common.store_dir, id);
      take("tail-tol", common.tail_tol, [](const std::string& v) { return std::stod(v); });
      take("quad-tol", common.quad_tol, [](const std::string& v) { return std::stod(v); });
      take("threads", common.threads, [](const std::string& v) { return std::stoi(v); });
      take("axis", axis, id);
      take("min", min_text, id);
      take("max", max_text, id);
      take("fixed", fixed_text, id);
      take("steps", steps, [](const std::string& v) { return std::stoi(v); });
      take("output", output, id);
      take("separation", a_text, id);
      take("temperature", T, [](const std::string& v) { return std::stod(v); });
    }

    if (point->parsed()) return cmd_point(common, a_text, T, as_json);
    if (sw->parsed()) return cmd_sweep(common, axis, min_text, max_text, steps, fixed_text, output);
    if (val->parsed()) return cmd_validate(suite, common.settings());
    if (pt->parsed()) return cmd_perm_table(common, pt_material, xi_min, xi_max, pt_steps, output);
    if (mat->parsed()) {
      MaterialStore store(common.store_dir);
      if (mat_list->parsed()) {
        for (const auto& n : builtin_material_names()) std::cout << n << " (builtin)\n";
        for (const auto& n : store.list()) std::cout << n << " (store)\n";
        return kExitOk;
      }
      if (mat_reg->parsed()) {
        std::ifstream in(def_path);
        if (!in) throw std::invalid_argument("cannot open '" + def_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        const auto rec = parse_material_text(buf.str(), std::filesystem::path(def_path).parent_path());
        store.register_material(rec);
        std::cout << "registered '" << rec.name << "'\n";
        return kExitOk;
      }
      std::cerr << "material: expected list or register\n";
      return kExitConfig;
    }
    return kExitConfig;
  } catch (const tolerance_error& e) {
    std::cerr << "numerical degradation: " << e.what() << "\n";
    return kExitDegraded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
