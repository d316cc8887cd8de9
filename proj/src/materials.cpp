#include "casimir/materials.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace casimir {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::optional<double> static_eps_of(const PermittivityModel& m) {
  try {
    EpsValue e = eval_epsilon(m, 0.0);
    if (e.infinite) return std::nullopt;
    return e.value;
  } catch (const std::range_error&) {
    // tabulated data without a low-frequency extension: static value unknown
    return std::nullopt;
  }
}

}  // namespace

MaterialRecord builtin_material(const std::string& name) {
  if (name == "alumina") {
    // two-oscillator representation of alpha-Al2O3, static eps 10.102
    PermittivityModel m = NinhamParsegian{7.03, 1e14, 2.072, 2e16};
    return {name, m, "alpha-Al2O3, infrared + ultraviolet oscillator fit", static_eps_of(m)};
  }
  if (name == "si-fallback") {
    // single UV oscillator with the silicon static permittivity 11.66; the
    // pole at 6.6e15 rad/s keeps eps flat to ~5% up to 1e15 rad/s.
    // Approximate stand-in, replaceable by user-supplied tabulated data.
    PermittivityModel m = NinhamParsegian{0.0, 1e14, 10.66, 6.6e15};
    return {name, m, "Si single-oscillator fallback (approximate)", static_eps_of(m)};
  }
  if (name == "au-drude") {
    // conventional Drude parameters for gold; not fitted to any particular
    // optical dataset, so treat results as shape-level
    PermittivityModel m = DrudeMetal{{1.37e16, 5.3e13}};
    return {name, m, "Au Drude model, omega_p = 1.37e16 rad/s, gamma = 5.3e13 rad/s",
            std::nullopt};
  }
  if (name == "ideal-metal") {
    return {name, IdealMetal{}, "perfectly reflecting boundary", std::nullopt};
  }
  if (name == "vacuum") {
    PermittivityModel m = ConstantEps{1.0};
    return {name, m, "unit permittivity", 1.0};
  }
  throw std::invalid_argument("unknown builtin material '" + name + "'");
}

std::vector<std::string> builtin_material_names() {
  return {"alumina", "si-fallback", "au-drude", "ideal-metal", "vacuum"};
}

std::string material_to_text(const MaterialRecord& rec) {
  std::ostringstream out;
  out << "name = " << rec.name << "\n";
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IdealMetal>) {
          out << "model = ideal-metal\n";
        } else if constexpr (std::is_same_v<T, ConstantEps>) {
          out << "model = constant\n";
          out << "eps0 = " << fmt_double(m.eps0) << "\n";
        } else if constexpr (std::is_same_v<T, DiluteEps>) {
          out << "model = dilute\n";
          out << "eta = " << fmt_double(m.eta) << "\n";
        } else if constexpr (std::is_same_v<T, NinhamParsegian>) {
          out << "model = ninham-parsegian\n";
          out << "c_ir = " << fmt_double(m.c_ir) << "\n";
          out << "omega_ir = " << fmt_double(m.omega_ir) << "\n";
          out << "c_uv = " << fmt_double(m.c_uv) << "\n";
          out << "omega_uv = " << fmt_double(m.omega_uv) << "\n";
        } else if constexpr (std::is_same_v<T, DrudeMetal>) {
          out << "model = drude\n";
          out << "omega_p = " << fmt_double(m.params.omega_p) << "\n";
          out << "gamma = " << fmt_double(m.params.gamma) << "\n";
        } else {
          out << "model = tabulated\n";
          out << "csv = " << rec.name << ".csv\n";
          if (m.extrapolation()) {
            out << "drude_omega_p = " << fmt_double(m.extrapolation()->omega_p) << "\n";
            out << "drude_gamma = " << fmt_double(m.extrapolation()->gamma) << "\n";
          }
        }
      },
      rec.model);
  if (!rec.source.empty()) out << "source = " << rec.source << "\n";
  return out.str();
}

MaterialRecord parse_material_text(const std::string& text, const std::filesystem::path& base_dir) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw load_error("material file: missing '=' in line '" + line + "'", 0);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto need = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw load_error("material file: missing key '" + k + "'", 0);
    return it->second;
  };
  auto num = [&](const std::string& k) { return std::stod(need(k)); };

  MaterialRecord rec;
  rec.name = need("name");
  rec.source = kv.count("source") ? kv["source"] : "";
  const std::string model = need("model");
  if (model == "ideal-metal") {
    rec.model = IdealMetal{};
  } else if (model == "constant") {
    rec.model = ConstantEps{num("eps0")};
  } else if (model == "dilute") {
    rec.model = DiluteEps{num("eta")};
  } else if (model == "ninham-parsegian") {
    rec.model = NinhamParsegian{num("c_ir"), num("omega_ir"), num("c_uv"), num("omega_uv")};
  } else if (model == "drude") {
    rec.model = DrudeMetal{{num("omega_p"), num("gamma")}};
  } else if (model == "tabulated") {
    auto data = load_optical_csv(base_dir / need("csv"));
    std::optional<DrudeParams> drude;
    if (kv.count("drude_omega_p"))
      drude = DrudeParams{num("drude_omega_p"), num("drude_gamma")};
    rec.model = Tabulated{std::move(data), drude};
  } else {
    throw load_error("material file: unknown model '" + model + "'", 0);
  }
  validate_model(rec.model);
  rec.static_eps = static_eps_of(rec.model);
  return rec;
}

MaterialStore::MaterialStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

bool MaterialStore::contains(const std::string& name) const {
  return std::filesystem::exists(dir_ / (name + ".material"));
}

void MaterialStore::register_material(const MaterialRecord& rec) {
  if (rec.name.empty() || rec.name.find('/') != std::string::npos)
    throw std::invalid_argument("material name must be a plain identifier");
  if (contains(rec.name))
    throw std::invalid_argument("material '" + rec.name + "' already registered");
  if (const auto* tab = std::get_if<Tabulated>(&rec.model))
    save_optical_csv(tab->data(), dir_ / (rec.name + ".csv"));
  std::ofstream out(dir_ / (rec.name + ".material"));
  if (!out) throw load_error("cannot write material store", 0);
  out << material_to_text(rec);
}

MaterialRecord MaterialStore::load(const std::string& name) const {
  std::ifstream in(dir_ / (name + ".material"));
  if (!in) throw std::invalid_argument("material '" + name + "' not found in store");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_material_text(buf.str(), dir_);
}

std::vector<std::string> MaterialStore::list() const {
  std::vector<std::string> names;
  for (const auto& ent : std::filesystem::directory_iterator(dir_))
    if (ent.path().extension() == ".material") names.push_back(ent.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

namespace {

std::vector<double> parse_numbers(const std::string& s) {
  std::vector<double> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(std::stod(cur));
  return out;
}

}  // namespace

MaterialRecord resolve_material(const std::string& spec, const MaterialStore* store) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const auto args = parse_numbers(spec.substr(colon + 1));
    MaterialRecord rec;
    rec.name = spec;
    rec.source = "inline";
    if (kind == "const" && args.size() == 1) {
      rec.model = ConstantEps{args[0]};
    } else if (kind == "dilute" && args.size() == 1) {
      rec.model = DiluteEps{args[0]};
    } else if (kind == "np" && args.size() == 4) {
      rec.model = NinhamParsegian{args[0], args[1], args[2], args[3]};
    } else if (kind == "drude" && args.size() == 2) {
      rec.model = DrudeMetal{{args[0], args[1]}};
    } else {
      throw std::invalid_argument("cannot parse inline material '" + spec + "'");
    }
    validate_model(rec.model);
    rec.static_eps = static_eps_of(rec.model);
    return rec;
  }
  for (const auto& b : builtin_material_names())
    if (spec == b) return builtin_material(spec);
  if (store && store->contains(spec)) return store->load(spec);
  throw std::invalid_argument("material '" + spec + "' is neither builtin, stored, nor inline");
}

}  // namespace casimir
