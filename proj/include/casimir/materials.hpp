#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "casimir/permittivity.hpp"

namespace casimir {

struct MaterialRecord {
  std::string name;
  PermittivityModel model;
  std::string source;                // provenance text
  std::optional<double> static_eps;  // nullopt = infinite (metal-like at xi = 0)
};

/// Bundled materials: "alumina" (two-oscillator fit), "si-fallback"
/// (single-UV-oscillator stand-in for tabulated silicon data), "au-drude"
/// (plain Drude gold with conventional parameters), "ideal-metal", "vacuum".
MaterialRecord builtin_material(const std::string& name);
std::vector<std::string> builtin_material_names();

/// Directory of <name>.material key-value text files.  Single-writer store;
/// reads return immutable snapshots.
class MaterialStore {
 public:
  explicit MaterialStore(std::filesystem::path dir);

  /// Persists the record; throws std::invalid_argument on duplicate name.
  void register_material(const MaterialRecord& rec);
  MaterialRecord load(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::vector<std::string> list() const;

  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

MaterialRecord parse_material_text(const std::string& text, const std::filesystem::path& base_dir);
std::string material_to_text(const MaterialRecord& rec);

/// Resolves a CLI material argument: builtin name, store entry, or an inline
/// form const:EPS | dilute:ETA | np:CIR,WIR,CUV,WUV | drude:WP,GAMMA.
MaterialRecord resolve_material(const std::string& spec, const MaterialStore* store = nullptr);

}  // namespace casimir
