#include "homleib/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <mutex>

namespace homleib {

void Catalog::add_file(const std::string& filename, const std::string& contents) {
  std::string group = filename;
  if (auto dot = group.rfind('.'); dot != std::string::npos) group = group.substr(0, dot);
  std::vector<Identity> ids;
  try {
    ids = parse_identity_file(contents);
  } catch (const ParseError& e) {
    throw ParseError("catalog file '" + filename + "': " + e.what());
  }
  for (auto& id : ids) {
    const std::string name = id.name;
    if (entries_.count(name))
      throw ShapeError("duplicate catalog identity '" + name + "'");
    entries_.emplace(name, CatalogEntry{group, std::move(id)});
  }
}

Catalog Catalog::builtin() {
  Catalog c;
  for (const auto& [name, contents] : builtin_catalog_files()) c.add_file(name, contents);
  return c;
}

Catalog Catalog::from_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  Catalog c;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".ids") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ShapeError("catalog directory '" + dir + "' has no .ids files");
  for (const auto& f : files) c.add_file(f.filename().string(), read_file(f.string()));
  return c;
}

const Catalog& Catalog::active() {
  static std::once_flag flag;
  static Catalog instance;
  std::call_once(flag, [] {
    if (const char* dir = std::getenv("HOMLEIB_CATALOG"); dir && *dir) {
      instance = Catalog::from_directory(dir);
    } else {
      instance = Catalog::builtin();
    }
  });
  return instance;
}

const Identity* Catalog::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second.identity;
}

const Identity& Catalog::get(const std::string& name) const {
  const Identity* id = find(name);
  if (!id) throw ShapeError("unknown identity '" + name + "'");
  return *id;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [name, _] : entries_) out.push_back(name);
  return out;
}

std::vector<std::string> Catalog::names_in_group(const std::string& group) const {
  std::vector<std::string> out;
  for (const auto& [name, e] : entries_)
    if (e.group == group) out.push_back(name);
  return out;
}

namespace {

std::vector<std::string> numbered(const std::string& stem, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

std::vector<std::string> Catalog::variety_identity_names(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::HomLeibniz:
    case VarietyTag::Leibniz:
      return {"hom_leibniz"};
    case VarietyTag::HomLie:
      return {"skew_symmetry", "hom_jacobi"};
    case VarietyTag::HomLeibnizDendriform:
      return numbered("dendr_", 1, 3);
    case VarietyTag::BiHomLeibniz:
      return {"bihom_twist_commute", "bihom_leibniz"};
    case VarietyTag::BiHomLeibnizDendriform: {
      auto v = numbered("bihom_dendr_", 1, 3);
      v.insert(v.begin(), "bihom_twist_commute");
      return v;
    }
  }
  return {};
}

std::vector<std::string> Catalog::multiplicativity_identity_names(VarietyTag tag) {
  const bool bihom = variety_is_bihom(tag);
  std::vector<std::string> out;
  for (const auto& prod : variety_product_names(tag)) {
    out.push_back("multiplicativity_al_" + prod);
    if (bihom) out.push_back("multiplicativity_be_" + prod);
  }
  return out;
}

std::vector<std::string> Catalog::bimodule_identity_names(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::HomLeibniz:
    case VarietyTag::HomLie:
    case VarietyTag::Leibniz:
      return numbered("homleib_bimod_", 1, 5);
    case VarietyTag::HomLeibnizDendriform:
      return numbered("dendr_bimod_", 1, 13);
    case VarietyTag::BiHomLeibniz:
      return numbered("bihom_bimod_", 1, 7);
    case VarietyTag::BiHomLeibnizDendriform:
      return numbered("bihom_dendr_bimod_", 1, 17);
  }
  return {};
}

std::vector<std::string> Catalog::matched_identity_names(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::HomLeibniz:
    case VarietyTag::HomLie:
    case VarietyTag::Leibniz:
      return numbered("matched_pair_", 1, 6);
    case VarietyTag::HomLeibnizDendriform:
      return numbered("dendr_matched_", 1, 18);
    case VarietyTag::BiHomLeibniz:
      return numbered("bihom_matched_", 1, 6);
    case VarietyTag::BiHomLeibnizDendriform:
      return numbered("bihom_dendr_matched_", 1, 18);
  }
  return {};
}

}  // namespace homleib
