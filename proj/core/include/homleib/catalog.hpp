#ifndef HOMLEIB_CATALOG_HPP
#define HOMLEIB_CATALOG_HPP

#include "homleib/identity.hpp"
#include "homleib/model.hpp"

#include <map>
#include <utility>

namespace homleib {

/// The embedded catalog sources, one (filename, contents) pair per group.
/// Generated at build time from core/catalog/*.ids.
const std::vector<std::pair<std::string, std::string>>& builtin_catalog_files();

struct CatalogEntry {
  std::string group;  // source file stem
  Identity identity;
};

/// The named identity catalog. The built-in catalog is compiled in; the
/// HOMLEIB_CATALOG environment variable may point at a directory of .ids
/// files that replaces it.
class Catalog {
 public:
  static const Catalog& active();
  static Catalog builtin();
  static Catalog from_directory(const std::string& dir);

  const Identity& get(const std::string& name) const;
  const Identity* find(const std::string& name) const;
  std::vector<std::string> names() const;
  std::vector<std::string> names_in_group(const std::string& group) const;
  std::size_t size() const { return entries_.size(); }

  /// Variety axiom set for check_variety (without multiplicativity).
  static std::vector<std::string> variety_identity_names(VarietyTag tag);
  /// Multiplicativity identities for the tag's products and twists.
  static std::vector<std::string> multiplicativity_identity_names(VarietyTag tag);
  /// Bimodule condition set for check_bimodule.
  static std::vector<std::string> bimodule_identity_names(VarietyTag tag);
  /// Matched-pair coupling condition set.
  static std::vector<std::string> matched_identity_names(VarietyTag tag);

 private:
  std::map<std::string, CatalogEntry> entries_;
  void add_file(const std::string& filename, const std::string& contents);
};

}  // namespace homleib

#endif
