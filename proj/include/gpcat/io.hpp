#pragma once

// Text formats.  Category and representation files use a small TOML subset:
// [section] headers, key = value lines, strings, integers, bare rational
// literals (3/4), booleans, (nested, multi-line) arrays and # comments.
// Documents are held as JSON trees.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gpcat/representation.hpp"

namespace gpcat {

using json = nlohmann::json;

/// Throws Error(parse) with "source:line:column: message".
json parse_document(std::string_view text, const std::string& source = "<input>");
/// Canonical text; parse_document(serialize_document(d)) == d.
std::string serialize_document(const json& doc);

std::string read_file(const std::string& path);

CategoryPtr category_from_document(const json& doc, std::optional<Field> field_override = {});
json category_to_document(const Category& c);
CategoryPtr load_category(const std::string& path, std::optional<Field> field_override = {});

struct LoadedRepresentation {
  Representation rep;
  /// A right module: rep is a module over opposite(category).
  bool right = false;
  std::string category_path;
  std::string base_path;
  /// Every file read, in order (the representation file first).
  std::vector<std::string> files;
};

/// Category paths inside the document are resolved relative to `directory`.
LoadedRepresentation representation_from_document(const json& doc, const std::string& directory,
                                                  std::optional<Field> field_override = {});
LoadedRepresentation load_representation(const std::string& path, std::optional<Field> field_override = {});
/// For right modules, category_path names C itself, not its opposite.
json representation_to_document(const Representation& rep, const std::string& category_path, const std::string& base_path,
                                bool right = false);

std::string sha256_hex(std::string_view data);

}  // namespace gpcat
