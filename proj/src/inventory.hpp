#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace snacs {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line = 0)
      : std::runtime_error(std::move(message)), line(line) {}
  int line;
};

enum class TargetClass { Case, Emphatic, Adposition };

const char* to_string(TargetClass k);
std::optional<TargetClass> target_class_from_string(std::string_view s);

/// A scene-role/function label pair. Rendered as "Scene" when the two
/// members coincide and "Scene~>Function" otherwise.
struct Construal {
  std::string scene;
  std::string function;

  bool congruent() const { return scene == function; }
  std::string text() const;
  bool operator==(const Construal&) const = default;

  // Accepts "Label", "Scene~>Function", with optional "p." prefixes on
  // either member (stripped).
  static Construal parse(std::string_view text);
};

/// Label universe and target lexicon. Loaded from a versioned config file;
/// the shipped default covers the Hindi case markers, emphatic particles,
/// the common postpositions, and the supersense list.
struct LabelInventory {
  std::set<std::string> supersenses;
  std::set<std::string> specials;
  std::map<std::string, TargetClass> target_lexicon;

  bool has_label(const std::string& label) const {
    return supersenses.count(label) > 0 || specials.count(label) > 0;
  }
  std::optional<TargetClass> lookup(const std::string& lemma) const {
    auto it = target_lexicon.find(lemma);
    if (it == target_lexicon.end()) return std::nullopt;
    return it->second;
  }

  static LabelInventory parse(std::istream& in);
  static LabelInventory load_file(const std::string& path);
  static const LabelInventory& builtin();
};

/// Config text of the builtin inventory (same schema the loader reads).
const std::string& builtin_inventory_text();

}  // namespace snacs
