#include "inventory.hpp"

#include <fstream>
#include <sstream>

#include "text.hpp"

namespace snacs {

const char* to_string(TargetClass k) {
  switch (k) {
    case TargetClass::Case: return "case";
    case TargetClass::Emphatic: return "emphatic";
    case TargetClass::Adposition: return "adposition";
  }
  return "?";
}

std::optional<TargetClass> target_class_from_string(std::string_view s) {
  if (s == "case") return TargetClass::Case;
  if (s == "emphatic") return TargetClass::Emphatic;
  if (s == "adposition") return TargetClass::Adposition;
  return std::nullopt;
}

static std::string strip_prefix(std::string_view label) {
  if (starts_with(label, "p.")) label.remove_prefix(2);
  return std::string(label);
}

std::string Construal::text() const {
  if (congruent()) return scene;
  return scene + "~>" + function;
}

Construal Construal::parse(std::string_view text) {
  size_t pos = text.find("~>");
  if (pos == std::string_view::npos) {
    std::string label = strip_prefix(trim(text));
    return Construal{label, label};
  }
  return Construal{strip_prefix(trim(text.substr(0, pos))),
                   strip_prefix(trim(text.substr(pos + 2)))};
}

LabelInventory LabelInventory::parse(std::istream& in) {
  LabelInventory inv;
  std::string line;
  int lineno = 0;
  bool format_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    if (starts_with(sv, "format:")) {
      std::string_view ver = trim(sv.substr(7));
      if (ver != "1")
        throw ParseError("unsupported inventory format version '" + std::string(ver) + "'", lineno);
      format_seen = true;
      continue;
    }
    size_t sp = sv.find(' ');
    if (sp == std::string_view::npos)
      throw ParseError("malformed inventory line: " + std::string(sv), lineno);
    std::string_view kind = sv.substr(0, sp);
    std::string_view rest = trim(sv.substr(sp + 1));
    if (kind == "supersense") {
      inv.supersenses.insert(std::string(rest));
    } else if (kind == "special") {
      inv.specials.insert(std::string(rest));
    } else if (kind == "target") {
      size_t sp2 = rest.find(' ');
      if (sp2 == std::string_view::npos)
        throw ParseError("target line needs a class and a lemma", lineno);
      auto klass = target_class_from_string(rest.substr(0, sp2));
      if (!klass)
        throw ParseError("unknown target class '" + std::string(rest.substr(0, sp2)) + "'", lineno);
      std::string lemma(trim(rest.substr(sp2 + 1)));
      if (lemma.empty()) throw ParseError("empty target lemma", lineno);
      inv.target_lexicon[lemma] = *klass;
    } else {
      throw ParseError("unknown inventory directive '" + std::string(kind) + "'", lineno);
    }
  }
  if (!format_seen) throw ParseError("inventory config missing 'format: 1' line");
  for (const auto& s : inv.specials)
    if (inv.supersenses.count(s))
      throw ParseError("label '" + s + "' listed as both supersense and special");
  return inv;
}

LabelInventory LabelInventory::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open inventory file: " + path);
  return parse(in);
}

const std::string& builtin_inventory_text() {
  static const std::string text = R"(format: 1
# SNACS supersense inventory (v2.5 hierarchy) plus Focus.
supersense Circumstance
supersense Temporal
supersense Time
supersense StartTime
supersense EndTime
supersense Frequency
supersense Duration
supersense Interval
supersense Locus
supersense Source
supersense Goal
supersense Path
supersense Direction
supersense Extent
supersense Means
supersense Manner
supersense Explanation
supersense Purpose
supersense Participant
supersense Causer
supersense Agent
supersense Co-Agent
supersense Theme
supersense Co-Theme
supersense Topic
supersense Stimulus
supersense Experiencer
supersense Originator
supersense Recipient
supersense Cost
supersense Beneficiary
supersense Instrument
supersense Configuration
supersense Identity
supersense Species
supersense Gestalt
supersense Possessor
supersense Whole
supersense Characteristic
supersense Possession
supersense PartPortion
supersense Stuff
supersense Accompanier
supersense InsteadOf
supersense ComparisonRef
supersense RateUnit
supersense Quantity
supersense Approximator
supersense SocialRel
supersense OrgRole
supersense Focus
special `d
special NONSNACS
# Hindi case markers (closed class).
target case ne
target case ko
target case se
target case kā
target case meṁ
target case par
target case tak
# Emphatic / focus particles.
target emphatic hī
target emphatic bhī
target emphatic to
# Postpositions and other adpositional targets (open class).
target adposition ke lie
target adposition ke pās
target adposition sā
target adposition kī tarah
target adposition jaise
target adposition jaisā
target adposition vālā
target adposition ke bāre meṁ
target adposition ke sāth
target adposition ke bād
target adposition se pahle
target adposition ke daurān
target adposition ke paścāt
target adposition ke kāraṇ
target adposition kī vajah se
target adposition ke dvārā
target adposition ke hāthoṁ
target adposition ke vāste
target adposition kī khātir
target adposition ke liye
target adposition ke mukābale
target adposition kī apekṣā
target adposition ke samān
target adposition kī tulnā meṁ
target adposition ke anurūp
target adposition bhar
target adposition ke barābar
target adposition kī had tak
target adposition ke andar
target adposition ke ūpar
target adposition ke nīce
target adposition ke sāmne
target adposition ke pīche
target adposition ke āge
target adposition ke bāhar
target adposition ke bīc
target adposition ke yahāṁ
target adposition ke qarīb
target adposition ke nazdīk
target adposition ke madhya
target adposition se dūr
target adposition ke bhītar
target adposition ke binā
target adposition ke bāvjūd
target adposition ke māre
target adposition ke bajāy
target adposition ke alāvā
target adposition ke atirikt
target adposition kī or
target adposition kī taraf
target adposition ke prati
target adposition ke anusār
target adposition ke zariye
target adposition ke sahāre
target adposition ke khilāf
target adposition ke viruddh
target adposition ke rūp meṁ
target adposition ke viṣay meṁ
target adposition ke pār
target adposition ke sāth-sāth
)";
  return text;
}

const LabelInventory& LabelInventory::builtin() {
  static const LabelInventory inv = [] {
    std::istringstream in(builtin_inventory_text());
    return parse(in);
  }();
  return inv;
}

}  // namespace snacs
