#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "chaoslab/finite_engine.hpp"
#include "chaoslab/fort.hpp"
#include "chaoslab/ideal.hpp"
#include "chaoslab/iterated.hpp"

namespace chaoslab {

/// One parsed instance file. Exactly one of the payload fields is set,
/// matching `kind`. `normalized` is the canonical re-serialization used for
/// echoes and round-trip checks.
struct InstanceDocument {
  enum class Kind {
    finite_action,
    iterated_system,
    fort_spec,
    translation_action,
  };

  Kind kind{Kind::finite_action};
  std::optional<FiniteAction> finite;
  std::optional<IteratedSystem> iterated;
  std::optional<FortGroupSpec> fort;
  std::optional<TranslationActionSpec> translation;
  std::vector<IdealSpec> ideals;
  nlohmann::ordered_json normalized;
};

std::string kind_name(InstanceDocument::Kind kind);

/// Parses and validates an instance file. Unknown fields are rejected;
/// validation errors carry the offending field path, parse errors the
/// line and column.
InstanceDocument parse_instance(const std::string& path);

/// Same, from in-memory text; `origin` names the source in messages.
InstanceDocument parse_instance_text(const std::string& text,
                                     const std::string& origin = "<input>");

/// Canonical serialization; parse ∘ serialize ∘ parse is the identity on
/// valid documents.
std::string serialize_instance(const InstanceDocument& doc);

}  // namespace chaoslab
