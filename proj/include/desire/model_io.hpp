#pragma once

#include <optional>
#include <string>
#include <vector>

#include "desire/closure.hpp"
#include "desire/coherence.hpp"
#include "desire/hull.hpp"
#include "desire/things.hpp"

namespace desire {

/// One self-contained problem instance: a universe, a closure operator
/// description, an assessment (explicit or preset), optional model inputs, and
/// options. Parses from UTF-8 JSON; serializes to a canonical form that
/// round-trips byte-identically.
struct ModelDocument {
  explicit ModelDocument(Universe u) : universe(std::move(u)) {}

  Universe universe;

  ClosureOperator::Kind closure_kind = ClosureOperator::Kind::identity;
  std::vector<ThingSet> per_thing;  // unitary body
  std::vector<ThingSet> table;      // table body, indexed by subset mask

  Assessment assessment;
  std::optional<AssessmentPreset> preset;
  std::vector<std::string> positive_prizes;  // lottery preset arguments
  std::vector<std::string> negative_prizes;

  std::optional<ThingSet> sdt;
  std::optional<Family> sds;
  std::optional<Family> base;

  Variant variant;
  Budget budget;
  int cap = 4;  // enumeration cap on universe size

  /// Builds the configured operator. Laws are not checked here.
  ClosurePtr make_closure() const;
};

/// Throws MalformedDocument on syntax or structural errors, UnknownThing
/// on unresolved ids, PayloadMismatch on payload kind or arity errors.
ModelDocument parse_model(const std::string& text);

/// Canonical JSON: fixed key set, keys in lexicographic order, sets sorted
/// by thing index, rationals in lowest terms, two-space indent, trailing
/// newline. parse then serialize is the identity on its own output.
std::string serialize_model(const ModelDocument& doc);

}  // namespace desire
