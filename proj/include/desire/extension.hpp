#pragma once

#include <string>

#include "desire/closure.hpp"
#include "desire/coherence.hpp"
#include "desire/things.hpp"
#include "desire/verdict.hpp"

namespace desire {

enum class ExtensionMode { full_rules, binary_rules };
enum class ExtensionStatus { Extended, Incoherent, Inconclusive };

const char* extension_status_name(ExtensionStatus s);

struct SdtExtension {
  ExtensionStatus status = ExtensionStatus::Extended;
  ThingSet result;
  ThingSet conflict;  // result intersected with the forbidden set, if any
  std::string note;
};

struct SdsExtension {
  ExtensionStatus status = ExtensionStatus::Extended;
  Family result;
  ThingSet conflict;  // the member whose pruning produced the empty set
  std::string note;
};

/// Smallest accepted set of desirable things containing base: the closure
/// of base together with the required things. Incoherent when that closure
/// meets a forbidden thing.
SdtExtension sdt_natural_extension(ThingSet base, const Assessment& assessment,
                                   const ClosureOperator& cl);

/// Least fixpoint of the production rules over families: singletons of
/// required things, pruning of forbidden things, closure-combination
/// images (all subfamilies under full_rules, pairs under binary_rules),
/// and upward closure. Incoherent when the empty set is produced.
/// Internally the family is kept as its antichain of minimal members;
/// upward closure makes that representation lossless, and combination
/// images from arbitrary members restrict to images from minimal ones.
SdsExtension sds_natural_extension(const Family& base,
                                   const Assessment& assessment,
                                   const ClosureOperator& cl,
                                   ExtensionMode mode = ExtensionMode::full_rules,
                                   const Budget& budget = {});

}  // namespace desire
