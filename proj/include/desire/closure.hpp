#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "desire/things.hpp"
#include "desire/verdict.hpp"

namespace desire {

enum class Flag { yes, no, unchecked };

/// Structural properties that unlock coherence-strength shortcuts.
struct PropertyFlags {
  Flag laws = Flag::unchecked;
  Flag unitary = Flag::unchecked;
  Flag finitary = Flag::unchecked;
  Flag incremental = Flag::unchecked;
  std::string note;
};

struct LawViolation {
  std::string law;  // extensive | monotone | idempotent | empty
  ThingSet a;
  ThingSet b;  // only for monotone
};

/// Total map from subsets of a finite universe to subsets, intended to
/// satisfy: extensive, monotone, idempotent, and cl(empty) = empty.
/// Construction never validates the laws; check_laws does, so invalid
/// table operators remain constructible for negative tests.
class ClosureOperator {
 public:
  enum class Kind {
    identity,
    unitary_lift,
    table,
    transitive,
    posi_trace,
    chull_trace
  };

  static std::shared_ptr<ClosureOperator> identity(Universe u);
  /// per_thing[t] is cl({t}); cl(A) is the union over A's members.
  static std::shared_ptr<ClosureOperator> unitary_lift(
      Universe u, std::vector<ThingSet> per_thing);
  /// images[mask] is cl of the subset with that bit pattern.
  static std::shared_ptr<ClosureOperator> table(Universe u,
                                                std::vector<ThingSet> images);
  static std::shared_ptr<ClosureOperator> transitive(Universe u);
  static std::shared_ptr<ClosureOperator> posi_trace(Universe u);
  static std::shared_ptr<ClosureOperator> chull_trace(Universe u);

  Kind kind() const { return kind_; }
  const Universe& universe() const { return universe_; }
  const PropertyFlags& flags() const { return flags_; }

  ThingSet apply(ThingSet a) const;

  /// Exhaustive check of the four closure laws over all subsets (all
  /// comparable pairs for monotonicity). Caches the result.
  Verdict check_laws(const Budget& budget = {});

  /// Decides unitary / finitary / incremental by exhaustive quantification.
  /// Requires check_laws to have passed.
  PropertyFlags probe_properties();

  std::optional<LawViolation> last_violation() const { return violation_; }

 private:
  ClosureOperator(Kind k, Universe u) : kind_(k), universe_(std::move(u)) {}
  void build_table();

  Kind kind_;
  Universe universe_;
  std::vector<ThingSet> per_thing_;
  std::vector<ThingSet> images_;  // dense table over all 2^n subsets
  PropertyFlags flags_;
  std::optional<LawViolation> violation_;
};

using ClosurePtr = std::shared_ptr<ClosureOperator>;

/// Smallest superset of a closed under pair chaining, intersected with the
/// universe (pairs the universe omits are chained through but dropped from
/// the result).
ThingSet trans_closure(const Universe& u, ThingSet a);

/// The four-case closure of a two-pair set, as a set of pairs. Pairs the
/// universe omits are dropped.
ThingSet trans_pair(const Universe& u, PreferencePair a, PreferencePair b);

}  // namespace desire
