#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "desire/errors.hpp"
#include "desire/rational.hpp"

namespace desire {

/// Hard cap on universe size: sets are fixed-width bit-vectors and the
/// exhaustive checks are doubly exponential in the number of things.
inline constexpr int kMaxThings = 16;

enum class PayloadKind { opaque, preference_pair, rational_vector };

/// An ordered pair of option indices: "the first option is preferred
/// over the second".
struct PreferencePair {
  int preferred = 0;
  int over = 0;
  friend auto operator<=>(const PreferencePair&, const PreferencePair&) = default;
};

/// Canonical subset of a universe, encoded as a bit-vector over thing
/// indices. Equality is extensional by construction.
struct ThingSet {
  std::uint32_t bits = 0;

  constexpr ThingSet() = default;
  explicit constexpr ThingSet(std::uint32_t b) : bits(b) {}

  static constexpr ThingSet empty_set() { return ThingSet(0); }
  static constexpr ThingSet full(int n) {
    return ThingSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr ThingSet singleton(int t) { return ThingSet(1u << t); }

  constexpr bool contains(int t) const { return (bits >> t) & 1u; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool subset_of(ThingSet other) const {
    return (bits & ~other.bits) == 0;
  }
  constexpr bool intersects(ThingSet other) const {
    return (bits & other.bits) != 0;
  }

  constexpr ThingSet with(int t) const { return ThingSet(bits | (1u << t)); }
  constexpr ThingSet without(int t) const { return ThingSet(bits & ~(1u << t)); }

  friend constexpr ThingSet operator|(ThingSet a, ThingSet b) {
    return ThingSet(a.bits | b.bits);
  }
  friend constexpr ThingSet operator&(ThingSet a, ThingSet b) {
    return ThingSet(a.bits & b.bits);
  }
  /// Set difference.
  constexpr ThingSet minus(ThingSet other) const {
    return ThingSet(bits & ~other.bits);
  }

  std::vector<int> members() const;

  friend auto operator<=>(const ThingSet&, const ThingSet&) = default;
};

/// Canonical set of ThingSets over one universe: sorted, duplicate-free.
class Family {
 public:
  Family() = default;
  explicit Family(std::vector<ThingSet> sets);

  bool contains(ThingSet s) const;
  void insert(ThingSet s);
  void remove(ThingSet s);

  const std::vector<ThingSet>& sets() const { return sets_; }
  bool empty() const { return sets_.empty(); }
  std::size_t size() const { return sets_.size(); }

  /// Members of this family that lie in the given domain.
  Family restricted_to(const class QDomain& q) const;

  /// Inclusion-minimal members.
  std::vector<ThingSet> minimal_members() const;

  friend auto operator<=>(const Family&, const Family&) = default;

 private:
  std::vector<ThingSet> sets_;
};

/// The pair (A_not, A_des): things rationality forbids / mandates as
/// desirable. Overlap is permitted; consistency is a separate check.
struct Assessment {
  ThingSet forbidden;  // never desirable
  ThingSet required;   // always desirable
  friend auto operator<=>(const Assessment&, const Assessment&) = default;
};

/// The domain Q that relativized coherence axioms quantify over.
class QDomain {
 public:
  enum class Kind { full, card_bound, explicit_family };

  QDomain() : kind_(Kind::full) {}
  static QDomain full() { return QDomain(); }
  static QDomain card_bound(int c);
  static QDomain explicit_family(Family f);

  Kind kind() const { return kind_; }
  int bound() const { return bound_; }
  const Family& family() const { return family_; }

  bool contains(ThingSet a) const;
  /// True when Q coincides with the powerset of an n-thing universe.
  bool is_full(int n) const;
  /// All members of Q over an n-thing universe, canonical order.
  std::vector<ThingSet> members(int n) const;

 private:
  Kind kind_;
  int bound_ = 0;
  Family family_;
};

/// True iff every subset of every member of Q is again a member. Full and
/// cardinality-bounded domains are downward closed by construction.
bool is_subset_closed(const QDomain& q, int n);

/// The set of images of all choice maps that pick one thing from each
/// member of the family, deduplicated. Degenerate cases: the empty family
/// yields {empty set}; a family containing the empty set yields the empty
/// family.
Family selections(const Family& family);

/// Finite catalog of things: opaque ids, preference pairs over a declared
/// option set, or exact rational vectors (optionally a state-by-prize grid).
class Universe {
 public:
  static Universe opaque(std::vector<std::string> ids);
  static Universe preferences(std::vector<std::string> options,
                              std::vector<PreferencePair> pairs);
  static Universe vectors(std::vector<std::string> ids,
                          std::vector<std::string> states,
                          std::vector<std::vector<Rational>> coordinates);
  /// Row-major state-by-prize grids (one state = plain lotteries).
  static Universe grids(std::vector<std::string> ids,
                        std::vector<std::string> states,
                        std::vector<std::string> prizes,
                        std::vector<std::vector<Rational>> coordinates);

  int size() const { return static_cast<int>(ids_.size()); }
  PayloadKind payload_kind() const { return kind_; }
  ThingSet all() const { return ThingSet::full(size()); }

  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id_of(int t) const { return ids_[t]; }
  int index_of(const std::string& id) const;  // throws UnknownThing
  std::optional<int> find(const std::string& id) const;

  const std::vector<std::string>& options() const { return options_; }
  PreferencePair pair_of(int t) const;
  std::optional<int> find_pair(PreferencePair p) const;

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& prizes() const { return prizes_; }
  const std::vector<Rational>& vector_of(int t) const;

  std::string set_to_string(ThingSet s) const;
  std::string family_to_string(const Family& f) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  Universe() = default;
  void check_ids() const;

  std::vector<std::string> ids_;
  PayloadKind kind_ = PayloadKind::opaque;
  std::vector<std::string> options_;
  std::vector<PreferencePair> pairs_;
  std::vector<std::string> states_;
  std::vector<std::string> prizes_;
  std::vector<std::vector<Rational>> vectors_;
};

}  // namespace desire
