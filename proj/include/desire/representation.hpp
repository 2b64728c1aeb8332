#pragma once

#include <string>
#include <vector>

#include "desire/closure.hpp"
#include "desire/coherence.hpp"
#include "desire/things.hpp"
#include "desire/verdict.hpp"

namespace desire {

/// The family induced by a single accepted set d: every subset of the
/// universe that meets d.
Family k_from_d(int n, ThingSet d);

/// Intersection of the induced families over a nonempty collection.
/// Throws EmptyRepresenterSet on an empty collection.
Family k_from_ds(int n, const std::vector<ThingSet>& ds);

/// The constructive representer family: closures of each selection of the
/// input family joined with the required things, kept only when disjoint
/// from the forbidden things. Deduplicated, canonical order.
std::vector<ThingSet> d_family_from(const Family& family,
                                    const Assessment& assessment,
                                    const ClosureOperator& cl);

/// Every accepted set d whose induced family contains k, by exhaustive
/// scan of all accepted sets.
std::vector<ThingSet> largest_representing(const Family& k,
                                           const Assessment& assessment,
                                           const ClosureOperator& cl,
                                           int cap = kMaxThings);

struct Representation {
  std::vector<ThingSet> d_k;      // constructive representer
  std::vector<ThingSet> largest;  // every representer
  bool verified = false;
};

/// Requires k to pass the full coherence check (throws NotCoherent
/// otherwise), then builds both representers and cross-checks that each
/// one induces exactly k and that the constructive one sits inside the
/// largest one.
Representation represent(const Family& k, const Assessment& assessment,
                         const ClosureOperator& cl, const Budget& budget = {});

/// Upward closure of the members of k that lie in q: every set with a
/// q-member of k below it.
Family fin_of(const Family& k, int n, const QDomain& q = {});

/// k_from_ds restricted to the domain q.
Family k_fin_from_ds(int n, const std::vector<ThingSet>& ds, const QDomain& q);

/// True iff membership in k is always witnessed by a q-member below:
/// A is in k exactly when some subset of A in q is in k.
bool is_finitary(const Family& k, int n, const QDomain& q);

/// True iff the operator is generated by its restriction to the domain:
/// cl(A) equals the union of cl(B) over subsets B of A that lie in q.
bool is_q_finitary(const ClosureOperator& cl, const QDomain& q);

struct TotalOrderRepresentation {
  Verdict verdict;
  std::vector<ThingSet> orders;  // accepted sets that are connected relations
};

/// Strict-total-order representability over a universe holding every
/// ordered pair of options (throws WrongUniverse otherwise). The verdict
/// is Verified iff k is 2-coherent under the transitive operator with the
/// reflexive pairs forbidden, and k contains every two-sided pair set
/// {(o1,o2),(o2,o1)}. The returned orders are computed either way.
TotalOrderRepresentation represent_total_orders(const Family& k,
                                                const Universe& u,
                                                const Budget& budget = {});

/// A problem seed for the verification harness: a law-checked operator
/// with a list of assessment seeds over its universe.
struct Scenario {
  std::string name;
  ClosurePtr cl;
  std::vector<Assessment> assessments;
};

/// Deterministic catalog of operators over universes of at most
/// max_things things: identity, a unitary lift, two tables, a transitive
/// preference universe, and traced cone/convex-hull gamble universes.
std::vector<Scenario> builtin_scenarios(int max_things = 3);

struct ClaimConfig {
  ClosurePtr cl;          // the universe is taken from the operator
  Assessment assessment;  // seed assessment, where the claim uses one
  QDomain q;              // domain for relativized claims
  Budget budget;
  int threads = 1;
};

/// Exhaustively verifies one cataloged statement over every model on the
/// configured universe. Verified means the statement's quantified form
/// held everywhere; Violated carries a concrete counterexample, whose
/// existence would indicate an implementation fault. Throws UnknownClaim
/// for ids outside claim_catalog().
Verdict verify_claim(const std::string& claim_id, const ClaimConfig& config);

std::vector<std::string> claim_catalog();

}  // namespace desire
