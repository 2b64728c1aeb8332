#pragma once

#include <vector>

#include "desire/closure.hpp"
#include "desire/things.hpp"
#include "desire/verdict.hpp"

namespace desire {

/// Which closure-combination axiom a set of desirable sets must satisfy:
/// full quantifies over every nonempty subfamily, finite over the finite
/// ones (identical on finite universes), two over pairs of members, one
/// over single members.
enum class Strength { full, finite, two, one };

struct Variant {
  Strength strength = Strength::full;
  QDomain q;
};

const char* strength_name(Strength s);

/// A set of desirable things is accepted when it avoids every forbidden
/// thing, contains every required thing, and is a fixed point of cl.
/// Axioms are reported as D1 (forbidden), D2 (required), D3 (fixed point).
Verdict check_sdt(ThingSet d, const Assessment& assessment,
                  const ClosureOperator& cl);

/// Checks the five axioms of a set of desirable sets, relativized to
/// variant.q, in the order K1, K4, K3, K2, then the K5 form selected by
/// variant.strength. Violations carry a replayable certificate.
Verdict check_sds(const Family& k, const Assessment& assessment,
                  const ClosureOperator& cl, const Variant& variant = {},
                  const Budget& budget = {});

enum class SdsAxiom { k1, k2, k3, k4, k5 };

/// Checks a single axiom in isolation. For k5, premises_minimal restricts
/// the quantified subfamilies to inclusion-minimal members of K in the
/// domain; that is only complete when K satisfies k2 in a subset-closed
/// domain, so callers that have not established k2 must pass false.
Verdict check_sds_axiom(SdsAxiom axiom, const Family& k,
                        const Assessment& assessment,
                        const ClosureOperator& cl, const Variant& variant = {},
                        const Budget& budget = {},
                        bool premises_minimal = false);

/// True iff cl(required) avoids every forbidden thing; equivalent to the
/// existence of at least one accepted model of either kind.
bool coherence_possible(const Assessment& assessment,
                        const ClosureOperator& cl);

/// All accepted sets of desirable things, by scan of every subset.
std::vector<ThingSet> enumerate_coherent_sdts(const Assessment& assessment,
                                              const ClosureOperator& cl,
                                              int cap = 4, int threads = 1);

/// All accepted sets of desirable sets, by scan of every family of
/// nonempty subsets. Doubly exponential; capped at 3 things for the
/// full/finite strengths and 4 for two/one.
std::vector<Family> enumerate_coherent_sds(const Assessment& assessment,
                                           const ClosureOperator& cl,
                                           const Variant& variant = {},
                                           const Budget& budget = {},
                                           int threads = 1);

/// Re-evaluates the axiom a certificate cites against the given model.
/// Returns true iff the violation reproduces.
bool replay_sdt(const Certificate& cert, ThingSet d,
                const Assessment& assessment, const ClosureOperator& cl);
bool replay_sds(const Certificate& cert, const Family& k,
                const Assessment& assessment, const ClosureOperator& cl,
                const Variant& variant);

namespace detail {

/// True iff image is exactly the set of values of some choice map that
/// picks, for each slot i, one thing from slot_allowed[i]. Decided by a
/// nonempty-intersection test plus a bipartite matching that pins every
/// image element to a distinct slot. assignment, when non-null, receives
/// one chosen thing per slot.
bool realizable_image(const std::vector<ThingSet>& slot_allowed,
                      ThingSet image, std::vector<int>* assignment);

/// Every set realizable as such an image, in canonical order.
std::vector<ThingSet> realizable_images(const std::vector<ThingSet>& slot_allowed);

/// Choice slots for the three axiom shapes: one slot per selection of the
/// subfamily (allowed cl(S)), per element pair of two members (allowed
/// cl({a,b}), pairs in ascending (a,b) order), per element of one member.
std::vector<ThingSet> k5_slots(const Family& subfamily,
                               const ClosureOperator& cl);
std::vector<ThingSet> k5bin_slots(ThingSet a, ThingSet b,
                                  const ClosureOperator& cl);
std::vector<ThingSet> k5un_slots(ThingSet a, const ClosureOperator& cl);

}  // namespace detail

}  // namespace desire
