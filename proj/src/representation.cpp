#include "desire/representation.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "desire/errors.hpp"
#include "desire/hull.hpp"

namespace desire {

namespace {

void require_laws(const ClosureOperator& cl) {
  if (cl.flags().laws != Flag::yes) {
    throw LawsUnverified("run the law check on the closure operator first");
  }
}

}  // namespace

Family k_from_d(int n, ThingSet d) {
  std::vector<ThingSet> sets;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (ThingSet(mask).intersects(d)) sets.push_back(ThingSet(mask));
  }
  return Family(std::move(sets));
}

Family k_from_ds(int n, const std::vector<ThingSet>& ds) {
  if (ds.empty()) {
    throw EmptyRepresenterSet("an intersection over no representers is undefined");
  }
  std::vector<ThingSet> sets;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    ThingSet a(mask);
    if (std::all_of(ds.begin(), ds.end(),
                    [a](ThingSet d) { return a.intersects(d); })) {
      sets.push_back(a);
    }
  }
  return Family(std::move(sets));
}

std::vector<ThingSet> d_family_from(const Family& family,
                                    const Assessment& assessment,
                                    const ClosureOperator& cl) {
  require_laws(cl);
  std::vector<ThingSet> out;
  const Family chosen = selections(family);
  for (ThingSet s : chosen.sets()) {
    ThingSet d = cl.apply(s | assessment.required);
    if (!d.intersects(assessment.forbidden)) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ThingSet> largest_representing(const Family& k,
                                           const Assessment& assessment,
                                           const ClosureOperator& cl, int cap) {
  std::vector<ThingSet> out;
  for (ThingSet d : enumerate_coherent_sdts(assessment, cl, cap)) {
    const bool contains_k = std::all_of(
        k.sets().begin(), k.sets().end(),
        [d](ThingSet a) { return a.intersects(d); });
    if (contains_k) out.push_back(d);
  }
  return out;
}

Representation represent(const Family& k, const Assessment& assessment,
                         const ClosureOperator& cl, const Budget& budget) {
  Verdict coh = check_sds(k, assessment, cl, {Strength::full, QDomain::full()},
                          budget);
  if (!coh.ok()) {
    throw NotCoherent(coh.status == Status::Violated
                          ? "representation requires a coherent family"
                          : "coherence could not be established: " +
                                coh.budget_note);
  }
  const int n = cl.universe().size();
  Representation rep;
  rep.d_k = d_family_from(k, assessment, cl);
  rep.largest = largest_representing(k, assessment, cl, n);
  rep.verified = !rep.d_k.empty() && !rep.largest.empty() &&
                 k_from_ds(n, rep.d_k) == k && k_from_ds(n, rep.largest) == k &&
                 std::includes(rep.largest.begin(), rep.largest.end(),
                               rep.d_k.begin(), rep.d_k.end());
  return rep;
}

Family fin_of(const Family& k, int n, const QDomain& q) {
  const Family witnesses = k.restricted_to(q);
  std::vector<ThingSet> sets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ThingSet a(mask);
    const bool witnessed = std::any_of(
        witnesses.sets().begin(), witnesses.sets().end(),
        [a](ThingSet b) { return b.subset_of(a); });
    if (witnessed) sets.push_back(a);
  }
  return Family(std::move(sets));
}

Family k_fin_from_ds(int n, const std::vector<ThingSet>& ds, const QDomain& q) {
  return k_from_ds(n, ds).restricted_to(q);
}

bool is_finitary(const Family& k, int n, const QDomain& q) {
  return k == fin_of(k, n, q);
}

bool is_q_finitary(const ClosureOperator& cl, const QDomain& q) {
  const int n = cl.universe().size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ThingSet a(mask);
    ThingSet united;
    std::uint32_t sub = mask;
    while (true) {
      ThingSet b(sub);
      if (q.contains(b)) united = united | cl.apply(b);
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
    if (cl.apply(a) != united) return false;
  }
  return true;
}

TotalOrderRepresentation represent_total_orders(const Family& k,
                                                const Universe& u,
                                                const Budget& budget) {
  if (u.payload_kind() != PayloadKind::preference_pair) {
    throw WrongUniverse("total-order representation needs a pair universe");
  }
  const int m = static_cast<int>(u.options().size());
  if (u.size() != m * m) {
    throw WrongUniverse("the universe must hold every ordered pair");
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!u.find_pair({i, j})) {
        throw WrongUniverse("the universe must hold every ordered pair");
      }
    }
  }

  Assessment assessment;
  for (int i = 0; i < m; ++i) {
    assessment.forbidden = assessment.forbidden.with(*u.find_pair({i, i}));
  }
  ClosurePtr cl = ClosureOperator::transitive(u);
  TotalOrderRepresentation out;
  Verdict laws = cl->check_laws(budget);
  if (!laws.ok()) {
    out.verdict = laws;
    return out;
  }

  out.verdict =
      check_sds(k, assessment, *cl, {Strength::two, QDomain::full()}, budget);
  if (out.verdict.ok()) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        ThingSet both = ThingSet::singleton(*u.find_pair({i, j}))
                            .with(*u.find_pair({j, i}));
        if (!k.contains(both)) {
          Certificate cert;
          cert.axiom = "cover";
          cert.sets = {both};
          cert.note = "a two-sided pair set is missing, so some representer "
                      "need not relate " +
                      u.options()[i] + " and " + u.options()[j];
          out.verdict = Verdict::violated(cert);
          break;
        }
      }
      if (!out.verdict.ok()) break;
    }
  }

  for (ThingSet d : largest_representing(k, assessment, *cl, u.size())) {
    bool connected = true;
    for (int i = 0; i < m && connected; ++i) {
      for (int j = i + 1; j < m && connected; ++j) {
        connected = d.contains(*u.find_pair({i, j})) ||
                    d.contains(*u.find_pair({j, i}));
      }
    }
    if (connected) out.orders.push_back(d);
  }
  return out;
}

namespace {

Universe opaque_universe(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(std::string(1, char('a' + i)));
  return Universe::opaque(std::move(ids));
}

std::vector<Assessment> opaque_assessments(int n) {
  std::vector<Assessment> out;
  out.push_back({});
  out.push_back({ThingSet::singleton(0), ThingSet()});
  out.push_back({ThingSet(), ThingSet::singleton(n - 1)});
  out.push_back({ThingSet::singleton(0), ThingSet::singleton(n - 1)});
  return out;
}

ClosurePtr checked(ClosurePtr cl) {
  Verdict v = cl->check_laws();
  if (v.status != Status::Verified) {
    throw Error("a built-in operator failed its own law check");
  }
  return cl;
}

}  // namespace

std::vector<Scenario> builtin_scenarios(int max_things) {
  std::vector<Scenario> out;
  const auto add = [&out, max_things](std::string name, ClosurePtr cl,
                                      std::vector<Assessment> as) {
    if (cl->universe().size() > max_things) return;
    out.push_back({std::move(name), checked(std::move(cl)), std::move(as)});
  };

  for (int n : {2, 3}) {
    if (n > max_things) continue;
    const std::string suffix = std::to_string(n);
    add("iden" + suffix, ClosureOperator::identity(opaque_universe(n)),
        opaque_assessments(n));

    // Unitary lift: the last thing drags in its neighbour.
    std::vector<ThingSet> per_thing;
    for (int t = 0; t < n; ++t) per_thing.push_back(ThingSet::singleton(t));
    per_thing[n - 1] = per_thing[n - 1].with(n - 2);
    add("lift" + suffix,
        ClosureOperator::unitary_lift(opaque_universe(n), per_thing),
        opaque_assessments(n));

    // Sticky table: the first thing drags in the second; not expressible
    // as the identity but still unitary in effect.
    std::vector<ThingSet> sticky(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      ThingSet a(mask);
      sticky[mask] = a.contains(0) ? a.with(1) : a;
    }
    add("sticky" + suffix, ClosureOperator::table(opaque_universe(n), sticky),
        opaque_assessments(n));
  }

  // Fusion table: two specific things jointly produce a third. Genuinely
  // non-unitary: no single thing produces c.
  if (max_things >= 3) {
    std::vector<ThingSet> fuse(8);
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
      ThingSet a(mask);
      fuse[mask] = (a.contains(0) && a.contains(1)) ? a.with(2) : a;
    }
    add("fuse3", ClosureOperator::table(opaque_universe(3), fuse),
        opaque_assessments(3));
  }

  // Preference universes under the transitive operator.
  if (max_things >= 2) {
    add("trans2",
        ClosureOperator::transitive(
            Universe::preferences({"o1", "o2"}, {{0, 1}, {1, 0}})),
        opaque_assessments(2));
  }
  if (max_things >= 3) {
    add("trans3",
        ClosureOperator::transitive(
            Universe::preferences({"o1", "o2", "o3"}, {{0, 1}, {1, 2}, {0, 2}})),
        opaque_assessments(3));
  }
  if (max_things >= 4) {
    add("trans4",
        ClosureOperator::transitive(Universe::preferences(
            {"o1", "o2", "o3"}, {{0, 1}, {1, 2}, {0, 2}, {1, 0}})),
        opaque_assessments(4));
  }

  // Two-state gamble catalogs under the traced hull operators.
  if (max_things >= 3) {
    const auto r = [](long long v) { return Rational(v); };
    Universe cone = Universe::vectors(
        {"g1", "g2", "g3"}, {"s1", "s2"},
        {{r(1), r(-1)}, {r(-1), r(2)}, {r(0), r(1)}});
    std::vector<Assessment> cone_as = {
        {},
        preset_assessment(cone, AssessmentPreset::gambles_default, {}, {}),
    };
    add("cone3", ClosureOperator::posi_trace(cone), cone_as);

    Universe hull = Universe::vectors(
        {"g1", "g2", "g3"}, {"s1", "s2"},
        {{r(2), r(-1)}, {r(-1), r(2)}, {Rational(1, 2), Rational(1, 2)}});
    std::vector<Assessment> hull_as = {
        {},
        preset_assessment(hull, AssessmentPreset::gambles_default, {}, {}),
    };
    add("hull3", ClosureOperator::chull_trace(hull), hull_as);
  }

  return out;
}

namespace {

// Shared state for one claim run: tracks budget exhaustion seen inside the
// axiom checks so a scan never reports Verified on partial evidence.
struct ClaimContext {
  const ClaimConfig& cfg;
  ClosureOperator& cl;  // non-const: property probes cache their answers
  int n;
  bool inconclusive = false;
  std::string note;
  Certificate last_cert;

  bool holds(SdsAxiom axiom, const Family& k, Strength s, const QDomain& q,
             bool min_premises = false) {
    Verdict v = check_sds_axiom(axiom, k, cfg.assessment, cl, {s, q},
                                cfg.budget, min_premises);
    if (v.status == Status::Inconclusive) {
      inconclusive = true;
      note = v.budget_note;
    }
    if (v.status == Status::Violated && v.certificate) last_cert = *v.certificate;
    return v.status == Status::Verified;
  }

  bool coherent(const Family& k, Strength s, const QDomain& q) {
    Verdict v = check_sds(k, cfg.assessment, cl, {s, q}, cfg.budget);
    if (v.status == Status::Inconclusive) {
      inconclusive = true;
      note = v.budget_note;
    }
    if (v.status == Status::Violated && v.certificate) last_cert = *v.certificate;
    return v.status == Status::Verified;
  }
};

Verdict fail(const Family& k, std::string note) {
  Certificate cert;
  cert.axiom = "claim";
  cert.families = {k};
  cert.note = std::move(note);
  return Verdict::violated(cert);
}

Verdict finish(const ClaimContext& ctx) {
  if (ctx.inconclusive) return Verdict::inconclusive(ctx.note);
  return Verdict::verified();
}

// Every family over an n-thing universe, the empty set allowed as a
// member when with_empty is set. Candidates quantified as "any set of
// desirable sets" include such degenerate members.
std::vector<Family> all_families(int n, bool with_empty) {
  const int base = with_empty ? 0 : 1;
  const int nsubsets = (1 << n) - base;
  std::vector<Family> out;
  out.reserve(std::size_t{1} << nsubsets);
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << nsubsets); ++fam) {
    std::vector<ThingSet> members;
    for (int i = 0; i < nsubsets; ++i) {
      if ((fam >> i) & 1) members.push_back(ThingSet(std::uint32_t(i + base)));
    }
    out.push_back(Family(std::move(members)));
  }
  return out;
}

// All families whose members all lie in q.
std::vector<Family> families_within(int n, const QDomain& q) {
  std::vector<ThingSet> pool;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (q.contains(ThingSet(mask))) pool.push_back(ThingSet(mask));
  }
  std::vector<Family> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << pool.size()); ++fam) {
    std::vector<ThingSet> members;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((fam >> i) & 1) members.push_back(pool[i]);
    }
    out.push_back(Family(std::move(members)));
  }
  return out;
}

// Distinct induced families over every nonempty subset of the coherent
// accepted sets, optionally restricted to q. The representable families.
std::vector<Family> induced_families(int n, const std::vector<ThingSet>& dd,
                                     const QDomain* q) {
  std::vector<Family> out;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << dd.size()); ++sub) {
    std::vector<ThingSet> ds;
    for (std::size_t i = 0; i < dd.size(); ++i) {
      if ((sub >> i) & 1) ds.push_back(dd[i]);
    }
    Family k = q ? k_fin_from_ds(n, ds, *q) : k_from_ds(n, ds);
    out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void cap_universe(int n, int cap) {
  if (n > cap) {
    throw UniverseTooLarge("this statement is scanned exhaustively; the "
                           "universe cap is " +
                           std::to_string(cap) + " things");
  }
}

using ClaimFn = std::function<Verdict(ClaimContext&)>;

// Under the identity operator, upward closure alone already yields the
// full combination axiom.
Verdict claim_identity(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  ClosurePtr iden = ClosureOperator::identity(ctx.cl.universe());
  iden->check_laws();
  ClaimContext ictx{ctx.cfg, *iden, ctx.n, false, {}, {}};
  const QDomain full = QDomain::full();
  for (const Family& k : all_families(ctx.n, true)) {
    if (!ictx.holds(SdsAxiom::k2, k, Strength::full, full)) continue;
    if (!ictx.holds(SdsAxiom::k5, k, Strength::full, full, true)) {
      return fail(k, "upward-closed family fails the combination axiom "
                     "under the identity operator");
    }
  }
  ctx.inconclusive = ictx.inconclusive;
  ctx.note = ictx.note;
  return finish(ctx);
}

// The three consistency conditions agree: the closure of the required
// things avoids the forbidden ones, some accepted set exists, and some
// accepted family exists.
Verdict claim_consistency(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  const bool possible = coherence_possible(ctx.cfg.assessment, ctx.cl);
  const bool d_exists =
      !enumerate_coherent_sdts(ctx.cfg.assessment, ctx.cl, ctx.n).empty();
  const bool k_exists =
      !enumerate_coherent_sds(ctx.cfg.assessment, ctx.cl,
                              {Strength::full, QDomain::full()},
                              ctx.cfg.budget, ctx.cfg.threads)
           .empty();
  if (possible != d_exists || d_exists != k_exists) {
    return fail(Family(), "consistency test, accepted-set existence and "
                          "accepted-family existence disagree");
  }
  return Verdict::verified();
}

// A set is accepted exactly when its induced family is.
Verdict claim_bridge(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  for (std::uint32_t mask = 0; mask < (1u << ctx.n); ++mask) {
    ThingSet d(mask);
    const bool a = check_sdt(d, ctx.cfg.assessment, ctx.cl).status == Status::Verified;
    const bool b = ctx.coherent(k_from_d(ctx.n, d), Strength::full,
                                QDomain::full());
    if (a != b) {
      return fail(k_from_d(ctx.n, d),
                  "set verdict and induced-family verdict disagree");
    }
  }
  return finish(ctx);
}

// Pairwise and threewise intersections of accepted models stay accepted.
Verdict claim_intersection(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  const auto ds = enumerate_coherent_sdts(ctx.cfg.assessment, ctx.cl, ctx.n);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i; j < ds.size(); ++j) {
      for (std::size_t l = j; l < ds.size(); ++l) {
        ThingSet meet = ds[i] & ds[j] & ds[l];
        if (check_sdt(meet, ctx.cfg.assessment, ctx.cl).status != Status::Verified) {
          return fail(Family({ds[i], ds[j], ds[l]}),
                      "intersection of accepted sets is not accepted");
        }
      }
    }
  }
  const auto ks = enumerate_coherent_sds(ctx.cfg.assessment, ctx.cl,
                                         {Strength::full, QDomain::full()},
                                         ctx.cfg.budget, ctx.cfg.threads);
  const auto meet_of = [](const Family& a, const Family& b) {
    std::vector<ThingSet> members;
    for (ThingSet s : a.sets()) {
      if (b.contains(s)) members.push_back(s);
    }
    return Family(std::move(members));
  };
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::size_t j = i; j < ks.size(); ++j) {
      Family meet = meet_of(ks[i], ks[j]);
      if (!ctx.coherent(meet, Strength::full, QDomain::full())) {
        return fail(meet, "intersection of accepted families is not accepted");
      }
    }
  }
  return finish(ctx);
}

std::vector<ThingSet> combined_slots(const Family& subfamily,
                                     const Assessment& assessment,
                                     const ClosureOperator& cl) {
  std::vector<ThingSet> slots;
  const Family chosen = selections(subfamily);
  for (ThingSet s : chosen.sets()) {
    slots.push_back(cl.apply(s | assessment.required));
  }
  return slots;
}

std::vector<Family> coherent_families(ClaimContext& ctx) {
  return enumerate_coherent_sds(ctx.cfg.assessment, ctx.cl,
                                {Strength::full, QDomain::full()},
                                ctx.cfg.budget, ctx.cfg.threads);
}

// Choosing from closures over selections joined with the required things
// lands inside any accepted family, even for the empty subfamily. The
// subfamily scan runs over minimal members, which is complete because
// accepted families are upward closed.
Verdict claim_combined_rule(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  for (const Family& k : coherent_families(ctx)) {
    const std::vector<ThingSet> mins = k.minimal_members();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << mins.size());
         ++sub) {
      std::vector<ThingSet> members;
      for (std::size_t i = 0; i < mins.size(); ++i) {
        if ((sub >> i) & 1) members.push_back(mins[i]);
      }
      Family subfamily(std::move(members));
      auto slots = combined_slots(subfamily, ctx.cfg.assessment, ctx.cl);
      for (ThingSet image : detail::realizable_images(slots)) {
        if (!k.contains(image)) {
          return fail(k, "a combined-rule image escapes the family");
        }
      }
    }
  }
  return finish(ctx);
}

// The constructive representer built from any subfamily is a nonempty
// collection of accepted sets whose induced family sandwiches the
// subfamily inside the original.
Verdict claim_sandwich(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  for (const Family& k : coherent_families(ctx)) {
    const auto& members = k.sets();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << members.size());
         ++sub) {
      std::vector<ThingSet> picked;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if ((sub >> i) & 1) picked.push_back(members[i]);
      }
      Family subfamily(std::move(picked));
      auto ds = d_family_from(subfamily, ctx.cfg.assessment, ctx.cl);
      if (ds.empty()) return fail(k, "the constructive representer is empty");
      for (ThingSet d : ds) {
        if (check_sdt(d, ctx.cfg.assessment, ctx.cl).status != Status::Verified) {
          return fail(k, "a constructive representer member is not accepted");
        }
      }
      Family induced = k_from_ds(ctx.n, ds);
      for (ThingSet a : subfamily.sets()) {
        if (!induced.contains(a)) {
          return fail(k, "the induced family misses a subfamily member");
        }
      }
      for (ThingSet a : induced.sets()) {
        if (!k.contains(a)) {
          return fail(k, "the induced family escapes the original");
        }
      }
    }
  }
  return finish(ctx);
}

// Coherence is equivalent to being an intersection of induced families,
// the constructive representer realizes it, and the filter of all
// representers is the largest realization.
Verdict claim_representation(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  const auto dd = enumerate_coherent_sdts(ctx.cfg.assessment, ctx.cl, ctx.n);
  std::vector<Family> representable =
      dd.empty() ? std::vector<Family>{}
                 : induced_families(ctx.n, dd, nullptr);
  for (const Family& k : all_families(ctx.n, true)) {
    const bool coh = ctx.coherent(k, Strength::full, QDomain::full());
    const bool rep = std::binary_search(representable.begin(),
                                        representable.end(), k);
    if (coh != rep) {
      return fail(k, coh ? "coherent family admits no representer set"
                         : "representable family fails coherence");
    }
    if (!coh) continue;
    Representation r = represent(k, ctx.cfg.assessment, ctx.cl,
                                 ctx.cfg.budget);
    if (!r.verified) return fail(k, "representation round-trip failed");
    // Maximality: every exact representer collection sits inside the
    // filter of representers.
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << dd.size()); ++sub) {
      std::vector<ThingSet> ds;
      for (std::size_t i = 0; i < dd.size(); ++i) {
        if ((sub >> i) & 1) ds.push_back(dd[i]);
      }
      if (k_from_ds(ctx.n, ds) != k) continue;
      const bool inside = std::includes(r.largest.begin(), r.largest.end(),
                                        ds.begin(), ds.end());
      if (!inside) return fail(k, "an exact representer escapes the filter");
    }
  }
  return finish(ctx);
}

// In a subset-closed domain, the finite combination axiom plus upward
// closure yields the binary one.
Verdict claim_finite_implies_two(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  const QDomain& q = ctx.cfg.q;
  if (!is_subset_closed(q, ctx.n)) return Verdict::verified();
  for (const Family& k : all_families(ctx.n, true)) {
    if (!ctx.holds(SdsAxiom::k2, k, Strength::full, q)) continue;
    if (!ctx.holds(SdsAxiom::k5, k, Strength::finite, q, true)) continue;
    if (!ctx.holds(SdsAxiom::k5, k, Strength::two, q, true)) {
      return fail(k, "finite combination holds but binary combination fails");
    }
  }
  return finish(ctx);
}

// For a unitary operator over a subset-closed domain, the single-member
// combination axiom plus upward closure yields all stronger forms.
Verdict claim_unitary_collapse(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  const QDomain& q = ctx.cfg.q;
  if (!is_subset_closed(q, ctx.n)) return Verdict::verified();
  if (ctx.cl.probe_properties().unitary != Flag::yes) {
    return Verdict::verified();
  }
  for (const Family& k : all_families(ctx.n, true)) {
    if (!ctx.holds(SdsAxiom::k2, k, Strength::full, q)) continue;
    if (!ctx.holds(SdsAxiom::k5, k, Strength::one, q, true)) continue;
    for (Strength s : {Strength::two, Strength::finite, Strength::full}) {
      if (!ctx.holds(SdsAxiom::k5, k, s, q, true)) {
        return fail(k, std::string("single-member combination holds but the ") +
                           strength_name(s) + " form fails");
      }
    }
  }
  return finish(ctx);
}

// For an operator generated by the domain, finite coherence in the domain
// equals coherence in the domain.
Verdict claim_finitary_collapse(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  const QDomain& q = ctx.cfg.q;
  if (!is_q_finitary(ctx.cl, q)) return Verdict::verified();
  for (const Family& k : all_families(ctx.n, true)) {
    if (ctx.coherent(k, Strength::finite, q) !=
        ctx.coherent(k, Strength::full, q)) {
      return fail(k, "finite coherence and coherence in the domain disagree");
    }
  }
  return finish(ctx);
}

// For an incremental operator, the binary combination axiom plus upward
// closure yields the finite one.
Verdict claim_incremental(ClaimContext& ctx) {
  cap_universe(ctx.n, 4);
  const QDomain& q = ctx.cfg.q;
  if (ctx.cl.probe_properties().incremental != Flag::yes) {
    return Verdict::verified();
  }
  for (const Family& k : all_families(ctx.n, true)) {
    if (!ctx.holds(SdsAxiom::k2, k, Strength::full, q)) continue;
    if (!ctx.holds(SdsAxiom::k5, k, Strength::two, q, true)) continue;
    if (!ctx.holds(SdsAxiom::k5, k, Strength::finite, q, true)) {
      return fail(k, "binary combination holds but finite combination fails");
    }
  }
  return finish(ctx);
}

// Generated-by-domain plus incremental collapses coherence, finite
// coherence and 2-coherence in the domain.
Verdict claim_full_collapse(ClaimContext& ctx) {
  cap_universe(ctx.n, 4);
  const QDomain& q = ctx.cfg.q;
  if (!is_q_finitary(ctx.cl, q)) return Verdict::verified();
  if (ctx.cl.probe_properties().incremental != Flag::yes) {
    return Verdict::verified();
  }
  for (const Family& k : all_families(ctx.n, true)) {
    const bool two = ctx.coherent(k, Strength::two, q);
    if (ctx.coherent(k, Strength::finite, q) != two ||
        ctx.coherent(k, Strength::full, q) != two) {
      return fail(k, "the three coherence strengths disagree in the domain");
    }
  }
  return finish(ctx);
}

// The witnessed projection is always witnessed.
Verdict claim_fin_projection(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  for (const Family& k : all_families(ctx.n, true)) {
    Family fin = fin_of(k, ctx.n, ctx.cfg.q);
    if (!is_finitary(fin, ctx.n, ctx.cfg.q)) {
      return fail(k, "the projection is not witnessed by domain members");
    }
  }
  return Verdict::verified();
}

// A family is witnessed exactly when it equals its projection.
Verdict claim_fin_fixpoint(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  for (const Family& k : all_families(ctx.n, true)) {
    if (is_finitary(k, ctx.n, ctx.cfg.q) !=
        (k == fin_of(k, ctx.n, ctx.cfg.q))) {
      return fail(k, "witnessedness and the projection fixpoint disagree");
    }
  }
  return Verdict::verified();
}

// Axiom transfer from a family to its projection, item by item.
Verdict claim_fin_transfer(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  const QDomain& q = ctx.cfg.q;
  const QDomain full = QDomain::full();
  const bool cl_fin = is_q_finitary(ctx.cl, q);
  for (const Family& k : all_families(ctx.n, true)) {
    const Family fin = fin_of(k, ctx.n, q);
    if (ctx.holds(SdsAxiom::k1, k, Strength::full, q) &&
        !ctx.holds(SdsAxiom::k1, fin, Strength::full, full)) {
      return fail(k, "item i: nonemptiness fails to transfer");
    }
    if (!ctx.holds(SdsAxiom::k2, fin, Strength::full, full)) {
      return fail(k, "item ii: the projection is not upward closed");
    }
    if (ctx.holds(SdsAxiom::k2, k, Strength::full, q) &&
        fin.restricted_to(q) != k.restricted_to(q)) {
      return fail(k, "item iii: the projection changes the domain part");
    }
    if (ctx.holds(SdsAxiom::k3, k, Strength::full, q) &&
        !ctx.holds(SdsAxiom::k3, fin, Strength::full, full)) {
      return fail(k, "item iv: forbidden pruning fails to transfer");
    }
    if (ctx.holds(SdsAxiom::k4, k, Strength::full, q) &&
        !ctx.holds(SdsAxiom::k4, fin, Strength::full, full)) {
      return fail(k, "item v: required singletons fail to transfer");
    }
    if (ctx.holds(SdsAxiom::k5, k, Strength::one, q) &&
        !ctx.holds(SdsAxiom::k5, fin, Strength::one, full)) {
      return fail(k, "item vi: single-member combination fails to transfer");
    }
    if (ctx.holds(SdsAxiom::k5, k, Strength::two, q) &&
        !ctx.holds(SdsAxiom::k5, fin, Strength::two, full)) {
      return fail(k, "item vii: binary combination fails to transfer");
    }
    if (ctx.holds(SdsAxiom::k5, k, Strength::finite, q) &&
        !ctx.holds(SdsAxiom::k5, fin, Strength::finite, full)) {
      return fail(k, "item viii: finite combination fails to transfer");
    }
    if (cl_fin && ctx.holds(SdsAxiom::k5, k, Strength::finite, q) &&
        !ctx.holds(SdsAxiom::k5, fin, Strength::full, full)) {
      return fail(k, "item ix: full combination fails to transfer");
    }
  }
  return finish(ctx);
}

// For witnessed families, coherence relativized to the domain agrees with
// unrelativized coherence, strength by strength.
Verdict claim_back_and_forth(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  const QDomain& q = ctx.cfg.q;
  const QDomain full = QDomain::full();
  const bool cl_fin = is_q_finitary(ctx.cl, q);
  for (const Family& k : all_families(ctx.n, true)) {
    if (!is_finitary(k, ctx.n, q)) continue;
    for (Strength s : {Strength::finite, Strength::two, Strength::one}) {
      if (ctx.coherent(k, s, full) != ctx.coherent(k, s, q)) {
        return fail(k, std::string("the ") + strength_name(s) +
                           " strength differs between domains");
      }
    }
    if (cl_fin && ctx.coherent(k, Strength::full, full) !=
                      ctx.coherent(k, Strength::full, q)) {
      return fail(k, "full coherence differs between domains");
    }
  }
  return finish(ctx);
}

// For witnessed families the coherence strengths collapse, under the
// matching operator hypotheses.
Verdict claim_finitary_family_collapse(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  const QDomain& q = ctx.cfg.q;
  const QDomain full = QDomain::full();
  const bool cl_fin = is_q_finitary(ctx.cl, q);
  const bool cl_inc = ctx.cl.probe_properties().incremental == Flag::yes;
  for (const Family& k : all_families(ctx.n, true)) {
    if (!is_finitary(k, ctx.n, q)) continue;
    const bool fin_coh = ctx.coherent(k, Strength::finite, full);
    if (cl_fin && ctx.coherent(k, Strength::full, full) != fin_coh) {
      return fail(k, "coherence and finite coherence disagree");
    }
    if (cl_inc && ctx.coherent(k, Strength::two, full) != fin_coh) {
      return fail(k, "finite coherence and 2-coherence disagree");
    }
  }
  return finish(ctx);
}

// For a unitary operator, 1-coherence is exactly representability.
Verdict claim_unitary_representation(ClaimContext& ctx) {
  cap_universe(ctx.n, 3);
  if (ctx.cl.probe_properties().unitary != Flag::yes) {
    return Verdict::verified();
  }
  const auto dd = enumerate_coherent_sdts(ctx.cfg.assessment, ctx.cl, ctx.n);
  std::vector<Family> representable =
      dd.empty() ? std::vector<Family>{}
                 : induced_families(ctx.n, dd, nullptr);
  for (const Family& k : all_families(ctx.n, true)) {
    const bool one = ctx.coherent(k, Strength::one, QDomain::full());
    const bool rep = std::binary_search(representable.begin(),
                                        representable.end(), k);
    if (one != rep) {
      return fail(k, one ? "1-coherent family admits no representer set"
                         : "representable family fails 1-coherence");
    }
  }
  return finish(ctx);
}

// Domain-restricted representation: for families inside the domain, the
// named coherence strength in the domain is exactly representability by
// restricted induced families.
Verdict claim_restricted_representation(ClaimContext& ctx, Strength s) {
  cap_universe(ctx.n, 3);
  const QDomain& q = ctx.cfg.q;
  if (!is_q_finitary(ctx.cl, q)) return Verdict::verified();
  if (s == Strength::two &&
      ctx.cl.probe_properties().incremental != Flag::yes) {
    return Verdict::verified();
  }
  if (s == Strength::one && ctx.cl.probe_properties().unitary != Flag::yes) {
    return Verdict::verified();
  }
  const auto dd = enumerate_coherent_sdts(ctx.cfg.assessment, ctx.cl, ctx.n);
  std::vector<Family> representable =
      dd.empty() ? std::vector<Family>{} : induced_families(ctx.n, dd, &q);
  for (const Family& k : families_within(ctx.n, q)) {
    const bool coh = ctx.coherent(k, s, q);
    const bool rep = std::binary_search(representable.begin(),
                                        representable.end(), k);
    if (coh != rep) {
      return fail(k, coh ? "domain-coherent family admits no representer"
                         : "restricted representation fails coherence");
    }
  }
  return finish(ctx);
}

const std::map<std::string, ClaimFn>& claim_table() {
  static const std::map<std::string, ClaimFn> table = {
      {"identity-up-closure-suffices", claim_identity},
      {"consistency-triple", claim_consistency},
      {"set-family-bridge", claim_bridge},
      {"intersection-coherence", claim_intersection},
      {"combined-rule-stays-inside", claim_combined_rule},
      {"constructive-representer-sandwich", claim_sandwich},
      {"representation", claim_representation},
      {"finite-implies-binary", claim_finite_implies_two},
      {"unitary-collapse", claim_unitary_collapse},
      {"finitary-operator-collapse", claim_finitary_collapse},
      {"incremental-binary-suffices", claim_incremental},
      {"finitary-incremental-collapse", claim_full_collapse},
      {"projection-is-witnessed", claim_fin_projection},
      {"witnessed-iff-projection-fixpoint", claim_fin_fixpoint},
      {"projection-axiom-transfer", claim_fin_transfer},
      {"witnessed-family-back-and-forth", claim_back_and_forth},
      {"witnessed-family-collapse", claim_finitary_family_collapse},
      {"unitary-representation", claim_unitary_representation},
      {"restricted-representation-finite",
       [](ClaimContext& c) {
         return claim_restricted_representation(c, Strength::finite);
       }},
      {"restricted-representation-binary",
       [](ClaimContext& c) {
         return claim_restricted_representation(c, Strength::two);
       }},
      {"restricted-representation-unary",
       [](ClaimContext& c) {
         return claim_restricted_representation(c, Strength::one);
       }},
  };
  return table;
}

}  // namespace

Verdict verify_claim(const std::string& claim_id, const ClaimConfig& config) {
  const auto& table = claim_table();
  auto it = table.find(claim_id);
  if (it == table.end()) {
    throw UnknownClaim("no such claim: " + claim_id);
  }
  if (!config.cl) throw Error("claim configuration needs an operator");
  require_laws(*config.cl);
  ClaimContext ctx{config, *config.cl, config.cl->universe().size(), false,
                   {}, {}};
  return it->second(ctx);
}

std::vector<std::string> claim_catalog() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : claim_table()) out.push_back(name);
  return out;
}

}  // namespace desire
