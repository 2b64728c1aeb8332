#include "desire/coherence.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "desire/errors.hpp"

namespace desire {

namespace {

void require_laws(const ClosureOperator& cl) {
  if (cl.flags().laws != Flag::yes) {
    throw LawsUnverified("run the law check on the closure operator first");
  }
}

}  // namespace

const char* strength_name(Strength s) {
  switch (s) {
    case Strength::full:
      return "full";
    case Strength::finite:
      return "finite";
    case Strength::two:
      return "two";
    case Strength::one:
      return "one";
  }
  return "?";
}

namespace detail {

bool realizable_image(const std::vector<ThingSet>& slot_allowed,
                      ThingSet image, std::vector<int>* assignment) {
  if (slot_allowed.empty()) return image.empty();
  if (image.empty()) return false;
  for (ThingSet allowed : slot_allowed) {
    if (!allowed.intersects(image)) return false;
  }
  // Pin every image element to its own slot (Kuhn augmenting paths);
  // leftover slots may then repeat any compatible image element.
  const int m = static_cast<int>(slot_allowed.size());
  const std::vector<int> elems = image.members();
  std::vector<int> owner(m, -1);  // slot -> index into elems
  std::vector<char> visited(m, 0);
  std::function<bool(int)> augment = [&](int e) -> bool {
    for (int s = 0; s < m; ++s) {
      if (visited[s] || !slot_allowed[s].contains(elems[e])) continue;
      visited[s] = 1;
      if (owner[s] < 0 || augment(owner[s])) {
        owner[s] = e;
        return true;
      }
    }
    return false;
  };
  for (int e = 0; e < static_cast<int>(elems.size()); ++e) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(e)) return false;
  }
  if (assignment) {
    assignment->assign(m, -1);
    for (int s = 0; s < m; ++s) {
      if (owner[s] >= 0) {
        (*assignment)[s] = elems[owner[s]];
      } else {
        ThingSet options = slot_allowed[s] & image;
        (*assignment)[s] = options.members().front();
      }
    }
  }
  return true;
}

std::vector<ThingSet> realizable_images(
    const std::vector<ThingSet>& slot_allowed) {
  ThingSet all;
  for (ThingSet s : slot_allowed) all = all | s;
  std::vector<ThingSet> out;
  if (slot_allowed.empty()) {
    out.push_back(ThingSet::empty_set());
    return out;
  }
  std::uint32_t sub = all.bits;
  while (true) {
    if (sub != 0 && realizable_image(slot_allowed, ThingSet(sub), nullptr)) {
      out.push_back(ThingSet(sub));
    }
    if (sub == 0) break;
    sub = (sub - 1) & all.bits;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ThingSet> k5_slots(const Family& subfamily,
                               const ClosureOperator& cl) {
  std::vector<ThingSet> slots;
  const Family chosen = selections(subfamily);
  for (ThingSet s : chosen.sets()) slots.push_back(cl.apply(s));
  return slots;
}

std::vector<ThingSet> k5bin_slots(ThingSet a, ThingSet b,
                                  const ClosureOperator& cl) {
  std::vector<ThingSet> slots;
  for (int x : a.members()) {
    for (int y : b.members()) {
      slots.push_back(cl.apply(ThingSet::singleton(x).with(y)));
    }
  }
  return slots;
}

std::vector<ThingSet> k5un_slots(ThingSet a, const ClosureOperator& cl) {
  std::vector<ThingSet> slots;
  for (int x : a.members()) slots.push_back(cl.apply(ThingSet::singleton(x)));
  return slots;
}

}  // namespace detail

Verdict check_sdt(ThingSet d, const Assessment& assessment,
                  const ClosureOperator& cl) {
  require_laws(cl);
  if (d.intersects(assessment.forbidden)) {
    Certificate cert;
    cert.axiom = "D1";
    cert.sets = {d, d & assessment.forbidden};
    return Verdict::violated(cert);
  }
  if (!assessment.required.subset_of(d)) {
    Certificate cert;
    cert.axiom = "D2";
    cert.sets = {d, assessment.required.minus(d)};
    return Verdict::violated(cert);
  }
  if (cl.apply(d) != d) {
    Certificate cert;
    cert.axiom = "D3";
    cert.sets = {d, cl.apply(d)};
    return Verdict::violated(cert);
  }
  return Verdict::verified();
}

namespace {

struct SdsContext {
  const Family& k;
  const Assessment& assessment;
  const ClosureOperator& cl;
  const QDomain& q;
  const Budget& budget;
  std::uint64_t ops = 0;
};

// Searches for an image that the axiom would force into K but is not
// there: realizable from the slots, inside the domain, outside K.
std::optional<ThingSet> forced_missing_image(
    SdsContext& ctx, const std::vector<ThingSet>& slots,
    std::vector<int>* assignment) {
  if (slots.empty()) {
    // A premise containing the empty set admits no selections, so the
    // forced image is the empty image.
    ThingSet none;
    if (ctx.q.contains(none) && !ctx.k.contains(none)) {
      if (assignment) assignment->clear();
      return none;
    }
    return std::nullopt;
  }
  ThingSet all;
  for (ThingSet s : slots) all = all | s;
  std::uint32_t sub = all.bits;
  while (sub != 0) {
    ThingSet image(sub);
    ctx.ops += slots.size() + 1;
    if (ctx.q.contains(image) && !ctx.k.contains(image) &&
        detail::realizable_image(slots, image, assignment)) {
      return image;
    }
    sub = (sub - 1) & all.bits;
  }
  return std::nullopt;
}

// Premise sets for the K5-shaped axioms. Once K2 in the domain holds and
// the domain is subset-closed, any violation built from members of K
// restricts to one built from inclusion-minimal members: the restricted
// image is a subset of the original, so were it in K, K2 would pull the
// original in too. Quantifying over minimal members is then complete and
// keeps the subfamily enumeration tractable.
std::vector<ThingSet> k5_premises(const Family& k, const QDomain& q, int n) {
  Family in_q = k.restricted_to(q);
  if (is_subset_closed(q, n)) return in_q.minimal_members();
  return in_q.sets();
}

}  // namespace

Verdict check_sds_axiom(SdsAxiom axiom, const Family& k,
                        const Assessment& assessment,
                        const ClosureOperator& cl, const Variant& variant,
                        const Budget& budget, bool premises_minimal) {
  require_laws(cl);
  const int n = cl.universe().size();
  const QDomain& q = variant.q;
  SdsContext ctx{k, assessment, cl, q, budget};

  if (axiom == SdsAxiom::k1) {
    if (k.contains(ThingSet::empty_set())) {
      Certificate cert;
      cert.axiom = "K1";
      cert.sets = {ThingSet::empty_set()};
      return Verdict::violated(cert);
    }
    return Verdict::verified();
  }
  if (axiom == SdsAxiom::k4) {
    for (int t : assessment.required.members()) {
      ThingSet single = ThingSet::singleton(t);
      if (q.contains(single) && !k.contains(single)) {
        Certificate cert;
        cert.axiom = "K4";
        cert.sets = {single};
        return Verdict::violated(cert);
      }
    }
    return Verdict::verified();
  }
  if (axiom == SdsAxiom::k3) {
    for (ThingSet a : k.sets()) {
      if (!q.contains(a)) continue;
      ThingSet rest = a.minus(assessment.forbidden);
      if (q.contains(rest) && !k.contains(rest)) {
        Certificate cert;
        cert.axiom = "K3";
        cert.sets = {a, rest};
        return Verdict::violated(cert);
      }
    }
    return Verdict::verified();
  }
  if (axiom == SdsAxiom::k2) {
    // Walk all supersets of each member.
    for (ThingSet a : k.sets()) {
      if (!q.contains(a)) continue;
      const std::uint32_t room = cl.universe().all().bits & ~a.bits;
      std::uint32_t extra = room;
      while (true) {
        ThingSet b(a.bits | extra);
        if (q.contains(b) && !k.contains(b)) {
          Certificate cert;
          cert.axiom = "K2";
          cert.sets = {a, b};
          return Verdict::violated(cert);
        }
        if (++ctx.ops > budget.max_ops) {
          return Verdict::inconclusive("superset walk exceeded the budget");
        }
        if (extra == 0) break;
        extra = (extra - 1) & room;
      }
    }
    return Verdict::verified();
  }

  const std::vector<ThingSet> premises =
      premises_minimal ? k5_premises(k, q, n) : k.restricted_to(q).sets();
  std::vector<int> assignment;

  switch (variant.strength) {
    case Strength::one: {
      for (ThingSet a : premises) {
        auto slots = detail::k5un_slots(a, cl);
        if (auto image = forced_missing_image(ctx, slots, &assignment)) {
          Certificate cert;
          cert.axiom = "K5un";
          cert.sets = {a, *image};
          cert.assignment = assignment;
          return Verdict::violated(cert);
        }
        if (ctx.ops > budget.max_ops) {
          return Verdict::inconclusive("K5un scan exceeded the budget");
        }
      }
      break;
    }
    case Strength::two: {
      for (std::size_t i = 0; i < premises.size(); ++i) {
        for (std::size_t j = i; j < premises.size(); ++j) {
          auto slots = detail::k5bin_slots(premises[i], premises[j], cl);
          if (auto image = forced_missing_image(ctx, slots, &assignment)) {
            Certificate cert;
            cert.axiom = "K5bin";
            cert.sets = {premises[i], premises[j], *image};
            cert.assignment = assignment;
            return Verdict::violated(cert);
          }
          if (ctx.ops > budget.max_ops) {
            return Verdict::inconclusive("K5bin scan exceeded the budget");
          }
        }
      }
      break;
    }
    case Strength::full:
    case Strength::finite: {
      // On a finite universe every subfamily and every image is finite,
      // so the full and finite forms coincide; both are checked by the
      // same exhaustive subfamily scan.
      const std::size_t m = premises.size();
      if (m >= 63 || (std::uint64_t{1} << m) > budget.max_k5_families) {
        return Verdict::inconclusive("too many subfamilies for the budget");
      }
      for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << m); ++fam) {
        std::vector<ThingSet> members;
        for (std::size_t i = 0; i < m; ++i) {
          if ((fam >> i) & 1) members.push_back(premises[i]);
        }
        Family subfamily(std::move(members));
        auto slots = detail::k5_slots(subfamily, cl);
        if (auto image = forced_missing_image(ctx, slots, &assignment)) {
          Certificate cert;
          cert.axiom = "K5";
          cert.families = {subfamily};
          cert.sets = {*image};
          cert.assignment = assignment;
          return Verdict::violated(cert);
        }
        if (ctx.ops > budget.max_ops) {
          return Verdict::inconclusive("K5 scan exceeded the budget");
        }
      }
      break;
    }
  }
  return Verdict::verified();
}

Verdict check_sds(const Family& k, const Assessment& assessment,
                  const ClosureOperator& cl, const Variant& variant,
                  const Budget& budget) {
  // k2 is established before k5, which is what licenses the minimal-premise
  // restriction in the k5 scan.
  const SdsAxiom order[] = {SdsAxiom::k1, SdsAxiom::k4, SdsAxiom::k3,
                            SdsAxiom::k2, SdsAxiom::k5};
  for (SdsAxiom axiom : order) {
    Verdict v = check_sds_axiom(axiom, k, assessment, cl, variant, budget,
                                /*premises_minimal=*/true);
    if (!v.ok()) return v;
  }
  return Verdict::verified();
}

bool coherence_possible(const Assessment& assessment,
                        const ClosureOperator& cl) {
  require_laws(cl);
  return !cl.apply(assessment.required).intersects(assessment.forbidden);
}

namespace {

// Deterministic parallel scan over [0, count): results are collected per
// chunk and merged in index order, so the thread count never affects the
// output.
template <typename Item, typename Fn>
std::vector<Item> parallel_collect(std::uint64_t count, int threads, Fn fn) {
  threads = std::max(1, threads);
  if (threads == 1 || count < 256) {
    std::vector<Item> out;
    for (std::uint64_t i = 0; i < count; ++i) fn(i, out);
    return out;
  }
  std::vector<std::vector<Item>> parts(threads);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (count + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(count, lo + chunk);
      for (std::uint64_t i = lo; i < hi; ++i) fn(i, parts[w]);
    });
  }
  for (auto& t : workers) t.join();
  std::vector<Item> out;
  for (auto& p : parts) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

}  // namespace

std::vector<ThingSet> enumerate_coherent_sdts(const Assessment& assessment,
                                              const ClosureOperator& cl,
                                              int cap, int threads) {
  require_laws(cl);
  const int n = cl.universe().size();
  if (n > cap) {
    throw UniverseTooLarge("set enumeration capped at " + std::to_string(cap) +
                           " things");
  }
  return parallel_collect<ThingSet>(
      std::uint64_t{1} << n, threads,
      [&](std::uint64_t mask, std::vector<ThingSet>& out) {
        ThingSet d(static_cast<std::uint32_t>(mask));
        if (check_sdt(d, assessment, cl).ok()) out.push_back(d);
      });
}

std::vector<Family> enumerate_coherent_sds(const Assessment& assessment,
                                           const ClosureOperator& cl,
                                           const Variant& variant,
                                           const Budget& budget, int threads) {
  require_laws(cl);
  const int n = cl.universe().size();
  const bool heavy =
      variant.strength == Strength::full || variant.strength == Strength::finite;
  if (n > (heavy ? 3 : 4)) {
    throw UniverseTooLarge("family enumeration is doubly exponential");
  }
  // Families containing the empty set all fail K1, so candidates range
  // over families of nonempty subsets only.
  const int nsubsets = (1 << n) - 1;
  return parallel_collect<Family>(
      std::uint64_t{1} << nsubsets, threads,
      [&](std::uint64_t fam, std::vector<Family>& out) {
        std::vector<ThingSet> members;
        for (int i = 0; i < nsubsets; ++i) {
          if ((fam >> i) & 1) members.push_back(ThingSet(i + 1u));
        }
        Family k(std::move(members));
        if (check_sds(k, assessment, cl, variant, budget).ok()) {
          out.push_back(k);
        }
      });
}

bool replay_sdt(const Certificate& cert, ThingSet d,
                const Assessment& assessment, const ClosureOperator& cl) {
  if (cert.sets.empty() || cert.sets[0] != d) return false;
  if (cert.axiom == "D1") return d.intersects(assessment.forbidden);
  if (cert.axiom == "D2") return !assessment.required.subset_of(d);
  if (cert.axiom == "D3") return cl.apply(d) != d;
  return false;
}

bool replay_sds(const Certificate& cert, const Family& k,
                const Assessment& assessment, const ClosureOperator& cl,
                const Variant& variant) {
  const QDomain& q = variant.q;
  if (cert.axiom == "K1") {
    return k.contains(ThingSet::empty_set());
  }
  if (cert.axiom == "K2") {
    if (cert.sets.size() != 2) return false;
    ThingSet a = cert.sets[0], b = cert.sets[1];
    return a.subset_of(b) && q.contains(a) && q.contains(b) && k.contains(a) &&
           !k.contains(b);
  }
  if (cert.axiom == "K3") {
    if (cert.sets.size() != 2) return false;
    ThingSet a = cert.sets[0], rest = cert.sets[1];
    return rest == a.minus(assessment.forbidden) && q.contains(a) &&
           q.contains(rest) && k.contains(a) && !k.contains(rest);
  }
  if (cert.axiom == "K4") {
    if (cert.sets.size() != 1 || cert.sets[0].size() != 1) return false;
    int t = cert.sets[0].members().front();
    return assessment.required.contains(t) && q.contains(cert.sets[0]) &&
           !k.contains(cert.sets[0]);
  }
  const auto check_choice = [&](const std::vector<ThingSet>& slots,
                                ThingSet image) {
    if (cert.assignment.size() != slots.size()) return false;
    ThingSet built;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      int t = cert.assignment[i];
      if (t < 0 || !slots[i].contains(t)) return false;
      built = built.with(t);
    }
    return built == image && q.contains(image) && !k.contains(image);
  };
  if (cert.axiom == "K5") {
    if (cert.families.size() != 1 || cert.sets.size() != 1) return false;
    const Family& subfamily = cert.families[0];
    if (subfamily.empty()) return false;
    for (ThingSet a : subfamily.sets()) {
      if (!k.contains(a) || !q.contains(a)) return false;
    }
    return check_choice(detail::k5_slots(subfamily, cl), cert.sets[0]);
  }
  if (cert.axiom == "K5bin") {
    if (cert.sets.size() != 3) return false;
    ThingSet a = cert.sets[0], b = cert.sets[1];
    if (!k.contains(a) || !q.contains(a) || !k.contains(b) || !q.contains(b)) {
      return false;
    }
    return check_choice(detail::k5bin_slots(a, b, cl), cert.sets[2]);
  }
  if (cert.axiom == "K5un") {
    if (cert.sets.size() != 2) return false;
    ThingSet a = cert.sets[0];
    if (!k.contains(a) || !q.contains(a)) return false;
    return check_choice(detail::k5un_slots(a, cl), cert.sets[1]);
  }
  return false;
}

}  // namespace desire
