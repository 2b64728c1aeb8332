#include "desire/extension.hpp"

#include <algorithm>

#include "desire/errors.hpp"

namespace desire {

namespace {

void require_laws(const ClosureOperator& cl) {
  if (cl.flags().laws != Flag::yes) {
    throw LawsUnverified("run the law check on the closure operator first");
  }
}

// A family closed upward under supersets, stored as its inclusion-minimal
// members. Insertion keeps the antichain invariant.
struct Antichain {
  std::vector<ThingSet> mins;

  bool covers(ThingSet s) const {
    return std::any_of(mins.begin(), mins.end(),
                       [s](ThingSet m) { return m.subset_of(s); });
  }

  bool insert(ThingSet s) {
    if (covers(s)) return false;
    std::erase_if(mins, [s](ThingSet m) { return s.subset_of(m); });
    mins.push_back(s);
    return true;
  }

  void normalize() { std::sort(mins.begin(), mins.end()); }
};

}  // namespace

const char* extension_status_name(ExtensionStatus s) {
  switch (s) {
    case ExtensionStatus::Extended:
      return "Extended";
    case ExtensionStatus::Incoherent:
      return "Incoherent";
    case ExtensionStatus::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

SdtExtension sdt_natural_extension(ThingSet base, const Assessment& assessment,
                                   const ClosureOperator& cl) {
  require_laws(cl);
  SdtExtension out;
  out.result = cl.apply(base | assessment.required);
  out.conflict = out.result & assessment.forbidden;
  if (!out.conflict.empty()) {
    out.status = ExtensionStatus::Incoherent;
    out.note = "the closure of the base meets a forbidden thing";
  }
  return out;
}

SdsExtension sds_natural_extension(const Family& base,
                                   const Assessment& assessment,
                                   const ClosureOperator& cl,
                                   ExtensionMode mode, const Budget& budget) {
  require_laws(cl);
  const int n = cl.universe().size();
  SdsExtension out;

  Antichain ac;
  ThingSet conflict;
  bool empty_produced = false;
  const auto add = [&](ThingSet s, ThingSet source) {
    if (s.empty()) {
      empty_produced = true;
      conflict = source;
      return false;
    }
    return ac.insert(s);
  };

  for (ThingSet s : base.sets()) {
    add(s, s);
    if (empty_produced) break;
  }
  for (int t : assessment.required.members()) {
    if (empty_produced) break;
    add(ThingSet::singleton(t), ThingSet::singleton(t));
  }

  std::uint64_t ops = 0;
  bool changed = !empty_produced;
  while (changed && !empty_produced) {
    changed = false;
    ac.normalize();
    const std::vector<ThingSet> snapshot = ac.mins;
    const std::size_t m = snapshot.size();

    // Pruning of forbidden things; pruning a non-minimal member is covered
    // by pruning the minimal member below it, since pruning is monotone.
    for (ThingSet a : snapshot) {
      changed |= add(a.minus(assessment.forbidden), a);
      if (empty_produced) break;
    }
    if (empty_produced) break;

    // Closure-combination images. Generating from subfamilies of the
    // minimal members is complete: an image from arbitrary members
    // restricts to a sub-image from minimal ones, and upward closure
    // recovers the original.
    if (mode == ExtensionMode::binary_rules) {
      for (std::size_t i = 0; i < m && !empty_produced; ++i) {
        for (std::size_t j = i; j < m && !empty_produced; ++j) {
          auto slots = detail::k5bin_slots(snapshot[i], snapshot[j], cl);
          ThingSet all;
          for (ThingSet s : slots) all = all | s;
          ops += (std::uint64_t{1} << all.size()) * slots.size();
          for (ThingSet img : detail::realizable_images(slots)) {
            changed |= add(img, snapshot[i] | snapshot[j]);
          }
        }
      }
    } else {
      if (m >= 22 || (std::uint64_t{1} << m) > budget.max_k5_families) {
        out.status = ExtensionStatus::Inconclusive;
        out.note = "too many subfamilies for the budget";
        return out;
      }
      for (std::uint64_t fam = 1;
           fam < (std::uint64_t{1} << m) && !empty_produced; ++fam) {
        std::vector<ThingSet> members;
        for (std::size_t i = 0; i < m; ++i) {
          if ((fam >> i) & 1) members.push_back(snapshot[i]);
        }
        Family subfamily(std::move(members));
        auto slots = detail::k5_slots(subfamily, cl);
        ThingSet all;
        for (ThingSet s : slots) all = all | s;
        ops += (std::uint64_t{1} << all.size()) * std::max<std::size_t>(
                                                      slots.size(), 1);
        ThingSet source;
        for (ThingSet s : subfamily.sets()) source = source | s;
        for (ThingSet img : detail::realizable_images(slots)) {
          changed |= add(img, source);
        }
      }
    }
    if (ops > budget.max_ops) {
      out.status = ExtensionStatus::Inconclusive;
      out.note = "fixpoint iteration exceeded the operation budget";
      return out;
    }
  }

  if (empty_produced) {
    out.status = ExtensionStatus::Incoherent;
    out.conflict = conflict;
    out.note = "the rules force the empty set into the family";
    return out;
  }

  ac.normalize();
  std::vector<ThingSet> sets;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (ac.covers(ThingSet(mask))) sets.push_back(ThingSet(mask));
  }
  out.result = Family(std::move(sets));
  return out;
}

}  // namespace desire
