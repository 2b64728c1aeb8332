#include "desire/closure.hpp"

#include <utility>

#include "desire/errors.hpp"
#include "desire/hull.hpp"

namespace desire {

namespace {

constexpr int kTraceTableCap = 12;

}  // namespace

ThingSet trans_closure(const Universe& u, ThingSet a) {
  if (u.payload_kind() != PayloadKind::preference_pair) {
    throw WrongPayload("transitive closure needs a preference-pair universe");
  }
  const int m = static_cast<int>(u.options().size());
  // Chaining runs in the ambient full relation; pairs outside the
  // universe participate as intermediate edges but are dropped at the end.
  std::vector<std::vector<bool>> edge(m, std::vector<bool>(m, false));
  for (int t : a.members()) {
    PreferencePair p = u.pair_of(t);
    edge[p.preferred][p.over] = true;
  }
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) {
      if (!edge[i][k]) continue;
      for (int j = 0; j < m; ++j) {
        if (edge[k][j]) edge[i][j] = true;
      }
    }
  }
  ThingSet out;
  for (int t = 0; t < u.size(); ++t) {
    PreferencePair p = u.pair_of(t);
    if (edge[p.preferred][p.over]) out = out.with(t);
  }
  return out;
}

ThingSet trans_pair(const Universe& u, PreferencePair a, PreferencePair b) {
  ThingSet out;
  const auto add = [&u, &out](PreferencePair p) {
    if (auto t = u.find_pair(p)) out = out.with(*t);
  };
  add(a);
  add(b);
  if (a.over == b.preferred && a.preferred != b.over) {
    add({a.preferred, b.over});
  } else if (a.over != b.preferred && a.preferred == b.over) {
    add({b.preferred, a.over});
  } else if (a.over == b.preferred && a.preferred == b.over) {
    add({a.preferred, a.preferred});
    add({a.over, a.over});
  }
  return out;
}

std::shared_ptr<ClosureOperator> ClosureOperator::identity(Universe u) {
  return std::shared_ptr<ClosureOperator>(
      new ClosureOperator(Kind::identity, std::move(u)));
}

std::shared_ptr<ClosureOperator> ClosureOperator::unitary_lift(
    Universe u, std::vector<ThingSet> per_thing) {
  if (static_cast<int>(per_thing.size()) != u.size()) {
    throw PayloadMismatch("unitary lift needs one image per thing");
  }
  auto op = std::shared_ptr<ClosureOperator>(
      new ClosureOperator(Kind::unitary_lift, std::move(u)));
  op->per_thing_ = std::move(per_thing);
  return op;
}

std::shared_ptr<ClosureOperator> ClosureOperator::table(
    Universe u, std::vector<ThingSet> images) {
  if (images.size() != (std::size_t{1} << u.size())) {
    throw PayloadMismatch("table needs one image per subset");
  }
  auto op = std::shared_ptr<ClosureOperator>(
      new ClosureOperator(Kind::table, std::move(u)));
  op->images_ = std::move(images);
  return op;
}

std::shared_ptr<ClosureOperator> ClosureOperator::transitive(Universe u) {
  if (u.payload_kind() != PayloadKind::preference_pair) {
    throw WrongPayload("transitive operator needs a preference-pair universe");
  }
  auto op = std::shared_ptr<ClosureOperator>(
      new ClosureOperator(Kind::transitive, std::move(u)));
  return op;
}

std::shared_ptr<ClosureOperator> ClosureOperator::posi_trace(Universe u) {
  if (u.payload_kind() != PayloadKind::rational_vector) {
    throw WrongPayload("posi trace needs a rational-vector universe");
  }
  if (u.size() > kTraceTableCap) {
    throw UniverseTooLarge("trace operators are tabulated; universe too big");
  }
  auto op = std::shared_ptr<ClosureOperator>(
      new ClosureOperator(Kind::posi_trace, std::move(u)));
  op->build_table();
  return op;
}

std::shared_ptr<ClosureOperator> ClosureOperator::chull_trace(Universe u) {
  if (u.payload_kind() != PayloadKind::rational_vector) {
    throw WrongPayload("chull trace needs a rational-vector universe");
  }
  if (u.size() > kTraceTableCap) {
    throw UniverseTooLarge("trace operators are tabulated; universe too big");
  }
  auto op = std::shared_ptr<ClosureOperator>(
      new ClosureOperator(Kind::chull_trace, std::move(u)));
  op->build_table();
  return op;
}

void ClosureOperator::build_table() {
  const int n = universe_.size();
  images_.assign(std::size_t{1} << n, ThingSet());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    ThingSet a(mask);
    std::vector<RationalVector> gens;
    for (int t : a.members()) gens.push_back(universe_.vector_of(t));
    ThingSet img;
    for (int t = 0; t < n; ++t) {
      const bool in = kind_ == Kind::posi_trace
                          ? member_positive_hull(universe_.vector_of(t), gens)
                          : member_convex_hull(universe_.vector_of(t), gens);
      if (in) img = img.with(t);
    }
    images_[mask] = img;
  }
}

ThingSet ClosureOperator::apply(ThingSet a) const {
  switch (kind_) {
    case Kind::identity:
      return a;
    case Kind::unitary_lift: {
      ThingSet out;
      for (int t : a.members()) out = out | per_thing_[t];
      return out;
    }
    case Kind::table:
    case Kind::posi_trace:
    case Kind::chull_trace:
      return images_[a.bits];
    case Kind::transitive:
      return trans_closure(universe_, a);
  }
  return a;
}

Verdict ClosureOperator::check_laws(const Budget& budget) {
  if (flags_.laws == Flag::yes) return Verdict::verified();
  const int n = universe_.size();
  const std::uint64_t nsubsets = std::uint64_t{1} << n;
  std::uint64_t ops = 0;

  const auto violated = [this](std::string law, ThingSet a, ThingSet b) {
    violation_ = LawViolation{law, a, b};
    flags_.laws = Flag::no;
    Certificate cert;
    cert.axiom = law;
    cert.sets = {a, b};
    return Verdict::violated(cert);
  };

  if (!apply(ThingSet::empty_set()).empty()) {
    return violated("empty", ThingSet::empty_set(), ThingSet::empty_set());
  }
  for (std::uint64_t mask = 0; mask < nsubsets; ++mask) {
    ThingSet a(static_cast<std::uint32_t>(mask));
    ThingSet ca = apply(a);
    if (!a.subset_of(ca)) return violated("extensive", a, ca);
    if (apply(ca) != ca) return violated("idempotent", a, ca);
    ops += 2;
  }
  // Monotonicity over all comparable pairs: for each B, walk submasks.
  for (std::uint64_t bmask = 0; bmask < nsubsets; ++bmask) {
    ThingSet b(static_cast<std::uint32_t>(bmask));
    ThingSet cb = apply(b);
    std::uint32_t sub = b.bits;
    while (sub != 0) {
      sub = (sub - 1) & b.bits;
      ThingSet a(sub);
      if (!apply(a).subset_of(cb)) return violated("monotone", a, b);
      if (++ops > budget.max_ops) {
        return Verdict::inconclusive("law check exceeded the operation budget");
      }
      if (sub == 0) break;
    }
  }
  flags_.laws = Flag::yes;
  return Verdict::verified();
}

PropertyFlags ClosureOperator::probe_properties() {
  if (flags_.laws != Flag::yes) {
    throw LawsUnverified("probe_properties requires verified closure laws");
  }
  if (flags_.unitary != Flag::unchecked) return flags_;
  const int n = universe_.size();
  const std::uint32_t nsubsets = 1u << n;

  flags_.unitary = Flag::yes;
  for (std::uint32_t mask = 0; mask < nsubsets && flags_.unitary == Flag::yes;
       ++mask) {
    ThingSet a(mask);
    ThingSet united;
    for (int t : a.members()) united = united | apply(ThingSet::singleton(t));
    if (apply(a) != united) flags_.unitary = Flag::no;
  }

  // Every operator on a finite universe is finitary: the union over finite
  // subsets includes the set itself.
  flags_.finitary = Flag::yes;
  flags_.note = "finitary trivially, the universe is finite";

  // Incrementality quantifies over nonempty bases: from cl(empty) = empty
  // the witness set would always be empty, which would falsify even the
  // identity operator.
  flags_.incremental = Flag::yes;
  for (std::uint32_t mask = 1; mask < nsubsets && flags_.incremental == Flag::yes;
       ++mask) {
    ThingSet a(mask);
    ThingSet ca = apply(a);
    for (int extra = 0; extra < n && flags_.incremental == Flag::yes; ++extra) {
      ThingSet grown = apply(a.with(extra));
      for (int t : grown.members()) {
        bool witnessed = false;
        for (int ta : ca.members()) {
          if (apply(ThingSet::singleton(ta).with(extra)).contains(t)) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) {
          flags_.incremental = Flag::no;
          break;
        }
      }
    }
  }
  return flags_;
}

}  // namespace desire
