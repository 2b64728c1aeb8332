#include "desire/things.hpp"

#include <algorithm>
#include <set>

namespace desire {

std::vector<int> ThingSet::members() const {
  std::vector<int> out;
  for (int t = 0; t < 32; ++t) {
    if (contains(t)) out.push_back(t);
  }
  return out;
}

Family::Family(std::vector<ThingSet> sets) : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool Family::contains(ThingSet s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

void Family::insert(ThingSet s) {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it != sets_.end() && *it == s) return;
  sets_.insert(it, s);
}

void Family::remove(ThingSet s) {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it != sets_.end() && *it == s) sets_.erase(it);
}

Family Family::restricted_to(const QDomain& q) const {
  std::vector<ThingSet> kept;
  for (ThingSet s : sets_) {
    if (q.contains(s)) kept.push_back(s);
  }
  return Family(std::move(kept));
}

std::vector<ThingSet> Family::minimal_members() const {
  std::vector<ThingSet> out;
  for (ThingSet s : sets_) {
    bool minimal = true;
    for (ThingSet other : sets_) {
      if (other != s && other.subset_of(s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

QDomain QDomain::card_bound(int c) {
  QDomain q;
  q.kind_ = Kind::card_bound;
  q.bound_ = c;
  return q;
}

QDomain QDomain::explicit_family(Family f) {
  QDomain q;
  q.kind_ = Kind::explicit_family;
  q.family_ = std::move(f);
  return q;
}

bool QDomain::contains(ThingSet a) const {
  switch (kind_) {
    case Kind::full:
      return true;
    case Kind::card_bound:
      return a.size() <= bound_;
    case Kind::explicit_family:
      return family_.contains(a);
  }
  return false;
}

bool QDomain::is_full(int n) const {
  switch (kind_) {
    case Kind::full:
      return true;
    case Kind::card_bound:
      return bound_ >= n;
    case Kind::explicit_family: {
      return family_.size() == (std::size_t{1} << n);
    }
  }
  return false;
}

std::vector<ThingSet> QDomain::members(int n) const {
  std::vector<ThingSet> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    ThingSet s(bits);
    if (contains(s)) out.push_back(s);
  }
  return out;
}

bool is_subset_closed(const QDomain& q, int n) {
  switch (q.kind()) {
    case QDomain::Kind::full:
    case QDomain::Kind::card_bound:
      return true;
    case QDomain::Kind::explicit_family: {
      for (ThingSet s : q.family().sets()) {
        // Enumerate proper subsets of s by the standard submask walk.
        std::uint32_t sub = s.bits;
        while (true) {
          sub = (sub - 1) & s.bits;
          if (!q.family().contains(ThingSet(sub))) return false;
          if (sub == 0) break;
        }
        (void)n;
      }
      return true;
    }
  }
  return false;
}

Family selections(const Family& family) {
  if (family.empty()) {
    return Family({ThingSet::empty_set()});
  }
  if (family.contains(ThingSet::empty_set())) {
    return Family();
  }
  // Incremental product over the family's members, keeping only the
  // distinct partial images. The number of distinct images is bounded by
  // 2^|union|, which keeps this far below the raw choice-map count.
  std::set<ThingSet> images = {ThingSet::empty_set()};
  for (ThingSet a : family.sets()) {
    std::set<ThingSet> next;
    for (ThingSet partial : images) {
      for (int t : a.members()) {
        next.insert(partial.with(t));
      }
    }
    images = std::move(next);
  }
  return Family(std::vector<ThingSet>(images.begin(), images.end()));
}

Universe Universe::opaque(std::vector<std::string> ids) {
  Universe u;
  u.ids_ = std::move(ids);
  u.kind_ = PayloadKind::opaque;
  u.check_ids();
  return u;
}

Universe Universe::preferences(std::vector<std::string> options,
                               std::vector<PreferencePair> pairs) {
  Universe u;
  u.kind_ = PayloadKind::preference_pair;
  u.options_ = std::move(options);
  u.pairs_ = std::move(pairs);
  const int m = static_cast<int>(u.options_.size());
  for (const PreferencePair& p : u.pairs_) {
    if (p.preferred < 0 || p.preferred >= m || p.over < 0 || p.over >= m) {
      throw PayloadMismatch("preference pair references an undeclared option");
    }
    u.ids_.push_back(u.options_[p.preferred] + ">" + u.options_[p.over]);
  }
  u.check_ids();
  return u;
}

Universe Universe::vectors(std::vector<std::string> ids,
                           std::vector<std::string> states,
                           std::vector<std::vector<Rational>> coordinates) {
  Universe u;
  u.kind_ = PayloadKind::rational_vector;
  u.ids_ = std::move(ids);
  u.states_ = std::move(states);
  u.vectors_ = std::move(coordinates);
  if (u.vectors_.size() != u.ids_.size()) {
    throw PayloadMismatch("one vector per thing required");
  }
  for (const auto& v : u.vectors_) {
    if (v.size() != u.states_.size()) {
      throw PayloadMismatch("vector length differs from the state list");
    }
  }
  u.check_ids();
  return u;
}

Universe Universe::grids(std::vector<std::string> ids,
                         std::vector<std::string> states,
                         std::vector<std::string> prizes,
                         std::vector<std::vector<Rational>> coordinates) {
  const std::size_t dim = states.size() * prizes.size();
  for (const auto& v : coordinates) {
    if (v.size() != dim) {
      throw PayloadMismatch("grid payload length differs from states*prizes");
    }
  }
  Universe u;
  u.kind_ = PayloadKind::rational_vector;
  u.ids_ = std::move(ids);
  u.states_ = std::move(states);
  u.prizes_ = std::move(prizes);
  u.vectors_ = std::move(coordinates);
  if (u.vectors_.size() != u.ids_.size()) {
    throw PayloadMismatch("one grid per thing required");
  }
  u.check_ids();
  return u;
}

void Universe::check_ids() const {
  if (size() > kMaxThings) {
    throw UniverseTooLarge("universe exceeds the " +
                           std::to_string(kMaxThings) + "-thing cap");
  }
  std::set<std::string> seen;
  for (const auto& id : ids_) {
    if (id.empty()) throw MalformedDocument("empty thing id");
    if (!seen.insert(id).second) {
      throw MalformedDocument("duplicate thing id '" + id + "'");
    }
  }
}

int Universe::index_of(const std::string& id) const {
  if (auto t = find(id)) return *t;
  throw UnknownThing("unknown thing '" + id + "'");
}

std::optional<int> Universe::find(const std::string& id) const {
  for (int t = 0; t < size(); ++t) {
    if (ids_[t] == id) return t;
  }
  return std::nullopt;
}

PreferencePair Universe::pair_of(int t) const {
  if (kind_ != PayloadKind::preference_pair) {
    throw WrongPayload("thing carries no preference pair");
  }
  return pairs_[t];
}

std::optional<int> Universe::find_pair(PreferencePair p) const {
  if (kind_ != PayloadKind::preference_pair) return std::nullopt;
  for (int t = 0; t < size(); ++t) {
    if (pairs_[t] == p) return t;
  }
  return std::nullopt;
}

const std::vector<Rational>& Universe::vector_of(int t) const {
  if (kind_ != PayloadKind::rational_vector) {
    throw WrongPayload("thing carries no rational vector");
  }
  return vectors_[t];
}

std::string Universe::set_to_string(ThingSet s) const {
  std::string out = "{";
  bool first = true;
  for (int t : s.members()) {
    if (!first) out += ",";
    out += id_of(t);
    first = false;
  }
  return out + "}";
}

std::string Universe::family_to_string(const Family& f) const {
  std::string out = "{";
  bool first = true;
  for (ThingSet s : f.sets()) {
    if (!first) out += ",";
    out += set_to_string(s);
    first = false;
  }
  return out + "}";
}

}  // namespace desire
