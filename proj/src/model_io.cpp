#include "desire/model_io.hpp"

#include <json.hpp>

#include "desire/errors.hpp"
#include "desire/rational.hpp"

namespace desire {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw MalformedDocument(what);
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field: ") + key);
  return *it;
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, what));
  return out;
}

ThingSet parse_set(const json& j, const Universe& u, const char* what) {
  ThingSet out;
  for (const std::string& id : string_list(j, what)) {
    out = out.with(u.index_of(id));
  }
  return out;
}

Family parse_family(const json& j, const Universe& u, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array of sets");
  std::vector<ThingSet> sets;
  for (const auto& e : j) sets.push_back(parse_set(e, u, what));
  return Family(std::move(sets));
}

Universe parse_universe(const json& j) {
  if (!j.is_object()) malformed("universe must be an object");
  const std::vector<std::string> things =
      string_list(field(j, "things"), "universe.things");
  const std::string kind = as_string(field(j, "payload_kind"), "payload_kind");

  if (kind == "opaque") {
    if (j.contains("payloads")) {
      throw PayloadMismatch("opaque things carry no payloads");
    }
    return Universe::opaque(things);
  }

  const json& payloads = field(j, "payloads");
  if (!payloads.is_array() || payloads.size() != things.size()) {
    throw PayloadMismatch("payloads must align one-to-one with things");
  }

  if (kind == "preference_pair") {
    const std::vector<std::string> options =
        string_list(field(j, "options"), "universe.options");
    const auto option_index = [&options](const std::string& name) {
      for (std::size_t i = 0; i < options.size(); ++i) {
        if (options[i] == name) return static_cast<int>(i);
      }
      throw PayloadMismatch("pair payload names an undeclared option: " + name);
    };
    std::vector<PreferencePair> pairs;
    for (const auto& p : payloads) {
      if (!p.is_array() || p.size() != 2) {
        throw PayloadMismatch("a pair payload must list exactly two options");
      }
      pairs.push_back({option_index(as_string(p[0], "pair payload")),
                       option_index(as_string(p[1], "pair payload"))});
    }
    return Universe::preferences(options, pairs);
  }

  if (kind == "rational_vector") {
    const std::vector<std::string> states =
        string_list(field(j, "states"), "universe.states");
    std::vector<std::vector<Rational>> coords;
    for (const auto& row : payloads) {
      std::vector<Rational> v;
      for (const std::string& s : string_list(row, "vector payload")) {
        v.push_back(parse_rational(s));
      }
      coords.push_back(std::move(v));
    }
    if (j.contains("prizes")) {
      return Universe::grids(things, states,
                             string_list(j["prizes"], "universe.prizes"),
                             coords);
    }
    return Universe::vectors(things, states, coords);
  }

  malformed("unknown payload_kind: " + kind);
}

AssessmentPreset parse_preset(const std::string& name) {
  if (name == "gambles_default") return AssessmentPreset::gambles_default;
  if (name == "gambles_inf_positive") {
    return AssessmentPreset::gambles_inf_positive;
  }
  if (name == "lottery") return AssessmentPreset::lottery;
  if (name == "none") return AssessmentPreset::none;
  malformed("unknown assessment preset: " + name);
}

const char* preset_name(AssessmentPreset p) {
  switch (p) {
    case AssessmentPreset::gambles_default:
      return "gambles_default";
    case AssessmentPreset::gambles_inf_positive:
      return "gambles_inf_positive";
    case AssessmentPreset::lottery:
      return "lottery";
    case AssessmentPreset::none:
      return "none";
  }
  return "?";
}

Strength parse_strength(const std::string& name) {
  if (name == "full") return Strength::full;
  if (name == "finite") return Strength::finite;
  if (name == "two") return Strength::two;
  if (name == "one") return Strength::one;
  malformed("unknown variant: " + name);
}

QDomain parse_q(const json& j, const Universe& u) {
  const std::string kind = as_string(field(j, "kind"), "q.kind");
  if (kind == "full") return QDomain::full();
  if (kind == "card_bound") {
    const json& b = field(j, "bound");
    if (!b.is_number_integer()) malformed("q.bound must be an integer");
    return QDomain::card_bound(b.get<int>());
  }
  if (kind == "explicit") {
    return QDomain::explicit_family(
        parse_family(field(j, "members"), u, "q.members"));
  }
  malformed("unknown q kind: " + kind);
}

json dump_set(ThingSet s, const Universe& u) {
  json out = json::array();
  for (int t : s.members()) out.push_back(u.id_of(t));
  return out;
}

json dump_family(const Family& f, const Universe& u) {
  json out = json::array();
  for (ThingSet s : f.sets()) out.push_back(dump_set(s, u));
  return out;
}

}  // namespace

ClosurePtr ModelDocument::make_closure() const {
  switch (closure_kind) {
    case ClosureOperator::Kind::identity:
      return ClosureOperator::identity(universe);
    case ClosureOperator::Kind::unitary_lift:
      return ClosureOperator::unitary_lift(universe, per_thing);
    case ClosureOperator::Kind::table:
      return ClosureOperator::table(universe, table);
    case ClosureOperator::Kind::transitive:
      return ClosureOperator::transitive(universe);
    case ClosureOperator::Kind::posi_trace:
      return ClosureOperator::posi_trace(universe);
    case ClosureOperator::Kind::chull_trace:
      return ClosureOperator::chull_trace(universe);
  }
  throw Error("unreachable closure kind");
}

ModelDocument parse_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) malformed("the document must be a JSON object");

  ModelDocument doc(parse_universe(field(j, "universe")));
  const int n = doc.universe.size();
  if (n < 1 || n > kMaxThings) {
    malformed("the universe must hold between 1 and 16 things");
  }

  const json& cl = field(j, "closure");
  const std::string kind = as_string(field(cl, "kind"), "closure.kind");
  if (kind == "identity") {
    doc.closure_kind = ClosureOperator::Kind::identity;
  } else if (kind == "unitary") {
    doc.closure_kind = ClosureOperator::Kind::unitary_lift;
    const json& per = field(cl, "per_thing");
    if (!per.is_array() || static_cast<int>(per.size()) != n) {
      malformed("closure.per_thing must align one-to-one with things");
    }
    for (const auto& e : per) {
      doc.per_thing.push_back(parse_set(e, doc.universe, "closure.per_thing"));
    }
  } else if (kind == "table") {
    doc.closure_kind = ClosureOperator::Kind::table;
    const json& rows = field(cl, "table");
    if (!rows.is_array() || rows.size() != (std::size_t{1} << n)) {
      malformed("closure.table must list the image of every subset");
    }
    doc.table.assign(std::size_t{1} << n, ThingSet());
    std::vector<bool> seen(std::size_t{1} << n, false);
    for (const auto& row : rows) {
      if (!row.is_object()) malformed("closure.table rows must be objects");
      ThingSet of = parse_set(field(row, "of"), doc.universe, "table row");
      ThingSet is = parse_set(field(row, "is"), doc.universe, "table row");
      if (seen[of.bits]) malformed("closure.table lists a subset twice");
      seen[of.bits] = true;
      doc.table[of.bits] = is;
    }
  } else if (kind == "transitive") {
    doc.closure_kind = ClosureOperator::Kind::transitive;
  } else if (kind == "posi") {
    doc.closure_kind = ClosureOperator::Kind::posi_trace;
  } else if (kind == "chull") {
    doc.closure_kind = ClosureOperator::Kind::chull_trace;
  } else {
    malformed("unknown closure kind: " + kind);
  }

  const json& as = field(j, "assessment");
  if (!as.is_object()) malformed("assessment must be an object");
  if (as.contains("preset")) {
    doc.preset = parse_preset(as_string(as["preset"], "assessment.preset"));
    if (as.contains("positive")) {
      doc.positive_prizes = string_list(as["positive"], "assessment.positive");
    }
    if (as.contains("negative")) {
      doc.negative_prizes = string_list(as["negative"], "assessment.negative");
    }
    doc.assessment = preset_assessment(doc.universe, *doc.preset,
                                       doc.positive_prizes,
                                       doc.negative_prizes);
  } else {
    doc.assessment.forbidden =
        parse_set(field(as, "not"), doc.universe, "assessment.not");
    doc.assessment.required =
        parse_set(field(as, "des"), doc.universe, "assessment.des");
  }

  if (j.contains("sdt")) doc.sdt = parse_set(j["sdt"], doc.universe, "sdt");
  if (j.contains("sds")) doc.sds = parse_family(j["sds"], doc.universe, "sds");
  if (j.contains("base")) {
    doc.base = parse_family(j["base"], doc.universe, "base");
  }

  if (j.contains("options")) {
    const json& opt = j["options"];
    if (!opt.is_object()) malformed("options must be an object");
    if (opt.contains("variant")) {
      doc.variant.strength =
          parse_strength(as_string(opt["variant"], "options.variant"));
    }
    if (opt.contains("q")) doc.variant.q = parse_q(opt["q"], doc.universe);
    if (opt.contains("budget")) {
      const json& b = opt["budget"];
      if (!b.is_object()) malformed("options.budget must be an object");
      if (b.contains("max_ops")) {
        doc.budget.max_ops = b["max_ops"].get<std::uint64_t>();
      }
      if (b.contains("max_k5_families")) {
        doc.budget.max_k5_families = b["max_k5_families"].get<std::uint64_t>();
      }
      if (b.contains("seed")) doc.budget.seed = b["seed"].get<std::uint64_t>();
    }
    if (opt.contains("cap")) {
      if (!opt["cap"].is_number_integer()) malformed("cap must be an integer");
      doc.cap = opt["cap"].get<int>();
    }
  }
  return doc;
}

std::string serialize_model(const ModelDocument& doc) {
  const Universe& u = doc.universe;
  json j;

  json& uni = j["universe"];
  uni["things"] = u.ids();
  switch (u.payload_kind()) {
    case PayloadKind::opaque:
      uni["payload_kind"] = "opaque";
      break;
    case PayloadKind::preference_pair: {
      uni["payload_kind"] = "preference_pair";
      uni["options"] = u.options();
      json payloads = json::array();
      for (int t = 0; t < u.size(); ++t) {
        PreferencePair p = u.pair_of(t);
        payloads.push_back(
            json::array({u.options()[p.preferred], u.options()[p.over]}));
      }
      uni["payloads"] = std::move(payloads);
      break;
    }
    case PayloadKind::rational_vector: {
      uni["payload_kind"] = "rational_vector";
      uni["states"] = u.states();
      if (!u.prizes().empty()) uni["prizes"] = u.prizes();
      json payloads = json::array();
      for (int t = 0; t < u.size(); ++t) {
        json row = json::array();
        for (const Rational& r : u.vector_of(t)) {
          row.push_back(format_rational(r));
        }
        payloads.push_back(std::move(row));
      }
      uni["payloads"] = std::move(payloads);
      break;
    }
  }

  json& cl = j["closure"];
  switch (doc.closure_kind) {
    case ClosureOperator::Kind::identity:
      cl["kind"] = "identity";
      break;
    case ClosureOperator::Kind::unitary_lift: {
      cl["kind"] = "unitary";
      json per = json::array();
      for (ThingSet s : doc.per_thing) per.push_back(dump_set(s, u));
      cl["per_thing"] = std::move(per);
      break;
    }
    case ClosureOperator::Kind::table: {
      cl["kind"] = "table";
      json rows = json::array();
      for (std::uint32_t mask = 0; mask < doc.table.size(); ++mask) {
        json row;
        row["of"] = dump_set(ThingSet(mask), u);
        row["is"] = dump_set(doc.table[mask], u);
        rows.push_back(std::move(row));
      }
      cl["table"] = std::move(rows);
      break;
    }
    case ClosureOperator::Kind::transitive:
      cl["kind"] = "transitive";
      break;
    case ClosureOperator::Kind::posi_trace:
      cl["kind"] = "posi";
      break;
    case ClosureOperator::Kind::chull_trace:
      cl["kind"] = "chull";
      break;
  }

  json& as = j["assessment"];
  if (doc.preset) {
    as["preset"] = preset_name(*doc.preset);
    if (!doc.positive_prizes.empty()) as["positive"] = doc.positive_prizes;
    if (!doc.negative_prizes.empty()) as["negative"] = doc.negative_prizes;
  } else {
    as["not"] = dump_set(doc.assessment.forbidden, u);
    as["des"] = dump_set(doc.assessment.required, u);
  }

  if (doc.sdt) j["sdt"] = dump_set(*doc.sdt, u);
  if (doc.sds) j["sds"] = dump_family(*doc.sds, u);
  if (doc.base) j["base"] = dump_family(*doc.base, u);

  json& opt = j["options"];
  opt["variant"] = strength_name(doc.variant.strength);
  json& q = opt["q"];
  switch (doc.variant.q.kind()) {
    case QDomain::Kind::full:
      q["kind"] = "full";
      break;
    case QDomain::Kind::card_bound:
      q["kind"] = "card_bound";
      q["bound"] = doc.variant.q.bound();
      break;
    case QDomain::Kind::explicit_family:
      q["kind"] = "explicit";
      q["members"] = dump_family(doc.variant.q.family(), u);
      break;
  }
  opt["budget"]["max_ops"] = doc.budget.max_ops;
  opt["budget"]["max_k5_families"] = doc.budget.max_k5_families;
  opt["budget"]["seed"] = doc.budget.seed;
  opt["cap"] = doc.cap;

  return j.dump(2) + "\n";
}

}  // namespace desire
