#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "desire/coherence.hpp"
#include "desire/errors.hpp"
#include "desire/extension.hpp"
#include "desire/model_io.hpp"
#include "desire/representation.hpp"

namespace {

using desire::Certificate;
using desire::ModelDocument;
using desire::Status;
using desire::Universe;
using desire::Verdict;
using nlohmann::json;

constexpr int kSchemaVersion = 1;

constexpr int kExitVerified = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadDocument = 65;

struct Options {
  std::string format = "text";
  std::uint64_t budget = 0;  // 0 = document/default budget
  int threads = 1;
  std::uint64_t seed = 0;
};

bool structured(const Options& opt) { return opt.format == "structured"; }

json certificate_json(const Certificate& cert, const Universe& u) {
  json out;
  out["axiom"] = cert.axiom;
  json sets = json::array();
  for (desire::ThingSet s : cert.sets) {
    json ids = json::array();
    for (int t : s.members()) ids.push_back(u.id_of(t));
    sets.push_back(std::move(ids));
  }
  out["sets"] = std::move(sets);
  json families = json::array();
  for (const desire::Family& f : cert.families) {
    json fam = json::array();
    for (desire::ThingSet s : f.sets()) {
      json ids = json::array();
      for (int t : s.members()) ids.push_back(u.id_of(t));
      fam.push_back(std::move(ids));
    }
    families.push_back(std::move(fam));
  }
  out["families"] = std::move(families);
  out["assignment"] = cert.assignment;
  out["note"] = cert.note;
  return out;
}

void print_certificate(const Certificate& cert, const Universe& u) {
  std::cout << "  axiom: " << cert.axiom << "\n";
  for (desire::ThingSet s : cert.sets) {
    std::cout << "  set: " << u.set_to_string(s) << "\n";
  }
  for (const desire::Family& f : cert.families) {
    std::cout << "  family: " << u.family_to_string(f) << "\n";
  }
  if (!cert.note.empty()) std::cout << "  note: " << cert.note << "\n";
}

int report_verdict(const std::string& command, const Verdict& v,
                   const Universe& u, const Options& opt,
                   json extra = json::object()) {
  if (structured(opt)) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    out["status"] = desire::status_name(v.status);
    if (v.certificate) out["certificate"] = certificate_json(*v.certificate, u);
    if (!v.budget_note.empty()) out["budget_note"] = v.budget_note;
    for (auto& [key, value] : extra.items()) out[key] = value;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << command << ": " << desire::status_name(v.status) << "\n";
    if (v.certificate) print_certificate(*v.certificate, u);
    if (!v.budget_note.empty()) std::cout << "  " << v.budget_note << "\n";
    for (auto& [key, value] : extra.items()) {
      std::cout << "  " << key << ": " << value.dump() << "\n";
    }
  }
  switch (v.status) {
    case Status::Verified:
      return kExitVerified;
    case Status::Violated:
      return kExitViolated;
    case Status::Inconclusive:
      return kExitInconclusive;
  }
  return kExitUsage;
}

ModelDocument load_document(const std::string& path, const Options& opt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw desire::MalformedDocument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  ModelDocument doc = desire::parse_model(buf.str());
  if (opt.budget != 0) doc.budget.max_ops = opt.budget;
  if (opt.seed != 0) doc.budget.seed = opt.seed;
  return doc;
}

desire::ClosurePtr checked_closure(const ModelDocument& doc) {
  desire::ClosurePtr cl = doc.make_closure();
  cl->check_laws(doc.budget);
  return cl;
}

int cmd_laws(const ModelDocument& doc, const Options& opt) {
  desire::ClosurePtr cl = doc.make_closure();
  Verdict v = cl->check_laws(doc.budget);
  json extra;
  if (v.ok()) {
    desire::PropertyFlags flags = cl->probe_properties();
    const auto name = [](desire::Flag f) {
      return f == desire::Flag::yes ? "yes"
             : f == desire::Flag::no ? "no"
                                     : "unchecked";
    };
    extra["unitary"] = name(flags.unitary);
    extra["finitary"] = name(flags.finitary);
    extra["incremental"] = name(flags.incremental);
  }
  return report_verdict("laws", v, doc.universe, opt, extra);
}

int cmd_check(const ModelDocument& doc, bool sdt, bool sds,
              const Options& opt) {
  desire::ClosurePtr cl = checked_closure(doc);
  if (!sdt && !sds) {
    sdt = doc.sdt.has_value();
    sds = doc.sds.has_value();
  }
  if (sdt == sds) {
    std::cerr << "check needs exactly one of --sdt / --sds (or exactly one "
                 "model in the document)\n";
    return kExitUsage;
  }
  if (sdt) {
    if (!doc.sdt) {
      std::cerr << "the document has no sdt\n";
      return kExitUsage;
    }
    return report_verdict("check sdt",
                          desire::check_sdt(*doc.sdt, doc.assessment, *cl),
                          doc.universe, opt);
  }
  if (!doc.sds) {
    std::cerr << "the document has no sds\n";
    return kExitUsage;
  }
  return report_verdict("check sds",
                        desire::check_sds(*doc.sds, doc.assessment, *cl,
                                          doc.variant, doc.budget),
                        doc.universe, opt);
}

int cmd_extend(const ModelDocument& doc, bool sdt, bool sds,
               const std::string& mode, const Options& opt) {
  desire::ClosurePtr cl = checked_closure(doc);
  const Universe& u = doc.universe;
  if (sdt == sds) {
    std::cerr << "extend needs exactly one of --sdt / --sds\n";
    return kExitUsage;
  }
  json extra;
  std::string status;
  std::string note;
  int exit_code = kExitVerified;
  if (sdt) {
    desire::ThingSet base = doc.sdt.value_or(desire::ThingSet());
    auto ext = desire::sdt_natural_extension(base, doc.assessment, *cl);
    status = desire::extension_status_name(ext.status);
    note = ext.note;
    extra["result"] = u.set_to_string(ext.result);
    if (ext.status == desire::ExtensionStatus::Incoherent) {
      extra["conflict"] = u.set_to_string(ext.conflict);
      exit_code = kExitViolated;
    }
  } else {
    desire::Family base = doc.base ? *doc.base
                         : doc.sds ? *doc.sds
                                   : desire::Family();
    auto rules = mode == "binary" ? desire::ExtensionMode::binary_rules
                                  : desire::ExtensionMode::full_rules;
    auto ext = desire::sds_natural_extension(base, doc.assessment, *cl, rules,
                                             doc.budget);
    status = desire::extension_status_name(ext.status);
    note = ext.note;
    extra["result"] = u.family_to_string(ext.result);
    if (ext.status == desire::ExtensionStatus::Incoherent) {
      extra["conflict"] = u.set_to_string(ext.conflict);
      exit_code = kExitViolated;
    } else if (ext.status == desire::ExtensionStatus::Inconclusive) {
      exit_code = kExitInconclusive;
    }
  }
  if (structured(opt)) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = "extend";
    out["status"] = status;
    if (!note.empty()) out["note"] = note;
    for (auto& [key, value] : extra.items()) out[key] = value;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "extend: " << status << "\n";
    for (auto& [key, value] : extra.items()) {
      std::cout << "  " << key << ": "
                << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
    if (!note.empty()) std::cout << "  note: " << note << "\n";
  }
  return exit_code;
}

int cmd_enumerate(const ModelDocument& doc, bool sdt, bool sds,
                  const Options& opt) {
  desire::ClosurePtr cl = checked_closure(doc);
  const Universe& u = doc.universe;
  if (sdt == sds) {
    std::cerr << "enumerate needs exactly one of --sdt / --sds\n";
    return kExitUsage;
  }
  json items = json::array();
  if (sdt) {
    for (desire::ThingSet d : desire::enumerate_coherent_sdts(
             doc.assessment, *cl, doc.cap, opt.threads)) {
      items.push_back(u.set_to_string(d));
    }
  } else {
    for (const desire::Family& k : desire::enumerate_coherent_sds(
             doc.assessment, *cl, doc.variant, doc.budget, opt.threads)) {
      items.push_back(u.family_to_string(k));
    }
  }
  if (structured(opt)) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = "enumerate";
    out["count"] = items.size();
    out["items"] = std::move(items);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "enumerate: " << items.size() << " coherent model(s)\n";
    for (const auto& item : items) {
      std::cout << "  " << item.get<std::string>() << "\n";
    }
  }
  return kExitVerified;
}

int cmd_represent(const ModelDocument& doc, bool total_orders,
                  const Options& opt) {
  desire::ClosurePtr cl = checked_closure(doc);
  const Universe& u = doc.universe;
  if (!doc.sds) {
    std::cerr << "represent needs an sds in the document\n";
    return kExitUsage;
  }
  if (total_orders) {
    auto rep = desire::represent_total_orders(*doc.sds, u, doc.budget);
    json extra;
    json orders = json::array();
    for (desire::ThingSet d : rep.orders) orders.push_back(u.set_to_string(d));
    extra["orders"] = std::move(orders);
    return report_verdict("represent total-orders", rep.verdict, u, opt, extra);
  }
  auto rep = desire::represent(*doc.sds, doc.assessment, *cl, doc.budget);
  json extra;
  json constructive = json::array();
  for (desire::ThingSet d : rep.d_k) constructive.push_back(u.set_to_string(d));
  json largest = json::array();
  for (desire::ThingSet d : rep.largest) largest.push_back(u.set_to_string(d));
  extra["constructive"] = std::move(constructive);
  extra["largest"] = std::move(largest);
  extra["verified"] = rep.verified;
  Verdict v = rep.verified
                  ? Verdict::verified()
                  : Verdict::inconclusive("representation cross-check failed");
  return report_verdict("represent", v, u, opt, extra);
}

int cmd_verify(const std::string& claim, const std::string& doc_path,
               bool list, int size, const Options& opt) {
  if (list) {
    for (const std::string& id : desire::claim_catalog()) {
      std::cout << id << "\n";
    }
    return kExitVerified;
  }
  if (claim.empty()) {
    std::cerr << "verify needs a claim id (or --list)\n";
    return kExitUsage;
  }
  if (!doc_path.empty()) {
    ModelDocument doc = load_document(doc_path, opt);
    desire::ClaimConfig config{checked_closure(doc), doc.assessment,
                               doc.variant.q, doc.budget, opt.threads};
    Verdict v = desire::verify_claim(claim, config);
    return report_verdict("verify " + claim, v, doc.universe, opt);
  }
  // No document: sweep the built-in scenario catalog at the given size.
  Verdict worst = Verdict::verified();
  Universe worst_u = Universe::opaque({"a"});
  json runs = json::array();
  for (const desire::Scenario& sc : desire::builtin_scenarios(size)) {
    for (const desire::Assessment& as : sc.assessments) {
      for (const desire::QDomain& q :
           {desire::QDomain::full(), desire::QDomain::card_bound(2)}) {
        desire::ClaimConfig config{sc.cl, as, q, {}, opt.threads};
        Verdict v = desire::verify_claim(claim, config);
        json run;
        run["scenario"] = sc.name;
        run["status"] = desire::status_name(v.status);
        runs.push_back(std::move(run));
        const bool worse =
            (v.status == Status::Violated &&
             worst.status != Status::Violated) ||
            (v.status == Status::Inconclusive &&
             worst.status == Status::Verified);
        if (worse) {
          worst = v;
          worst_u = sc.cl->universe();
        }
      }
    }
  }
  json extra;
  extra["runs"] = runs.size();
  return report_verdict("verify " + claim, worst, worst_u, opt, extra);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence engine for desirability models"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--budget", opt.budget, "override max_ops");
  app.add_option("--threads", opt.threads, "library thread count");
  app.add_option("--seed", opt.seed, "override the search seed");

  std::string doc_path;
  bool flag_sdt = false;
  bool flag_sds = false;
  std::string mode = "full";
  bool total_orders = false;
  std::string claim;
  std::string verify_doc;
  bool list_claims = false;
  int size = 3;

  CLI::App* laws = app.add_subcommand("laws", "check the closure laws");
  laws->add_option("document", doc_path)->required();

  CLI::App* check = app.add_subcommand("check", "check coherence axioms");
  check->add_option("document", doc_path)->required();
  check->add_flag("--sdt", flag_sdt);
  check->add_flag("--sds", flag_sds);

  CLI::App* extend = app.add_subcommand("extend", "compute natural extensions");
  extend->add_option("document", doc_path)->required();
  extend->add_flag("--sdt", flag_sdt);
  extend->add_flag("--sds", flag_sds);
  extend->add_option("--mode", mode, "full or binary combination rules")
      ->check(CLI::IsMember({"full", "binary"}));

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list all coherent models");
  enumerate->add_option("document", doc_path)->required();
  enumerate->add_flag("--sdt", flag_sdt);
  enumerate->add_flag("--sds", flag_sds);

  CLI::App* represent =
      app.add_subcommand("represent", "represent a family by accepted sets");
  represent->add_option("document", doc_path)->required();
  represent->add_flag("--total-orders", total_orders);

  CLI::App* verify = app.add_subcommand("verify", "run a cataloged statement");
  verify->add_option("claim", claim);
  verify->add_option("document", verify_doc);
  verify->add_flag("--list", list_claims);
  verify->add_option("--size", size, "scenario universe cap without document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(claim, verify_doc, list_claims, size, opt);
    }
    ModelDocument doc = load_document(doc_path, opt);
    if (laws->parsed()) return cmd_laws(doc, opt);
    if (check->parsed()) return cmd_check(doc, flag_sdt, flag_sds, opt);
    if (extend->parsed()) return cmd_extend(doc, flag_sdt, flag_sds, mode, opt);
    if (enumerate->parsed()) {
      return cmd_enumerate(doc, flag_sdt, flag_sds, opt);
    }
    if (represent->parsed()) return cmd_represent(doc, total_orders, opt);
  } catch (const desire::MalformedDocument& e) {
    std::cerr << "bad document: " << e.what() << "\n";
    return kExitBadDocument;
  } catch (const desire::UnknownThing& e) {
    std::cerr << "bad document: " << e.what() << "\n";
    return kExitBadDocument;
  } catch (const desire::PayloadMismatch& e) {
    std::cerr << "bad document: " << e.what() << "\n";
    return kExitBadDocument;
  } catch (const desire::NotCoherent& e) {
    std::cerr << "NotCoherent: " << e.what() << "\n";
    return kExitViolated;
  } catch (const desire::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
