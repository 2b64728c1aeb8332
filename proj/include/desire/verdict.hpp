#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "desire/things.hpp"

namespace desire {

enum class Status { Verified, Violated, Inconclusive };

/// Replayable evidence for a Violated verdict. The axiom field names the
/// broken rule; sets/families/assignment carry whatever witness data the
/// rule needs to re-evaluate.
struct Certificate {
  std::string axiom;
  std::vector<ThingSet> sets;
  std::vector<Family> families;
  std::vector<int> assignment;
  std::string note;
};

struct Verdict {
  Status status = Status::Verified;
  std::optional<Certificate> certificate;
  std::string budget_note;

  static Verdict verified() { return Verdict{}; }
  static Verdict violated(Certificate c) {
    return Verdict{Status::Violated, std::move(c), {}};
  }
  static Verdict inconclusive(std::string note) {
    return Verdict{Status::Inconclusive, std::nullopt, std::move(note)};
  }

  bool ok() const { return status == Status::Verified; }
};

/// Work limits for the exhaustive checkers. max_ops is a coarse counter of
/// inner-loop steps; max_k5_families bounds how many subfamilies of K the
/// K5 check may enumerate before answering Inconclusive.
struct Budget {
  std::uint64_t max_ops = 200'000'000;
  std::uint64_t max_k5_families = std::uint64_t{1} << 22;
  std::uint64_t seed = 1;
};

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Verified:
      return "Verified";
    case Status::Violated:
      return "Violated";
    case Status::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

}  // namespace desire
