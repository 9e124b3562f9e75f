#pragma once

// Plain result records for axiom scans and verification pipelines.
// Serialization lives in json_io.hpp.

#include <optional>
#include <string>
#include <vector>

#include "rootleib/scan.hpp"

namespace rootleib {

struct Witness {
  Triple idx{-1, -1, -1};     // basis indices of the violating instance
  std::string lhs, rhs;       // printed values of the two sides
};

struct LawResult {
  std::string name;
  bool pass = false;
  std::optional<Witness> witness;
};

struct AxiomReport {
  std::string subject;
  std::vector<LawResult> laws;
  bool pass() const {
    for (const auto& l : laws)
      if (!l.pass) return false;
    return true;
  }
  const LawResult* first_failure() const {
    for (const auto& l : laws)
      if (!l.pass) return &l;
    return nullptr;
  }
};

// One named boolean check with free-form detail, used by the larger
// verification pipelines where a single law/witness shape does not fit.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string subject;
  std::vector<CheckItem> items;
  bool pass() const {
    for (const auto& c : items)
      if (!c.pass) return false;
    return true;
  }
  void add(const std::string& name, bool ok, const std::string& detail = "") {
    items.push_back({name, ok, detail});
  }
  void merge(const AxiomReport& ar) {
    for (const auto& l : ar.laws)
      items.push_back({ar.subject + ": " + l.name, l.pass,
                       l.witness ? "at (" + std::to_string(l.witness->idx[0]) + "," +
                                       std::to_string(l.witness->idx[1]) + "," +
                                       std::to_string(l.witness->idx[2]) + ") " +
                                       l.witness->lhs + " != " + l.witness->rhs
                                 : ""});
  }
};

}  // namespace rootleib
