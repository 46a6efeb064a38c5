#pragma once

#include "bialg/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bialg {

/// Concrete witness of a failed identity: the sampled inputs and the rendered
/// normal form of lhs - rhs.
struct Counterexample {
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string residual;
};

struct CheckEntry {
  std::string name;
  std::string ref;  // the identity being checked, in ASCII
  bool passed = false;
  std::optional<Counterexample> counterexample;
};

/// Ordered list of check outcomes. Order is the fixed enumeration order of
/// the producing operation, never reshuffled, so reports are deterministic.
class CheckReport {
 public:
  void add_pass(std::string name, std::string ref) {
    entries_.push_back({std::move(name), std::move(ref), true, std::nullopt});
  }

  void add_fail(std::string name, std::string ref, Counterexample ce) {
    entries_.push_back({std::move(name), std::move(ref), false, std::move(ce)});
  }

  void append(const CheckReport& other, const std::string& prefix = "") {
    for (const CheckEntry& e : other.entries_) {
      CheckEntry copy = e;
      copy.name = prefix + copy.name;
      entries_.push_back(std::move(copy));
    }
  }

  bool all_passed() const {
    for (const CheckEntry& e : entries_)
      if (!e.passed) return false;
    return true;
  }

  const std::vector<CheckEntry>& entries() const { return entries_; }

 private:
  std::vector<CheckEntry> entries_;
};

/// Thrown by validating constructors; carries the failing checks.
struct ConstructionError : StructureError {
  CheckReport report;
  ConstructionError(const std::string& what, CheckReport r)
      : StructureError(what), report(std::move(r)) {}
};

}  // namespace bialg
