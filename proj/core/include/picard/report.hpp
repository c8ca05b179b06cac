#pragma once

#include <string>
#include <vector>

namespace picard {

/// One verdict per axiom family; a failing entry always carries the first
/// counterexample tuple found (identifiers in the family's documented order).
struct CheckEntry {
  std::string axiom;
  bool pass = true;
  std::vector<std::string> witness;

  bool operator==(const CheckEntry&) const = default;
};

class CheckReport {
 public:
  void record(std::string axiom, bool pass, std::vector<std::string> witness = {});
  void merge(const CheckReport& other, const std::string& prefix = "");
  bool all_pass() const;
  const CheckEntry* entry(const std::string& axiom) const;
  const std::vector<CheckEntry>& entries() const { return entries_; }
  std::vector<std::string> failing_axioms() const;
  void sort_entries();

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace picard
