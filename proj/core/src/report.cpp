#include "picard/report.hpp"

#include <algorithm>

namespace picard {

void CheckReport::record(std::string axiom, bool pass, std::vector<std::string> witness) {
  if (pass) witness.clear();
  entries_.push_back(CheckEntry{std::move(axiom), pass, std::move(witness)});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& e : other.entries_) {
    entries_.push_back(CheckEntry{prefix + e.axiom, e.pass, e.witness});
  }
}

bool CheckReport::all_pass() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const CheckEntry& e) { return e.pass; });
}

const CheckEntry* CheckReport::entry(const std::string& axiom) const {
  for (const auto& e : entries_)
    if (e.axiom == axiom) return &e;
  return nullptr;
}

std::vector<std::string> CheckReport::failing_axioms() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (!e.pass) out.push_back(e.axiom);
  return out;
}

void CheckReport::sort_entries() {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const CheckEntry& a, const CheckEntry& b) { return a.axiom < b.axiom; });
}

}  // namespace picard
